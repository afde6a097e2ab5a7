#include "drep/presentation.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace drep {

void DGAPresentation::require_weight(int W) const {
  if (complete_to_weight && W > *complete_to_weight) {
    std::ostringstream os;
    os << "presentation";
    if (!name.empty()) os << " '" << name << "'";
    os << " is only complete to weight " << *complete_to_weight
       << "; requested weight " << W;
    throw std::invalid_argument(os.str());
  }
}

void DGAPresentation::require_differential() const {
  if (census_only)
    throw std::invalid_argument(
        "presentation '" + name +
        "' carries census data only (no differential is known for it)");
}

// --- polynomial lexer/parser ------------------------------------------------

namespace {

struct Token {
  enum Kind { Name, Number, Plus, Minus, Star, End } kind;
  std::string text;
};

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;
  int line;
  explicit Lexer(const std::string& str, int line_) : s(str), line(line_) {}

  Token next() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) return {Token::End, ""};
    char c = s[pos];
    if (c == '+') { ++pos; return {Token::Plus, "+"}; }
    if (c == '-') { ++pos; return {Token::Minus, "-"}; }
    if (c == '*') { ++pos; return {Token::Star, "*"}; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
        ++pos;
      return {Token::Number, s.substr(start, pos - start)};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      return {Token::Name, s.substr(start, pos - start)};
    }
    throw ParseError(line, std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

static NCPoly parse_ncpoly(const std::string& text, const GeneratorTable& tab,
                           int line) {
  NCPoly out;
  Lexer lex(text, line);
  Token t = lex.next();
  if (t.kind == Token::End) throw ParseError(line, "empty polynomial");
  bool neg = false;
  // leading sign
  if (t.kind == Token::Plus || t.kind == Token::Minus) {
    neg = t.kind == Token::Minus;
    t = lex.next();
  }
  while (true) {
    // one term: factors separated by '*'
    Scalar coeff = neg ? Scalar(-1) : Scalar(1);
    Word w;
    bool expect_factor = true;
    while (true) {
      if (expect_factor) {
        if (t.kind == Token::Number) {
          try {
            coeff *= parse_scalar(t.text);
          } catch (const std::invalid_argument& e) {
            throw ParseError(line, e.what());
          }
        } else if (t.kind == Token::Name) {
          auto it = tab.by_name.find(t.text);
          if (it == tab.by_name.end())
            throw ParseError(line, "unknown generator '" + t.text + "'");
          w.push_back(it->second);
        } else {
          throw ParseError(line, "expected a factor");
        }
        t = lex.next();
        expect_factor = false;
      } else if (t.kind == Token::Star) {
        t = lex.next();
        expect_factor = true;
      } else {
        break;
      }
    }
    if (!(w.empty() && coeff == 0))  // "0" denotes the zero polynomial
      out.add_term(w, coeff);
    if (t.kind == Token::End) break;
    if (t.kind == Token::Plus) neg = false;
    else if (t.kind == Token::Minus) neg = true;
    else throw ParseError(line, "expected '+' or '-' between terms");
    t = lex.next();
    if (t.kind == Token::End) throw ParseError(line, "trailing sign");
  }
  return out;
}

// Graded-commutative normalization of an NC polynomial: each word sorted by the
// generator order with the Koszul sign, odd squares dropped.
static NCPoly comm_normalize(const NCPoly& p, const GeneratorTable& tab) {
  NCPoly out;
  for (const auto& [w, c] : p.terms) {
    Word v = w;
    int flips = 0;
    bool zero = false;
    for (std::size_t i = 1; i < v.size() && !zero; ++i) {
      GenId x = v[i];
      std::size_t j = i;
      while (j > 0 && v[j - 1] > x) {
        if (tab[v[j - 1]].parity() && tab[x].parity()) ++flips;
        v[j] = v[j - 1];
        --j;
      }
      v[j] = x;
    }
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] == v[i + 1] && tab[v[i]].parity()) zero = true;
    if (zero) continue;
    out.add_term(v, (flips % 2) ? Scalar(-c) : c);
  }
  return out;
}

// --- validation --------------------------------------------------------------

static void validate_diff_line(const DGAPresentation& p, GenId g, int line) {
  const Generator& gen = p.tab[g];
  const NCPoly& dg = p.diff[g];
  if (dg.is_zero()) return;
  if (!p.allow_negative_hdeg && gen.hdeg == 0)
    throw ParseError(line, "generator '" + gen.name +
                               "' has hdeg 0 but a nonzero differential");
  for (const auto& [w, c] : dg.terms) {
    if (word_hdeg(w, p.tab) != gen.hdeg - 1)
      throw ParseError(line, "hdeg mismatch in differential of '" + gen.name +
                                 "' (term " + word_str(w, p.tab) + ")");
    if (word_weight(w, p.tab) != gen.weight)
      throw ParseError(line, "weight mismatch in differential of '" + gen.name +
                                 "' (term " + word_str(w, p.tab) + ")");
  }
}

DGAPresentation parse_presentation(const std::string& text) {
  DGAPresentation p;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;

  struct PendingDiff { std::string gen; std::string rhs; int line; };
  std::vector<std::pair<Generator, int>> gens;
  std::vector<PendingDiff> pend;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s = s.substr(0, hash);
    std::istringstream ls(s);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "generator") {
      Generator g;
      std::string f1, f2;
      if (!(ls >> g.name >> f1 >> g.hdeg >> f2 >> g.weight) || f1 != "hdeg" ||
          f2 != "weight")
        throw ParseError(lineno, "expected: generator <name> hdeg <int> weight <int>");
      if (g.hdeg < 0)
        throw ParseError(lineno, "negative hdeg for generator '" + g.name + "'");
      if (g.weight < 1)
        throw ParseError(lineno, "weight must be >= 1 for generator '" + g.name + "'");
      gens.push_back({g, lineno});
    } else if (kw == "d") {
      PendingDiff pd;
      std::string eq;
      if (!(ls >> pd.gen >> eq) || eq != "=")
        throw ParseError(lineno, "expected: d <name> = <polynomial>");
      std::getline(ls, pd.rhs);
      pd.line = lineno;
      pend.push_back(pd);
    } else if (kw == "complete-to-weight") {
      int W;
      if (!(ls >> W)) throw ParseError(lineno, "expected: complete-to-weight <int>");
      p.complete_to_weight = W;
    } else if (kw == "commutative") {
      p.is_commutative = true;
    } else if (kw == "algebra") {
      ls >> p.name;
    } else {
      throw ParseError(lineno, "unknown directive '" + kw + "'");
    }
  }

  for (auto& [g, line] : gens) {
    try {
      p.tab.add(g);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
  }
  p.tab.sort_canonical();
  p.diff.assign(p.tab.size(), NCPoly{});

  for (const auto& pd : pend) {
    auto it = p.tab.by_name.find(pd.gen);
    if (it == p.tab.by_name.end())
      throw ParseError(pd.line, "d of unknown generator '" + pd.gen + "'");
    NCPoly rhs = parse_ncpoly(pd.rhs, p.tab, pd.line);
    if (p.is_commutative) rhs = comm_normalize(rhs, p.tab);
    if (!p.diff[it->second].is_zero())
      throw ParseError(pd.line, "duplicate differential for '" + pd.gen + "'");
    p.diff[it->second] = rhs;
    validate_diff_line(p, it->second, pd.line);
  }
  return p;
}

std::string serialize_presentation(const DGAPresentation& p) {
  p.require_differential();
  std::ostringstream os;
  if (!p.name.empty()) os << "algebra " << p.name << "\n";
  if (p.complete_to_weight) os << "complete-to-weight " << *p.complete_to_weight << "\n";
  if (p.is_commutative) os << "commutative\n";
  for (std::size_t g = 0; g < p.tab.size(); ++g) {
    const Generator& gen = p.tab[static_cast<GenId>(g)];
    os << "generator " << gen.name << " hdeg " << gen.hdeg << " weight "
       << gen.weight << "\n";
  }
  for (std::size_t g = 0; g < p.tab.size(); ++g) {
    if (p.diff[g].is_zero()) continue;
    os << "d " << p.tab[static_cast<GenId>(g)].name << " = "
       << nc_str(p.diff[g], p.tab) << "\n";
  }
  return os.str();
}

std::string presentation_digest(const DGAPresentation& p) {
  std::string canon = serialize_presentation(p);
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

NCPoly extend_derivation(const DGAPresentation& p, const NCPoly& q) {
  p.require_differential();
  NCPoly out;
  for (const auto& [w, c] : q.terms) {
    int sign_deg = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const NCPoly& dg = p.diff[w[i]];
      if (!dg.is_zero()) {
        Scalar s = (sign_deg % 2) ? Scalar(-c) : c;
        Word prefix(w.begin(), w.begin() + i);
        Word suffix(w.begin() + i + 1, w.end());
        for (const auto& [dw, dc] : dg.terms) {
          Word full = prefix;
          full.insert(full.end(), dw.begin(), dw.end());
          full.insert(full.end(), suffix.begin(), suffix.end());
          out.add_term(full, Scalar(s * dc));
        }
      }
      sign_deg += p.tab[w[i]].hdeg;
    }
  }
  if (p.is_commutative) out = comm_normalize(out, p.tab);
  return out;
}

DSquaredReport verify_d_squared(const DGAPresentation& p, int max_weight) {
  p.require_differential();
  p.require_weight(max_weight);
  DSquaredReport rep;
  for (std::size_t g = 0; g < p.tab.size(); ++g) {
    const Generator& gen = p.tab[static_cast<GenId>(g)];
    if (gen.weight > max_weight) continue;
    NCPoly dd = extend_derivation(p, p.diff[g]);
    if (p.is_commutative) dd = comm_normalize(dd, p.tab);
    if (!dd.is_zero()) {
      rep.violations.push_back("d^2(" + gen.name + ") = " + nc_str(dd, p.tab));
    }
  }
  return rep;
}

// --- built-in resolutions ----------------------------------------------------

static DGAPresentation make_dual_numbers(int W) {
  DGAPresentation p;
  p.name = "k[x]/(x^2)";
  p.tab.add({"x", 0, 1});
  for (int i = 1; i + 1 <= W; ++i)
    p.tab.add({"x" + std::to_string(i), i, i + 1});
  p.tab.sort_canonical();
  p.diff.assign(p.tab.size(), NCPoly{});
  auto gid = [&](int i) { return p.tab.id(i == 0 ? "x" : "x" + std::to_string(i)); };
  for (int i = 1; i + 1 <= W; ++i) {
    NCPoly d;
    // dx_i = x x_{i-1} - x_1 x_{i-2} + ... + (-1)^{i-1} x_{i-1} x
    for (int j = 1; j <= i; ++j)
      d.add_term({gid(j - 1), gid(i - j)}, (j % 2) ? Scalar(1) : Scalar(-1));
    p.diff[gid(i)] = d;
  }
  return p;
}

static DGAPresentation make_square_zero(int d, int W) {
  if (d < 1 || d > 9)
    throw std::invalid_argument("square-zero(d) supports 1 <= d <= 9");
  DGAPresentation p;
  p.name = "k<" + std::to_string(d) + " vars>/(m^2)";
  // Generators y_w for nonempty words w over {1..d}, hdeg |w|-1, weight |w|.
  std::vector<std::string> words;
  std::vector<std::string> frontier{""};
  for (int len = 1; len <= W; ++len) {
    std::vector<std::string> next;
    for (const auto& u : frontier)
      for (int a = 1; a <= d; ++a) next.push_back(u + std::to_string(a));
    for (const auto& u : next) {
      p.tab.add({"y" + u, len - 1, len});
      words.push_back(u);
    }
    frontier = std::move(next);
  }
  p.tab.sort_canonical();
  p.diff.assign(p.tab.size(), NCPoly{});
  // Cobar-pattern differential: d y_w = sum over proper splits w = uv of
  // (-1)^{|u|-1} y_u y_v.  With this sign d = 1 reproduces the dual-numbers
  // formula literally and d^2 = 0 holds for every d.
  for (const auto& w : words) {
    if (w.size() < 2) continue;
    NCPoly dw;
    for (std::size_t k = 1; k < w.size(); ++k) {
      Scalar sign = (k % 2) ? Scalar(1) : Scalar(-1);
      dw.add_term({p.tab.id("y" + w.substr(0, k)), p.tab.id("y" + w.substr(k))},
                  sign);
    }
    p.diff[p.tab.id("y" + w)] = dw;
  }
  return p;
}

static DGAPresentation make_commuting_plane() {
  DGAPresentation p;
  p.name = "k[x,y]";
  p.tab.add({"x", 0, 1});
  p.tab.add({"y", 0, 1});
  p.tab.add({"t", 1, 2});
  p.tab.sort_canonical();
  p.diff.assign(p.tab.size(), NCPoly{});
  GenId x = p.tab.id("x"), y = p.tab.id("y"), t = p.tab.id("t");
  NCPoly dt;
  dt.add_term({x, y}, Scalar(1));
  dt.add_term({y, x}, Scalar(-1));
  p.diff[t] = dt;
  return p;
}

static DGAPresentation make_sandwich() {
  DGAPresentation p;
  p.name = "k<x,y>/(x[x,y]y)";
  p.tab.add({"x", 0, 1});
  p.tab.add({"y", 0, 1});
  p.tab.add({"t", 1, 4});
  p.tab.sort_canonical();
  p.diff.assign(p.tab.size(), NCPoly{});
  GenId x = p.tab.id("x"), y = p.tab.id("y"), t = p.tab.id("t");
  NCPoly dt;  // x[x,y]y = x*x*y*y - x*y*x*y
  dt.add_term({x, x, y, y}, Scalar(1));
  dt.add_term({x, y, x, y}, Scalar(-1));
  p.diff[t] = dt;
  p.complete_to_weight = 4;  // higher syzygies are not materialized
  return p;
}

static DGAPresentation make_truncated(int m, int W) {
  if (m < 1) throw std::invalid_argument("truncated(m) needs m >= 1");
  DGAPresentation p;
  p.name = "k[x]/(x^" + std::to_string(m + 1) + ")";
  p.census_only = true;
  // sum_i d_i q^i = q - q^{m+1} / (1 + q + ... + q^m), expanded to W.
  // Compute via the recurrence implied by multiplying out the denominator.
  std::vector<long> num(W + 1, 0);  // q*(1+...+q^m) - q^{m+1}
  for (int i = 1; i <= m + 1 && i <= W; ++i) num[i] = 1;
  if (m + 1 <= W) num[m + 1] -= 1;
  std::vector<long> di(W + 1, 0);
  for (int i = 1; i <= W; ++i) {
    long s = num[i];
    for (int j = 1; j <= m && j < i; ++j) s -= di[i - j];
    di[i] = s;
  }
  for (int i = 1; i <= W; ++i)
    if (di[i] != 0) p.census[i] = di[i];
  return p;
}

DGAPresentation builtin_resolution(const std::string& name, int param, int W) {
  if (name == "dual-numbers") return make_dual_numbers(W);
  if (name == "square-zero") return make_square_zero(param, W);
  if (name == "commuting-plane") return make_commuting_plane();
  if (name == "sandwich") return make_sandwich();
  if (name == "truncated") return make_truncated(param, W);
  throw std::invalid_argument("unknown built-in resolution '" + name + "'");
}

DGAPresentation builtin_from_spec(const std::string& spec, int W) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) return builtin_resolution(spec, 0, W);
  std::string name = spec.substr(0, colon);
  int param = std::stoi(spec.substr(colon + 1));
  return builtin_resolution(name, param, W);
}

GeneratorCensus weight_census(const DGAPresentation& p) {
  if (p.census_only) return p.census;
  GeneratorCensus c;
  for (const auto& g : p.tab.gens) c[g.weight] += g.parity() ? -1 : 1;
  for (auto it = c.begin(); it != c.end();)
    it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

}  // namespace drep
