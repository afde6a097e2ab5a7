#include "drep/grading.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace drep {

GenId GeneratorTable::add(const Generator& g) {
  if (by_name.count(g.name))
    throw std::invalid_argument("duplicate generator '" + g.name + "'");
  if (g.weight < 1)
    throw std::invalid_argument("generator '" + g.name + "' has weight < 1");
  gens.push_back(g);
  GenId id = static_cast<GenId>(gens.size() - 1);
  by_name[g.name] = id;
  return id;
}

void GeneratorTable::sort_canonical() {
  std::sort(gens.begin(), gens.end(), [](const Generator& a, const Generator& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.hdeg != b.hdeg) return a.hdeg < b.hdeg;
    return a.name < b.name;
  });
  by_name.clear();
  for (std::size_t i = 0; i < gens.size(); ++i)
    by_name[gens[i].name] = static_cast<GenId>(i);
}

GenId GeneratorTable::id(const std::string& name) const {
  auto it = by_name.find(name);
  if (it == by_name.end())
    throw std::invalid_argument("unknown generator '" + name + "'");
  return it->second;
}

int word_hdeg(const Word& w, const GeneratorTable& tab) {
  int d = 0;
  for (GenId g : w) d += tab[g].hdeg;
  return d;
}

int word_weight(const Word& w, const GeneratorTable& tab) {
  int d = 0;
  for (GenId g : w) d += tab[g].weight;
  return d;
}

std::string word_str(const Word& w, const GeneratorTable& tab) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "*";
    s += tab[w[i]].name;
  }
  return s;
}

Scalar koszul_sign(const std::vector<std::size_t>& perm,
                   const std::vector<int>& parities) {
  if (perm.size() != parities.size())
    throw std::invalid_argument("koszul_sign: length mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t p : perm) {
    if (p >= perm.size() || seen[p])
      throw std::invalid_argument("koszul_sign: not a permutation");
    seen[p] = true;
  }
  int flips = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] && parities[perm[i]] && parities[perm[j]]) ++flips;
  return (flips % 2) ? Scalar(-1) : Scalar(1);
}

// --- NCPoly ---------------------------------------------------------------

NCPoly& NCPoly::add_term(const Word& w, const Scalar& c) {
  if (c == 0) return *this;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [w, c] : o.terms) r.add_term(w, c);
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  for (const auto& [w, c] : o.terms) r.add_term(w, Scalar(-c));
  return r;
}

NCPoly NCPoly::operator*(const Scalar& c) const {
  NCPoly r;
  if (c == 0) return r;
  for (const auto& [w, k] : terms) r.terms.emplace(w, Scalar(k * c));
  return r;
}

NCPoly nc_one() {
  NCPoly p;
  p.terms.emplace(Word{}, Scalar(1));
  return p;
}

NCPoly nc_gen(GenId g) { return nc_word(Word{g}); }

NCPoly nc_word(const Word& w) {
  NCPoly p;
  p.terms.emplace(w, Scalar(1));
  return p;
}

NCPoly mul_nc(const NCPoly& p, const NCPoly& q) {
  NCPoly r;
  for (const auto& [wp, cp] : p.terms)
    for (const auto& [wq, cq] : q.terms) {
      Word w = wp;
      w.insert(w.end(), wq.begin(), wq.end());
      r.add_term(w, Scalar(cp * cq));
    }
  return r;
}

static void append_term_str(std::string& s, const Scalar& c, const std::string& body) {
  Scalar a = c;
  bool neg = a < 0;
  if (neg) a = Scalar(-a);
  if (s.empty()) {
    if (neg) s += "-";
  } else {
    s += neg ? " - " : " + ";
  }
  if (a == 1 && body != "1") {
    s += body;
  } else if (body == "1") {
    s += scalar_str(a);
  } else {
    s += scalar_str(a) + "*" + body;
  }
}

std::string nc_str(const NCPoly& p, const GeneratorTable& tab) {
  if (p.terms.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : p.terms) append_term_str(s, c, word_str(w, tab));
  return s;
}

// --- CommPoly ---------------------------------------------------------------

VarId CommVarTable::add(const CommVar& v) {
  if (by_name.count(v.name))
    throw std::invalid_argument("duplicate variable '" + v.name + "'");
  vars.push_back(v);
  VarId id = static_cast<VarId>(vars.size() - 1);
  by_name[v.name] = id;
  return id;
}

int mono_hdeg(const CommMono& m, const CommVarTable& tab) {
  int d = 0;
  for (auto& [v, e] : m) d += tab[v].hdeg * e;
  return d;
}

int mono_weight(const CommMono& m, const CommVarTable& tab) {
  int d = 0;
  for (auto& [v, e] : m) d += tab[v].weight * e;
  return d;
}

int mono_total_exp(const CommMono& m) {
  int d = 0;
  for (auto& [v, e] : m) d += e;
  return d;
}

std::string mono_str(const CommMono& m, const CommVarTable& tab) {
  if (m.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int k = 0; k < m[i].second; ++k) {
      if (!s.empty()) s += "*";
      s += tab[m[i].first].name;
    }
  }
  return s;
}

std::optional<std::pair<CommMono, Scalar>> normalize_comm(
    const std::vector<VarId>& factors, const CommVarTable& tab) {
  // Insertion sort counting odd-odd transpositions.
  std::vector<VarId> v = factors;
  int flips = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    VarId x = v[i];
    std::size_t j = i;
    while (j > 0 && v[j - 1] > x) {
      if (tab[v[j - 1]].parity() && tab[x].parity()) ++flips;
      v[j] = v[j - 1];
      --j;
    }
    v[j] = x;
  }
  CommMono m;
  for (VarId x : v) {
    if (!m.empty() && m.back().first == x) {
      if (tab[x].parity()) return std::nullopt;  // odd square vanishes
      m.back().second++;
    } else {
      m.push_back({x, 1});
    }
  }
  return std::make_pair(m, (flips % 2) ? Scalar(-1) : Scalar(1));
}

std::optional<std::pair<CommMono, Scalar>> mul_mono(
    const CommMono& a, const CommMono& b, const CommVarTable& tab) {
  CommMono m;
  m.reserve(a.size() + b.size());
  // Count odd-odd inversions while merging: each odd factor of b jumps over
  // the odd factors of a that sit to its right.
  int odd_left = 0;  // odd factors of a not yet merged
  for (auto& [v, e] : a)
    if (tab[v].parity()) odd_left += e;
  int flips = 0;
  std::size_t i = 0, j = 0;
  auto push = [&](VarId v, int e) {
    if (!m.empty() && m.back().first == v)
      m.back().second += e;
    else
      m.push_back({v, e});
  };
  while (i < a.size() || j < b.size()) {
    bool take_a = j == b.size() ||
                  (i < a.size() && a[i].first <= b[j].first);
    if (take_a) {
      if (i < a.size() && j < b.size() && a[i].first == b[j].first &&
          tab[a[i].first].parity())
        return std::nullopt;  // shared odd variable
      if (tab[a[i].first].parity()) odd_left -= a[i].second;
      push(a[i].first, a[i].second);
      ++i;
    } else {
      if (tab[b[j].first].parity()) flips += odd_left * b[j].second;
      push(b[j].first, b[j].second);
      ++j;
    }
  }
  for (auto& [v, e] : m)
    if (tab[v].parity() && e > 1) return std::nullopt;
  return std::make_pair(m, (flips % 2) ? Scalar(-1) : Scalar(1));
}

CommPoly& CommPoly::add_term(const CommMono& m, const Scalar& c) {
  if (c == 0) return *this;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
  return *this;
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
  CommPoly r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, c);
  return r;
}

CommPoly CommPoly::operator-(const CommPoly& o) const {
  CommPoly r = *this;
  for (const auto& [m, c] : o.terms) r.add_term(m, Scalar(-c));
  return r;
}

CommPoly CommPoly::operator*(const Scalar& c) const {
  CommPoly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms) r.terms.emplace(m, Scalar(k * c));
  return r;
}

CommPoly comm_one() {
  CommPoly p;
  p.terms.emplace(CommMono{}, Scalar(1));
  return p;
}

CommPoly comm_var(VarId v) {
  CommPoly p;
  p.terms.emplace(CommMono{{v, 1}}, Scalar(1));
  return p;
}

CommPoly mul_comm(const CommPoly& p, const CommPoly& q, const CommVarTable& tab) {
  CommPoly r;
  for (const auto& [mp, cp] : p.terms)
    for (const auto& [mq, cq] : q.terms) {
      auto prod = mul_mono(mp, mq, tab);
      if (!prod) continue;
      r.add_term(prod->first, Scalar(cp * cq * prod->second));
    }
  return r;
}

std::string comm_str(const CommPoly& p, const CommVarTable& tab) {
  if (p.terms.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms) append_term_str(s, c, mono_str(m, tab));
  return s;
}

CommPoly derive_monomial(const CommMono& m, const CommVarTable& tab,
                         const std::function<const CommPoly&(VarId)>& image,
                         bool signed_rule) {
  std::vector<VarId> seq;
  for (const auto& [v, e] : m)
    for (int k = 0; k < e; ++k) seq.push_back(v);
  CommPoly out;
  int par_prefix = 0;
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const CommPoly& dv = image(seq[t]);
    if (!dv.is_zero()) {
      CommMono prefix, suffix;
      for (std::size_t a = 0; a < t; ++a) {
        if (!prefix.empty() && prefix.back().first == seq[a])
          prefix.back().second++;
        else
          prefix.push_back({seq[a], 1});
      }
      for (std::size_t a = t + 1; a < seq.size(); ++a) {
        if (!suffix.empty() && suffix.back().first == seq[a])
          suffix.back().second++;
        else
          suffix.push_back({seq[a], 1});
      }
      CommPoly pre;
      pre.add_term(prefix, Scalar(1));
      CommPoly suf;
      suf.add_term(suffix, Scalar(1));
      CommPoly term = mul_comm(mul_comm(pre, dv, tab), suf, tab);
      Scalar s = (signed_rule && par_prefix % 2) ? Scalar(-1) : Scalar(1);
      out = out + term * s;
    }
    if (signed_rule) par_prefix += tab[seq[t]].parity();
  }
  return out;
}

}  // namespace drep
