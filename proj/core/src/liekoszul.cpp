#include "drep/liekoszul.hpp"

#include <algorithm>
#include <tuple>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace drep {

FiniteGradedAlgebra FiniteGradedAlgebra::dual_numbers() {
  FiniteGradedAlgebra a;
  a.names = {"x"};
  a.hdeg = {0};
  a.weight = {1};
  return a;  // x*x = 0 in Abar
}

FiniteGradedAlgebra FiniteGradedAlgebra::square_zero(int d) {
  if (d < 1) throw std::invalid_argument("square_zero: d >= 1 required");
  FiniteGradedAlgebra a;
  for (int i = 1; i <= d; ++i) {
    a.names.push_back("x" + std::to_string(i));
    a.hdeg.push_back(0);
    a.weight.push_back(1);
  }
  return a;
}

FiniteGradedAlgebra FiniteGradedAlgebra::truncated(int m) {
  if (m < 1) throw std::invalid_argument("truncated: m >= 1 required");
  FiniteGradedAlgebra a;
  for (int i = 1; i <= m; ++i) {
    a.names.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    a.hdeg.push_back(0);
    a.weight.push_back(i);
  }
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i + j <= m) a.mult[{i - 1, j - 1}] = {{i + j - 1, Scalar(1)}};
  return a;
}

FiniteGradedAlgebra algebra_from_spec(const std::string& spec) {
  auto colon = spec.find(':');
  std::string name = colon == std::string::npos ? spec : spec.substr(0, colon);
  int param = colon == std::string::npos ? 0 : std::stoi(spec.substr(colon + 1));
  if (name == "dual-numbers") return FiniteGradedAlgebra::dual_numbers();
  if (name == "square-zero") return FiniteGradedAlgebra::square_zero(param);
  if (name == "truncated") return FiniteGradedAlgebra::truncated(param);
  throw std::invalid_argument("unknown algebra '" + spec + "'");
}

// Suspended letter table: parity of a letter is hdeg(a) + 1.
static GeneratorTable suspended_table(const FiniteGradedAlgebra& A) {
  GeneratorTable tab;
  for (std::size_t i = 0; i < A.dim(); ++i)
    tab.add({A.names[i], A.hdeg[i] + 1, A.weight[i]});
  tab.sort_canonical();
  return tab;
}

// Maps susp GenId -> Abar basis index.
static std::vector<int> susp_to_basis(const FiniteGradedAlgebra& A,
                                      const GeneratorTable& susp) {
  std::vector<int> out(susp.size());
  for (std::size_t i = 0; i < A.dim(); ++i) out[susp.id(A.names[i])] = static_cast<int>(i);
  return out;
}

std::map<Word, Scalar> cc_boundary(const FiniteGradedAlgebra& A,
                                   const GeneratorTable& susp,
                                   const std::vector<int>& letters) {
  std::map<Word, Scalar> out;
  const int len = static_cast<int>(letters.size());
  if (len < 2) return out;
  const int k = len - 1;
  // Interior faces: (-1)^{i-1} (a_1,...,a_i a_{i+1},...,a_{k+1}).
  for (int i = 1; i <= k; ++i) {
    std::vector<int> rest;
    // product slot occupies position i; letters after it keep order, then we
    // rotate so the product is first (we canonicalize anyway, but the sign of
    // the written term has the product at position i).
    // Build word directly: a_1 ... (a_i a_{i+1}) ... a_{k+1}.
    auto it = A.mult.find({letters[i - 1], letters[i]});
    if (it != A.mult.end()) {
      for (const auto& [prod, coeff] : it->second) {
        Word w;
        for (int t = 0; t < i - 1; ++t) w.push_back(susp.id(A.names[letters[t]]));
        w.push_back(susp.id(A.names[prod]));
        for (int t = i + 1; t <= k; ++t) w.push_back(susp.id(A.names[letters[t]]));
        auto can = canonical_cyclic(w, susp);
        if (!can) continue;
        Scalar sign = (i % 2) ? Scalar(1) : Scalar(-1);
        auto& acc = out[can->first.rep];
        acc += sign * coeff * can->second;
        if (acc == 0) out.erase(can->first.rep);
      }
    }
  }
  // Wrap-around face: (-1)^k kappa (a_{k+1} a_1, a_2, ..., a_k) with the
  // Koszul sign kappa of moving a_{k+1} past a_1...a_k (unsuspended degrees).
  {
    int moved = A.hdeg[letters[k]];
    int rest_deg = 0;
    for (int t = 0; t < k; ++t) rest_deg += A.hdeg[letters[t]];
    Scalar kappa = (moved % 2 && rest_deg % 2) ? Scalar(-1) : Scalar(1);
    Scalar sign = ((k % 2) ? Scalar(-1) : Scalar(1)) * kappa;
    auto it = A.mult.find({letters[k], letters[0]});
    if (it != A.mult.end()) {
      for (const auto& [prod, coeff] : it->second) {
        Word w;
        w.push_back(susp.id(A.names[prod]));
        for (int t = 1; t < k; ++t) w.push_back(susp.id(A.names[letters[t]]));
        auto can = canonical_cyclic(w, susp);
        if (!can) continue;
        auto& acc = out[can->first.rep];
        acc += sign * coeff * can->second;
        if (acc == 0) out.erase(can->first.rep);
      }
    }
  }
  return out;
}

CCData connes_complex(const FiniteGradedAlgebra& A, int max_k, int max_weight) {
  CCData cc;
  cc.susp = suspended_table(A);
  cc.basis = cyclic_words(cc.susp, max_weight, max_k + 1);
  auto basis_of = susp_to_basis(A, cc.susp);
  for (const auto& [key, list] : cc.basis.cells) {
    std::vector<std::string> labels;
    for (const auto& cw : list) labels.push_back("(" + word_str(cw.rep, cc.susp) + ")");
    // CC degree = suspended hdeg - 1.
    cc.complex.add_cell(key.h - 1, key.w, std::move(labels));
  }
  for (const auto& [key, list] : cc.basis.cells) {
    QMatrix d(cc.complex.dim(key.h - 2, key.w), static_cast<int>(list.size()));
    for (std::size_t j = 0; j < list.size(); ++j) {
      std::vector<int> letters;
      for (GenId g : list[j].rep) letters.push_back(basis_of[g]);
      for (auto& [rep, c] : cc_boundary(A, cc.susp, letters)) {
        auto it = cc.basis.index.find(rep);
        if (it == cc.basis.index.end())
          throw std::logic_error("connes_complex: boundary escapes basis");
        d.set(it->second.second, static_cast<int>(j), c);
      }
    }
    cc.complex.set_diff(key.h - 1, key.w, std::move(d));
  }
  return cc;
}

// --- Chevalley-Eilenberg -----------------------------------------------------------

CEData ce_complex(const FiniteGradedAlgebra& A, int r, int max_k, int max_weight) {
  if (r < 1) throw std::invalid_argument("ce_complex: r >= 1 required");
  CEData ce;
  ce.A = A;
  ce.r = r;
  for (std::size_t a = 0; a < A.dim(); ++a)
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) {
        std::ostringstream nm;
        nm << "E" << (i + 1) << "_" << (j + 1) << "[" << A.names[a] << "]";
        ce.wedge_vars.add({nm.str(), A.hdeg[a] + 1, A.weight[a]});
      }
  auto cells = enumerate_monomials(ce.wedge_vars, max_weight,
                                   kDefaultCellBudget);
  // Filter by wedge degree (total exponent).
  for (auto& [key, list] : cells) {
    std::vector<CommMono> keep;
    for (auto& m : list)
      if (mono_total_exp(m) <= max_k) keep.push_back(m);
    if (!keep.empty()) ce.wedges[key] = std::move(keep);
  }
  // gl_r(k)-invariants per cell: kernel of the stacked infinitesimal action.
  for (const auto& [key, monos] : ce.wedges) {
    std::map<CommMono, int> index;
    for (std::size_t i = 0; i < monos.size(); ++i)
      index[monos[i]] = static_cast<int>(i);
    // Assemble constraints: for each operator, matrix M with M[target][col];
    // invariants = common kernel.  Rebuild explicitly (clearer than above).
    std::vector<DenseRow> constraints;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b) {
        std::vector<CommPoly> action(ce.wedge_vars.size());
        for (std::size_t al = 0; al < A.dim(); ++al)
          for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
              CommPoly v;
              if (i == b) v = v + comm_var(ce.wedge_id(static_cast<int>(al), a, j));
              if (j == a) v = v - comm_var(ce.wedge_id(static_cast<int>(al), i, b));
              action[ce.wedge_id(static_cast<int>(al), i, j)] = std::move(v);
            }
        std::map<CommMono, DenseRow> rows;  // target mono -> row over columns
        for (std::size_t col = 0; col < monos.size(); ++col) {
          CommPoly dm = derive_monomial(
              monos[col], ce.wedge_vars,
              [&](VarId v) -> const CommPoly& { return action[v]; }, false);
          for (const auto& [m, c] : dm.terms) {
            auto [it, fresh] = rows.try_emplace(m, DenseRow(monos.size(), Scalar(0)));
            it->second[col] = c;
          }
        }
        for (auto& [m, row] : rows) constraints.push_back(std::move(row));
      }
    auto kern = nullspace(constraints, static_cast<int>(monos.size()));
    if (!kern.empty()) ce.invariants[key] = std::move(kern);
  }
  // Invariant complex with the restricted CE differential.
  for (const auto& [key, kern] : ce.invariants) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < kern.size(); ++i)
      labels.push_back("inv" + std::to_string(i) + "(h" + std::to_string(key.h) +
                       ",w" + std::to_string(key.w) + ")");
    ce.invariant_complex.add_cell(key.h, key.w, std::move(labels));
  }
  for (const auto& [key, kern] : ce.invariants) {
    CellKey tgt{key.h - 1, key.w};
    QMatrix d(ce.invariant_complex.dim(tgt.h, tgt.w),
              static_cast<int>(kern.size()));
    const auto& monos = ce.wedges.at(key);
    for (std::size_t j = 0; j < kern.size(); ++j) {
      CommPoly img;
      for (std::size_t c = 0; c < monos.size(); ++c) {
        if (kern[j][c] == 0) continue;
        img = img + ce_boundary(ce, monos[c]) * kern[j][c];
      }
      if (img.is_zero()) continue;
      auto kt = ce.invariants.find(tgt);
      if (kt == ce.invariants.end())
        throw std::logic_error("ce_complex: differential leaves the invariants");
      const auto& tmonos = ce.wedges.at(tgt);
      std::map<CommMono, int> tindex;
      for (std::size_t i = 0; i < tmonos.size(); ++i)
        tindex[tmonos[i]] = static_cast<int>(i);
      DenseRow v(tmonos.size(), Scalar(0));
      for (const auto& [m, c] : img.terms) v[tindex.at(m)] = c;
      auto sol = solve_in_row_span(kt->second, v);
      if (!sol)
        throw std::logic_error("ce_complex: differential leaves the invariants");
      for (std::size_t t = 0; t < sol->size(); ++t)
        if ((*sol)[t] != 0) d.set(static_cast<int>(t), static_cast<int>(j), (*sol)[t]);
    }
    ce.invariant_complex.set_diff(key.h, key.w, std::move(d));
  }
  return ce;
}

// Decode a wedge variable into (basis index, i, j).
static void decode_wedge(const CEData& ce, VarId v, int& a, int& i, int& j) {
  std::size_t lin = v;
  j = static_cast<int>(lin % ce.r);
  lin /= ce.r;
  i = static_cast<int>(lin % ce.r);
  a = static_cast<int>(lin / ce.r);
}

CommPoly ce_boundary(const CEData& ce, const CommMono& wedge) {
  std::vector<VarId> seq;
  for (const auto& [v, e] : wedge)
    for (int k = 0; k < e; ++k) seq.push_back(v);
  const std::size_t N = seq.size();
  CommPoly out;
  std::vector<int> par(N);
  for (std::size_t t = 0; t < N; ++t) par[t] = ce.wedge_vars[seq[t]].parity();
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = s + 1; t < N; ++t) {
      int pre_s = 0;
      for (std::size_t u = 0; u < s; ++u) pre_s += par[u];
      int pre_t = 0;
      for (std::size_t u = 0; u < t; ++u) pre_t += par[u];
      pre_t -= par[s];
      int sgn = (par[s] * pre_s + par[t] * pre_t + par[s]) % 2;
      Scalar move = sgn ? Scalar(-1) : Scalar(1);
      int a1, i1, j1, a2, i2, j2;
      decode_wedge(ce, seq[s], a1, i1, j1);
      decode_wedge(ce, seq[t], a2, i2, j2);
      // [xi_s, xi_t] = delta_{j1 i2} e_{i1 j2} (x) (x_{a1} x_{a2})
      //   - (-1)^{|x_{a1}||x_{a2}|} delta_{j2 i1} e_{i2 j1} (x) (x_{a2} x_{a1})
      std::vector<std::pair<VarId, Scalar>> bracket;
      if (j1 == i2) {
        auto it = ce.A.mult.find({a1, a2});
        if (it != ce.A.mult.end())
          for (const auto& [prod, coeff] : it->second)
            bracket.push_back({ce.wedge_id(prod, i1, j2), coeff});
      }
      if (j2 == i1) {
        auto it = ce.A.mult.find({a2, a1});
        if (it != ce.A.mult.end()) {
          Scalar k = (ce.A.hdeg[a1] % 2 && ce.A.hdeg[a2] % 2) ? Scalar(1)
                                                              : Scalar(-1);
          for (const auto& [prod, coeff] : it->second)
            bracket.push_back({ce.wedge_id(prod, i2, j1), Scalar(k * coeff)});
        }
      }
      if (bracket.empty()) continue;
      // Remaining letters in original order, bracket value in front.
      std::vector<VarId> rest;
      for (std::size_t u = 0; u < N; ++u)
        if (u != s && u != t) rest.push_back(seq[u]);
      for (const auto& [bv, bc] : bracket) {
        std::vector<VarId> word;
        word.push_back(bv);
        word.insert(word.end(), rest.begin(), rest.end());
        auto norm = normalize_comm(word, ce.wedge_vars);
        if (!norm) continue;
        out.add_term(norm->first, Scalar(move * bc * norm->second));
      }
    }
  return out;
}

// --- theta / T / tau ------------------------------------------------------------

std::map<Word, Scalar> lqt_theta(const CEData& ce, const CommMono& wedge,
                                 const GeneratorTable& susp) {
  std::vector<VarId> seq;
  for (const auto& [v, e] : wedge)
    for (int k = 0; k < e; ++k) seq.push_back(v);
  std::map<Word, Scalar> out;
  if (seq.empty()) return out;
  const std::size_t k = seq.size() - 1;
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> parities(k);
  for (std::size_t t = 0; t < k; ++t)
    parities[t] = ce.wedge_vars[seq[t + 1]].parity();
  do {
    Scalar sgn = koszul_sign(perm, parities);
    // xi_0 (x) xi_{sigma(1)} (x) ... ; generalized trace contracts the
    // matrix indices cyclically.
    std::vector<VarId> tuple{seq[0]};
    for (std::size_t t = 0; t < k; ++t) tuple.push_back(seq[1 + perm[t]]);
    bool chain = true;
    std::vector<int> letters;
    for (std::size_t c = 0; c < tuple.size() && chain; ++c) {
      int a1, i1, j1, a2, i2, j2;
      decode_wedge(ce, tuple[c], a1, i1, j1);
      decode_wedge(ce, tuple[(c + 1) % tuple.size()], a2, i2, j2);
      if (j1 != i2) chain = false;
      letters.push_back(a1);
    }
    if (!chain) continue;
    Word w;
    for (int a : letters) w.push_back(susp.id(ce.A.names[a]));
    auto can = canonical_cyclic(w, susp);
    if (!can) continue;
    auto& acc = out[can->first.rep];
    acc += sgn * can->second;
    if (acc == 0) out.erase(can->first.rep);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

BarCochain dual_numbers_cochain(const DGAPresentation& pres, int max_len) {
  BarCochain f;
  for (int k = 1; k <= max_len; ++k) {
    std::string nm = k == 1 ? "x" : "x" + std::to_string(k - 1);
    auto it = pres.tab.by_name.find(nm);
    if (it == pres.tab.by_name.end()) break;  // presentation materialized less
    f.f[std::vector<int>(k, 0)] = nc_word(Word{it->second});
  }
  return f;
}

CommPoly t_map(const std::vector<int>& letters, const BarCochain& f,
               const MatrixAlgebra& ma) {
  const int len = static_cast<int>(letters.size());
  const int k = len - 1;
  CommPoly out;
  for (int j = 0; j < len; ++j) {
    std::vector<int> rot;
    rot.reserve(len);
    for (int t = 0; t < len; ++t) rot.push_back(letters[(j + t) % len]);
    const NCPoly* val = f.at(rot);
    if (!val)
      throw std::invalid_argument("t_map: missing twisting-cochain component");
    Scalar sgn = ((static_cast<long>(j) * k) % 2) ? Scalar(-1) : Scalar(1);
    for (const auto& [w, c] : val->terms)
      out = out + trace_word(ma, w) * Scalar(sgn * c);
  }
  return out;
}

CommPoly tau_rn(const CEData& ce, const CommMono& wedge,
                const GeneratorTable& susp, const BarCochain& f,
                const MatrixAlgebra& ma) {
  auto basis_of = susp_to_basis(ce.A, susp);
  CommPoly out;
  // s^{-1} is degree bookkeeping; its sign convention is fixed (+1) by the
  // Maurer-Cartan and factorization golden tests.
  for (const auto& [rep, c] : lqt_theta(ce, wedge, susp)) {
    std::vector<int> letters;
    for (GenId g : rep) letters.push_back(basis_of[g]);
    out = out + t_map(letters, f, ma) * c;
  }
  return out;
}

// --- Maurer-Cartan residuals -------------------------------------------------------

// Bar differential of a word over Abar (deconcatenation coalgebra side):
// b'(a_1|...|a_l) = - sum_i (-1)^{deg(sa_1..sa_i)} (a_1|..|a_i a_{i+1}|..|a_l).
static std::map<std::vector<int>, Scalar> bar_differential(
    const FiniteGradedAlgebra& A, const std::vector<int>& word) {
  std::map<std::vector<int>, Scalar> out;
  const int l = static_cast<int>(word.size());
  int deg_prefix = 0;
  for (int i = 1; i < l; ++i) {
    deg_prefix += A.hdeg[word[i - 1]] + 1;
    auto it = A.mult.find({word[i - 1], word[i]});
    if (it == A.mult.end()) continue;
    for (const auto& [prod, coeff] : it->second) {
      std::vector<int> w;
      for (int t = 0; t < i - 1; ++t) w.push_back(word[t]);
      w.push_back(prod);
      for (int t = i + 1; t < l; ++t) w.push_back(word[t]);
      Scalar sgn = (deg_prefix % 2) ? Scalar(1) : Scalar(-1);  // -(−1)^{deg}
      auto& acc = out[w];
      acc += sgn * coeff;
      if (acc == 0) out.erase(w);
    }
  }
  return out;
}

MCReport verify_bar_cochain(const FiniteGradedAlgebra& A, const BarCochain& f,
                            const DGAPresentation& pres, int max_degree) {
  MCReport rep;
  // Enumerate words over the Abar basis with suspended degree <= D.
  std::vector<std::vector<int>> words;
  std::vector<std::pair<std::vector<int>, int>> todo{{{}, 0}};
  while (!todo.empty()) {
    auto [w, deg] = std::move(todo.back());
    todo.pop_back();
    for (std::size_t a = 0; a < A.dim(); ++a) {
      int nd = deg + A.hdeg[a] + 1;
      if (nd > max_degree) continue;
      auto nw = w;
      nw.push_back(static_cast<int>(a));
      words.push_back(nw);
      todo.push_back({std::move(nw), nd});
    }
  }
  std::sort(words.begin(), words.end());
  for (const auto& w : words) {
    const NCPoly* fw = f.at(w);
    if (!fw)
      throw std::invalid_argument("verify_bar_cochain: missing f component");
    NCPoly residual = extend_derivation(pres, *fw);
    for (auto& [bw, c] : bar_differential(A, w)) {
      const NCPoly* fb = f.at(bw);
      if (!fb)
        throw std::invalid_argument("verify_bar_cochain: missing f component");
      residual = residual + *fb * c;
    }
    int deg_prefix = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
      deg_prefix += A.hdeg[w[i - 1]] + 1;
      std::vector<int> u(w.begin(), w.begin() + i);
      std::vector<int> v(w.begin() + i, w.end());
      const NCPoly* fu = f.at(u);
      const NCPoly* fv = f.at(v);
      if (!fu || !fv)
        throw std::invalid_argument("verify_bar_cochain: missing f component");
      Scalar sgn = (deg_prefix % 2) ? Scalar(-1) : Scalar(1);
      residual = residual + mul_nc(*fu, *fv) * sgn;
    }
    ++rep.checked;
    if (!residual.is_zero()) {
      std::ostringstream os;
      os << "MC residual nonzero on a bar word of length " << w.size();
      rep.violations.push_back(os.str());
    }
  }
  return rep;
}

// Unshuffle of a wedge monomial: all (subset, complement) splits with Koszul
// signs; proper splits only.
static std::vector<std::tuple<CommMono, CommMono, Scalar>> proper_unshuffles(
    const CommMono& m, const CommVarTable& tab) {
  std::vector<VarId> seq;
  for (const auto& [v, e] : m)
    for (int k = 0; k < e; ++k) seq.push_back(v);
  const std::size_t N = seq.size();
  std::vector<std::tuple<CommMono, CommMono, Scalar>> out;
  if (N < 2) return out;
  for (std::size_t mask = 1; mask + 1 < (1ULL << N); ++mask) {
    int flips = 0;
    // Sign: move chosen letters to the front preserving order.
    for (std::size_t s = 0; s < N; ++s) {
      if (!(mask >> s & 1)) continue;
      for (std::size_t t = 0; t < s; ++t)
        if (!(mask >> t & 1))
          flips += tab[seq[s]].parity() * tab[seq[t]].parity();
    }
    CommMono a, b;
    for (std::size_t s = 0; s < N; ++s) {
      CommMono& dst = (mask >> s & 1) ? a : b;
      if (!dst.empty() && dst.back().first == seq[s])
        dst.back().second++;
      else
        dst.push_back({seq[s], 1});
    }
    out.push_back({a, b, (flips % 2) ? Scalar(-1) : Scalar(1)});
  }
  return out;
}

MCReport verify_tau_rn(const FiniteGradedAlgebra& A, int r, int n,
                       const DGAPresentation& pres, const BarCochain& f,
                       int max_degree, int max_weight) {
  MCReport rep;
  CEData ce = ce_complex(A, r, max_degree, max_weight);
  GeneratorTable susp = suspended_table(A);
  MatrixAlgebra ma = rep_n(pres, n);
  for (const auto& [key, monos] : ce.wedges) {
    if (key.h > max_degree) continue;
    for (const CommMono& u : monos) {
      CommPoly residual = d_comm(ma, tau_rn(ce, u, susp, f, ma));
      CommPoly bnd = ce_boundary(ce, u);
      for (const auto& [m, c] : bnd.terms)
        residual = residual + tau_rn(ce, m, susp, f, ma) * c;
      for (const auto& [a, b, sgn] : proper_unshuffles(u, ce.wedge_vars)) {
        int dega = mono_hdeg(a, ce.wedge_vars);
        Scalar s = (dega % 2) ? Scalar(-1) : Scalar(1);
        residual =
            residual +
            mul_comm(tau_rn(ce, a, susp, f, ma), tau_rn(ce, b, susp, f, ma),
                     ma.vars) *
                Scalar(sgn * s);
      }
      ++rep.checked;
      if (!residual.is_zero()) {
        std::ostringstream os;
        os << "MC residual nonzero on wedge " << mono_str(u, ce.wedge_vars);
        rep.violations.push_back(os.str());
      }
    }
  }
  return rep;
}

// --- twisted tensors ----------------------------------------------------------------

TruncatedComplex standard_koszul_twisted(int parity, int max_weight) {
  // C = Sym^c(V[1]) with cogenerator sv, R = Sym(V) with generator v.
  CommVarTable cvars, rvars;
  cvars.add({"sv", parity + 1, 1});
  rvars.add({"v", parity, 1});
  auto cmonos = enumerate_monomials(cvars, max_weight, kDefaultCellBudget, true);
  auto rmonos = enumerate_monomials(rvars, max_weight, kDefaultCellBudget, true);
  struct Entry { CommMono c; CommMono r; };
  std::map<CellKey, std::vector<Entry>> cells;
  for (const auto& [ck, clist] : cmonos)
    for (const auto& [rk, rlist] : rmonos) {
      if (ck.w + rk.w > max_weight) continue;
      for (const auto& cm : clist)
        for (const auto& rm : rlist)
          cells[{ck.h + rk.h, ck.w + rk.w}].push_back({cm, rm});
    }
  TruncatedComplex tc;
  std::map<CellKey, std::map<std::pair<CommMono, CommMono>, int>> index;
  for (auto& [key, list] : cells) {
    std::sort(list.begin(), list.end(), [](const Entry& x, const Entry& y) {
      return std::tie(x.c, x.r) < std::tie(y.c, y.r);
    });
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < list.size(); ++i) {
      index[key][{list[i].c, list[i].r}] = static_cast<int>(i);
      labels.push_back(mono_str(list[i].c, cvars) + " (x) " +
                       mono_str(list[i].r, rvars));
    }
    tc.add_cell(key.h, key.w, std::move(labels));
  }
  for (auto& [key, list] : cells) {
    QMatrix d(tc.dim(key.h - 1, key.w), static_cast<int>(list.size()));
    CellKey tgt{key.h - 1, key.w};
    for (std::size_t j = 0; j < list.size(); ++j) {
      const CommMono& cm = list[j].c;
      const CommMono& rm = list[j].r;
      // d = twist only: both sides have zero differential here.
      // twist(c (x) r) = sum (-1)^{deg c'} c' (x) tau(c'') r over Delta with
      // tau nonzero only on the single cogenerator.
      int e = cm.empty() ? 0 : cm[0].second;
      if (e == 0) continue;
      // Delta(sv^e) = sum_i C(e,i) sv^i (x) sv^{e-i}; tau(sv) = v.
      CommMono cprime = cm;
      if (e == 1)
        cprime.clear();
      else
        cprime[0].second = e - 1;
      Scalar binom(e);  // C(e, e-1)
      int degc = mono_hdeg(cprime, cvars);
      Scalar sgn = (degc % 2) ? Scalar(-1) : Scalar(1);
      CommPoly rr;
      rr.add_term(rm, Scalar(1));
      CommPoly img = mul_comm(comm_var(0), rr, rvars);  // v * r
      for (const auto& [m2, c2] : img.terms) {
        auto it = index.find(tgt);
        if (it == index.end()) continue;
        auto pos = it->second.find({cprime, m2});
        if (pos == it->second.end())
          throw std::logic_error("standard_koszul_twisted: escaped cell");
        d.set(pos->second, static_cast<int>(j), Scalar(sgn * binom * c2));
      }
    }
    tc.set_diff(key.h, key.w, std::move(d));
  }
  return tc;
}

TruncatedComplex ce_twisted_tensor(const FiniteGradedAlgebra& A, int r, int n,
                                   const DGAPresentation& pres,
                                   const BarCochain& f, int max_degree,
                                   int max_weight) {
  CEData ce = ce_complex(A, r, max_degree, max_weight);
  GeneratorTable susp = suspended_table(A);
  MatrixAlgebra ma = rep_n(pres, n);
  auto rmonos = enumerate_monomials(ma.vars, max_weight, kDefaultCellBudget, true);
  // All wedge monomials including the counit (empty) one.
  std::map<CellKey, std::vector<CommMono>> cmonos = ce.wedges;
  cmonos[{0, 0}].push_back(CommMono{});

  struct Entry { CommMono c; CommMono r; };
  std::map<CellKey, std::vector<Entry>> cells;
  for (const auto& [ck, clist] : cmonos)
    for (const auto& [rk, rlist] : rmonos) {
      if (ck.w + rk.w > max_weight || ck.h + rk.h > max_degree) continue;
      for (const auto& cm : clist)
        for (const auto& rm : rlist)
          cells[{ck.h + rk.h, ck.w + rk.w}].push_back({cm, rm});
    }
  TruncatedComplex tc;
  std::map<CellKey, std::map<std::pair<CommMono, CommMono>, int>> index;
  for (auto& [key, list] : cells) {
    std::sort(list.begin(), list.end(), [](const Entry& x, const Entry& y) {
      return std::tie(x.c, x.r) < std::tie(y.c, y.r);
    });
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < list.size(); ++i) {
      index[key][{list[i].c, list[i].r}] = static_cast<int>(i);
      labels.push_back(mono_str(list[i].c, ce.wedge_vars) + " (x) " +
                       mono_str(list[i].r, ma.vars));
    }
    tc.add_cell(key.h, key.w, std::move(labels));
  }
  auto add_entry = [&](QMatrix& d, const CellKey& tgt, const CommMono& cm,
                       const CommMono& rm, int col, const Scalar& val) {
    auto it = index.find(tgt);
    if (it == index.end()) return;
    auto pos = it->second.find({cm, rm});
    if (pos == it->second.end())
      throw std::logic_error("ce_twisted_tensor: escaped cell");
    auto cur = d.get(pos->second, col);
    d.set(pos->second, col, Scalar(cur + val));
  };
  // Each R_n monomial appears paired with every wedge; memoize its
  // differential and the tau values of the (few) wedge monomials.
  std::map<CommMono, CommPoly> dr_cache, tau_cache;
  auto d_of = [&](const CommMono& rm) -> const CommPoly& {
    auto it = dr_cache.find(rm);
    if (it == dr_cache.end()) {
      CommPoly rp;
      rp.add_term(rm, Scalar(1));
      it = dr_cache.emplace(rm, d_comm(ma, rp)).first;
    }
    return it->second;
  };
  auto tau_of = [&](const CommMono& cm) -> const CommPoly& {
    auto it = tau_cache.find(cm);
    if (it == tau_cache.end())
      it = tau_cache.emplace(cm, tau_rn(ce, cm, susp, f, ma)).first;
    return it->second;
  };
  for (auto& [key, list] : cells) {
    QMatrix d(tc.dim(key.h - 1, key.w), static_cast<int>(list.size()));
    CellKey tgt{key.h - 1, key.w};
    for (std::size_t j = 0; j < list.size(); ++j) {
      const CommMono& cm = list[j].c;
      const CommMono& rm = list[j].r;
      int degc = mono_hdeg(cm, ce.wedge_vars);
      // d_C part (CE differential).
      CommPoly dc = ce_boundary(ce, cm);
      CommPoly rpoly;
      rpoly.add_term(rm, Scalar(1));
      for (const auto& [m2, c2] : dc.terms)
        add_entry(d, tgt, m2, rm, static_cast<int>(j), c2);
      // Id (x) d_R with the Koszul sign of passing d past c.
      const CommPoly& dr = d_of(rm);
      Scalar s = (degc % 2) ? Scalar(-1) : Scalar(1);
      for (const auto& [m2, c2] : dr.terms)
        add_entry(d, tgt, cm, m2, static_cast<int>(j), Scalar(s * c2));
      // Twist: full Delta with the counit piece 1 (x) cm contributing
      // tau(cm) when cm itself maps, plus proper splits.
      auto apply_twist = [&](const CommMono& cp, const CommMono& cpp,
                             const Scalar& unshuffle) {
        const CommPoly& tau = tau_of(cpp);
        if (tau.is_zero()) return;
        int degp = mono_hdeg(cp, ce.wedge_vars);
        Scalar sg = (degp % 2) ? Scalar(-1) : Scalar(1);
        CommPoly img = mul_comm(tau, rpoly, ma.vars);
        for (const auto& [m2, c2] : img.terms)
          add_entry(d, tgt, cp, m2, static_cast<int>(j),
                    Scalar(unshuffle * sg * c2));
      };
      if (!cm.empty()) apply_twist(CommMono{}, cm, Scalar(1));
      for (const auto& [a, b, sgn] : proper_unshuffles(cm, ce.wedge_vars))
        apply_twist(a, b, sgn);
    }
    tc.set_diff(key.h, key.w, std::move(d));
  }
  return tc;
}

}  // namespace drep
