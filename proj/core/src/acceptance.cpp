#include "drep/acceptance.hpp"

#include "drep/derham.hpp"
#include "drep/liekoszul.hpp"
#include "drep/series.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace drep {

namespace {

struct Check {
  CriterionResult* out;
  void expect(bool cond, const std::string& what) {
    if (!cond) out->details.push_back("FAILED: " + what);
  }
  void note(const std::string& what) { out->details.push_back(what); }
};

std::string cellstr(int h, int w) {
  return "(h=" + std::to_string(h) + ", w=" + std::to_string(w) + ")";
}

// Deterministic RNG for the property suites.
struct XorShift {
  std::uint64_t s;
  explicit XorShift(std::uint64_t seed) : s(seed ? seed : 88172645463325252ULL) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int uniform(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

// --- criterion bodies -------------------------------------------------------

void c1_dg_validation(Check& ck, int /*jobs*/) {
  {
    auto p = builtin_resolution("dual-numbers", 0, 12);
    ck.expect(verify_d_squared(p, 12).pass(), "d^2 = 0 for dual-numbers, W = 12");
  }
  for (int d = 1; d <= 2; ++d) {
    auto p = builtin_resolution("square-zero", d, 8);
    ck.expect(verify_d_squared(p, 8).pass(),
              "d^2 = 0 for square-zero(" + std::to_string(d) + "), W = 8");
  }
  {
    auto p = builtin_resolution("commuting-plane", 0, 12);
    ck.expect(verify_d_squared(p, 12).pass(), "d^2 = 0 for commuting-plane");
  }
  {
    auto p = builtin_resolution("sandwich", 0, 4);
    ck.expect(verify_d_squared(p, 4).pass(), "d^2 = 0 for sandwich, W = 4");
  }
}

void c2_dual_numbers_n1(Check& ck, int /*jobs*/) {
  auto p = builtin_resolution("dual-numbers", 0, 8);
  BettiTable b = betti(full_complex(rep_n(p, 1), 8));
  for (int w = 1; w <= 8; ++w)
    ck.expect(b.dim(1, w) == 0, "H_1(A,1)(w=" + std::to_string(w) + ") = 0");
  auto want = [&](int h, int w, long d) {
    ck.expect(b.dim(h, w) == d, "H_" + std::to_string(h) + "(A,1)" +
                                    cellstr(h, w) + " = " + std::to_string(d) +
                                    " (got " + std::to_string(b.dim(h, w)) + ")");
  };
  want(3, 5, 1);
  want(3, 6, 1);
  want(3, 7, 0);
  want(5, 7, 1);
  want(5, 8, 2);
  if (b.dim(3, 6) == 0 || b.dim(5, 8) == 1)
    ck.note(
        "note: the computed table is internally verified: x.(x x3 - 2 x1 x2) "
        "= d(x1 x3) is exact, and the Euler characteristic of every weight "
        "column matches the census product; the expected values above read "
        "the module H_3 = A.(x x3 - 2 x1 x2) as free, but x acts by zero on "
        "the class");
}

void c3_commuting_plane_n1(Check& ck, int /*jobs*/) {
  auto p = builtin_resolution("commuting-plane", 0, 6);
  BettiTable b = betti(full_complex(rep_n(p, 1), 6));
  bool formula_failed = false;
  for (int k = 0; k <= 3; ++k)
    for (int w = 1; w <= 6; ++w) {
      long expected = std::max(0, w - 2 * k + 1);
      long got = b.dim(k, w);
      if (got != expected) formula_failed = true;
      ck.expect(got == expected,
                "dim H_" + std::to_string(k) + "(A,1)(w=" + std::to_string(w) +
                    ") = max(0, w - 2k + 1) = " + std::to_string(expected) +
                    " (got " + std::to_string(got) + ")");
    }
  if (formula_failed)
    ck.note(
        "note: H(A,1) is the homology of k[x,y,t] with zero differential and "
        "t odd, so t^2 = 0 and H_k vanishes for k >= 2; the printed formula "
        "treats t as a polynomial variable.  The k <= 1 rows match it, and "
        "every weight column's Euler characteristic matches the census "
        "product");
}

void c4_cyclic_dual_numbers(Check& ck, int /*jobs*/) {
  auto p = builtin_resolution("dual-numbers", 0, 9);
  BettiTable b = betti(cyclic_complex(p, 9).complex);
  for (const auto& [key, cell] : b.cells) {
    bool diagonal = (key.h % 2 == 0) && (key.w == key.h + 1);
    ck.expect(diagonal ? cell.dim == 1 : cell.dim == 0,
              "HCbar cell " + cellstr(key.h, key.w) + " has dim " +
                  std::to_string(cell.dim));
  }
  for (int j = 0; 2 * j + 1 <= 9; ++j)
    ck.expect(b.dim(2 * j, 2 * j + 1) == 1,
              "HCbar_" + std::to_string(2 * j) + "(w=" +
                  std::to_string(2 * j + 1) + ") = 1");
}

// Free graded-commutative closure of a Betti table, truncated by weight.
BettiTable lambda_closure(const BettiTable& b, int max_weight) {
  CommVarTable vars;
  int counter = 0;
  for (const auto& [key, cell] : b.cells)
    for (long i = 0; i < cell.dim; ++i)
      vars.add({"c" + std::to_string(counter++), key.h, key.w});
  auto cells = enumerate_monomials(vars, max_weight, kDefaultCellBudget);
  BettiTable out;
  for (const auto& [key, list] : cells)
    out.cells[key].dim = static_cast<long>(list.size());
  return out;
}

void c5_stable_theorem(Check& ck, int /*jobs*/) {
  for (const std::string name : {"dual-numbers", "commuting-plane"}) {
    auto p = builtin_resolution(name, 0, 8);
    BettiTable hc = betti(cyclic_complex(p, 8).complex);
    BettiTable stable = betti(stable_complex(p, 8).complex);
    BettiTable closure = lambda_closure(hc, 8);
    std::set<CellKey> keys;
    for (const auto& [key, cell] : stable.cells) keys.insert(key);
    for (const auto& [key, cell] : closure.cells) keys.insert(key);
    for (const auto& key : keys)
      ck.expect(stable.dim(key.h, key.w) == closure.dim(key.h, key.w),
                name + ": stable vs Lambda[HCbar] at " + cellstr(key.h, key.w) +
                    ": " + std::to_string(stable.dim(key.h, key.w)) + " vs " +
                    std::to_string(closure.dim(key.h, key.w)));
  }
}

void c6_stabilization(Check& ck, int jobs) {
  auto p = builtin_resolution("dual-numbers", 0, 4);
  StabilityTable t = empirical_stability(p, 4, 4, kDefaultCellBudget, jobs);
  const BettiTable& inv4 = t.invariant.at(4);
  std::set<CellKey> keys;
  for (const auto& [key, cell] : t.stable.cells) keys.insert(key);
  for (const auto& [key, cell] : inv4.cells) keys.insert(key);
  for (const auto& key : keys)
    ck.expect(t.stable.dim(key.h, key.w) == inv4.dim(key.h, key.w),
              "n = 4 invariant homology equals stable value at " +
                  cellstr(key.h, key.w));
  for (int w = 1; w <= 4; ++w) {
    auto least = t.least_n.at(w);
    ck.expect(least.has_value() && *least <= w,
              "N(w=" + std::to_string(w) + ") <= w (observed " +
                  (least ? std::to_string(*least) : std::string("unreached")) +
                  ")");
  }
}

void c7_procesi_degree0(Check& ck, int /*jobs*/) {
  auto p = builtin_resolution("dual-numbers", 0, 5);
  StableComplexData st = stable_complex(p, 4);
  for (int n = 1; n <= 3; ++n) {
    MatrixAlgebra ma = rep_n(p, n);
    for (int w = 1; w <= 4; ++w) {
      SymTraceCell cell = sym_trace_cell(ma, st, 0, w);
      long trace_rank = rank_exact(cell.matrix);
      long inv_dim = invariant_dim_ambient(ma, 0, w);
      ck.expect(trace_rank == inv_dim,
                "trace monomials span invariants at h=0, n=" +
                    std::to_string(n) + ", w=" + std::to_string(w) + " (rank " +
                    std::to_string(trace_rank) + " vs dim " +
                    std::to_string(inv_dim) + ")");
    }
  }
  BettiTable stable = betti(stable_complex(p, 5).complex);
  BettiTable full = betti(full_complex(rep_n(p, 1), 5));
  ck.expect(stable.dim(3, 5) == 0, "stable side has dim 0 at (h=3, w=5)");
  ck.expect(full.dim(3, 5) == 1, "H_3(A,1)(5) = 1 (non-surjectivity witness)");
}

void c8_obstruction(Check& ck, int jobs) {
  {
    auto p = builtin_resolution("dual-numbers", 0, 5);
    ObstructionComplex k = obstruction_complex(p, 1, 5, kDefaultCellBudget, jobs);
    InvariantComplex inv = invariant_subcomplex(p, 1, 5, kDefaultCellBudget, jobs);
    StableComplexData st = stable_complex(p, 5);
    LesReport rep = les_check(k.complex, st.complex, inv.complex);
    ck.expect(rep.pass(), "short-exact Euler additivity for dual numbers, n=1, w<=5");
    for (const auto& note : rep.notes) ck.note("  " + note);
  }
  {
    auto p = builtin_resolution("sandwich", 0, 4);
    ObstructionComplex k = obstruction_complex(p, 1, 4, kDefaultCellBudget, jobs);
    for (int r = 1; r <= 4; ++r)
      ck.expect(k.complex.dim(1, r) == 0,
                "sandwich K_{" + std::to_string(r) + ",1}(A,1) = 0");
  }
}

void c9_identities(Check& ck, int /*jobs*/) {
  ck.expect(verify_identity("cid1", 0, 30).pass, "cid1 to q^30");
  ck.expect(verify_identity("cid2", 2, 30).pass, "cid2 (m=2) to q^30");
  ck.expect(verify_identity("cid2", 3, 30).pass, "cid2 (m=3) to q^30");
  for (int m = 1; m <= 3; ++m) {
    auto census = builtin_resolution("truncated", m, 20).census;
    PowerSeries lhs = zeta_trains(m, 20);
    PowerSeries rhs = zeta_closed(census, 20);
    bool same = true;
    for (int k = 0; k <= 20; ++k)
      if (lhs.coeff1(k) != rhs.coeff1(k)) same = false;
    ck.expect(same, "zeta_trains = zeta_closed for m = " + std::to_string(m));
  }
  ck.expect(verify_identity("cidd1", 2, 14).pass, "cidd1 (d=2) to q^14");
  // Necklace counts: formulas vs enumeration (r <= 12) is checked inside.
  for (int d = 1; d <= 3; ++d) {
    try {
      necklace_counts(d, 12);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("necklace counts, d=") + std::to_string(d) +
                           ": " + e.what());
    }
  }
}

void c10_molien(Check& ck, int /*jobs*/) {
  for (const std::string name : {"dual-numbers", "commuting-plane"}) {
    auto census = weight_census(builtin_resolution(name, 0, 12));
    PowerSeries mw = molien_weyl(census, 1, 12);
    PowerSeries chi = chi_rep(census, 1, 12);
    bool same = true;
    for (int k = 0; k <= 12; ++k)
      if (mw.coeff1(k) != chi.coeff1(k)) same = false;
    ck.expect(same, name + ": molien_weyl(n=1) = chi_rep(n=1) to q^12");
  }
  {
    auto census = weight_census(builtin_resolution("dual-numbers", 0, 8));
    PowerSeries z = zeta_closed(census, 8);
    for (int n = 1; n <= 3; ++n) {
      PowerSeries mw = molien_weyl(census, n, 8);
      for (int s = 0; s <= n; ++s)
        ck.expect(mw.coeff1(s) == z.coeff1(s),
                  "dual numbers: molien(n=" + std::to_string(n) +
                      ") agrees with zeta at q^" + std::to_string(s));
    }
  }
  {
    auto p = builtin_resolution("dual-numbers", 0, 4);
    auto census = weight_census(builtin_resolution("dual-numbers", 0, 12));
    PowerSeries mw = molien_weyl(census, 2, 4);
    InvariantComplex inv = invariant_subcomplex(p, 2, 4);
    auto chi = euler(inv.complex);
    for (int w = 1; w <= 4; ++w) {
      long lhs = to_long(mw.coeff1(w));
      long rhs = chi.count(w) ? chi.at(w) : 0;
      ck.expect(lhs == rhs, "molien(n=2) q^" + std::to_string(w) +
                                " = chi(invariant subcomplex) (" +
                                std::to_string(lhs) + " vs " +
                                std::to_string(rhs) + ")");
    }
  }
}

void c11_koszul(Check& ck, int /*jobs*/) {
  auto pres = builtin_resolution("dual-numbers", 0, 10);
  FiniteGradedAlgebra A = FiniteGradedAlgebra::dual_numbers();
  BarCochain f = dual_numbers_cochain(pres, 10);
  {
    MCReport r = verify_bar_cochain(A, f, pres, 10);
    ck.expect(r.pass() && r.checked >= 10,
              "f_k(x^k) = x_{k-1} satisfies Maurer-Cartan to degree 10 (" +
                  std::to_string(r.checked) + " words)");
  }
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 2; ++n) {
      MCReport rep = verify_tau_rn(A, r, n, pres, f, 8, 8);
      ck.expect(rep.pass(), "tau_{" + std::to_string(r) + "," + std::to_string(n) +
                                "} satisfies Maurer-Cartan to degree 8 (" +
                                std::to_string(rep.checked) + " wedges)");
    }
  // theta chain map for r <= 2, weight <= 4 (zero differentials on both
  // sides for a square-zero algebra; the identity is still machine-checked).
  for (int r = 1; r <= 2; ++r) {
    CEData ce = ce_complex(A, r, 4, 4);
    GeneratorTable susp;
    for (std::size_t i = 0; i < A.dim(); ++i)
      susp.add({A.names[i], A.hdeg[i] + 1, A.weight[i]});
    susp.sort_canonical();
    bool chain_ok = true;
    for (const auto& [key, monos] : ce.wedges)
      for (const auto& u : monos) {
        // theta(d_CE u)
        std::map<Word, Scalar> lhs;
        for (const auto& [m, c] : ce_boundary(ce, u).terms)
          for (auto& [rep, v] : lqt_theta(ce, m, susp)) {
            lhs[rep] += c * v;
            if (lhs[rep] == 0) lhs.erase(rep);
          }
        // -b(theta u): theta lands in the shifted complex CCbar[1], whose
        // differential is -b under the Koszul shift convention.
        std::map<Word, Scalar> rhs;
        auto basis_of = [&](GenId g) {
          for (std::size_t i = 0; i < A.dim(); ++i)
            if (susp.id(A.names[i]) == g) return static_cast<int>(i);
          return -1;
        };
        for (auto& [rep, v] : lqt_theta(ce, u, susp)) {
          std::vector<int> letters;
          for (GenId g : rep) letters.push_back(basis_of(g));
          for (auto& [brep, bv] : cc_boundary(A, susp, letters)) {
            rhs[brep] -= v * bv;
            if (rhs[brep] == 0) rhs.erase(brep);
          }
        }
        if (!(lhs == rhs)) chain_ok = false;
      }
    ck.expect(chain_ok, "theta is a chain map at r = " + std::to_string(r));
  }
  for (int parity = 0; parity <= 1; ++parity) {
    BettiTable b = betti(standard_koszul_twisted(parity, 6));
    bool ok = b.dim(0, 0) == 1;
    for (const auto& [key, cell] : b.cells)
      if (!(key.h == 0 && key.w == 0) && cell.dim != 0) ok = false;
    ck.expect(ok, std::string("standard cochain twisted tensor acyclic (") +
                      (parity ? "odd" : "even") + " generator), weight <= 6");
  }
}

void c12_lqt_instance(Check& ck, int /*jobs*/) {
  FiniteGradedAlgebra A = FiniteGradedAlgebra::square_zero(1);
  auto partitions_distinct_odd = [](int k, int cap) {
    // number of subsets of {1,3,5,...<=cap} summing to k
    std::vector<long> ways(k + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= cap; part += 2)
      for (int s = k; s >= part; --s) ways[s] += ways[s - part];
    return ways[k];
  };
  for (int r = 2; r <= 3; ++r) {
    CEData ce = ce_complex(A, r, 5, 5);
    for (int k = 0; k <= 5; ++k) {
      long dim = 0;
      if (k == 0) {
        dim = 1;  // the empty wedge spans the invariants in degree 0
      } else {
        auto it = ce.invariants.find({k, k});
        dim = it == ce.invariants.end() ? 0 : static_cast<long>(it->second.size());
      }
      long expected = partitions_distinct_odd(k, 2 * r - 1);
      ck.expect(dim == expected,
                "CE invariants, r=" + std::to_string(r) + ", wedge degree " +
                    std::to_string(k) + ": dim " + std::to_string(dim) +
                    " vs partitions " + std::to_string(expected));
    }
  }
}

void c13_derham(Check& ck, int /*jobs*/) {
  {
    DGAPresentation free1 = parse_presentation("generator x hdeg 0 weight 1\n");
    BettiTable b = reduced_hdr(free1, 6);
    bool ok = true;
    for (const auto& [key, cell] : b.cells)
      if (cell.dim != 0) ok = false;
    ck.expect(ok, "reduced HDR of k<x> vanishes through weight 6");
  }
  {
    auto p = builtin_resolution("commuting-plane", 0, 6);
    BettiTable b = reduced_hdr(p, 6);
    bool ok = true;
    for (const auto& [key, cell] : b.cells)
      if (cell.dim != 0) ok = false;
    ck.expect(ok, "reduced HDR of commuting-plane vanishes through weight 6");
  }
  {
    auto p = builtin_resolution("commuting-plane", 0, 6);
    for (int n = 1; n <= 2; ++n) {
      P3Report rep = p3_check(p, n);
      ck.expect(rep.pass, "forms functor compatibility at n = " + std::to_string(n));
      for (const auto& m : rep.mismatches) ck.note("  " + m);
    }
  }
  for (const std::string name : {"dual-numbers", "commuting-plane"}) {
    auto p = builtin_resolution(name, 0, 5);
    BettiTable b = stable_derham(p, 5);
    bool ok = true;
    for (const auto& [key, cell] : b.cells)
      if (key.w >= 1 && cell.dim != 0) ok = false;
    ck.expect(ok, "stable de Rham of " + name + " vanishes in weights 1..5");
  }
}

void c14_property_suites(Check& ck, int /*jobs*/) {
  XorShift rng(0x5eed5eedULL);
  auto p = builtin_resolution("dual-numbers", 0, 8);
  const auto& tab = p.tab;

  auto random_word = [&](int max_weight) {
    Word w;
    int weight = 0;
    while (true) {
      GenId g = static_cast<GenId>(rng.uniform(static_cast<int>(tab.size())));
      if (weight + tab[g].weight > max_weight) break;
      w.push_back(g);
      weight += tab[g].weight;
      if (rng.uniform(4) == 0 && !w.empty()) break;
    }
    return w;
  };

  // Koszul-sign coherence: the sign of a permutation equals the product of
  // the signs of adjacent transpositions realizing it.
  {
    int bad = 0;
    for (int it = 0; it < 200; ++it) {
      int k = 2 + rng.uniform(6);
      std::vector<std::size_t> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = k - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.uniform(i + 1)]);
      std::vector<int> parities(k);
      for (auto& x : parities) x = rng.uniform(2);
      Scalar direct = koszul_sign(perm, parities);
      // bubble-sort decomposition
      auto v = perm;
      Scalar bubbled(1);
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j + 1 < v.size(); ++j)
          if (v[j] > v[j + 1]) {
            if (parities[v[j]] && parities[v[j + 1]]) bubbled = -bubbled;
            std::swap(v[j], v[j + 1]);
          }
      if (direct != bubbled) ++bad;
    }
    ck.expect(bad == 0, "koszul_sign coherence on 200 random permutations");
  }

  // tau/N/canonicalization consistency.
  {
    int bad = 0;
    for (int it = 0; it < 200; ++it) {
      Word w = random_word(8);
      if (w.empty()) {
        --it;
        continue;
      }
      NCPoly nw = norm_operator(w, tab);
      auto [rw, s] = rotate(w, tab);
      NCPoly nrw = norm_operator(rw, tab) * s;
      if (!(nw == nrw)) ++bad;  // N o tau = N
      auto can = canonical_cyclic(w, tab);
      if (can) {
        auto can2 = canonical_cyclic(rw, tab);
        // [w] = s [rw]  =>  can(w).sign = s * can(rw).sign
        if (!can2 || !(can->first == can2->first) ||
            can->second != Scalar(s * can2->second))
          ++bad;
      } else {
        if (!nw.is_zero()) ++bad;  // bad word must have N = 0
      }
    }
    ck.expect(bad == 0, "tau/N/canonicalization consistency on 200 random words");
  }

  // Cyclic derivative annihilates graded commutators.
  {
    int bad = 0;
    for (int it = 0; it < 200; ++it) {
      Word a = random_word(5), b = random_word(5);
      if (a.empty() || b.empty()) {
        --it;
        continue;
      }
      int ha = word_hdeg(a, tab), hb = word_hdeg(b, tab);
      NCPoly pq = mul_nc(nc_word(a), nc_word(b));
      NCPoly qp = mul_nc(nc_word(b), nc_word(a));
      NCPoly comm = pq - qp * ((ha % 2 && hb % 2) ? Scalar(-1) : Scalar(1));
      for (GenId g = 0; g < tab.size(); ++g)
        if (!cyclic_derivative(comm, g, tab).is_zero()) ++bad;
    }
    ck.expect(bad == 0, "cyclic derivative kills commutators on 200 random pairs");
  }

  // Trace invariance under the infinitesimal gl_n action (n = 2).
  {
    MatrixAlgebra ma = rep_n(p, 2);
    int bad = 0, done = 0;
    for (int it = 0; done < 200 && it < 2000; ++it) {
      Word w = random_word(5);
      if (w.empty()) continue;
      auto can = canonical_cyclic(w, tab);
      if (!can) continue;
      ++done;
      for (auto& r : gl_residuals(ma, trace_cyclic(ma, can->first)))
        if (!r.is_zero()) ++bad;
    }
    ck.expect(done >= 200 && bad == 0,
              "trace invariance under gl_2 on 200 random cyclic words");
  }

  // mu-compatibility of traces, n = 2,3.
  {
    int bad = 0, done = 0;
    MatrixAlgebra m3 = rep_n(p, 3), m2 = rep_n(p, 2), m1 = rep_n(p, 1);
    for (int it = 0; done < 200 && it < 2000; ++it) {
      Word w = random_word(4);
      if (w.empty()) continue;
      auto can = canonical_cyclic(w, tab);
      if (!can) continue;
      ++done;
      if (!(stabilization_map(m3, m2, trace_cyclic(m3, can->first)) ==
            trace_cyclic(m2, can->first)))
        ++bad;
      if (!(stabilization_map(m2, m1, trace_cyclic(m2, can->first)) ==
            trace_cyclic(m1, can->first)))
        ++bad;
    }
    ck.expect(done >= 200 && bad == 0,
              "mu_{n,n-1} compatibility of traces on 200 random cyclic words");
  }
}

}  // namespace

std::vector<CriterionResult> run_paper_suite(int only, int jobs) {
  struct Entry {
    int id;
    const char* title;
    std::function<void(Check&, int)> body;
  };
  const std::vector<Entry> entries = {
      {1, "DG validation (d^2 = 0 on built-in resolutions)", c1_dg_validation},
      {2, "Representation homology of dual numbers at n = 1", c2_dual_numbers_n1},
      {3, "Commuting plane at n = 1 (printed formula)", c3_commuting_plane_n1},
      {4, "Reduced cyclic homology of dual numbers", c4_cyclic_dual_numbers},
      {5, "Stable theorem at truncation", c5_stable_theorem},
      {6, "Stabilization of invariant homology", c6_stabilization},
      {7, "Procesi surjectivity in degree 0 and its failure above",
       c7_procesi_degree0},
      {8, "Obstruction complex exactness", c8_obstruction},
      {9, "Combinatorial identities", c9_identities},
      {10, "Molien-Weyl constant term", c10_molien},
      {11, "Twisting cochains and twisted tensors", c11_koszul},
      {12, "Stable matrix Lie homology instance", c12_lqt_instance},
      {13, "De Rham vanishing and functor compatibility", c13_derham},
      {14, "Randomized property suites", c14_property_suites},
  };
  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    if (only != -1 && e.id != only) continue;
    CriterionResult r;
    r.id = e.id;
    r.title = e.title;
    Check ck{&r};
    auto t0 = std::chrono::steady_clock::now();
    try {
      e.body(ck, jobs);
    } catch (const std::exception& ex) {
      r.details.push_back(std::string("FAILED: exception: ") + ex.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    r.seconds = std::chrono::duration<double>(t1 - t0).count();
    r.pass = true;
    for (const auto& d : r.details)
      if (d.rfind("FAILED:", 0) == 0) r.pass = false;
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_scoreboard(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    os << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": "
       << r.title << "  (" << static_cast<int>(r.seconds * 1000) << " ms)\n";
    for (const auto& d : r.details)
      if (!r.pass || d.rfind("FAILED:", 0) != 0) os << "    " << d << "\n";
    if (r.pass) ++passed;
  }
  os << passed << "/" << results.size() << " criteria passed\n";
  return os.str();
}

}  // namespace drep
