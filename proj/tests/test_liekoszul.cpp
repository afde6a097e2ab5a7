#include <doctest.h>

#include "drep/liekoszul.hpp"
#include "drep/series.hpp"

using namespace drep;

TEST_CASE("connes complex of the dual numbers") {
  FiniteGradedAlgebra A = FiniteGradedAlgebra::dual_numbers();
  CCData cc = connes_complex(A, 9, 9);
  // One class x^{(x)(2j+1)} in cyclic degree 2j, weight 2j+1; nothing else.
  BettiTable b = betti(cc.complex);
  for (int j = 0; 2 * j + 1 <= 9; ++j) CHECK(b.dim(2 * j, 2 * j + 1) == 1);
  long total = 0;
  for (const auto& [key, cell] : b.cells) total += cell.dim;
  CHECK(total == 5);
}

TEST_CASE("connes complex of square-zero(d) has zero differential") {
  FiniteGradedAlgebra A = FiniteGradedAlgebra::square_zero(2);
  CCData cc = connes_complex(A, 6, 6);
  for (const auto& [key, m] : cc.complex.diff) CHECK(m.is_zero());
  // Homology = cyclic coinvariants = good-word counts per length.
  BettiTable b = betti(cc.complex);
  for (int len = 1; len <= 6; ++len) {
    long dim = 0;
    for (const auto& [key, cell] : b.cells)
      if (key.w == len) dim += cell.dim;
    CHECK(dim == good_cyclic_total(2, len));
  }
}

TEST_CASE("connes b differential squares to zero for truncated algebras") {
  FiniteGradedAlgebra A = FiniteGradedAlgebra::truncated(2);
  CCData cc = connes_complex(A, 6, 6);
  CHECK(cc.complex.d_squared_violations().empty());
  // b is well defined on cyclic classes: evaluating on a rotated
  // representative agrees (up to the rotation sign) with the class value.
  GeneratorTable& susp = cc.susp;
  auto letters_of = [&](const Word& w) {
    std::vector<int> out;
    for (GenId g : w)
      for (std::size_t i = 0; i < A.dim(); ++i)
        if (susp.id(A.names[i]) == g) out.push_back(static_cast<int>(i));
    return out;
  };
  for (const auto& cw : cc.basis.all) {
    if (cw.rep.size() < 2) continue;
    auto [rw, s] = rotate(cw.rep, susp);
    auto lhs = cc_boundary(A, susp, letters_of(cw.rep));
    auto rhs = cc_boundary(A, susp, letters_of(rw));
    // [rw] = s^{-1} [w]  =>  b on the rotated word equals s * b on the word.
    for (auto& [rep, c] : lhs) {
      auto it = rhs.find(rep);
      Scalar rv = it == rhs.end() ? Scalar(0) : it->second;
      CHECK(c == Scalar(rv * s));
    }
    for (auto& [rep, c] : rhs) CHECK(lhs.count(rep) == (c != 0 ? 1u : 0u));
  }
}

TEST_CASE("CE complex dimensions") {
  FiniteGradedAlgebra A = FiniteGradedAlgebra::dual_numbers();
  // r = 1: exterior algebra on one odd suspended generator.
  CEData ce1 = ce_complex(A, 1, 4, 4);
  CHECK(ce1.invariants.at({1, 1}).size() == 1);
  CHECK(ce1.invariants.count({2, 2}) == 0);

  // r = 2: invariant wedge dims follow partitions into distinct odd parts <= 3.
  CEData ce2 = ce_complex(A, 2, 4, 4);
  CHECK(ce2.invariants.at({1, 1}).size() == 1);
  CHECK(ce2.invariants.count({2, 2}) == 0);
  CHECK(ce2.invariants.at({3, 3}).size() == 1);
  CHECK(ce2.invariants.at({4, 4}).size() == 1);

  // r = 3, k = 2: no invariants.
  CEData ce3 = ce_complex(A, 3, 2, 2);
  CHECK(ce3.invariants.count({2, 2}) == 0);
}

TEST_CASE("CE differential squares to zero (nonzero bracket case)") {
  FiniteGradedAlgebra A = FiniteGradedAlgebra::truncated(2);
  CEData ce = ce_complex(A, 2, 3, 5);
  for (const auto& [key, monos] : ce.wedges)
    for (const auto& u : monos) {
      CommPoly du = ce_boundary(ce, u);
      CommPoly ddu;
      for (const auto& [m, c] : du.terms)
        ddu = ddu + ce_boundary(ce, m) * c;
      CHECK(ddu.is_zero());
    }
}

TEST_CASE("theta on single wedges and index chains") {
  FiniteGradedAlgebra A = FiniteGradedAlgebra::dual_numbers();
  CEData ce = ce_complex(A, 2, 4, 4);
  GeneratorTable susp;
  susp.add({"x", 1, 1});
  susp.sort_canonical();

  // theta(e_{11} (x) x) = (x); theta(e_{12} (x) x) = 0.
  CommMono diag{{ce.wedge_id(0, 0, 0), 1}};
  auto th = lqt_theta(ce, diag, susp);
  REQUIRE(th.size() == 1);
  CHECK(th.begin()->second == Scalar(1));

  CommMono off{{ce.wedge_id(0, 0, 1), 1}};
  CHECK(lqt_theta(ce, off, susp).empty());

  // e12 ^ e21 ^ e11 contributes to the length-3 cyclic class.
  auto norm = normalize_comm({ce.wedge_id(0, 0, 1), ce.wedge_id(0, 1, 0),
                              ce.wedge_id(0, 0, 0)},
                             ce.wedge_vars);
  REQUIRE(norm.has_value());
  auto th3 = lqt_theta(ce, norm->first, susp);
  CHECK(!th3.empty());
}

// theta lands in CCbar[1]; with the shift convention d_{C[1]} = -d_C the
// chain-map identity reads theta(d_CE u) = -b(theta u).
TEST_CASE("theta is a chain map for the truncated algebra") {
  FiniteGradedAlgebra A = FiniteGradedAlgebra::truncated(2);
  CEData ce = ce_complex(A, 2, 3, 5);
  GeneratorTable susp;
  for (std::size_t i = 0; i < A.dim(); ++i)
    susp.add({A.names[i], A.hdeg[i] + 1, A.weight[i]});
  susp.sort_canonical();
  auto basis_of = [&](GenId g) {
    for (std::size_t i = 0; i < A.dim(); ++i)
      if (susp.id(A.names[i]) == g) return static_cast<int>(i);
    return -1;
  };
  for (const auto& [key, monos] : ce.wedges)
    for (const auto& u : monos) {
      std::map<Word, Scalar> lhs;
      for (const auto& [m, c] : ce_boundary(ce, u).terms)
        for (auto& [rep, v] : lqt_theta(ce, m, susp)) {
          lhs[rep] += c * v;
          if (lhs[rep] == 0) lhs.erase(rep);
        }
      std::map<Word, Scalar> rhs;
      for (auto& [rep, v] : lqt_theta(ce, u, susp)) {
        std::vector<int> letters;
        for (GenId g : rep) letters.push_back(basis_of(g));
        for (auto& [brep, bv] : cc_boundary(A, susp, letters)) {
          rhs[brep] -= v * bv;
          if (rhs[brep] == 0) rhs.erase(brep);
        }
      }
      CHECK(lhs == rhs);
    }
}

TEST_CASE("the T map on dual-numbers cyclic tensors") {
  auto pres = builtin_resolution("dual-numbers", 0, 6);
  BarCochain f = dual_numbers_cochain(pres, 6);
  MatrixAlgebra m2 = rep_n(pres, 2);
  GenId x = pres.tab.id("x"), x2g = pres.tab.id("x2");

  // T(x) = Tr(X).
  CommPoly t1 = t_map({0}, f, m2);
  CommPoly trX = comm_var(m2.vid(x, 0, 0)) + comm_var(m2.vid(x, 1, 1));
  CHECK(t1 == trX);

  // T(x (x) x) = 0 (the class itself dies in the cyclic quotient).
  CHECK(t_map({0, 0}, f, m2).is_zero());

  // T(x (x) x (x) x) = 3 Tr(X_2).
  CommPoly t3 = t_map({0, 0, 0}, f, m2);
  CommPoly trX2 = (comm_var(m2.vid(x2g, 0, 0)) + comm_var(m2.vid(x2g, 1, 1))) *
                  Scalar(3);
  CHECK(t3 == trX2);
}

TEST_CASE("T descends through rotation") {
  auto pres = builtin_resolution("dual-numbers", 0, 8);
  BarCochain f = dual_numbers_cochain(pres, 8);
  MatrixAlgebra m1 = rep_n(pres, 1);
  // On even-length all-equal tensors both vanish; length 5 is the content case.
  CommPoly a = t_map({0, 0, 0, 0, 0}, f, m1);
  CHECK(!a.is_zero());
}

TEST_CASE("bar-side Maurer-Cartan for the dual numbers cochain") {
  auto pres = builtin_resolution("dual-numbers", 0, 8);
  FiniteGradedAlgebra A = FiniteGradedAlgebra::dual_numbers();
  BarCochain f = dual_numbers_cochain(pres, 8);
  MCReport r = verify_bar_cochain(A, f, pres, 8);
  CHECK(r.pass());
  CHECK(r.checked == 8);
}

TEST_CASE("tau_{r,n} Maurer-Cartan at small sizes") {
  auto pres = builtin_resolution("dual-numbers", 0, 6);
  FiniteGradedAlgebra A = FiniteGradedAlgebra::dual_numbers();
  BarCochain f = dual_numbers_cochain(pres, 6);
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 2; ++n) {
      MCReport rep = verify_tau_rn(A, r, n, pres, f, 6, 6);
      CHECK(rep.pass());
      CHECK(rep.checked > 0);
    }
}

TEST_CASE("standard Koszul twisted tensor is acyclic") {
  for (int parity = 0; parity <= 1; ++parity) {
    TruncatedComplex tc = standard_koszul_twisted(parity, 6);
    CHECK(tc.d_squared_violations().empty());
    BettiTable b = betti(tc);
    CHECK(b.dim(0, 0) == 1);
    for (const auto& [key, cell] : b.cells)
      if (key.w >= 1) CHECK(cell.dim == 0);
  }
}

TEST_CASE("tau_{r,n} twisted tensors are complexes; homology is reported") {
  auto pres = builtin_resolution("dual-numbers", 0, 4);
  FiniteGradedAlgebra A = FiniteGradedAlgebra::dual_numbers();
  BarCochain f = dual_numbers_cochain(pres, 5);
  // r = 1 exercises the counit piece; r = 2 exercises multi-letter wedges
  // (the full unshuffle/twist sign stack must cancel in d^2).
  for (int r = 1; r <= 2; ++r)
    for (int n = 1; n <= 2; ++n) {
      TruncatedComplex tc = ce_twisted_tensor(A, r, n, pres, f, 4, 4);
      INFO("r=", r, " n=", n);
      CHECK(tc.d_squared_violations().empty());
      BettiTable b = betti(tc);  // exploratory: no assertion on the values
      (void)b;
    }
}
