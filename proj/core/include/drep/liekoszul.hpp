/*
 * liekoszul.hpp -- desk-scale Koszul duality apparatus: Connes cyclic
 * complexes of finite graded algebras, relative Chevalley-Eilenberg
 * complexes of gl_r(A), the Loday-Quillen-Tsygan generalized-trace map, the
 * T map into R_n, the twisting cochain tau_{r,n}, Maurer-Cartan residuals,
 * and twisted tensor products.
 *
 * Cyclic tensors are modelled as cyclic words in suspended letters (letter
 * parity = hdeg + 1 mod 2); for ordinary algebras this is exactly Connes'
 * signed cyclic action t = (-1)^k * rotation.
 */
#pragma once

#include "repfunctor.hpp"

namespace drep {

struct FiniteGradedAlgebra {
  std::vector<std::string> names;  // basis of the augmentation ideal Abar
  std::vector<int> hdeg;
  std::vector<int> weight;
  // product of basis elements inside Abar; absent entry = zero product
  std::map<std::pair<int, int>, std::vector<std::pair<int, Scalar>>> mult;

  std::size_t dim() const { return names.size(); }
  static FiniteGradedAlgebra dual_numbers();      // one generator, zero square
  static FiniteGradedAlgebra square_zero(int d);  // d generators, zero products
  static FiniteGradedAlgebra truncated(int m);    // x,...,x^m with x^i x^j = x^{i+j}
};

FiniteGradedAlgebra algebra_from_spec(const std::string& spec);

// --- Connes cyclic complex -------------------------------------------------------

struct CCData {
  GeneratorTable susp;  // one suspended letter per Abar basis element
  CyclicBasis basis;    // good suspended cyclic words; cells keyed by
                        // (susp hdeg, weight); CC degree = susp hdeg - 1
  TruncatedComplex complex;  // cells keyed by (CC degree, weight)
};

// max_k bounds the cyclic degree (tensor length - 1).
CCData connes_complex(const FiniteGradedAlgebra& A, int max_k, int max_weight);

// b differential of a cyclic tensor given by its letters, in CC coordinates.
std::map<Word, Scalar> cc_boundary(const FiniteGradedAlgebra& A,
                                   const GeneratorTable& susp,
                                   const std::vector<int>& letters);

// --- Chevalley-Eilenberg ----------------------------------------------------------

struct CEData {
  FiniteGradedAlgebra A;
  int r = 1;
  CommVarTable wedge_vars;  // suspended e_{ij} (x) a, ordered (a, i, j)
  std::map<CellKey, std::vector<CommMono>> wedges;      // ambient cells
  std::map<CellKey, std::vector<DenseRow>> invariants;  // gl_r(k)-invariant vectors
  TruncatedComplex invariant_complex;

  VarId wedge_id(int a, int i, int j) const {  // a = Abar basis index
    return static_cast<VarId>((static_cast<std::size_t>(a) * r + i) * r + j);
  }
};

CEData ce_complex(const FiniteGradedAlgebra& A, int r, int max_k, int max_weight);

// CE differential of an ambient wedge, as a polynomial over wedge monomials.
CommPoly ce_boundary(const CEData& ce, const CommMono& wedge);

// --- LQT theta and the T map -------------------------------------------------------

// Generalized-trace image of a wedge in CC coordinates (suspended words).
std::map<Word, Scalar> lqt_theta(const CEData& ce, const CommMono& wedge,
                                 const GeneratorTable& susp);

// Components f_k : Abar^{(x) k} -> R of a twisting cochain B(A) -> R.
struct BarCochain {
  std::map<std::vector<int>, NCPoly> f;
  const NCPoly* at(const std::vector<int>& word) const {
    auto it = f.find(word);
    return it == f.end() ? nullptr : &it->second;
  }
};

// f_k(x^{(x)k}) = x_{k-1} for the dual-numbers resolution.
BarCochain dual_numbers_cochain(const DGAPresentation& pres, int max_len);

// T(a_1 (x) ... (x) a_{k+1}) = sum_j (-1)^{jk} Tr_n[f_{k+1}(rot_j)].
CommPoly t_map(const std::vector<int>& letters, const BarCochain& f,
               const MatrixAlgebra& ma);

// tau_{r,n} on an ambient CE wedge: T o s^{-1} o theta.
CommPoly tau_rn(const CEData& ce, const CommMono& wedge,
                const GeneratorTable& susp, const BarCochain& f,
                const MatrixAlgebra& ma);

// --- Maurer-Cartan checks -----------------------------------------------------------

struct MCReport {
  std::vector<std::string> violations;
  int checked = 0;
  bool pass() const { return violations.empty(); }
};

// Bar-side check of d_R f + f d_C + m(f (x) f) Delta = 0 on words of
// suspended degree <= D (deconcatenation coproduct; bar differential from the
// multiplication of A).
MCReport verify_bar_cochain(const FiniteGradedAlgebra& A, const BarCochain& f,
                            const DGAPresentation& pres, int max_degree);

// CE-side check for tau_{r,n} on all ambient wedges of degree <= D.
MCReport verify_tau_rn(const FiniteGradedAlgebra& A, int r, int n,
                       const DGAPresentation& pres, const BarCochain& f,
                       int max_degree, int max_weight);

// --- twisted tensor products ---------------------------------------------------------

// Koszul complex of the standard cochain Sym^c(V[1]) -> Sym(V) for a
// one-dimensional V of the given parity (0 = even, 1 = odd), truncated by
// weight; cells keyed by (degree, weight).
TruncatedComplex standard_koszul_twisted(int parity, int max_weight);

// C (x)_tau R_n for tau_{r,n} on the ambient CE coalgebra (exploratory; the
// paper leaves finite r,n acyclicity open).
TruncatedComplex ce_twisted_tensor(const FiniteGradedAlgebra& A, int r, int n,
                                   const DGAPresentation& pres,
                                   const BarCochain& f, int max_degree,
                                   int max_weight);

}  // namespace drep
