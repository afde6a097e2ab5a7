/*
 * series.hpp -- truncated power-series engine: Euler-characteristic products,
 * zeta closed forms and the m-train expansion, the Molien-Weyl constant-term
 * integral on the maximal torus, necklace/Witt counts, good-cyclic-word
 * counts, and the combinatorial identity checker.
 *
 * All coefficients are exact; every reported quantity is an integer, and
 * non-integer results are hard errors.
 */
#pragma once

#include "presentation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace drep {

// Multivariate series truncated by total degree.
struct PowerSeries {
  int nvars = 1;
  int trunc = 0;
  std::map<std::vector<int>, Scalar> c;

  static PowerSeries one(int nvars, int T);
  Scalar coeff(const std::vector<int>& e) const;
  Scalar coeff1(int k) const;  // univariate convenience
  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries inverse() const;      // constant term must be a unit
  PowerSeries pow_int(long e) const;  // negative allowed
  bool operator==(const PowerSeries& o) const;
  std::string str(const std::vector<std::string>& names) const;
};

// chi(H(A,n), q) = prod_i (1 - q^i)^{-d_i n^2}           (weights from census)
PowerSeries chi_rep(const GeneratorCensus& census, int n, int T);

// zeta(A, q) = prod_s (1 - sum_i d_i q^{si})^{-1}
PowerSeries zeta_closed(const GeneratorCensus& census, int T);

// zeta of k[x]/(x^{m+1}) via explicit m-train enumeration.
PowerSeries zeta_trains(int m, int T);

// chi(Sym[HCbar], q) = prod_i (1 - q^i)^{b_i - a_i}, a = even dims, b = odd.
PowerSeries chi_sym_hc(const std::map<int, long>& even_dims,
                       const std::map<int, long>& odd_dims, int T);

// Molien-Weyl: (1/n!) CT_z[ prod_i det(I - Ad(z) q^i)^{-d_i} *
// prod_{a != b} (1 - z_a/z_b) ], Ad eigenvalues z_a z_b^{-1}.
PowerSeries molien_weyl(const GeneratorCensus& census, int n, int T);

struct NecklaceCounts {
  std::vector<long> phi;  // phi[r], 1-based (index 0 unused)
  std::vector<long> mob;  // M[r]
};

// Cyclic and primitive cyclic word counts over a d-letter alphabet; the
// closed formulas are cross-checked against rotation-orbit enumeration for
// r <= 12.
NecklaceCounts necklace_counts(int d, int r_max);

// Good cyclic words with the all-odd sign rule and the given letter content.
long good_cyclic_count(int d, const std::vector<int>& multidegree,
                       int length_cap = 16);
// Total good cyclic words of length r over d (odd) letters.
long good_cyclic_total(int d, int r, int length_cap = 16);

struct IdentityResult {
  bool pass = false;
  std::optional<int> first_mismatch;
  std::string detail;
};

// which in {"cid1", "cid2", "cidd", "cidd1"}; param is m for cid2 and d for
// cidd/cidd1 (ignored for cid1).
IdentityResult verify_identity(const std::string& which, int param, int T);

}  // namespace drep
