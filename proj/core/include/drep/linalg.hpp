/*
 * linalg.hpp -- exact linear algebra over the rationals.
 *
 * rank_exact does fraction-free (Bareiss) elimination on sparse integer rows
 * after clearing denominators; pivots are chosen by smallest nonzero entry
 * magnitude to limit entry growth.  The dense rational routines (rref /
 * solve / nullspace) back the small structured systems: expressing a
 * differential in a chosen basis, invariant kernels, obstruction kernels.
 */
#pragma once

#include "rational.hpp"

#include <map>
#include <optional>
#include <vector>

namespace drep {

struct QMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, Scalar>> row;  // sparse, no stored zeros

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), row(r) {}
  void set(int i, int j, const Scalar& v);
  Scalar get(int i, int j) const;
  bool is_zero() const;
};

// rows(a) must equal cols(b)?  No: returns a*b with a: m x k, b: k x n.
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);

long rank_exact(const QMatrix& m);

// Test-oracle style rank via plain rational row echelon (kept out of the
// Bareiss path on purpose; the unit tests compare the two).
long rank_echelon_naive(const QMatrix& m);

// Reduced row echelon form of a dense matrix, in place.  Returns pivot
// columns.  Rows are plain vectors of Scalars.
using DenseRow = std::vector<Scalar>;
std::vector<int> rref(std::vector<DenseRow>& m);

// Selects a maximal independent subset of the given rows (returns their
// indices in increasing order).
std::vector<int> independent_rows(const std::vector<DenseRow>& rows);

// Solves x * B = v for a row-independent basis B; nullopt if v is outside
// the row span.
std::optional<DenseRow> solve_in_row_span(const std::vector<DenseRow>& basis,
                                          const DenseRow& v);

// Right kernel basis of the matrix with the given rows: all x with M x = 0.
std::vector<DenseRow> nullspace(const std::vector<DenseRow>& rows, int cols);

}  // namespace drep
