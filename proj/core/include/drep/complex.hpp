/*
 * complex.hpp -- (homological degree, weight)-bigraded truncated chain
 * complexes over exact rationals, Betti tables, Euler characteristics, and
 * the short-exact-sequence consistency check.
 *
 * The differential preserves weight and lowers homological degree by one, so
 * every weight column is a finite complex of its own.  Homological degrees
 * may be negative (de Rham totalizations).
 */
#pragma once

#include "grading.hpp"
#include "linalg.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace drep {

struct CellKey {
  int h = 0;
  int w = 0;
  bool operator<(const CellKey& o) const {
    return w != o.w ? w < o.w : h < o.h;
  }
  bool operator==(const CellKey& o) const { return h == o.h && w == o.w; }
};

struct TruncatedComplex {
  std::map<CellKey, std::vector<std::string>> cells;  // basis labels
  // d on cell (h,w) lands in cell (h-1,w):  dim(h-1,w) x dim(h,w).
  std::map<CellKey, QMatrix> diff;
  // Weights whose column may be cut off above some homological degree
  // (partial presentations); Betti entries there are lower bounds only.
  std::set<int> incomplete_weights;

  int dim(int h, int w) const {
    auto it = cells.find({h, w});
    return it == cells.end() ? 0 : static_cast<int>(it->second.size());
  }
  void add_cell(int h, int w, std::vector<std::string> labels);
  void set_diff(int h, int w, QMatrix m);
  const QMatrix* get_diff(int h, int w) const;

  // Returns the offending cells, empty when d*d = 0 everywhere stored.
  std::vector<CellKey> d_squared_violations() const;
};

struct BettiCell {
  long dim = 0;
  bool lower_bound_only = false;
};

struct BettiTable {
  std::map<CellKey, BettiCell> cells;
  long dim(int h, int w) const {
    auto it = cells.find({h, w});
    return it == cells.end() ? 0 : it->second.dim;
  }
};

// dim H = dim C - rank d_in - rank d_out per cell.  Throws if d*d != 0.
BettiTable betti(const TruncatedComplex& c);

// Alternating sums per weight; betti-level and complex-level sums are
// asserted equal (they must be, exactly).
std::map<int, long> euler(const TruncatedComplex& c);
std::map<int, long> euler(const BettiTable& b);

struct LesReport {
  bool dims_ok = true;          // dim(mid) = dim(sub) + dim(quot) per cell
  bool euler_complex_ok = true; // chi additivity at complex level
  bool euler_homology_ok = true;// chi additivity at homology level
  std::vector<std::string> notes;
  bool pass() const { return dims_ok && euler_complex_ok && euler_homology_ok; }
};

LesReport les_check(const TruncatedComplex& sub, const TruncatedComplex& mid,
                    const TruncatedComplex& quot);

std::string betti_json(const BettiTable& b,
                       const std::vector<std::pair<std::string, std::string>>& meta);
std::string betti_grid(const BettiTable& b);

// Canonical monomials over `tab` of weight <= max_weight, grouped by
// (hdeg, weight) cell and sorted inside each cell.  Throws length_error when
// the total count exceeds cell_budget.
std::map<CellKey, std::vector<CommMono>> enumerate_monomials(
    const CommVarTable& tab, int max_weight, long cell_budget,
    bool include_unit = false);

}  // namespace drep
