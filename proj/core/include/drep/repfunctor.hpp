/*
 * repfunctor.hpp -- the matrix-variable representation functor R -> R_n,
 * trace maps, the infinitesimal gl_n action, stabilization maps, the stable
 * complex Lambda[C(R)], trace-monomial invariant bases, the symmetrized
 * trace matrix and its kernel (obstruction complex), and the empirical
 * stabilization scan.
 */
#pragma once

#include "cyclic.hpp"

#include <functional>
#include <optional>

namespace drep {

inline constexpr long kDefaultCellBudget = 200000;

struct MatrixAlgebra {
  const DGAPresentation* pres = nullptr;
  int n = 1;
  CommVarTable vars;              // ordered by (generator order, i, j)
  std::vector<CommPoly> vdiff;    // differential per variable

  VarId vid(GenId g, int i, int j) const {
    return static_cast<VarId>((static_cast<std::size_t>(g) * n + i) * n + j);
  }
};

MatrixAlgebra rep_n(const DGAPresentation& p, int n);

// Entry (i,j) = sum over index paths of the ordered, normalized product.
std::vector<std::vector<CommPoly>> evaluate_word_matrix(const MatrixAlgebra& ma,
                                                        const Word& w);
CommPoly trace_word(const MatrixAlgebra& ma, const Word& w);
CommPoly trace_cyclic(const MatrixAlgebra& ma, const CyclicWord& cw);

// The degree -1 derivation of R_n on polynomials.
CommPoly d_comm(const MatrixAlgebra& ma, const CommPoly& p);

// Residuals of the infinitesimal action: entry (a*n+b) is E_ab . p, acting
// entrywise by [E_ab, X^alpha].  p is invariant iff all residuals vanish.
std::vector<CommPoly> gl_residuals(const MatrixAlgebra& ma, const CommPoly& p);

// mu_{n,n-1}: kills every variable with an index equal to n.
CommPoly stabilization_map(const MatrixAlgebra& from, const MatrixAlgebra& to,
                           const CommPoly& p);

// R_n as a presentation file (with the `commutative` header).
std::string serialize_matrix_algebra(const MatrixAlgebra& ma);

// Full monomial chain complex of R_n up to the weight cutoff.
TruncatedComplex full_complex(const MatrixAlgebra& ma, int max_weight,
                              long cell_budget = kDefaultCellBudget);

// Dimension of the gl_n-invariant subspace of the (h,w) monomial cell,
// computed as the kernel of the stacked infinitesimal action (independent of
// the trace-monomial route).
long invariant_dim_ambient(const MatrixAlgebra& ma, int h, int w,
                           long cell_budget = kDefaultCellBudget);

// --- stable complex Lambda[C(R)] -----------------------------------------------

struct StableComplexData {
  CyclicBasis cyc;
  CommVarTable lambda_vars;  // one variable per good cyclic word (id order)
  std::map<CellKey, std::vector<CommMono>> cells;  // multiset bases
  TruncatedComplex complex;

  int index_in_cell(const CellKey& key, const CommMono& m) const;
};

StableComplexData stable_complex(const DGAPresentation& p, int max_weight);

// --- trace-monomial machinery ---------------------------------------------------

struct SymTraceCell {
  std::vector<CommMono> domain;       // stable-basis monomials at (h,w)
  std::vector<CommPoly> expansions;   // their images in R_n
  std::vector<CommMono> columns;      // ambient monomial support (sorted)
  QMatrix matrix;                     // rows = domain, cols = support
};

SymTraceCell sym_trace_cell(const MatrixAlgebra& ma, const StableComplexData& st,
                            int h, int w, long cell_budget = kDefaultCellBudget);

struct InvariantComplex {
  TruncatedComplex complex;
  std::map<CellKey, std::vector<CommMono>> basis_monos;  // chosen trace monomials
  std::map<CellKey, std::vector<CommPoly>> basis_polys;  // their expansions
};

// Basis per cell: a maximal independent set of expanded trace monomials;
// differential solved exactly in that basis (Procesi guarantees solvability).
InvariantComplex invariant_subcomplex(const DGAPresentation& p, int n,
                                      int max_weight,
                                      long cell_budget = kDefaultCellBudget,
                                      int jobs = 1);

// Kernel of the symmetrized trace map, with the differential inherited from
// the stable complex.
struct ObstructionComplex {
  TruncatedComplex complex;
  std::map<CellKey, std::vector<DenseRow>> kernel;  // coords in stable basis
};

ObstructionComplex obstruction_complex(const DGAPresentation& p, int n,
                                       int max_weight,
                                       long cell_budget = kDefaultCellBudget,
                                       int jobs = 1);

// Least n <= max_n at which every homological degree of weight w matches the
// stable value (nullopt = not reached).
struct StabilityTable {
  std::map<int, std::optional<int>> least_n;   // per weight
  BettiTable stable;                            // dim H(Lambda[C(R)])
  std::map<int, BettiTable> invariant;          // per n
};

StabilityTable empirical_stability(const DGAPresentation& p, int max_weight,
                                   int max_n,
                                   long cell_budget = kDefaultCellBudget,
                                   int jobs = 1);

}  // namespace drep
