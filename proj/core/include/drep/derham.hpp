/*
 * derham.hpp -- noncommutative differential forms T_R(Omega^1 R[-1]) with the
 * total differential d_R + del, the commutative de Rham algebra DR(B), the
 * representation-functor compatibility check, and the stable de Rham tables.
 *
 * Convention: the form generator del(g) sits in total degree hdeg(g) - 1
 * (second-quadrant totalization; negative degrees are admitted here), with
 * d(del g) = -del(d g) so that (d + del)^2 = 0.
 */
#pragma once

#include "repfunctor.hpp"

namespace drep {

// Doubled presentation {g, del g} carrying the total differential
// diff(g) = d_R(g) + del g, diff(del g) = -del(d_R g).
DGAPresentation nc_forms(const DGAPresentation& p);

// Homology of C(nc_forms(p)) per weight <= W (reduced Karoubi-de Rham).
BettiTable reduced_hdr(const DGAPresentation& p, int max_weight);

// Homology of Lambda[C(nc_forms(p))] per weight (stable de Rham table).
BettiTable stable_derham(const DGAPresentation& p, int max_weight);

// A commutative DG algebra given by variables and their differentials.
struct CommPresentation {
  CommVarTable vars;
  std::vector<CommPoly> diff;
};

CommPresentation comm_view(const MatrixAlgebra& ma);

// DR(B): variables doubled with del v adjoined, total differential as above.
CommPresentation comm_derham(const CommPresentation& b);

// Full monomial chain complex of a commutative presentation.
TruncatedComplex comm_full_complex(const CommPresentation& b, int max_weight,
                                   long cell_budget = kDefaultCellBudget);

struct P3Report {
  bool pass = true;
  std::vector<std::string> mismatches;
};

// (T_R(Omega^1 R[-1]))_n vs DR(R_n): matches generators (del r)_{ij} with
// del(r_{ij}) and compares the differentials on every generator.
P3Report p3_check(const DGAPresentation& p, int n);

}  // namespace drep
