/*
 * presentation.hpp -- free DG-algebra presentations: ingestion from the
 * line-oriented file format, the built-in resolutions, the Leibniz extension
 * of the differential, d^2 validation, and the signed generator census.
 *
 * File format (UTF-8, line oriented):
 *   # comment
 *   complete-to-weight <int>        (optional header)
 *   commutative                     (optional header; d^2 is then checked in
 *                                    the graded-commutative quotient)
 *   generator <name> hdeg <int> weight <int>
 *   d <name> = <nc-polynomial>      (omitted lines mean zero differential)
 * Polynomials use `*`, `+`, `-` and rational coefficients `p/q`.
 */
#pragma once

#include "grading.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace drep {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg),
        line(line_) {}
};

using GeneratorCensus = std::map<int, long>;  // weight -> d_i

struct DGAPresentation {
  GeneratorTable tab;
  std::vector<NCPoly> diff;  // indexed by GenId
  std::string name;          // of the algebra it resolves, if known
  std::optional<int> complete_to_weight;
  bool is_commutative = false;      // generators' variables graded-commute
  bool allow_negative_hdeg = false; // de Rham totalizations only

  // Census-only presentations (truncated(m)) carry no differential and are
  // rejected by every operation that needs one.
  bool census_only = false;
  GeneratorCensus census;

  const NCPoly& d_of(GenId g) const { return diff[g]; }
  void require_weight(int W) const;  // throws if W exceeds the completeness bound
  void require_differential() const; // throws for census-only data
};

DGAPresentation parse_presentation(const std::string& text);
std::string serialize_presentation(const DGAPresentation& p);

// Content digest, stable under whitespace/comment changes: FNV-1a over the
// canonical serialization.
std::string presentation_digest(const DGAPresentation& p);

// The unique degree -1 derivation extending the generator differentials:
// d(ab) = (da)b + (-1)^{hdeg a} a(db).
NCPoly extend_derivation(const DGAPresentation& p, const NCPoly& q);

struct DSquaredReport {
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

DSquaredReport verify_d_squared(const DGAPresentation& p, int max_weight);

// name in {dual-numbers, square-zero, commuting-plane, sandwich, truncated};
// param is d for square-zero and m for truncated, ignored otherwise.
// W bounds the weight of materialized generators.
DGAPresentation builtin_resolution(const std::string& name, int param, int W);

// Parses "dual-numbers", "square-zero:2", "truncated:3", ... used by the CLI.
DGAPresentation builtin_from_spec(const std::string& spec, int W);

GeneratorCensus weight_census(const DGAPresentation& p);

}  // namespace drep
