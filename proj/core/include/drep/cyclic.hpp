/*
 * cyclic.hpp -- the cyclic-word calculus: signed rotation, the norm operator
 * N = 1 + tau + ... + tau^{n-1}, good/bad word classification, canonical
 * cyclic representatives, cyclic derivatives, and the cyclic complex
 * C(R) = Rbar/[R,R] of a presentation.
 *
 * tau moves the last letter to the front with the Koszul sign
 * (-1)^{|v_n||v_1...v_{n-1}|}.  A word is bad exactly when it equals minus
 * one of its own rotations (then N(w) = 0 and w lies in [R,R]); good words,
 * keyed by their lexicographically minimal rotation, form a basis of C(R).
 */
#pragma once

#include "complex.hpp"
#include "presentation.hpp"

#include <map>
#include <optional>
#include <vector>

namespace drep {

struct CyclicWord {
  Word rep;  // lexicographically minimal rotation
  int hdeg = 0;
  int weight = 0;
  bool operator<(const CyclicWord& o) const { return rep < o.rep; }
  bool operator==(const CyclicWord& o) const { return rep == o.rep; }
};

// Moves the last letter to the front; returns the rotated word and the sign.
std::pair<Word, Scalar> rotate(const Word& w, const GeneratorTable& tab);

// N(w) as an NC polynomial (signed sum of all rotations); N(1) = 1.
NCPoly norm_operator(const Word& w, const GeneratorTable& tab);

// nullopt iff w is bad; otherwise the canonical class and the sign s with
// [w] = s * [rep] in C(R).
std::optional<std::pair<CyclicWord, Scalar>> canonical_cyclic(
    const Word& w, const GeneratorTable& tab);

// T_g after N, extended linearly (the signed cyclic derivative d/dg).
NCPoly cyclic_derivative(const NCPoly& p, GenId g, const GeneratorTable& tab);

// Projection of an NC polynomial to coordinates on canonical cyclic words.
std::map<CyclicWord, Scalar> cyclic_project(const NCPoly& p,
                                            const GeneratorTable& tab);

struct CyclicBasis {
  // All good cyclic words of weight <= W over the presentation's generators,
  // grouped per (hdeg, weight) cell and globally indexed.
  std::map<CellKey, std::vector<CyclicWord>> cells;
  std::map<Word, std::pair<CellKey, int>> index;  // rep -> (cell, position)
  std::vector<CyclicWord> all;                    // id order: by (cell, position)
  std::map<Word, int> id_of;                      // rep -> id into all
};

// Good canonical cyclic words over an arbitrary generator table (max_len < 0
// means unbounded length).  cyclic_basis specializes this to a presentation.
CyclicBasis cyclic_words(const GeneratorTable& tab, int max_weight,
                         int max_len = -1);

CyclicBasis cyclic_basis(const DGAPresentation& p, int max_weight);

struct CyclicComplex {
  CyclicBasis basis;
  TruncatedComplex complex;  // cells/differential over the basis
};

// C(R) with the induced differential (weight >= 1, i.e. the reduced part).
CyclicComplex cyclic_complex(const DGAPresentation& p, int max_weight);

}  // namespace drep
