/*
 * grading.hpp -- bigraded generators, free (noncommutative) words and
 * polynomials, free graded-commutative monomials and polynomials, and the
 * Koszul sign bookkeeping shared by everything downstream.
 *
 * Parity is homological degree mod 2.  Homological degrees may be negative
 * (the de Rham module introduces total degrees < 0); weights are >= 1 for
 * honest generators.
 */
#pragma once

#include "rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace drep {

inline int parity_of(int hdeg) { return ((hdeg % 2) + 2) % 2; }

using GenId = std::uint32_t;

struct Generator {
  std::string name;
  int hdeg = 0;
  int weight = 1;
  int parity() const { return parity_of(hdeg); }
};

// Canonical generator order: (weight, hdeg, name).  All words, cyclic
// representatives and matrix-variable orders derive from this.
struct GeneratorTable {
  std::vector<Generator> gens;
  std::map<std::string, GenId> by_name;

  GenId add(const Generator& g);      // appends; call sort_canonical() once done
  void sort_canonical();              // sorts and rebuilds the name index
  GenId id(const std::string& name) const;
  const Generator& operator[](GenId i) const { return gens[i]; }
  std::size_t size() const { return gens.size(); }
};

using Word = std::vector<GenId>;  // empty word = unit

int word_hdeg(const Word& w, const GeneratorTable& tab);
int word_weight(const Word& w, const GeneratorTable& tab);
std::string word_str(const Word& w, const GeneratorTable& tab);

// Sign of reordering a sequence of given parities by the permutation perm:
// position k of the result holds input element perm[k].  Counts odd-odd
// inversions.
Scalar koszul_sign(const std::vector<std::size_t>& perm,
                   const std::vector<int>& parities);

// ---------------------------------------------------------------------------
// Free associative polynomials.

struct NCPoly {
  std::map<Word, Scalar> terms;  // no zero coefficients

  bool is_zero() const { return terms.empty(); }
  NCPoly& add_term(const Word& w, const Scalar& c);
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const Scalar& c) const;
  bool operator==(const NCPoly& o) const { return terms == o.terms; }
};

NCPoly nc_one();
NCPoly nc_gen(GenId g);
NCPoly nc_word(const Word& w);
// Concatenation product; carries no sign in the free algebra.
NCPoly mul_nc(const NCPoly& p, const NCPoly& q);
std::string nc_str(const NCPoly& p, const GeneratorTable& tab);

// ---------------------------------------------------------------------------
// Free graded-commutative polynomials over an ordered variable set.

using VarId = std::uint32_t;

struct CommVar {
  std::string name;
  int hdeg = 0;
  int weight = 1;
  int parity() const { return parity_of(hdeg); }
};

struct CommVarTable {
  std::vector<CommVar> vars;
  std::map<std::string, VarId> by_name;
  VarId add(const CommVar& v);
  const CommVar& operator[](VarId i) const { return vars[i]; }
  std::size_t size() const { return vars.size(); }
};

// Sorted (VarId, exponent>0) pairs; odd variables have exponent <= 1.
using CommMono = std::vector<std::pair<VarId, int>>;

int mono_hdeg(const CommMono& m, const CommVarTable& tab);
int mono_weight(const CommMono& m, const CommVarTable& tab);
int mono_total_exp(const CommMono& m);
std::string mono_str(const CommMono& m, const CommVarTable& tab);

// Sorts a factor sequence into the canonical monomial.  Returns nullopt when
// an odd variable repeats (the monomial is zero); otherwise the monomial and
// the Koszul sign of the sort.
std::optional<std::pair<CommMono, Scalar>> normalize_comm(
    const std::vector<VarId>& factors, const CommVarTable& tab);

// Merge product of two canonical monomials, nullopt if an odd square appears.
std::optional<std::pair<CommMono, Scalar>> mul_mono(
    const CommMono& a, const CommMono& b, const CommVarTable& tab);

struct CommPoly {
  std::map<CommMono, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  CommPoly& add_term(const CommMono& m, const Scalar& c);
  CommPoly operator+(const CommPoly& o) const;
  CommPoly operator-(const CommPoly& o) const;
  CommPoly operator*(const Scalar& c) const;
  bool operator==(const CommPoly& o) const { return terms == o.terms; }
};

CommPoly comm_one();
CommPoly comm_var(VarId v);
CommPoly mul_comm(const CommPoly& p, const CommPoly& q, const CommVarTable& tab);
std::string comm_str(const CommPoly& p, const CommVarTable& tab);

// Applies `image` at each position of the expanded factor sequence of m.
// With signed_rule the degree -1 Koszul prefix sign is used (a derivation of
// odd degree); without it the operator acts as an even derivation.
CommPoly derive_monomial(const CommMono& m, const CommVarTable& tab,
                         const std::function<const CommPoly&(VarId)>& image,
                         bool signed_rule);

}  // namespace drep
