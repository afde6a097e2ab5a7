/*
 * rational.hpp -- exact scalar arithmetic.
 *
 * Every quantity in this project is an exact rational (most of them are in
 * fact integers: dimensions, ranks, series coefficients).  We use GMP's
 * canonical mpq type; it keeps fractions reduced with positive denominator,
 * which is exactly the Scalar contract.  No floating point anywhere.
 */
#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace drep {

using Int = mpz_class;
using Scalar = mpq_class;

inline Scalar scalar(long n) { return Scalar(n); }

inline Scalar scalar(long num, long den) {
  if (den == 0) throw std::invalid_argument("scalar: zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p" or "p/q" with optional sign.
inline Scalar parse_scalar(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Scalar(Int(s));
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  }
}

inline std::string scalar_str(const Scalar& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integer(const Scalar& q) { return q.get_den() == 1; }

inline long to_long(const Scalar& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw std::overflow_error("scalar does not fit a long: " + scalar_str(q));
  return q.get_num().get_si();
}

}  // namespace drep
