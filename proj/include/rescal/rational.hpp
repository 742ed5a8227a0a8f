#pragma once

#include <gmpxx.h>

#include <string>

#include "rescal/errors.hpp"

namespace rescal {

// Exact arithmetic throughout: arbitrary-precision integers and
// canonical rationals (reduced, positive denominator), backed by GMP.
using Int = mpz_class;
using Rational = mpq_class;

// mpq_class does not canonicalize on construction; every entry point
// that builds a Rational from raw numerator/denominator goes through here.
inline Rational rat(const Int& num, const Int& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat(long num, long den = 1) { return rat(Int(num), Int(den)); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// C(n, k) for arbitrary-precision n and small k.
inline Int binomial(const Int& n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

inline Int factorial(unsigned long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace rescal
