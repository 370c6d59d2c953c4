#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace plord {

// Exact rational carrier. mpq_class keeps values in lowest terms with a
// positive denominator once canonicalized; every constructor below
// canonicalizes, so Rat values are always in normal form.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p" or "p/q" in base 10. Throws std::invalid_argument on
// malformed input or a zero denominator.
Rat rat_from_string(const std::string& s);

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline BigInt rat_floor(const Rat& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat midpoint(const Rat& a, const Rat& b) { return (a + b) / 2; }

inline int sign_of(const Rat& r) { return sgn(r); }

}  // namespace plord
