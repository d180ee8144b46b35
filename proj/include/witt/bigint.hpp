#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace witt {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_pow(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

// Non-negative residue of x modulo m (m > 0).
inline unsigned long mod_ui(const BigInt& x, unsigned long m) {
  return mpz_fdiv_ui(x.get_mpz_t(), m);
}

inline bool fits_int64(const BigInt& x) {
  static const BigInt lo = BigInt("-9223372036854775808");
  static const BigInt hi = BigInt("9223372036854775807");
  return x >= lo && x <= hi;
}

inline std::int64_t to_int64(const BigInt& x) {
  return static_cast<std::int64_t>(std::stoll(x.get_str(10)));
}

inline unsigned long ipow(unsigned long base, unsigned exp) {
  unsigned long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

bool is_prime(unsigned long n);

}  // namespace witt
