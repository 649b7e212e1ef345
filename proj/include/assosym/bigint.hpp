#ifndef ASSOSYM_BIGINT_HPP
#define ASSOSYM_BIGINT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace assosym {

/// Arbitrary precision integer. Counts, dimensions and character values all
/// use this type; non-negativity of counts is a postcondition of the
/// producing operation, not of the type.
using BigInt = mpz_class;
using BigCount = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(10); }

inline std::string to_string(const Rational& v) { return v.get_str(10); }

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Binomial coefficient C(top, bottom) extended by zero: the value is 0
/// whenever bottom < 0, top < 0 or bottom > top.
inline BigInt binomial(long top, long bottom) {
  if (bottom < 0 || top < 0 || bottom > top)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return r;
}

inline BigInt power(long base, unsigned long exponent) {
  BigInt r;
  BigInt b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

} // namespace assosym

#endif // ASSOSYM_BIGINT_HPP
