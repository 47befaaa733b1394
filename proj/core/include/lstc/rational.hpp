#pragma once

#include <gmpxx.h>

#include <string>

namespace lstc {

/// Exact rational over arbitrary-precision integers. All coefficients in the
/// library are of this type; there is no floating point anywhere.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

/// C(n, k) as an exact integer.
inline Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace lstc
