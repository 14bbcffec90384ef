#pragma once

#include <gmpxx.h>

#include <string>

namespace mzv {

using Rational = mpq_class;

inline bool coeff_is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational rat_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

inline Rational rat_binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

/// Canonical text form: "3", "-3/2".
inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace mzv
