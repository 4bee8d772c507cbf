#pragma once

#include <gmpxx.h>

#include <string>

namespace coh {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize on its own.
inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Canonical text form: "0", "-3", "1/4".
inline std::string rat_string(const Rational& q) { return q.get_str(); }

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace coh
