#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace poisson {

// Exact scalars. GMP keeps mpq_class canonical: lowest terms, positive
// denominator, zero stored as 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw Error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace poisson
