#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "designforge/errors.hpp"

namespace designforge {

// Exact scalar carriers. GMP's canonical form is exactly the invariant we
// need: lowest terms, positive denominator. Every entry point below
// canonicalizes, so arithmetic on Rationals stays canonical throughout.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "-p", or "p/q" in base 10.
inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("malformed rational '" + s + "'");
    if (r.get_den() == 0) throw Error("zero denominator");
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;  // powers of canonical values are canonical
}

inline Integer factorial(unsigned long n) {
    Integer z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return z;
}

// n!! with the empty-product convention (-1)!! = 1.
inline Integer double_factorial(long n) {
    if (n <= 0) return 1;
    Integer z;
    mpz_2fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
    return z;
}

// Combinatorial convention: 0 whenever n < 0 or k < 0 or k > n.
inline Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return z;
}

// n(n-1)...(n-k+1)
inline Integer falling_factorial(long n, long k) {
    Integer z = 1;
    for (long i = 0; i < k; ++i) z *= (n - i);
    return z;
}

inline long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw Error("integer overflow converting to long");
    return z.get_si();
}

}  // namespace designforge
