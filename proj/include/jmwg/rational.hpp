#pragma once

// Exact arithmetic carrier for the whole library: arbitrary-precision
// rationals (GMP) plus the handful of small combinatorial numbers that
// show up everywhere (factorials, binomials, Catalan, Stirling).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace jmwg {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Odd double factorial: m!! for m = 2n-1; (-1)!! = 1 by convention.
inline Integer double_factorial(long m) {
    if (m < -1) throw std::invalid_argument("double factorial of argument below -1");
    Integer r = 1;
    for (long k = m; k > 1; k -= 2) r *= k;
    return r;
}

inline Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer catalan(long k) {
    if (k < 0) throw std::invalid_argument("catalan of negative argument");
    return binomial(2 * k, k) / (k + 1);
}

// Stirling numbers of the second kind, u^k = sum_m S(k,m) u^(falling m).
inline Integer stirling2(long k, long m) {
    if (m < 0 || m > k) return 0;
    if (k == 0) return m == 0 ? 1 : 0;
    if (m == 0) return 0;
    return Integer(m) * stirling2(k - 1, m) + stirling2(k - 1, m - 1);
}

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0 || sgn(q.get_den()) == 0)
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

// a^e for integer e (negative e allowed when a != 0).
inline Rational pow_rational(const Rational& a, long e) {
    if (e == 0) return 1;
    bool invert = e < 0;
    if (invert && a == 0) throw std::invalid_argument("zero to a negative power");
    unsigned long ue = static_cast<unsigned long>(invert ? -e : e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), a.get_num_mpz_t(), ue);
    mpz_pow_ui(r.get_den_mpz_t(), a.get_den_mpz_t(), ue);
    r.canonicalize();
    if (invert) r = 1 / r;
    return r;
}

// a(a-1)...(a-k+1)
inline Rational falling_factorial(const Rational& a, long k) {
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= a - i;
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace jmwg
