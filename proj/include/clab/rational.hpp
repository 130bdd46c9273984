#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace clab {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator; equality is value equality.
using Rational = mpq_class;

/// Builds a canonical rational from a (possibly non-reduced) fraction.
inline Rational make_rational(Int num, Int den) {
    Rational r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_int(long base, unsigned long e) { return pow_int(Int(base), e); }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Multiplicity of p in a nonzero integer.
inline long int_valuation(const Int& x, long p) {
    if (x == 0) return -1;
    Int rem, q = abs(x);
    long v = 0;
    while (true) {
        Int quo;
        mpz_fdiv_qr_ui(quo.get_mpz_t(), rem.get_mpz_t(), q.get_mpz_t(),
                       static_cast<unsigned long>(p));
        if (rem != 0) break;
        q = quo;
        ++v;
    }
    return v;
}

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> ps;
    for (long n = lo; n <= hi; ++n)
        if (is_prime(n)) ps.push_back(n);
    return ps;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

} // namespace clab
