#include "clab/combinatorics.hpp"

#include "clab/errors.hpp"
#include "clab/padic.hpp"

namespace clab {

HarmonicTable::HarmonicTable(long max_order) {
    h1_.reserve(static_cast<size_t>(max_order) + 1);
    h2_.reserve(static_cast<size_t>(max_order) + 1);
    h1_.push_back(Rational(0));
    h2_.push_back(Rational(0));
    for (long i = 1; i <= max_order; ++i) {
        h1_.push_back(Rational(h1_.back() + make_rational(1, i)));
        h2_.push_back(Rational(h2_.back() + make_rational(Int(1), Int(i) * i)));
    }
}

const Rational& HarmonicTable::h1(long n) const {
    if (n < 0 || n > max_order()) throw Error("HarmonicTable: order out of range");
    return h1_[static_cast<size_t>(n)];
}

const Rational& HarmonicTable::h2(long n) const {
    if (n < 0 || n > max_order()) throw Error("HarmonicTable: order out of range");
    return h2_[static_cast<size_t>(n)];
}

Rational harmonic(long t) {
    Rational s(0);
    for (long i = 1; i <= t; ++i) s += make_rational(1, i);
    return s;
}

Rational harmonic_power(long n, long k) {
    Rational s(0);
    for (long x = 1; x <= n; ++x)
        s += make_rational(Int(1), pow_int(x, static_cast<unsigned long>(k)));
    return s;
}

std::vector<Rational> mhs_row(long n, long k_max) {
    if (k_max < 0 || n < 0) throw Error("mhs_row: negative arguments");
    std::vector<Rational> e(static_cast<size_t>(k_max) + 1, Rational(0));
    e[0] = 1;
    for (long i = 1; i <= n; ++i) {
        Rational x = make_rational(1, i);
        long top = std::min<long>(k_max, i);
        for (long k = top; k >= 1; --k)
            e[static_cast<size_t>(k)] += Rational(e[static_cast<size_t>(k - 1)] * x);
    }
    return e;
}

Rational mhs(long k, long n) {
    if (k < 0 || k > n) {
        if (k == 0) return Rational(1);
        throw Error("mhs: need 0 <= k <= n");
    }
    return mhs_row(n, k)[static_cast<size_t>(k)];
}

const Int& StirlingRow::at(long k) const {
    if (k < 1 || k > p) throw Error("StirlingRow: index out of [1, p]");
    return s[static_cast<size_t>(k)];
}

StirlingRow stirling_row(long p) {
    // Iteratively multiply x(x-1)...(x-(p-1)); coeff[k] tracks the signed
    // coefficient of x^k, then signs are stripped ((-1)^{p-k} pattern).
    std::vector<Int> coeff(static_cast<size_t>(p) + 1);
    coeff[0] = 1;
    long deg = 0;
    for (long j = 0; j < p; ++j) {
        // multiply by (x - j)
        for (long k = deg + 1; k >= 1; --k)
            coeff[static_cast<size_t>(k)] =
                coeff[static_cast<size_t>(k - 1)] - j * coeff[static_cast<size_t>(k)];
        coeff[0] = -j * coeff[0];
        ++deg;
    }
    StirlingRow row;
    row.p = p;
    row.s.resize(static_cast<size_t>(p) + 1);
    for (long k = 1; k <= p; ++k) row.s[static_cast<size_t>(k)] = abs(coeff[static_cast<size_t>(k)]);
    return row;
}

long binom_shift_residue(long p, long n, long s) {
    if (s < 0 || s % 2 != 0 || s > p - 3 - 2 * n || 2 * n < 2 || 2 * n > p - 5)
        throw HypothesisError("binom_shift_residue: (n, s) outside the valid window");
    Int lhs = binomial(static_cast<unsigned long>(2 * (p - 1) - 2 * n),
                       static_cast<unsigned long>(s));
    Rational rhs_exact = Rational(binomial(static_cast<unsigned long>(p - 1 - 2 * n),
                                           static_cast<unsigned long>(s))) *
                         (1 + make_rational(s, 2 * n + 1));
    long l = reduce_mod(Rational(lhs), p, 1).value().get_si();
    long r = reduce_mod(rhs_exact, p, 1).value().get_si();
    if (l != r) throw Error("binomial shift congruence failed");
    return l;
}

} // namespace clab
