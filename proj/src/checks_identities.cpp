#include "check_support.hpp"
#include "clab/combinatorics.hpp"
#include "clab/convolutions.hpp"

// The two exact convolution identities over the rationals. These run once
// per suite, independent of the prime sweep.

namespace clab::checks {

namespace {

// Left side of the quadratic identity minus the binomial side.
bool quadratic_identity_holds(const BernoulliCache& cache, long m, Rational& lhs, Rational& rhs) {
    lhs = conv_divided(cache, m).value;
    rhs = Rational(conv_divided_binomial(cache, m).value +
                   2 * harmonic(m) * cache.divided(m));
    return lhs == rhs;
}

// Cubic identity: multinomial + harmonic-binomial + depth-2 MHS terms
// against the plain cubic convolution plus the quadratic tail.
bool cubic_identity_holds(const BernoulliCache& cache, long n, Rational& lhs, Rational& rhs) {
    lhs = Rational(conv_divided_cubic_multinomial(cache, n).value +
                   3 * harmonic(n) * conv_divided_binomial(cache, n).value +
                   6 * mhs(2, n) * cache.divided(n));
    rhs = Rational(conv_divided_cubic(cache, n).value +
                   make_rational(n * n - 3 * n + 5, 4) * cache.divided(n - 2));
    return lhs == rhs;
}

} // namespace

long cubic_identity_start(const BernoulliCache& cache, long cap) {
    Rational l, r;
    for (long n = 4; n <= cap; n += 2)
        if (cubic_identity_holds(cache, n, l, r)) return n;
    return 0;
}

void eval_c08(const BernoulliCache& cache, const SweepOptions& o, Sink& out) {
    for (long m = 4; m <= o.max_identity_order; m += 2) {
        std::string ps = "m=" + std::to_string(m);
        if (!selected(o, ps)) continue;
        Rational l, r;
        quadratic_identity_holds(cache, m, l, r);
        emit_exact(out, "C08", ps, l, r);
    }
}

void eval_c09(const BernoulliCache& cache, const SweepOptions& o, Sink& out) {
    long start = cubic_identity_start(cache, o.max_identity_order);
    if (start == 0) {
        CongruenceReport r;
        r.id = "C09";
        r.prime = 0;
        r.params = "-";
        r.modulus = "exact";
        r.status = CheckStatus::fail;
        r.note = "identity held at no even order in the sweep window";
        out.push_back(std::move(r));
        return;
    }
    for (long n = start; n <= o.max_identity_order; n += 2) {
        std::string ps = "n=" + std::to_string(n);
        if (!selected(o, ps)) continue;
        Rational l, r;
        cubic_identity_holds(cache, n, l, r);
        emit_exact(out, "C09", ps, l, r,
                   n == start ? "first valid even order: " + std::to_string(start) : "");
    }
}

} // namespace clab::checks
