#include <doctest.h>

#include <memory>

#include "clab/combinatorics.hpp"
#include "clab/convolutions.hpp"
#include "clab/prime_context.hpp"
#include "clab/registry.hpp"

// check_support helpers are internal to src/, so the p-adic cross-checks here
// rebuild the sums from the public context surface.

using namespace clab;

TEST_CASE("quadratic convolutions") {
    BernoulliCache cache(60);
    CHECK(conv_divided(cache, 6).value == make_rational(-1, 720));
    CHECK(conv_divided_binomial(cache, 4).value == make_rational(1, 24));
    ConvValue empty = conv_divided_truncated(cache, 10, 8, 18);
    CHECK(empty.empty);
    CHECK(empty.value == 0);
    ConvValue t = conv_divided_truncated(cache, 4, 4, 8);
    CHECK(!t.empty);
    CHECK(t.value == Rational(cache.divided(4) * cache.divided(4)));
}

TEST_CASE("cubic convolutions") {
    BernoulliCache cache(60);
    CHECK(conv_divided_cubic(cache, 6).value == make_rational(1, 1728));
    CHECK(conv_divided_cubic_multinomial(cache, 6).value == make_rational(5, 96));
    CHECK(conv_divided_cubic(cache, 4).empty);
}

TEST_CASE("quadratic identity holds exactly for small even orders") {
    BernoulliCache cache(24);
    for (long m = 4; m <= 20; m += 2) {
        Rational lhs = conv_divided(cache, m).value;
        Rational rhs = Rational(conv_divided_binomial(cache, m).value +
                                2 * harmonic(m) * cache.divided(m));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("cubic identity holds exactly for small even orders") {
    BernoulliCache cache(24);
    for (long n = 4; n <= 20; n += 2) {
        Rational lhs = Rational(conv_divided_cubic_multinomial(cache, n).value +
                                3 * harmonic(n) * conv_divided_binomial(cache, n).value +
                                6 * mhs(2, n) * cache.divided(n));
        Rational rhs = Rational(conv_divided_cubic(cache, n).value +
                                make_rational(n * n - 3 * n + 5, 4) * cache.divided(n - 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("reduced-table values agree with exact reduction across poles") {
    const long p = 11;
    auto cache = std::make_shared<BernoulliCache>(required_bernoulli_index(p));
    PrimeContext ctx(p, 5, cache);
    // divided Bernoulli at the pole index has valuation -1 in both views
    CHECK(ctx.div_pad(p - 1).val() == -1);
    CHECK(valuation(cache->divided(p - 1), p).v == -1);
    // binomial coefficients via the factorial table match exact ones
    const FactorialTable& ft = ctx.factorials();
    for (long n : {5L, 14L, 20L}) {
        for (long k = 0; k <= n; ++k) {
            auto [v, u] = ft.binom_parts(n, k);
            Int exact = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
            PadicNumber direct = PadicNumber::from_int(exact, p, ctx.work());
            PadicNumber parts = PadicNumber::from_int(u, p, ctx.work()).shifted(v);
            CHECK((direct - parts).is_zero_mod(6));
        }
    }
    // a pole-bearing product: binomial * divided(p-1) is p-integral when the
    // binomial carries the compensating factor of p
    Rational x = Rational(Rational(binomial(16, 10)) * cache->divided(10));
    CHECK(valuation(x, p).at_least(0));
    PadicNumber px = PadicNumber::from_rational(x, p, 8);
    CHECK(px.residue(1) == reduce_mod(x, p, 1).value());
}

TEST_CASE("mixed convolutions against the Kummer-difference digits") {
    const long p = 11;
    auto cache = std::make_shared<BernoulliCache>(required_bernoulli_index(p));
    PrimeContext ctx(p, 5, cache);
    // hand-rolled oracle over the same window
    long order = p - 1 - 4; // full mixed convolution of order 6
    Int expect = 0;
    for (long i = 2; i <= order - 2; i += 2) {
        Rational diff =
            Rational(cache->divided(p - 1 + order - i) - cache->divided(order - i));
        expect += reduce_mod(cache->divided(i), p, 1).value() * hensel_digit(diff, p, 1);
    }
    mpz_fdiv_r_ui(expect.get_mpz_t(), expect.get_mpz_t(), static_cast<unsigned long>(p));
    bool empty = true;
    CHECK(em_mixed_convolution(ctx, 2, order - 2, order, true, &empty) == expect);
    CHECK(!empty);
    // empty truncated window is flagged, never silently folded
    CHECK(em_mixed_convolution(ctx, p - 1, p - 3, 2 * (p - 1) - 2, true, &empty) == 0);
    CHECK(empty);
}

TEST_CASE("reduced cubic summation matches the exact cubic across a pole") {
    const long p = 11;
    auto cache = std::make_shared<BernoulliCache>(required_bernoulli_index(p));
    PrimeContext ctx(p, 5, cache);
    for (long order : {14L, 16L, 18L}) {
        // terms with one index at p-1 have valuation -1; the reduced route
        // must agree with the exact rational to the working precision
        PadicNumber acc = ctx.pad_zero();
        for (long i = 2; i <= order - 4; i += 2)
            for (long j = 2; j <= order - i - 2; j += 2)
                acc = acc + ctx.div_pad(i) * ctx.div_pad(j) * ctx.div_pad(order - i - j);
        Rational exact = conv_divided_cubic(*cache, order).value;
        CHECK((acc - PadicNumber::from_rational(exact, p, ctx.work())).is_zero_mod(5));
    }
}
