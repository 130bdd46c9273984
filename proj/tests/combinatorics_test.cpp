#include <doctest.h>

#include "clab/combinatorics.hpp"
#include "clab/errors.hpp"

using namespace clab;

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(4) == make_rational(25, 12));
    CHECK(harmonic_power(4, 2) == make_rational(205, 144));
    HarmonicTable t(50);
    for (long n : {0L, 1L, 7L, 50L}) {
        CHECK(t.h1(n) == harmonic(n));
        CHECK(t.h2(n) == harmonic_power(n, 2));
    }
}

TEST_CASE("multiple harmonic sums") {
    CHECK(mhs(2, 4) == make_rational(35, 24));
    CHECK(mhs(0, 9) == 1);
    for (long n : {1L, 3L, 8L}) {
        CHECK(mhs(1, n) == harmonic(n));
        CHECK(mhs(n, n) == make_rational(Int(1), factorial(static_cast<unsigned long>(n))));
    }
    CHECK(mhs(2, 4) == Rational((harmonic(4) * harmonic(4) - harmonic_power(4, 2)) / 2));
}

TEST_CASE("recurrence values match the Newton identity reconstruction") {
    // e_k from power sums via k e_k = sum_{j<=k} (-1)^{j-1} e_{k-j} h_{n,j}
    for (long n = 1; n <= 30; ++n) {
        long k_max = std::min<long>(n, 8);
        std::vector<Rational> e = mhs_row(n, k_max);
        std::vector<Rational> newton(static_cast<size_t>(k_max) + 1);
        newton[0] = 1;
        for (long k = 1; k <= k_max; ++k) {
            Rational s(0);
            for (long j = 1; j <= k; ++j) {
                Rational term = Rational(newton[static_cast<size_t>(k - j)] * harmonic_power(n, j));
                if (j % 2 == 0) term = -term;
                s += term;
            }
            newton[static_cast<size_t>(k)] = Rational(s / k);
        }
        for (long k = 0; k <= k_max; ++k) CHECK(e[static_cast<size_t>(k)] == newton[static_cast<size_t>(k)]);
    }
}

TEST_CASE("Stirling rows") {
    StirlingRow row = stirling_row(5);
    CHECK(row.at(1) == 24);
    CHECK(row.at(2) == 50);
    CHECK(row.at(3) == 35);
    CHECK(row.at(4) == 10);
    CHECK(row.at(5) == 1);
    for (long p : {5L, 7L, 11L, 13L}) {
        StirlingRow r = stirling_row(p);
        CHECK(r.at(1) == factorial(static_cast<unsigned long>(p - 1)));
        CHECK(r.at(p) == 1);
        // alternating-sign expansion reproduces the falling factorial
        for (long x = 1; x <= 5; ++x) {
            Int expect = 1;
            for (long j = 0; j < p; ++j) expect *= (x - j);
            Int got = 0;
            for (long s = 1; s <= p; ++s) {
                Int term = r.at(s) * pow_int(x, static_cast<unsigned long>(s));
                got += (s % 2 == 1) ? term : -term;
            }
            // the sign pattern depends on p's parity; p is odd here
            CHECK(got == expect);
        }
    }
}

TEST_CASE("binomial shift residues") {
    CHECK(binom_shift_residue(11, 1, 4) == 2);
    CHECK_NOTHROW(binom_shift_residue(13, 2, 2));
    CHECK(binom_shift_residue(13, 2, 0) == 1);
    CHECK_THROWS_AS(binom_shift_residue(11, 1, 3), HypothesisError);
    CHECK_THROWS_AS(binom_shift_residue(11, 1, 40), HypothesisError);
}
