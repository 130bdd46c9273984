#include <doctest.h>

#include "clab/bernoulli.hpp"
#include "clab/errors.hpp"
#include "clab/quotients.hpp"

using namespace clab;

TEST_CASE("Fermat quotients") {
    CHECK(fermat_quotient(5, 1) == 0);
    CHECK(fermat_quotient(5, 2) == 3);
    CHECK(fermat_quotient(7, 3) == 104);
    CHECK_THROWS_AS(fermat_quotient(7, 0), BaseOutOfRangeError);
    CHECK_THROWS_AS(fermat_quotient(7, 7), BaseOutOfRangeError);
    for (long p : {5L, 7L, 13L}) {
        QuotientTable t(p);
        CHECK(t.at(1) == 0);
        for (long a = 1; a < p; ++a)
            CHECK(pow_int(a, static_cast<unsigned long>(p - 1)) == 1 + p * t.at(a));
    }
}

TEST_CASE("Wilson quotients") {
    CHECK(wilson_quotient(5) == 5);
    CHECK(wilson_quotient(7) == 103);
    CHECK(wilson_quotient(11) == 329891);
    for (long p : {5L, 7L, 11L, 13L})
        CHECK(factorial(static_cast<unsigned long>(p - 1)) + 1 == p * wilson_quotient(p));
}

TEST_CASE("power sums") {
    CHECK(power_sum(0, 5) == 4);
    CHECK(power_sum(2, 4) == 14);
    CHECK(power_sum(4, 7) == 1 + 16 + 81 + 256 + 625 + 1296);
    for (long m : {1L, 3L, 6L})
        CHECK(power_sum_mod(7, m, 7, 3).value() ==
              reduce_mod(Rational(power_sum(m, 7)), 7, 3).value());
}

TEST_CASE("sums of powers match the Bernoulli expansion mod p^3") {
    BernoulliCache cache(60);
    for (long p : {7L, 11L, 13L}) {
        QuotientTable t(p);
        for (long m = 3; m <= 2 * (p - 1); ++m) {
            if (m % (p - 1) == 0 || m % (p - 1) == 2) continue;
            Rational rhs = Rational(p * cache.bernoulli(m)) +
                           make_rational(m, 2) * pow_int(p, 2) * cache.bernoulli(m - 1) +
                           make_rational(m * (m - 1), 6) * pow_int(p, 3) * cache.bernoulli(m - 2);
            CHECK(weighted_power_sum(t, m, 0, 3).value() == reduce_mod(rhs, p, 3).value());
        }
    }
}

TEST_CASE("weighted power sums") {
    QuotientTable t7(7);
    CHECK(weighted_power_sum(t7, 2, 1, 1).value() == 4);
    CHECK(weighted_power_sum(t7, 0, 2, 1).value() == 2);
    CHECK(weighted_power_sum(t7, 2, 2, 1).value() == 6);
    // exact literal sum oracle for the same residue
    Int direct = 0;
    for (long a = 1; a < 7; ++a) direct += t7.at(a) * a * a;
    CHECK(direct == 306072);
    CHECK(reduce_mod(Rational(direct), 7, 1).value() == 4);
    // negative exponents realize inverse powers
    for (long p : {7L, 11L}) {
        QuotientTable t(p);
        for (long n : {1L, 2L}) {
            Int expect = 0;
            const Int mod = pow_int(p, 2);
            for (long a = 1; a < p; ++a) {
                Int inv;
                Int base(a);
                mpz_invert(inv.get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
                Int term = t.at(a) * t.at(a) % mod;
                Int e(2 * n), pw;
                mpz_powm(pw.get_mpz_t(), inv.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
                expect += term * pw;
            }
            mpz_fdiv_r(expect.get_mpz_t(), expect.get_mpz_t(), mod.get_mpz_t());
            CHECK(weighted_power_sum(t, -2 * n, 2, 2).value() == expect);
        }
    }
    CHECK_THROWS_AS(weighted_power_sum(t7, 2, 4, 1), Error);
}

TEST_CASE("irregular pair (37, 32)") {
    BernoulliCache cache(40);
    QuotientTable t(37);
    CHECK(weighted_power_sum(t, 32, 1, 1).value() == 0);
    Int num = cache.divided(32).get_num();
    CHECK(mpz_divisible_ui_p(num.get_mpz_t(), 37));
    // and a regular neighbour for contrast
    CHECK(weighted_power_sum(t, 30, 1, 1).value() != 0);
}
