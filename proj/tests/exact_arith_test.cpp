#include <doctest.h>

#include <random>

#include "clab/errors.hpp"
#include "clab/padic.hpp"

using namespace clab;

TEST_CASE("reduce_mod canonical residues") {
    CHECK(reduce_mod(make_rational(1, 12), 7, 1).value() == 3);
    CHECK(reduce_mod(make_rational(0, 1), 11, 3).value() == 0);
    CHECK(reduce_mod(make_rational(-1, 6), 5, 2).value() == 4);
    CHECK_THROWS_AS(reduce_mod(make_rational(1, 5), 5, 1), NonIntegralError);
    CHECK_THROWS_AS(reduce_mod(make_rational(3, 50), 5, 2), NonIntegralError);
}

TEST_CASE("hensel digits") {
    CHECK(hensel_digit(make_rational(25, 12), 5, 0) == 0);
    CHECK(hensel_digit(make_rational(25, 12), 5, 1) == 0);
    CHECK(hensel_digit(make_rational(25, 12), 5, 2) == 3);
    CHECK(hensel_digit(make_rational(7, 1), 7, 1) == 1);
    CHECK(hensel_digit(make_rational(7, 1), 7, 0) == 0);
    CHECK(hensel_digit(Rational(0), 13, 5) == 0);
    PadicResidue r(5, 2, Int(7));
    CHECK(hensel_digit(r, 0) == 2);
    CHECK(hensel_digit(r, 1) == 1);
    CHECK_THROWS_AS(hensel_digit(r, 2), PrecisionError);
    CHECK_THROWS_AS(hensel_digit(make_rational(1, 5), 5, 0), NonIntegralError);
}

TEST_CASE("valuation") {
    CHECK(valuation(make_rational(25, 12), 5).v == 2);
    CHECK(valuation(make_rational(-5, 63), 5).v == 1);
    CHECK(valuation(Rational(0), 13).infinite);
    CHECK(valuation(make_rational(3, 50), 5).v == -2);
    // multiplicativity on a few random pairs
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> d(-1000, 1000);
    for (int i = 0; i < 200; ++i) {
        long a = d(rng), b = d(rng), c = d(rng) | 1, e = d(rng) | 1;
        if (a == 0 || b == 0) continue;
        Rational x = make_rational(a, std::abs(c)), y = make_rational(b, std::abs(e));
        if (x == 0 || y == 0) continue;
        CHECK(valuation(Rational(x * y), 7).v == valuation(x, 7).v + valuation(y, 7).v);
    }
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(Int(2), 5, 1).value() == 3);
    CHECK(mod_inverse(Int(6), 5, 2).value() == 21);
    CHECK(mod_inverse(Int(1), 97, 4).value() == 1);
    CHECK_THROWS_AS(mod_inverse(Int(10), 5, 2), NotAUnitError);
}

TEST_CASE("digit expansion reconstructs the residue") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 5000);
    for (long p : {3L, 5L, 7L, 13L, 97L}) {
        for (int rep = 0; rep < 60; ++rep) {
            long d = den(rng);
            while (d % p == 0) d = den(rng);
            Rational x = make_rational(num(rng), d);
            for (int K : {1, 3, 5}) {
                PadicResidue r = reduce_mod(x, p, K);
                Int rebuilt = 0;
                for (int i = 0; i < K; ++i)
                    rebuilt += Int(hensel_digit(x, p, i)) * pow_int(p, static_cast<unsigned long>(i));
                CHECK(rebuilt == r.value());
            }
        }
    }
}

TEST_CASE("reduce_mod is a ring homomorphism") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 5000);
    for (long p : {5L, 13L, 97L}) {
        for (int rep = 0; rep < 80; ++rep) {
            long d1 = den(rng), d2 = den(rng);
            while (d1 % p == 0) d1 = den(rng);
            while (d2 % p == 0) d2 = den(rng);
            Rational x = make_rational(num(rng), d1), y = make_rational(num(rng), d2);
            int K = 4;
            PadicResidue rx = reduce_mod(x, p, K), ry = reduce_mod(y, p, K);
            CHECK(reduce_mod(Rational(x + y), p, K) == rx + ry);
            CHECK(reduce_mod(Rational(x * y), p, K) == rx * ry);
        }
    }
}

TEST_CASE("digits are stable under higher-power perturbations") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-5000, 5000);
    std::uniform_int_distribution<long> den(1, 300);
    for (long p : {5L, 11L}) {
        for (int rep = 0; rep < 60; ++rep) {
            long d1 = den(rng), d2 = den(rng);
            while (d1 % p == 0) d1 = den(rng);
            while (d2 % p == 0) d2 = den(rng);
            Rational x = make_rational(num(rng), d1), y = make_rational(num(rng), d2);
            for (int i : {0, 1, 2}) {
                Rational shifted =
                    Rational(x + Rational(pow_int(p, static_cast<unsigned long>(i + 1))) * y);
                CHECK(hensel_digit(x, p, i) == hensel_digit(shifted, p, i));
            }
        }
    }
}

TEST_CASE("residue arithmetic stays closed at fixed parameters") {
    PadicResidue a(7, 3, Int(100)), b(7, 3, Int(250));
    CHECK((a + b).value() == (100 + 250) % 343);
    CHECK((a * b).value() == (100 * 250) % 343);
    CHECK((a - b).modulus() == 343);
    CHECK((a.inverse() * a).value() == 1);
    PadicResidue c(7, 2, Int(1));
    CHECK_THROWS_AS(a + c, Error);
    PadicResidue d(11, 3, Int(1));
    CHECK_THROWS_AS(a * d, Error);
    CHECK(a.truncated(1).value() == 100 % 7);
    CHECK_THROWS_AS(PadicResidue(7, 3, Int(7)).inverse(), NotAUnitError);
}

TEST_CASE("capped-precision values track valuations and poles") {
    const long p = 7;
    Rational x = make_rational(3, 49);  // valuation -2
    PadicNumber px = PadicNumber::from_rational(x, p, 6);
    CHECK(px.val() == -2);
    PadicNumber comp = px * PadicNumber::from_rational(Rational(49), p, 6);
    CHECK(comp.val() == 0);
    CHECK(comp.residue(3) == 3);
    // arithmetic agrees with exact arithmetic after reduction
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-3000, 3000);
    std::uniform_int_distribution<long> den(1, 500);
    for (int rep = 0; rep < 100; ++rep) {
        long d1 = den(rng), d2 = den(rng);
        while (d1 % p == 0) d1 = den(rng);
        while (d2 % p == 0) d2 = den(rng);
        Rational a = make_rational(num(rng), d1), b = make_rational(num(rng), d2);
        PadicNumber pa = PadicNumber::from_rational(a, p, 8), pb = PadicNumber::from_rational(b, p, 8);
        Rational sum = Rational(a + b), prod = Rational(a * b);
        CHECK((pa + pb - PadicNumber::from_rational(sum, p, 8)).is_zero_mod(6));
        CHECK((pa * pb - PadicNumber::from_rational(prod, p, 8)).is_zero_mod(6));
        if (a != 0) {
            // inversion flips the valuation, so budget precision for it
            long v = valuation(a, p).v;
            int prec = static_cast<int>(8 + 2 * std::abs(v));
            PadicNumber wide = PadicNumber::from_rational(a, p, prec);
            Rational inv = Rational(1 / a);
            CHECK((wide.inverse() - PadicNumber::from_rational(inv, p, prec)).is_zero_mod(4));
        }
    }
}

TEST_CASE("capped-precision values refuse to answer beyond their precision") {
    const long p = 5;
    PadicNumber z = PadicNumber::zero(p, 3);
    CHECK(z.is_zero_mod(3));
    CHECK_THROWS_AS(z.is_zero_mod(4), PrecisionError);
    CHECK_THROWS_AS(z.digit(3), PrecisionError);
    PadicNumber x = PadicNumber::from_rational(make_rational(1, 2), p, 4);
    CHECK_THROWS_AS(x.residue(5), PrecisionError);
    CHECK(x.digit(0) == 3); // 1/2 = 3 mod 5
    PadicNumber pole = PadicNumber::from_rational(make_rational(1, 5), p, 4);
    CHECK_THROWS_AS(pole.residue(2), NonIntegralError);
}
