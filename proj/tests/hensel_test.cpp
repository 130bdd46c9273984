#include <doctest.h>

#include "clab/errors.hpp"
#include "clab/hensel.hpp"
#include "clab/quotients.hpp"

using namespace clab;

TEST_CASE("single root lifts") {
    BernoulliCache cache(20);
    Rational c = lift_constant(cache, 5, LiftTag::teichmuller);
    CHECK(lift_root(5, 2, c, 2).value() == 7);
    CHECK(lift_root(5, 1, c, 4).value() == 1);
    CHECK(lift_root(5, 4, c, 2).value() == 24);
    // not a root mod p
    CHECK_THROWS_AS(lift_root(5, 1, Rational(3), 2), NotSimpleRootError);
}

TEST_CASE("all three families satisfy their polynomials") {
    BernoulliCache cache(100);
    for (long p : {5L, 7L, 13L}) {
        for (LiftTag tag :
             {LiftTag::teichmuller, LiftTag::wilson_analog, LiftTag::bernoulli_analog}) {
            const int K = 4;
            LiftFamily fam = build_lift_family(cache, p, tag, K);
            Int c = reduce_mod(lift_constant(cache, p, tag), p, K).value();
            const Int mod = pow_int(p, K);
            for (long a = 1; a < p; ++a) {
                const PadicResidue& r = fam.root(a);
                CHECK(r.value() % p == a % p);
                Int e(p - 1), v;
                mpz_powm(v.get_mpz_t(), r.value().get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
                CHECK((v + c) % mod == 0);
                // root = a + p * correction
                CHECK((Int(a) + p * fam.correction(a).value() - r.value()) % pow_int(p, K - 1) == 0);
            }
        }
    }
}

TEST_CASE("lift idempotence and precision telescoping") {
    BernoulliCache cache(20);
    Rational c = lift_constant(cache, 13, LiftTag::teichmuller);
    for (long a = 1; a < 13; ++a) {
        PadicResidue r5 = lift_root(13, a, c, 5);
        CHECK(lift_root(13, a, c, 5) == r5);  // deterministic fixed point
        CHECK(r5.truncated(2) == lift_root(13, a, c, 2));
        CHECK(r5.truncated(4) == lift_root(13, a, c, 4));
    }
}

TEST_CASE("correction residues match their first-order forms") {
    BernoulliCache cache(200);
    for (long p : {5L, 7L, 11L, 13L}) {
        QuotientTable q(p);
        Rational ag = agoh_giuga_exact(cache, p);
        LiftFamily teich = build_lift_family(cache, p, LiftTag::teichmuller, 4);
        LiftFamily wils = build_lift_family(cache, p, LiftTag::wilson_analog, 4);
        LiftFamily bern = build_lift_family(cache, p, LiftTag::bernoulli_analog, 4);
        for (long a = 1; a < p; ++a) {
            Int va = teich.correction(a).value() % p;
            CHECK(va == Int(a) * q.at(a) % p);
            Int wa = wils.correction(a).value() % p;
            CHECK(wa == Int(a) * (q.wilson + q.at(a)) % p);
            Int za = bern.correction(a).value() % p;
            Int ag_res = reduce_mod(ag, p, 1).value();
            CHECK(za == Int(a) * (q.at(a) + ag_res) % p);
        }
    }
}

TEST_CASE("second-order correction expansion holds per base") {
    BernoulliCache cache(30);
    for (long p : {5L, 7L, 13L}) {
        QuotientTable q(p);
        LiftFamily fam = build_lift_family(cache, p, LiftTag::bernoulli_analog, 4);
        auto entries = second_order_correction_expansion(cache, q, fam);
        CHECK(entries.size() == static_cast<size_t>(p - 1));
        for (const auto& e : entries) CHECK(e.lhs == e.rhs);
    }
    LiftFamily wrong = build_lift_family(cache, 7, LiftTag::teichmuller, 4);
    QuotientTable q7(7);
    CHECK_THROWS_AS(second_order_correction_expansion(cache, q7, wrong), Error);
}

TEST_CASE("Newton symmetric-function report") {
    BernoulliCache cache(60);
    for (long p : {5L, 7L, 11L}) {
        LiftFamily fam = build_lift_family(cache, p, LiftTag::teichmuller, 3);
        SymmetricCheckReport rep = newton_symmetric_check(cache, fam, 3);
        CHECK(rep.all_ok());
        // s_{p-1} is excluded: every root has root^{p-1} = 1 so the sum is p-1
        const Int mod = pow_int(p, 3);
        Int s = 0;
        for (long a = 1; a < p; ++a) {
            Int e(p - 1), v;
            mpz_powm(v.get_mpz_t(), fam.root(a).value().get_mpz_t(), e.get_mpz_t(),
                     mod.get_mpz_t());
            s += v;
        }
        CHECK(s % mod == p - 1);
    }
}
