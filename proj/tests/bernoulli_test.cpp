#include <doctest.h>

#include <sstream>

#include "clab/bernoulli.hpp"
#include "clab/errors.hpp"

using namespace clab;

namespace {

// Independent oracle: the defining recurrence sum_{k<=n} C(n+1,k) B_k = 0.
std::vector<Rational> bernoulli_by_recurrence(long n_max) {
    std::vector<Rational> b(static_cast<size_t>(n_max) + 1);
    b[0] = 1;
    for (long n = 1; n <= n_max; ++n) {
        Rational s(0);
        for (long k = 0; k < n; ++k)
            s += Rational(Rational(binomial(static_cast<unsigned long>(n + 1),
                                            static_cast<unsigned long>(k))) *
                          b[static_cast<size_t>(k)]);
        b[static_cast<size_t>(n)] = Rational(-s / (n + 1));
    }
    return b;
}

} // namespace

TEST_CASE("known Bernoulli values") {
    BernoulliCache cache(20);
    CHECK(cache.bernoulli(0) == 1);
    CHECK(cache.bernoulli(1) == make_rational(-1, 2));
    CHECK(cache.bernoulli(2) == make_rational(1, 6));
    CHECK(cache.bernoulli(3) == 0);
    CHECK(cache.bernoulli(12) == make_rational(-691, 2730));
    CHECK(cache.divided(2) == make_rational(1, 12));
    CHECK(cache.divided(3) == 0);
    CHECK(cache.divided(6) == make_rational(1, 252));
}

TEST_CASE("tangent-number build matches the defining recurrence") {
    const long n = 60;
    BernoulliCache cache(n);
    std::vector<Rational> oracle = bernoulli_by_recurrence(n);
    for (long i = 0; i <= n; ++i) CHECK(cache.bernoulli(i) == oracle[static_cast<size_t>(i)]);
}

TEST_CASE("von Staudt-Clausen denominators") {
    const long top = 120;
    BernoulliCache cache(top);
    for (long n = 2; n <= top; n += 2)
        CHECK(cache.bernoulli(n).get_den() == von_staudt_clausen_denominator(n));
}

TEST_CASE("divided Bernoulli numerators are units at the small indices") {
    BernoulliCache cache(14);
    for (long n : {2L, 4L, 6L, 8L, 10L, 14L}) CHECK(abs(cache.divided(n).get_num()) == 1);
}

TEST_CASE("Ernvall-Metsankyla residues") {
    BernoulliCache cache(60);
    CHECK(em_residue(cache, 5, 2) == 3);
    CHECK(em_residue(cache, 7, 2) == 2);
    CHECK(em_residue(cache, 11, 2) ==
          hensel_digit(Rational(cache.divided(12) - cache.divided(2)), 11, 1));
    CHECK_THROWS_AS(em_residue(cache, 11, 3), HypothesisError);
    CHECK_THROWS_AS(em_residue(cache, 11, 10), HypothesisError);
    EMResidueTable t = build_em_table(cache, 13);
    for (long i = 2; i <= 10; i += 2) CHECK(t.at(i) == em_residue(cache, 13, i));
}

TEST_CASE("Kummer congruence holds over the table windows") {
    BernoulliCache cache(200);
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        for (long t = 2; t <= p - 3; t += 2) {
            Rational diff = cache.divided(p - 1 + t) - cache.divided(t);
            CHECK(reduce_mod(diff, p, 1).value() == 0);
        }
    }
}

TEST_CASE("Agoh-Giuga quotient") {
    BernoulliCache cache(40);
    CHECK(agoh_giuga(cache, 5, 1).value() == 1);
    CHECK(agoh_giuga(cache, 7, 1).value() == 6);
    // w_p = AG - 1 mod p
    for (long p : {5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L}) {
        BernoulliCache c2(p + 1);
        Int w = (factorial(static_cast<unsigned long>(p - 1)) + 1) / p;
        Int lhs;
        mpz_fdiv_r_ui(lhs.get_mpz_t(), w.get_mpz_t(), static_cast<unsigned long>(p));
        CHECK(lhs == reduce_mod(Rational(agoh_giuga_exact(c2, p) - 1), p, 1).value());
    }
}

TEST_CASE("p B_{k(p-1)} follows the inductive congruence") {
    BernoulliCache cache(5 * 12 + 2);
    for (long p : {5L, 7L, 11L, 13L}) {
        for (long k = 2; k <= 5; ++k) {
            Rational lhs = Rational(p * cache.bernoulli(k * (p - 1)));
            Rational rhs = Rational(-(k - 1) * (p - 1)) + Rational(k * p * cache.bernoulli(p - 1));
            CHECK(reduce_mod(Rational(lhs - rhs), p, 2).value() == 0);
        }
    }
}

TEST_CASE("cache dump and load round-trip") {
    BernoulliCache cache(30);
    std::stringstream ss;
    cache.dump(ss);
    BernoulliCache loaded = BernoulliCache::load(ss, 30);
    for (long n = 0; n <= 30; ++n) CHECK(loaded.bernoulli(n) == cache.bernoulli(n));

    std::stringstream partial("0 1/1\n1 -1/2\n");
    CHECK_THROWS_AS(BernoulliCache::load(partial, 4), Error);
    std::stringstream bad("0 x\n");
    CHECK_THROWS_AS(BernoulliCache::load(bad, 0), Error);
}
