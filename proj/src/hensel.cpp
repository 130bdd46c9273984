#include "clab/hensel.hpp"

#include <algorithm>

#include "clab/errors.hpp"

namespace clab {

const char* lift_tag_name(LiftTag tag) {
    switch (tag) {
    case LiftTag::teichmuller: return "teichmuller";
    case LiftTag::wilson_analog: return "wilson_analog";
    case LiftTag::bernoulli_analog: return "bernoulli_analog";
    }
    return "?";
}

Rational lift_constant(const BernoulliCache& cache, long p, LiftTag tag) {
    switch (tag) {
    case LiftTag::teichmuller: return Rational(-1);
    case LiftTag::wilson_analog: return Rational(factorial(static_cast<unsigned long>(p - 1)));
    case LiftTag::bernoulli_analog: return Rational(p * cache.bernoulli(p - 1));
    }
    throw Error("unknown lift tag");
}

PadicResidue lift_root(long p, long a, const Rational& c, int K) {
    if (a < 1 || a > p - 1) throw BaseOutOfRangeError("lift_root: base out of [1, p-1]");
    // f(x) = x^{p-1} + c, f'(x) = (p-1) x^{p-2}
    const Int c1 = reduce_mod(c, p, 1).value();
    {
        Int f0 = pow_int(a, static_cast<unsigned long>(p - 1)) + c1;
        if (!mpz_divisible_ui_p(f0.get_mpz_t(), static_cast<unsigned long>(p)))
            throw NotSimpleRootError("lift_root: not a root mod p");
        if (a % p == 0) throw NotSimpleRootError("lift_root: derivative vanishes mod p");
    }
    int k = 1;
    Int x(a % p);
    while (k < K) {
        int next = std::min(2 * k, K);
        const Int mod = pow_int(p, static_cast<unsigned long>(next));
        const Int cm = reduce_mod(c, p, next).value();
        Int xp;
        Int e(p - 2);
        mpz_powm(xp.get_mpz_t(), x.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t()); // x^{p-2}
        Int fx = xp * x + cm;                                                    // x^{p-1} + c
        mpz_fdiv_r(fx.get_mpz_t(), fx.get_mpz_t(), mod.get_mpz_t());
        Int fpx = (p - 1) * xp;
        Int fpinv;
        if (!mpz_invert(fpinv.get_mpz_t(), fpx.get_mpz_t(), mod.get_mpz_t()))
            throw NotSimpleRootError("lift_root: derivative not a unit");
        x -= fx * fpinv;
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
        k = next;
    }
    return PadicResidue(p, K, x);
}

const PadicResidue& LiftFamily::root(long a) const {
    if (a < 1 || a >= prime) throw BaseOutOfRangeError("LiftFamily: base out of range");
    return roots[static_cast<size_t>(a - 1)];
}

const PadicResidue& LiftFamily::correction(long a) const {
    if (a < 1 || a >= prime) throw BaseOutOfRangeError("LiftFamily: base out of range");
    return corrections[static_cast<size_t>(a - 1)];
}

LiftFamily build_lift_family(const BernoulliCache& cache, long p, LiftTag tag, int K) {
    if (K < 2) throw PrecisionError("build_lift_family: need K >= 2 for corrections");
    LiftFamily fam;
    fam.prime = p;
    fam.precision = K;
    fam.tag = tag;
    const Rational c = lift_constant(cache, p, tag);
    for (long a = 1; a <= p - 1; ++a) {
        PadicResidue r = lift_root(p, a, c, K);
        fam.roots.push_back(r);
        Int diff = r.value() - a; // root = a mod p, so p | diff
        fam.corrections.emplace_back(p, K - 1, diff / p);
    }
    return fam;
}

SymmetricCheckReport newton_symmetric_check(const BernoulliCache& cache, const LiftFamily& family,
                                            int K) {
    SymmetricCheckReport rep;
    const long p = family.prime;
    if (K > family.precision) throw PrecisionError("newton_symmetric_check: K beyond family precision");
    const Int mod = pow_int(p, static_cast<unsigned long>(K));

    // Power sums s_t for t in [1, p-2].
    std::vector<Int> pw(static_cast<size_t>(p), 1);
    for (long t = 1; t <= p - 2; ++t) {
        Int s = 0;
        for (long a = 1; a <= p - 1; ++a) {
            Int& v = pw[static_cast<size_t>(a)];
            v *= family.root(a).value();
            mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
            s += v;
        }
        mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
        if (s != 0) {
            rep.power_sums_vanish = false;
            rep.failing_t.push_back(t);
        }
    }

    // Shifted power sums: sum_a root^{p-1+t} for sampled t.
    for (long t : {1L, 2L, 3L, 5L}) {
        if (t > p - 2) break;
        Int s = 0;
        const Int e(p - 1 + t);
        for (long a = 1; a <= p - 1; ++a) {
            Int v;
            mpz_powm(v.get_mpz_t(), family.root(a).value().get_mpz_t(), e.get_mpz_t(),
                     mod.get_mpz_t());
            s += v;
        }
        mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
        if (s != 0) {
            rep.shifted_sums_vanish = false;
            rep.failing_t.push_back(p - 1 + t);
        }
    }

    // Expand prod_a (X - root_a) mod p^K; coeff[j] is the coefficient of X^j.
    std::vector<Int> coeff(static_cast<size_t>(p), 0);
    coeff[0] = 1;
    long deg = 0;
    for (long a = 1; a <= p - 1; ++a) {
        const Int& r = family.root(a).value();
        for (long j = deg + 1; j >= 1; --j) {
            coeff[static_cast<size_t>(j)] =
                coeff[static_cast<size_t>(j - 1)] - r * coeff[static_cast<size_t>(j)];
            mpz_fdiv_r(coeff[static_cast<size_t>(j)].get_mpz_t(),
                       coeff[static_cast<size_t>(j)].get_mpz_t(), mod.get_mpz_t());
        }
        coeff[0] = -r * coeff[0];
        mpz_fdiv_r(coeff[0].get_mpz_t(), coeff[0].get_mpz_t(), mod.get_mpz_t());
        ++deg;
    }
    // sigma_t is (up to sign) the coefficient of X^{p-1-t}; it must vanish
    // for t in [1, p-2].
    for (long t = 1; t <= p - 2; ++t) {
        if (coeff[static_cast<size_t>(p - 1 - t)] != 0) {
            rep.elementary_vanish = false;
            rep.failing_t.push_back(-t);
        }
    }
    // Constant term: prod(-root) = prod(root) since p-1 is even; the product
    // of the roots equals the polynomial constant c.
    Int c = reduce_mod(lift_constant(cache, p, family.tag), p, K).value();
    rep.product_matches = (coeff[0] == c);
    return rep;
}

std::vector<CorrectionExpansionEntry> second_order_correction_expansion(
    const BernoulliCache& cache, const QuotientTable& quotients, const LiftFamily& family) {
    if (family.tag != LiftTag::bernoulli_analog)
        throw Error("second_order_correction_expansion: needs the bernoulli_analog family");
    if (family.precision < 3)
        throw PrecisionError("second_order_correction_expansion: corrections need two digits");
    const long p = family.prime;
    const Int mod2 = pow_int(p, 2);
    Int ag = agoh_giuga(cache, p, 2).value();
    std::vector<CorrectionExpansionEntry> out;
    out.reserve(static_cast<size_t>(p - 1));
    for (long a = 1; a < p; ++a) {
        CorrectionExpansionEntry e;
        e.base = a;
        mpz_fdiv_r(e.lhs.get_mpz_t(), family.correction(a).value().get_mpz_t(), mod2.get_mpz_t());
        Int qa;
        mpz_fdiv_r(qa.get_mpz_t(), quotients.at(a).get_mpz_t(), mod2.get_mpz_t());
        Int base = (qa + ag) % mod2;
        e.rhs = Int(a) * base % mod2 + Int(a) * p % mod2 * ((1 + ag) % mod2) % mod2 * base;
        mpz_fdiv_r(e.rhs.get_mpz_t(), e.rhs.get_mpz_t(), mod2.get_mpz_t());
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace clab
