#include "check_support.hpp"
#include "clab/errors.hpp"

// The chain of congruences for sums weighted by the third quotient power:
// reciprocal-window double sums, the squared-quotient residues, the main
// cubic-weight congruence with its Bernoulli-quotient form, and its
// corollaries for the mixed convolutions.

namespace clab::checks {

namespace {

// q := (p B_{4(p-1)-2n} - 3 p B_{3(p-1)-2n} + 3 p B_{2(p-1)-2n} - p B_{p-1-2n}) / p^3
// for two_n >= 2; the 2n = 0 variant replaces the last term by -p + 1.
Rational bernoulli_quartic_quotient(const PrimeContext& ctx, long two_n, bool& integral) {
    const long p = ctx.p();
    const BernoulliCache& b = ctx.bern();
    Rational q;
    if (two_n >= 2) {
        q = Rational(p * b.bernoulli(4 * (p - 1) - two_n)) -
            3 * p * b.bernoulli(3 * (p - 1) - two_n) + 3 * p * b.bernoulli(2 * (p - 1) - two_n) -
            p * b.bernoulli(p - 1 - two_n);
    } else {
        q = Rational(p * b.bernoulli(3 * (p - 1))) - 3 * p * b.bernoulli(2 * (p - 1)) +
            3 * p * b.bernoulli(p - 1) - p + 1;
    }
    integral = valuation(q, p).at_least(3);
    return Rational(q / pow_int(p, 3));
}

Int wilson_sq_plus_conv_res(const PrimeContext& ctx) {
    Rational w(ctx.quot().wilson);
    return ctx.rres(w * w + ctx.conv_divided_pm1(), 1);
}

} // namespace

// Double sum over bases and reciprocal powers, including the index-1 term.
void eval_c17(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const Int mod(p);
    Int wres = ctx.rres(Rational(ctx.quot().wilson), 1);
    for (long two_n = 0; two_n <= p - 5; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        std::string ps = "2n=" + std::to_string(two_n);
        if (!selected(o, ps)) continue;
        Int lhs = window_qb_sum(ctx, 1, p - 3, two_n, true, 1);
        Int rhs = (wres * wsum(ctx, -two_n, 2, 1) + wsum(ctx, -two_n, 3, 1)) % mod;
        emit_residues(out, "C17", p, ps, 1, lhs, rhs);
    }
}

// Same with the window starting at 2; picks up half a divided Bernoulli.
void eval_c18(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const Int mod(p);
    Int wres = ctx.rres(Rational(ctx.quot().wilson), 1);
    for (long two_n = 0; two_n <= p - 7; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        std::string ps = "2n=" + std::to_string(two_n);
        if (!selected(o, ps)) continue;
        Int lhs = window_qb_sum(ctx, 2, p - 3, two_n, true, 1);
        Int rhs = (wres * wsum(ctx, -two_n, 2, 1) + wsum(ctx, -two_n, 3, 1) +
                   ctx.rres(make_rational(1, 2) * ctx.bern().divided(p - 3 - two_n), 1)) %
                  mod;
        emit_residues(out, "C18", p, ps, 1, lhs, rhs);
    }
}

// The squared-quotient sum in its three stated forms.
void eval_c19(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    Int lhs = wsum(ctx, 0, 2, 1);
    if (std::string ps = "form=1"; selected(o, ps)) {
        Rational w(ctx.quot().wilson);
        Int rhs = ctx.rres(-(w * w) - ctx.conv_divided_pm1(), 1);
        emit_residues(out, "C19", p, ps, 1, lhs, rhs);
    }
    if (std::string ps = "form=2"; selected(o, ps)) {
        const BernoulliCache& b = ctx.bern();
        Rational combo = 2 * p * b.divided(2 * (p - 1)) -
                         Rational(pow_int(p, 2)) * b.divided(p - 1) * b.divided(p - 1);
        long d2 = hensel_digit(combo, p, 2);
        Rational am1 = ctx.agoh() - 1;
        Int rhs = ctx.rres(-(am1 * am1) - d2, 1);
        emit_residues(out, "C19", p, ps, 1, lhs, rhs);
    }
    if (std::string ps = "form=3"; selected(o, ps)) {
        const BernoulliCache& b = ctx.bern();
        Rational q = Rational(p * b.bernoulli(2 * (p - 1))) - 2 * p * b.bernoulli(p - 1) + p - 1;
        if (!valuation(q, p).at_least(2)) {
            emit_fail(out, "C19", p, ps, 1, "numerator not divisible by p^2");
        } else {
            Int rhs = ctx.rres(Rational(q / pow_int(p, 2)), 1);
            emit_residues(out, "C19", p, ps, 1, lhs, rhs);
        }
    }
}

// The a^2-weighted squared-quotient sum in its three stated forms.
void eval_c21(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const BernoulliCache& b = ctx.bern();
    Int lhs = wsum(ctx, 2, 2, 1);
    if (std::string ps = "form=1"; selected(o, ps)) {
        Rational w(ctx.quot().wilson);
        Rational rhs_exact = make_rational(1, 6) * w - make_rational(1, 4) -
                             conv_divided_truncated(b, 4, p - 3, p + 1).value;
        emit_residues(out, "C21", p, ps, 1, lhs, ctx.rres(rhs_exact, 1));
    }
    if (std::string ps = "form=2"; selected(o, ps)) {
        Int rhs = ctx.rres(Rational(-2 * ctx.em().at(2)) - make_rational(1, 2), 1);
        emit_residues(out, "C21", p, ps, 1, lhs, rhs);
    }
    if (std::string ps = "form=3"; selected(o, ps)) {
        Rational q = 6 * p * b.bernoulli(2 * p) - 12 * p * b.bernoulli(p + 1) +
                     Rational(p) * (p - 1) * (2 * p - 1);
        Rational x = Rational(q / (6 * pow_int(p, 2)));
        if (!valuation(x, p).at_least(0)) {
            emit_fail(out, "C21", p, ps, 1, "quotient not p-integral");
        } else {
            emit_residues(out, "C21", p, ps, 1, lhs, ctx.rres(x, 1));
        }
    }
}

// Cubic-weight congruence: convolution form and Bernoulli-quotient form,
// general window and the 2n = 0 case, plus the two residue restatements.
void eval_c22(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const BernoulliCache& b = ctx.bern();
    const Int mod(p);
    Int wres = ctx.rres(Rational(ctx.quot().wilson), 1);

    for (long two_n = 0; two_n <= p - 5; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        std::string base = "2n=" + std::to_string(two_n);
        Int lhs = wsum(ctx, -two_n, 3, 1);
        if (std::string ps = base + ",form=conv"; selected(o, ps)) {
            Int rhs;
            std::string note;
            if (two_n == 0) {
                bool e1 = false;
                Int s1 = em_mixed_convolution(ctx, 2, p - 5, p - 1, true, &e1);
                Rational w(ctx.quot().wilson);
                rhs = ctx.rres(-(1 + Rational(2 * ctx.em().at(2))) * b.divided(p - 3) +
                                   w * (w * w + ctx.conv_divided_pm1()),
                               1) -
                      2 * s1;
                if (e1) note = "empty-window";
            } else {
                bool e1 = false, e2 = false;
                Int s1 = em_mixed_convolution(ctx, 2, p - 5 - two_n, p - 1 - two_n, true, &e1);
                Int s2 = em_mixed_convolution(ctx, p + 1 - two_n, p - 3, 2 * (p - 1) - two_n, true, &e2);
                long d_mid = ctx.em().at(p - 1 - two_n);
                rhs = -2 * s1 + 2 * wres * d_mid -
                      ctx.rres((1 + Rational(2 * ctx.em().at(2))) * b.divided(p - 3 - two_n), 1) -
                      wilson_sq_plus_conv_res(ctx) * ctx.rres(b.divided(p - 1 - two_n), 1) -
                      2 * s2;
                if (e1) note += "empty-lower-window;";
                if (e2) note += "empty-upper-window;";
            }
            mpz_fdiv_r(rhs.get_mpz_t(), rhs.get_mpz_t(), mod.get_mpz_t());
            emit_residues(out, "C22", p, ps, 1, lhs, rhs, note);
        }
        if (std::string ps = base + ",form=bernoulli"; selected(o, ps)) {
            bool integral = false;
            Rational q = bernoulli_quartic_quotient(ctx, two_n, integral);
            if (!integral) {
                emit_fail(out, "C22", p, ps, 1, "quartic combination not divisible by p^3");
            } else {
                Int rhs = ctx.rres(q - b.divided(p - 3 - two_n), 1);
                emit_residues(out, "C22", p, ps, 1, lhs, rhs);
            }
        }
    }

    // Residue restatements carried by the same theorem.
    if (std::string ps = "form=wilson"; selected(o, ps))
        emit_residues(out, "C22", p, ps, 1, wres, ctx.rres(ctx.agoh() - 1, 1));
    if (std::string ps = "form=convdigit"; selected(o, ps)) {
        Rational combo = 2 * p * b.divided(2 * (p - 1)) -
                         Rational(pow_int(p, 2)) * b.divided(p - 1) * b.divided(p - 1);
        emit_residues(out, "C22", p, ps, 1, ctx.rres(ctx.conv_divided_pm1(), 1),
                      Int(hensel_digit(combo, p, 2)));
    }
}

// Truncated mixed convolution against full mixed convolution and the
// Bernoulli-quotient tail.
void eval_c23(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    if (p < 11) {
        if (selected(o, "-")) emit_skip(out, "C23", p, "-", "needs p >= 11");
        return;
    }
    const BernoulliCache& b = ctx.bern();
    const Int mod(p);
    Int inv2 = mod_inverse(Int(2), p, 1).value();
    for (long two_n = 4; two_n <= p - 7; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        std::string ps = "2n=" + std::to_string(two_n);
        if (!selected(o, ps)) continue;
        long m = p - 1 - two_n;
        bool et = false;
        Int lhs = em_mixed_convolution(ctx, p + 1 - two_n, p - 3, 2 * (p - 1) - two_n, true, &et);
        bool integral = false;
        Rational q = bernoulli_quartic_quotient(ctx, two_n, integral);
        if (!integral) {
            emit_fail(out, "C23", p, ps, 1, "quartic combination not divisible by p^3");
            continue;
        }
        Int full = em_mixed_convolution(ctx, 2, m - 2, m, true);
        Int rhs = -full + ctx.rres(Rational(ctx.quot().wilson), 1) * ctx.em().at(m) -
                  inv2 * wilson_sq_plus_conv_res(ctx) % mod * ctx.rres(b.divided(m), 1) -
                  inv2 * ctx.rres(q, 1);
        mpz_fdiv_r(rhs.get_mpz_t(), rhs.get_mpz_t(), mod.get_mpz_t());
        emit_residues(out, "C23", p, ps, 1, lhs, rhs, et ? "empty-window" : "");
    }
}

// The 2n = 0 corollary for the halved double sum.
void eval_c24(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    std::string ps = "-";
    if (!selected(o, ps)) return;
    const BernoulliCache& b = ctx.bern();
    const Int mod(p);
    Int inv2 = mod_inverse(Int(2), p, 1).value();
    Int lhs = (mod - inv2 * window_qb_sum(ctx, 2, p - 5, 0, true, 1) % mod) % mod;
    bool integral = false;
    Rational q0 = bernoulli_quartic_quotient(ctx, 0, integral);
    if (!integral) {
        emit_fail(out, "C24", p, ps, 1, "cubic combination not divisible by p^3");
        return;
    }
    Rational w(ctx.quot().wilson);
    Rational rhs_exact = -Rational(ctx.em().at(2)) * b.divided(p - 3) +
                         make_rational(1, 2) * w * (w * w + ctx.conv_divided_pm1()) -
                         make_rational(1, 2) * q0;
    emit_residues(out, "C24", p, ps, 1, lhs, ctx.rres(rhs_exact, 1));
}

// Direct restatement of the double-sum reduction with literal residue sums.
void eval_c39(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const BernoulliCache& b = ctx.bern();
    const Int mod(p);
    Int wres = ctx.rres(Rational(ctx.quot().wilson), 1);
    Int sq2a2 = wsum(ctx, 2, 2, 1);
    Int sq2 = wsum(ctx, 0, 2, 1);
    for (long two_n = 2; two_n <= p - 5; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        std::string ps = "2n=" + std::to_string(two_n);
        if (!selected(o, ps)) continue;
        Int lhs = wsum(ctx, -two_n, 3, 1);
        bool e1 = false, e2 = false;
        Int s1 = em_mixed_convolution(ctx, 2, p - 5 - two_n, p - 1 - two_n, true, &e1);
        Int s2 = em_mixed_convolution(ctx, p + 1 - two_n, p - 3, 2 * (p - 1) - two_n, true, &e2);
        Int rhs = -2 * s1 +
                  (sq2a2 - mod_inverse(Int(2), p, 1).value()) % mod *
                      ctx.rres(b.divided(p - 3 - two_n), 1) +
                  sq2 * ctx.rres(b.divided(p - 1 - two_n), 1) +
                  2 * wres * ctx.em().at(p - 1 - two_n) - 2 * s2;
        mpz_fdiv_r(rhs.get_mpz_t(), rhs.get_mpz_t(), mod.get_mpz_t());
        std::string note;
        if (e1) note += "empty-lower-window;";
        if (e2) note += "empty-upper-window;";
        emit_residues(out, "C39", p, ps, 1, lhs, rhs, note);
    }
}

} // namespace clab::checks
