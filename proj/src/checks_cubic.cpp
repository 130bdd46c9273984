#include "check_support.hpp"
#include "clab/errors.hpp"

// Multiple-harmonic-sum expansions, the cubic convolution differential term
// and its piecewise decomposition, and the order-(p-1) cubic residue.

namespace clab::checks {

namespace {

// u = sum of 1/j for j in [p-2n, p-1] and [p+1, 2p-2-2n], exact.
Rational gap_harmonic(const PrimeContext& ctx, long two_n) {
    const HarmonicTable& h = ctx.harm();
    const long p = ctx.p();
    return Rational((h.h1(p - 1) - h.h1(p - 1 - two_n)) + (h.h1(2 * p - 2 - two_n) - h.h1(p)));
}

} // namespace

// Depth-2 MHS across the shifted window, checked after scaling out the pole.
void eval_c27(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long two_n = 4; two_n <= p - 7; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        std::string ps = "2n=" + std::to_string(two_n);
        if (!selected(o, ps)) continue;
        const long M = 2 * (p - 1) - two_n, m = p - 1 - two_n;
        Rational lhs_exact = Rational(p * mhs2_exact(ctx, M));
        Rational rhs_exact =
            Rational(p * (mhs2_exact(ctx, m) + 2 * ctx.harm().h2(two_n + 1) +
                          make_rational(1, two_n + 1) * ctx.harm().h1(two_n + 1))) +
            ctx.harm().h1(two_n + 1);
        emit_residues(out, "C27", p, ps, 2, ctx.rres(lhs_exact, 2), ctx.rres(rhs_exact, 2),
                      "scaled by p");
    }
}

// Pole-compensated binomial times the order-(p-1) divided Bernoulli number.
void eval_c28(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const BernoulliCache& b = ctx.bern();
    for (long two_n = 4; two_n <= p - 7; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        for (long i = 0; i <= p - 3 - two_n; ++i) {
            std::string ps = "2n=" + std::to_string(two_n) + ",i=" + std::to_string(i);
            if (!selected(o, ps)) continue;
            Rational x = Rational(binomial(static_cast<unsigned long>(2 * (p - 1) - two_n - i),
                                           static_cast<unsigned long>(p - 1))) *
                         b.divided(p - 1);
            if (!valuation(x, p).at_least(0)) {
                emit_fail(out, "C28", p, ps, 1, "product not p-integral");
                continue;
            }
            emit_residues(out, "C28", p, ps, 1, ctx.rres(x, 1),
                          ctx.rres(make_rational(-1, two_n + 1 + i), 1));
        }
    }
}

// Reflection of the depth-2 MHS below the prime.
void eval_c29(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long two_n = 4; two_n <= p - 7; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        std::string ps = "2n=" + std::to_string(two_n);
        if (!selected(o, ps)) continue;
        Rational lhs = mhs2_exact(ctx, p - 1 - two_n);
        Rational h = ctx.harm().h1(two_n);
        Rational rhs = Rational(-mhs2_exact(ctx, two_n) + h * h);
        emit_residues(out, "C29", p, ps, 1, ctx.rres(lhs, 1), ctx.rres(rhs, 1));
    }
}

// The exact MHS of depth 2n against the Bernoulli expansion mod p^4.
void eval_c31(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const BernoulliCache& b = ctx.bern();
    long cap = std::min<long>(p - 5, o.mhs_cap);
    if (o.max_two_n > 0) cap = std::min(cap, o.max_two_n);
    if (cap < 2) return;
    const std::vector<Rational>& row = ctx.mhs_values(cap);
    const Rational w(ctx.quot().wilson);
    for (long two_n = 2; two_n <= cap; two_n += 2) {
        std::string ps = "2n=" + std::to_string(two_n);
        if (!selected(o, ps)) continue;
        const long m = p - 1 - two_n;
        Int lhs = ctx.rres(row[static_cast<size_t>(two_n)], 4);
        PadicNumber cubic = cubic_pad(ctx, m, false);
        Rational exact_part =
            Rational(p * (1 + p * w * (1 + p * w)) * b.divided(m)) +
            make_rational(4 * (two_n + 1) * (two_n + 1) + 6 * (two_n + 1) + 5, 24) *
                pow_int(p, 3) * b.divided(p - 3 - two_n) -
            make_rational(1, 2) * pow_int(p, 2) * (1 + p * w) * conv_divided(b, m).value;
        PadicNumber rhs_pad =
            ctx.pad(exact_part) + cubic.shifted(3) * ctx.pad(make_rational(1, 6));
        emit_residues(out, "C31", p, ps, 4, lhs, rhs_pad.residue(4));
    }
}

// Multinomial cubic differential term mod p (after scaling out the pole).
void eval_c32(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const BernoulliCache& b = ctx.bern();
    for (long two_n = 4; two_n <= p - 7; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        std::string ps = "2n=" + std::to_string(two_n);
        if (!selected(o, ps)) continue;
        const long M = 2 * (p - 1) - two_n, m = p - 1 - two_n;
        PadicNumber mdelta = cubic_pad(ctx, M, true) - cubic_pad(ctx, m, true);
        Rational rhs_inner = make_rational(-3, two_n + 1) * conv_divided(b, m).value +
                             make_rational(6, two_n + 1) * ctx.harm().h1(two_n) * b.divided(m);
        emit_residues(out, "C32", p, ps, 2, mdelta.shifted(1).residue(2),
                      ctx.rres(p * rhs_inner, 2), "scaled by p");
    }
}

// The five partial sums of the multinomial cubic convolution at the shifted
// order, each against its reduced form mod p.
void eval_c33(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const BernoulliCache& b = ctx.bern();
    const FactorialTable& ft = ctx.factorials();
    for (long two_n = 4; two_n <= p - 7; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        std::string base = "2n=" + std::to_string(two_n);
        const long M = 2 * (p - 1) - two_n, m = p - 1 - two_n;
        const long n_half = two_n / 2;
        PadicNumber mcub_m = cubic_pad(ctx, m, true);

        if (std::string ps = base + ",eq=3"; selected(o, ps)) {
            // S_3 via its rewritten form: outer index s in [4, p-3-2n].
            PadicNumber s3 = ctx.pad_zero();
            for (long s = 4; s <= p - 3 - two_n; s += 2) {
                PadicNumber inner = ctx.pad_zero();
                for (long j = 2; j <= s - 2; j += 2) {
                    auto [v, u] = ft.binom_parts(s, j);
                    inner = inner + PadicNumber::from_int(u, p, ctx.work()).shifted(v) *
                                        ctx.div_pad(j) * ctx.div_pad(s - j);
                }
                auto [v, u] = ft.binom_parts(M, s);
                s3 = s3 + PadicNumber::from_int(u, p, ctx.work()).shifted(v) *
                              ctx.div_pad(M - s) * inner;
            }
            PadicNumber lhs = s3 - mcub_m;
            PadicNumber rhs = ctx.pad(make_rational(-2, 3)) * mcub_m;
            emit_residues(out, "C33", p, ps, 1, lhs.residue(1), rhs.residue(1));
        }
        if (std::string ps = base + ",eq=4"; selected(o, ps)) {
            Rational s21 = Rational(p + 1) * p * b.divided(p - 1) * b.divided(2) *
                           Rational(binomial(static_cast<unsigned long>(M),
                                             static_cast<unsigned long>(p - 3 - two_n))) *
                           b.divided(p - 3 - two_n);
            Rational rhs = make_rational(-(n_half + 1), 6) * b.divided(p - 3 - two_n);
            emit_residues(out, "C33", p, ps, 1, ctx.rres(s21, 1), ctx.rres(rhs, 1));
        }
        if (std::string ps = base + ",eq=5"; selected(o, ps)) {
            PadicNumber s22 = ctx.pad_zero();
            for (long i = 2; i <= p - 5 - two_n; i += 2) {
                auto [v1, u1] = ft.binom_parts(M, i);
                auto [v2, u2] = ft.binom_parts(M - i, p - 1);
                Int u = u1 * u2;
                s22 = s22 + PadicNumber::from_int(u, p, ctx.work()).shifted(v1 + v2) *
                                ctx.div_pad(i) * ctx.div_pad(p - 1) * ctx.div_pad(m - i);
            }
            s22 = s22 + s22; // factor 2
            Rational rhs = make_rational(n_half + 1, 6) * b.divided(p - 3 - two_n) -
                           make_rational(2, two_n + 1) * conv_divided_binomial(b, m).value;
            emit_residues(out, "C33", p, ps, 1, s22.residue(1), ctx.rres(rhs, 1));
        }
        if (std::string ps = base + ",eq=6"; selected(o, ps)) {
            PadicNumber s23 = ctx.pad_zero();
            for (long i = 2; i <= p - 5 - two_n; i += 2) {
                auto [v1, u1] = ft.binom_parts(M, i);
                PadicNumber outer = PadicNumber::from_int(u1, p, ctx.work()).shifted(v1);
                PadicNumber inner = ctx.pad_zero();
                for (long j = 2; j <= p - 3 - two_n - i; j += 2) {
                    auto [v2, u2] = ft.binom_parts(M - i, j);
                    inner = inner + PadicNumber::from_int(u2, p, ctx.work()).shifted(v2) *
                                        ctx.div_pad(j) * ctx.div_pad(M - i - j);
                }
                s23 = s23 + outer * ctx.div_pad(i) * inner;
            }
            s23 = s23 + s23; // factor 2
            PadicNumber rhs = ctx.pad(make_rational(2, 3)) * mcub_m;
            emit_residues(out, "C33", p, ps, 1, s23.residue(1), rhs.residue(1));
        }
        if (std::string ps = base + ",eq=7"; selected(o, ps)) {
            Rational s1 = Rational(binomial(static_cast<unsigned long>(M),
                                            static_cast<unsigned long>(p - 1))) *
                          b.divided(p - 1) * conv_divided_binomial(b, m).value;
            Rational rhs = make_rational(-1, two_n + 1) * conv_divided_binomial(b, m).value;
            emit_residues(out, "C33", p, ps, 1, ctx.rres(s1, 1), ctx.rres(rhs, 1));
        }
    }
}

// The cubic differential decomposition and its three row reductions, mod p^4.
void eval_c34(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const BernoulliCache& b = ctx.bern();
    const HarmonicTable& h = ctx.harm();
    for (long two_n = 4; two_n <= p - 7; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        std::string base = "2n=" + std::to_string(two_n);
        const long M = 2 * (p - 1) - two_n, m = p - 1 - two_n;
        Rational u = gap_harmonic(ctx, two_n);
        Rational bconv_m = conv_divided_binomial(b, m).value;
        Rational a2M = mhs2_exact(ctx, M);
        Rational a2m = mhs2_exact(ctx, m);

        if (std::string ps = base + ",part=whole"; selected(o, ps)) {
            PadicNumber delta = cubic_pad(ctx, M, false) - cubic_pad(ctx, m, false);
            PadicNumber mdelta = cubic_pad(ctx, M, true) - cubic_pad(ctx, m, true);
            PadicNumber bM = bconv_pad(ctx, M);
            PadicNumber braces =
                mdelta + ctx.pad(make_rational(-(two_n + 3), 2) * b.divided(p - 3 - two_n)) +
                ctx.pad(Rational(3 * h.h1(m))) * (bM - ctx.pad(bconv_m)) +
                (ctx.pad(Rational(3 * u)) + ctx.pad(Rational(3)).shifted(-1)) * bM +
                ctx.pad(Rational(6 * a2M)) * ctx.div_pad(M) - ctx.pad(Rational(6 * a2m) * b.divided(m));
            emit_residues(out, "C34", p, ps, 2, delta.shifted(1).residue(2),
                          braces.shifted(1).residue(2), "scaled by p");
        }
        if (std::string ps = base + ",part=row3"; selected(o, ps)) {
            Rational r3 = Rational(6 * a2M * b.divided(M)) - 6 * a2m * b.divided(m);
            Rational lhs = Rational(pow_int(p, 3)) * r3;
            Rational rhs =
                6 *
                    (make_rational(1, two_n + 1) * h.h1(two_n + 1) + 2 * h.h2(two_n + 1)) *
                    pow_int(p, 3) * b.divided(m) +
                6 * h.h1(two_n + 1) * pow_int(p, 2) * b.divided(M);
            emit_residues(out, "C34", p, ps, 4, ctx.rres(lhs, 4), ctx.rres(rhs, 4));
        }
        if (std::string ps = base + ",part=row2"; selected(o, ps)) {
            // Exact big binomial convolution at the shifted order.
            Rational bM = conv_divided_binomial(b, M).value;
            Rational lhs = 3 * pow_int(p, 2) * bM + 3 * pow_int(p, 3) * u * bM;
            Rational conv_m = conv_divided(b, m).value;
            Rational pair = Rational(conv_m + conv_divided_truncated(b, p + 1 - two_n, p - 3, M).value);
            long d1 = hensel_digit(pair, p, 1);
            Int w0 = ctx.rres(2 * (ctx.agoh() - 1) * b.divided(m), 1) - wsum(ctx, -two_n, 2, 1);
            mpz_fdiv_r(w0.get_mpz_t(), w0.get_mpz_t(), Int(p).get_mpz_t());
            Int dsum = window_qb_sum(ctx, 2, p - 5 - two_n, two_n, true, 1);
            Rational rhs = make_rational(3, two_n + 1) * pow_int(p, 3) * conv_m +
                           3 * pow_int(p, 2) * conv_m + Rational(3 * pow_int(p, 3) * d1) +
                           Rational(3 * pow_int(p, 2) * w0) - Rational(3 * pow_int(p, 3) * dsum) +
                           6 * p *
                               (Rational(p * b.divided(p - 1)) -
                                pow_int(p, 2) * (2 * h.h2(two_n + 1) +
                                                 make_rational(1, two_n + 1) * h.h1(two_n + 1))) *
                               b.divided(m) +
                           Rational(6 * pow_int(p, 3) * ctx.em().at(2)) * b.divided(p - 3 - two_n) -
                           6 * p * (1 + p * h.h1(two_n + 1)) * b.divided(M);
            emit_residues(out, "C34", p, ps, 4, ctx.rres(lhs, 4), ctx.rres(rhs, 4));
        }
        if (std::string ps = base + ",part=row1"; selected(o, ps)) {
            Rational bM = conv_divided_binomial(b, M).value;
            Rational r1 = 3 * h.h1(m) * (bM - bconv_m);
            Rational lhs = Rational(pow_int(p, 3)) * r1;
            Rational rhs = make_rational(-6, two_n + 1) * pow_int(p, 3) * h.h1(two_n) * b.divided(m);
            emit_residues(out, "C34", p, ps, 4, ctx.rres(lhs, 4), ctx.rres(rhs, 4));
        }
    }
}

// The mod-p^3 consequence of the differential analysis.
void eval_c35(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const BernoulliCache& b = ctx.bern();
    for (long two_n = 4; two_n <= p - 7; two_n += 2) {
        if (o.max_two_n > 0 && two_n > o.max_two_n) break;
        std::string ps = "2n=" + std::to_string(two_n);
        if (!selected(o, ps)) continue;
        const long M = 2 * (p - 1) - two_n, m = p - 1 - two_n;
        PadicNumber delta = cubic_pad(ctx, M, false) - cubic_pad(ctx, m, false);
        emit_residues(out, "C35", p, ps, 1, delta.shifted(1).residue(1),
                      ctx.rres(3 * conv_divided(b, m).value, 1), "scaled by p");
    }
}

// Cubic identity specialization at order p-1, mod p.
void eval_c42(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    std::string ps = "-";
    if (!selected(o, ps)) return;
    const BernoulliCache& b = ctx.bern();
    Int lhs = cubic_pad(ctx, p - 1, false).residue(1);
    Rational sum(0);
    for (long i = 2; i <= p - 5; i += 2)
        sum += Rational(b.divided(i) * conv_divided_binomial(b, p - 1 - i).value);
    Rational rhs_exact = Rational(sum + 6 * b.divided(p - 1) * mhs2_exact(ctx, p - 1) -
                                  make_rational(9, 4) * b.divided(p - 3));
    emit_residues(out, "C42", p, ps, 1, lhs, ctx.rres(rhs_exact, 1));
}

// Order-(p-1) cubic residue from the factorial-based expansion.
void eval_c43(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    std::string ps = "-";
    if (!selected(o, ps)) return;
    const BernoulliCache& b = ctx.bern();
    const Rational& conv = ctx.conv_divided_pm1();
    Rational braces = Rational(-6 * ctx.stirling().at(1)) +
                      Rational(3 * pow_int(p, 3) * hensel_digit(conv, p, 1)) +
                      Rational(3 * pow_int(p, 2) * hensel_digit(conv, p, 0)) -
                      Rational(6 * p * b.divided(p - 1)) -
                      make_rational(15, 4) * pow_int(p, 3) * b.divided(p - 3);
    Int lhs = cubic_pad(ctx, p - 1, false).residue(1);
    Int rhs(hensel_digit(braces, p, 3));
    emit_residues(out, "C43", p, ps, 1, lhs, rhs);
}

// The depth-2 MHS at order p-1 via both stated closed forms, mod p^3.
void eval_c44(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const BernoulliCache& b = ctx.bern();
    Rational a2 = mhs2_exact(ctx, p - 1);
    if (std::string ps = "form=1"; selected(o, ps)) {
        Rational rhs = Rational(ctx.harm().h1(p - 1) / p);
        emit_residues(out, "C44", p, ps, 3, ctx.rres(a2, 3), ctx.rres(rhs, 3));
    }
    if (std::string ps = "form=2"; selected(o, ps)) {
        Rational rhs = Rational(-p * (b.divided(2 * p - 4) - 2 * b.divided(p - 3)));
        emit_residues(out, "C44", p, ps, 3, ctx.rres(a2, 3), ctx.rres(rhs, 3));
    }
}

} // namespace clab::checks
