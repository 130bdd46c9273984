#include "check_support.hpp"
#include "clab/errors.hpp"

// Weighted power-sum congruences of first and second order, irregular-pair
// detection, and the structural baselines (Kummer, Wolstenholme, von Staudt
// windows, harmonic shifts, binomial shifts).

namespace clab::checks {

// Sum_a q_a a^t against -B_t/t, or the Wilson quotient when (p-1) | t.
void eval_c01(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long t = 2; t <= 2 * (p - 1); t += 2) {
        std::string ps = "t=" + std::to_string(t);
        if (!selected(o, ps)) continue;
        Int lhs = wsum(ctx, t, 1, 1);
        Int rhs = (t % (p - 1) == 0) ? ctx.rres(Rational(ctx.quot().wilson), 1)
                                     : ctx.rres(-ctx.bern().divided(t), 1);
        emit_residues(out, "C01", p, ps, 1, lhs, rhs);
    }
}

// Irregular pair criterion: the weighted sum vanishes mod p exactly when p
// divides the numerator of B_t/t.
void eval_c02(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long t = 2; t <= p - 3; t += 2) {
        std::string ps = "t=" + std::to_string(t);
        if (!selected(o, ps)) continue;
        Int lhs = wsum(ctx, t, 1, 1);
        Int num_res;
        Int num = ctx.bern().divided(t).get_num();
        mpz_fdiv_r_ui(num_res.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(p));
        bool sum_zero = lhs == 0;
        bool divides = num_res == 0;
        CongruenceReport r;
        r.id = "C02";
        r.prime = p;
        r.params = ps;
        r.modulus = modulus_str(p, 1);
        r.lhs = lhs.get_str();
        r.rhs = num_res.get_str();
        r.status = (sum_zero == divides) ? CheckStatus::pass : CheckStatus::fail;
        r.note = divides ? "irregular-pair" : "";
        out.push_back(std::move(r));
    }
}

// Odd-exponent first-order quotient congruence mod p^2.
void eval_c03(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long s = 3; s <= p - 2; s += 2) {
        std::string ps = "t=" + std::to_string(s);
        if (!selected(o, ps)) continue;
        long u = s - 1;
        if (u % (p - 1) == 0 || u % (p - 1) == 2) {
            emit_skip(out, "C03", p, ps, "exponent-1 is 0 or 2 mod p-1");
            continue;
        }
        Int lhs = wsum(ctx, s, 1, 2);
        Int rhs = ctx.rres(Rational(-p * ctx.bern().bernoulli(u)), 2);
        emit_residues(out, "C03", p, ps, 2, lhs, rhs);
    }
}

// Even-exponent first-order quotient congruence mod p^2.
void eval_c04(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long u = 2; u <= p - 3; u += 2) {
        std::string ps = "t=" + std::to_string(u);
        if (!selected(o, ps)) continue;
        if (u % (p - 1) == 0 || u % (p - 1) == 2) {
            emit_skip(out, "C04", p, ps, "exponent is 0 or 2 mod p-1");
            continue;
        }
        Int lhs = wsum(ctx, u, 1, 2);
        Int rhs = ctx.rres(ctx.bern().bernoulli(p - 1 + u) - ctx.bern().bernoulli(u), 2);
        emit_residues(out, "C04", p, ps, 2, lhs, rhs);
    }
}

// Squared-quotient congruence mod p^2 for the divided Bernoulli difference.
void eval_c05(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long t = 4; t <= p - 3; t += 2) {
        std::string ps = "t=" + std::to_string(t);
        if (!selected(o, ps)) continue;
        Int lhs = ctx.rres(ctx.bern().divided(p - 1 + t), 2);
        Int s = wsum(ctx, t, 2, 2);
        Int rhs = ctx.rres(ctx.bern().divided(t) - make_rational(p, 2) * Rational(s), 2);
        emit_residues(out, "C05", p, ps, 2, lhs, rhs);
    }
}

// Teichmuller-correction expansion of the divided Bernoulli number mod p^2.
void eval_c06(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const Int mod2 = ctx.pk(2);
    const LiftFamily& fam = ctx.lifts(LiftTag::teichmuller);
    for (long t = 4; t <= p - 3; t += 2) {
        std::string ps = "t=" + std::to_string(t);
        if (!selected(o, ps)) continue;
        Int s1 = 0, s2 = 0;
        for (long a = 1; a < p; ++a) {
            Int v = fam.correction(a).value();
            Int pw1, pw2, base(a), e1(t - 1), e2(t - 2);
            mpz_powm(pw1.get_mpz_t(), base.get_mpz_t(), e1.get_mpz_t(), mod2.get_mpz_t());
            mpz_powm(pw2.get_mpz_t(), base.get_mpz_t(), e2.get_mpz_t(), mod2.get_mpz_t());
            s1 += v * pw1;
            s2 += v * v % mod2 * pw2;
        }
        Int lhs = ctx.rres(ctx.bern().divided(t), 2);
        Int half = mod_inverse(Int(2), p, 2).value();
        Int rhs = -s1 - Int(t - 1) * half % mod2 * p % mod2 * s2;
        mpz_fdiv_r(rhs.get_mpz_t(), rhs.get_mpz_t(), mod2.get_mpz_t());
        emit_residues(out, "C06", p, ps, 2, lhs, rhs);
    }
}

// First-order weighted sum vs the convolution-corrected expansion mod p^2.
void eval_c07(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const Rational& ag = ctx.agoh();
    for (long t = 4; t <= p - 3; t += 2) {
        std::string ps = "t=" + std::to_string(t);
        if (!selected(o, ps)) continue;
        long two_n = p - 1 - t;
        Int lhs = wsum(ctx, t, 1, 2);
        // The coefficient of t is 1 minus the Agoh-Giuga quotient; with it the
        // expansion is consistent with the first-order and Kummer-difference forms.
        Rational braces = (ag + (1 - ag) * t + ctx.harm().h1(t)) * ctx.bern().divided(t);
        braces += make_rational(t - 2, 2) * conv_divided(ctx.bern(), t).value;
        braces += make_rational(1, 2) * conv_divided_binomial(ctx.bern(), t).value;
        braces += make_rational(t - 1, 2) *
                  conv_divided_truncated(ctx.bern(), p + 1 - two_n, p - 3, p - 1 + t).value;
        Rational rhs_exact = -ctx.bern().divided(t) + braces * p;
        emit_residues(out, "C07", p, ps, 2, lhs, ctx.rres(rhs_exact, 2));
    }
}

// Per-base quotient expansion via the order-p binomial row, mod p.
void eval_c10(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const Int mod(p);
    // c_k = C(p,k)/p mod p and B_k mod p for k in [1, p-3]
    std::vector<Int> coef(static_cast<size_t>(p), 0);
    for (long k = 1; k <= p - 3; ++k) {
        if (k > 1 && k % 2 == 1) continue;
        Int c = binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(k)) / p;
        Int b = ctx.bern_pad(k).residue(1);
        coef[static_cast<size_t>(k)] = c * b % mod;
    }
    Int one_minus_ag = ctx.rres(1 - ctx.agoh(), 1);
    for (long a = 1; a < p; ++a) {
        std::string ps = "a=" + std::to_string(a);
        if (!selected(o, ps)) continue;
        Int lhs = Int(a) * ctx.quot().at(a);
        mpz_fdiv_r(lhs.get_mpz_t(), lhs.get_mpz_t(), mod.get_mpz_t());
        Int rhs = -1 + one_minus_ag * a;
        Int base(a % p);
        for (long k = 1; k <= p - 3; ++k) {
            if (coef[static_cast<size_t>(k)] == 0) continue;
            Int e(p - k), t;
            mpz_powm(t.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
            rhs -= coef[static_cast<size_t>(k)] * t;
        }
        mpz_fdiv_r(rhs.get_mpz_t(), rhs.get_mpz_t(), mod.get_mpz_t());
        emit_residues(out, "C10", p, ps, 1, lhs, rhs);
    }
}

// Harmonic-weighted convolution of divided Bernoulli numbers mod p.
void eval_c11(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    std::string ps = "-";
    if (!selected(o, ps)) return;
    Rational s(0);
    for (long i = 2; i <= p - 3; i += 2)
        s += Rational(ctx.bern().divided(i) * ctx.bern().divided(p - 1 - i) *
                      ctx.harm().h1(p - 1 - i));
    emit_residues(out, "C11", p, ps, 1, ctx.rres(s, 1), ctx.rres(2 * ctx.bern().divided(p - 3), 1));
}

// Both mixed orderings of the harmonic-weighted convolution mod p.
void eval_c12(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    Rational s1(0), s2(0);
    for (long i = 2; i <= p - 3; i += 2) {
        s1 += Rational(ctx.harm().h1(i) * ctx.bern().bernoulli(i) * ctx.bern().divided(p - 1 - i));
        s2 += Rational(ctx.harm().h1(i) * ctx.bern().divided(i) * ctx.bern().bernoulli(p - 1 - i));
    }
    Int rhs = ctx.rres(-ctx.bern().divided(p - 3), 1);
    if (selected(o, "form=1"))
        emit_residues(out, "C12", p, "form=1", 1, ctx.rres(s1, 1), rhs);
    if (selected(o, "form=2"))
        emit_residues(out, "C12", p, "form=2", 1, ctx.rres(s2, 1), rhs);
}

// Odd-exponent squared-quotient congruence mod p.
void eval_c13(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long t = 5; t <= p - 2; t += 2) {
        std::string ps = "t=" + std::to_string(t);
        if (!selected(o, ps)) continue;
        Int lhs = ctx.rres(ctx.bern().bernoulli(p - 1 + t - 1) - ctx.bern().bernoulli(t - 1), 1);
        Int rhs = (ctx.pk(1) - wsum(ctx, t, 2, 1)) % ctx.pk(1);
        emit_residues(out, "C13", p, ps, 1, lhs, rhs);
    }
}

// Squared vs plain quotient weights, odd exponents, mod p.
void eval_c14(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long t = 5; t <= p - 2; t += 2) {
        std::string ps = "t=" + std::to_string(t);
        if (!selected(o, ps)) continue;
        Int lhs = wsum(ctx, t, 2, 1);
        Int rhs = (ctx.pk(1) - wsum(ctx, t - 1, 1, 1)) % ctx.pk(1);
        emit_residues(out, "C14", p, ps, 1, lhs, rhs);
    }
}

// Same congruence phrased through the Teichmuller corrections.
void eval_c15(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const Int mod(p);
    const LiftFamily& fam = ctx.lifts(LiftTag::teichmuller);
    for (long t = 5; t <= p - 2; t += 2) {
        std::string ps = "t=" + std::to_string(t);
        if (!selected(o, ps)) continue;
        Int s = 0;
        for (long a = 1; a < p; ++a) {
            Int v;
            mpz_fdiv_r(v.get_mpz_t(), fam.correction(a).value().get_mpz_t(), mod.get_mpz_t());
            Int base(a), e(t - 1), pw;
            mpz_powm(pw.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
            s += ctx.q_mod(a) % mod * pw % mod * (1 + v);
        }
        mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
        emit_residues(out, "C15", p, ps, 1, s, Int(0));
    }
}

// Even-exponent form: divided Bernoulli vs shifted squared-quotient sum.
void eval_c16(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long t = 4; t <= p - 3; t += 2) {
        std::string ps = "t=" + std::to_string(t);
        if (!selected(o, ps)) continue;
        Int lhs = ctx.rres(ctx.bern().divided(t), 1);
        Int rhs = wsum(ctx, t + 1, 2, 1);
        emit_residues(out, "C16", p, ps, 1, lhs, rhs);
    }
}

// Scaling congruence for p B_{k(p-1)} mod p^2, k in {2..5}.
void eval_c20(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long k = 2; k <= 5; ++k) {
        std::string ps = "k=" + std::to_string(k);
        if (!selected(o, ps)) continue;
        Int lhs = ctx.rres(Rational(p * ctx.bern().bernoulli(k * (p - 1))), 2);
        Int rhs =
            ctx.rres(Rational(-(k - 1) * (p - 1)) + Rational(k * p * ctx.bern().bernoulli(p - 1)), 2);
        emit_residues(out, "C20", p, ps, 2, lhs, rhs);
    }
}

// Power-sum expansion in Bernoulli numbers mod p^3.
void eval_c36(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long t = 3; t <= 2 * (p - 1); ++t) {
        std::string ps = "t=" + std::to_string(t);
        if (!selected(o, ps)) continue;
        if (t % (p - 1) == 0) {
            emit_skip(out, "C36", p, ps, "exponent divisible by p-1");
            continue;
        }
        if (t % (p - 1) == 2) {
            emit_skip(out, "C36", p, ps, "exponent is 2 mod p-1");
            continue;
        }
        Int lhs = power_sum_mod(p, t, p, 3).value();
        Rational rhs_exact = Rational(p * ctx.bern().bernoulli(t)) +
                             make_rational(t, 2) * pow_int(p, 2) * ctx.bern().bernoulli(t - 1) +
                             make_rational(t * (t - 1), 6) * pow_int(p, 3) *
                                 ctx.bern().bernoulli(t - 2);
        emit_residues(out, "C36", p, ps, 3, lhs, ctx.rres(rhs_exact, 3));
    }
}

// Per-base reciprocal expansion: divided Bernoulli tail equals w_p + q_a.
void eval_c38(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const Int mod(p);
    std::vector<Int> x;
    for (long i = 1; i <= p - 3; ++i) x.push_back(ctx.div_pad(i).residue(1));
    Int wres;
    mpz_fdiv_r(wres.get_mpz_t(), ctx.quot().wilson.get_mpz_t(), mod.get_mpz_t());
    for (long a = 1; a < p; ++a) {
        std::string ps = "a=" + std::to_string(a);
        if (!selected(o, ps)) continue;
        Int ia;
        mpz_fdiv_r(ia.get_mpz_t(), ctx.inv(a).get_mpz_t(), mod.get_mpz_t());
        Int cur = ia, s = 0;
        for (long i = 1; i <= p - 3; ++i) {
            if (x[static_cast<size_t>(i - 1)] != 0) s += x[static_cast<size_t>(i - 1)] * cur;
            cur = cur * ia % mod;
        }
        mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
        Int rhs = (wres + ctx.q_mod(a)) % mod;
        emit_residues(out, "C38", p, ps, 1, s, rhs);
    }
}

// Harmonic shift congruences.
void eval_c45(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const HarmonicTable& h = ctx.harm();
    for (long two_n = 2; two_n <= p - 5; two_n += 2) {
        long n1 = two_n, n2 = two_n + 1;
        std::string base = "2n=" + std::to_string(two_n);
        if (std::string ps = base + ",form=1"; selected(o, ps))
            emit_residues(out, "C45", p, ps, 2, ctx.rres(h.h1(p - 1 - two_n), 2),
                          ctx.rres(p * h.h2(n1) + h.h1(n1), 2));
        if (std::string ps = base + ",form=2"; selected(o, ps))
            emit_residues(out, "C45", p, ps, 2, ctx.rres(h.h1(p - 2 - two_n), 2),
                          ctx.rres(p * h.h2(n2) + h.h1(n2), 2));
        if (std::string ps = base + ",form=3"; selected(o, ps))
            emit_residues(out, "C45", p, ps, 1, ctx.rres(h.h2(p - 2 - two_n), 1),
                          ctx.rres(-h.h2(n2), 1));
        if (std::string ps = base + ",form=4"; selected(o, ps)) {
            // u = sum of 1/j over [p-2n, p-1] and [p+1, 2p-2-2n]
            Rational u = (h.h1(p - 1) - h.h1(p - 1 - two_n)) + (h.h1(2 * p - 2 - two_n) - h.h1(p));
            Rational rhs = make_rational(1, n2) +
                           p * (make_rational(Int(1), Int(n2) * n2) + h.h2(n2));
            emit_residues(out, "C45", p, ps, 2, ctx.rres(u, 2), ctx.rres(rhs, 2));
        }
    }
}

// Binomial shift congruence over its full window.
void eval_c46(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long two_n = 2; two_n <= p - 5; two_n += 2) {
        long n = two_n / 2;
        for (long s = 0; s <= p - 3 - two_n; s += 2) {
            std::string ps = "2n=" + std::to_string(two_n) + ",s=" + std::to_string(s);
            if (!selected(o, ps)) continue;
            Int lhs = ctx.rres(Rational(binomial(static_cast<unsigned long>(2 * (p - 1) - two_n),
                                                 static_cast<unsigned long>(s))),
                               1);
            Rational rhs_exact = Rational(binomial(static_cast<unsigned long>(p - 1 - two_n),
                                                   static_cast<unsigned long>(s))) *
                                 (1 + make_rational(s, 2 * n + 1));
            emit_residues(out, "C46", p, ps, 1, lhs, ctx.rres(rhs_exact, 1));
        }
    }
}

// Kummer baseline: divided Bernoulli differences vanish mod p.
void eval_c47(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    for (long t = 2; t <= p - 3; t += 2) {
        std::string ps = "t=" + std::to_string(t);
        if (!selected(o, ps)) continue;
        Int lhs = ctx.rres(ctx.bern().divided(p - 1 + t) - ctx.bern().divided(t), 1);
        emit_residues(out, "C47", p, ps, 1, lhs, Int(0));
    }
}

// Wolstenholme valuations.
void eval_c48(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    if (std::string ps = "k=1"; selected(o, ps))
        emit_residues(out, "C48", p, ps, 2, ctx.rres(ctx.harm().h1(p - 1), 2), Int(0));
    if (std::string ps = "k=2"; selected(o, ps))
        emit_residues(out, "C48", p, ps, 1, ctx.rres(ctx.harm().h2(p - 1), 1), Int(0));
}

// Exploratory: floor-weighted double sum representation of B_t/t mod p.
void eval_c49(const PrimeContext& ctx, const SweepOptions& o, Sink& out) {
    const long p = ctx.p();
    const Int mod(p);
    for (long i = 2; i <= std::min<long>(p - 3, 12); i += 2) {
        std::string ps = "i=" + std::to_string(i);
        if (!selected(o, ps)) continue;
        Int lhs = ctx.rres(ctx.bern().divided(i), 1);
        Int rhs = 0;
        for (long a = 1; a < p; ++a) {
            Int inner = 0;
            for (long b = 1; b < p; ++b) {
                Int ib;
                mpz_fdiv_r(ib.get_mpz_t(), ctx.inv(b).get_mpz_t(), mod.get_mpz_t());
                long bbar = ib.get_si(); // representative of b^{-1} in [1, p-1]
                long fl = (bbar * a) / p;
                if (fl == 0) continue;
                Int e(i - 1), pw;
                mpz_powm(pw.get_mpz_t(), ib.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
                inner += fl * pw;
            }
            Int base(a), e(i - 1), pw;
            mpz_powm(pw.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
            rhs += inner % mod * pw;
            mpz_fdiv_r(rhs.get_mpz_t(), rhs.get_mpz_t(), mod.get_mpz_t());
        }
        emit_residues(out, "C49", p, ps, 1, lhs, rhs, "floor interpretation of bracket", true);
    }
}

} // namespace clab::checks
