#include "check_support.hpp"

#include "clab/errors.hpp"

namespace clab::checks {

Int window_qb_sum(const PrimeContext& ctx, long lo, long hi, long two_n, bool divided, int k) {
    const long p = ctx.p();
    const Int mod = ctx.pk(k);
    if (lo < 1 || hi > p - 3) throw WindowError("window_qb_sum: window out of range");
    std::vector<Int> x;
    x.reserve(static_cast<size_t>(std::max<long>(0, hi - lo + 1)));
    for (long i = lo; i <= hi; ++i)
        x.push_back(divided ? ctx.div_pad(i).residue(k) : ctx.bern_pad(i).residue(k));
    Int acc = 0;
    for (long a = 1; a < p; ++a) {
        Int ia;
        mpz_fdiv_r(ia.get_mpz_t(), ctx.inv(a).get_mpz_t(), mod.get_mpz_t());
        Int w = ctx.q_mod(a) * ctx.q_mod(a);
        mpz_fdiv_r(w.get_mpz_t(), w.get_mpz_t(), mod.get_mpz_t());
        if (two_n != 0) {
            Int e(two_n), t;
            mpz_powm(t.get_mpz_t(), ia.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
            w *= t;
            mpz_fdiv_r(w.get_mpz_t(), w.get_mpz_t(), mod.get_mpz_t());
        }
        Int cur, e0(lo);
        mpz_powm(cur.get_mpz_t(), ia.get_mpz_t(), e0.get_mpz_t(), mod.get_mpz_t());
        Int s = 0;
        for (long i = lo; i <= hi; ++i) {
            const Int& xi = x[static_cast<size_t>(i - lo)];
            if (xi != 0) s += xi * cur;
            cur *= ia;
            mpz_fdiv_r(cur.get_mpz_t(), cur.get_mpz_t(), mod.get_mpz_t());
        }
        mpz_fdiv_r(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
        acc += w * s;
        mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
    }
    return acc;
}

PadicNumber bconv_pad(const PrimeContext& ctx, long order) {
    const long p = ctx.p();
    const FactorialTable& ft = ctx.factorials();
    PadicNumber acc = ctx.pad_zero();
    for (long i = 2; i <= order - 2; i += 2) {
        auto [v, u] = ft.binom_parts(order, i);
        PadicNumber coeff = PadicNumber::from_int(u, p, ctx.work()).shifted(v);
        acc = acc + coeff * ctx.div_pad(i) * ctx.div_pad(order - i);
    }
    return acc;
}

PadicNumber cubic_pad(const PrimeContext& ctx, long order, bool multinomial) {
    const long p = ctx.p();
    const FactorialTable* ft = multinomial ? &ctx.factorials() : nullptr;
    PadicNumber acc = ctx.pad_zero();
    for (long i = 2; i <= order - 4; i += 2) {
        PadicNumber di = ctx.div_pad(i);
        std::pair<long, Int> outer;
        if (ft) outer = ft->binom_parts(order, i);
        for (long j = 2; j <= order - i - 2; j += 2) {
            long k = order - i - j;
            if (k < 2) continue;
            PadicNumber term = di * ctx.div_pad(j) * ctx.div_pad(k);
            if (ft) {
                auto inner = ft->binom_parts(order - i, j);
                Int u = outer.second * inner.second;
                PadicNumber coeff =
                    PadicNumber::from_int(u, p, ctx.work()).shifted(outer.first + inner.first);
                term = term * coeff;
            }
            acc = acc + term;
        }
    }
    return acc;
}

Rational mhs2_exact(const PrimeContext& ctx, long n) {
    const Rational& h1 = ctx.harm().h1(n);
    const Rational& h2 = ctx.harm().h2(n);
    return Rational((h1 * h1 - h2) / 2);
}

} // namespace clab::checks
