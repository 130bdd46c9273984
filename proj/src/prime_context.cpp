#include "clab/prime_context.hpp"

#include <algorithm>

#include "clab/errors.hpp"

namespace clab {

FactorialTable::FactorialTable(long p, long max_n, int w) : prime(p), prec(w) {
    const Int mod = pow_int(p, static_cast<unsigned long>(w));
    unit.resize(static_cast<size_t>(max_n) + 1);
    inv_unit.resize(static_cast<size_t>(max_n) + 1);
    val.resize(static_cast<size_t>(max_n) + 1, 0);
    unit[0] = 1;
    for (long n = 1; n <= max_n; ++n) {
        long f = n, v = 0;
        while (f % p == 0) {
            f /= p;
            ++v;
        }
        val[static_cast<size_t>(n)] = val[static_cast<size_t>(n - 1)] + v;
        unit[static_cast<size_t>(n)] = unit[static_cast<size_t>(n - 1)] * f;
        mpz_fdiv_r(unit[static_cast<size_t>(n)].get_mpz_t(),
                   unit[static_cast<size_t>(n)].get_mpz_t(), mod.get_mpz_t());
    }
    for (long n = 0; n <= max_n; ++n)
        mpz_invert(inv_unit[static_cast<size_t>(n)].get_mpz_t(),
                   unit[static_cast<size_t>(n)].get_mpz_t(), mod.get_mpz_t());
}

std::pair<long, Int> FactorialTable::binom_parts(long n, long k) const {
    if (k < 0 || k > n) return {0, Int(0)};
    const Int mod = pow_int(prime, static_cast<unsigned long>(prec));
    Int u = unit[static_cast<size_t>(n)] * inv_unit[static_cast<size_t>(k)];
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    u *= inv_unit[static_cast<size_t>(n - k)];
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    long v = val[static_cast<size_t>(n)] - val[static_cast<size_t>(k)] -
             val[static_cast<size_t>(n - k)];
    return {v, u};
}

PrimeContext::PrimeContext(long p, int K, std::shared_ptr<const BernoulliCache> bern)
    : p_(p), K_(K), work_(std::max(K, 4) + 4), bern_(std::move(bern)), quot_(p),
      em_(build_em_table(*bern_, p)), harm_(2 * p + 2), agoh_(agoh_giuga_exact(*bern_, p)) {
    if (!is_prime(p)) throw Error("PrimeContext: p must be prime");
    const Int mod = pow_int(p, static_cast<unsigned long>(work_));
    q_mod_.resize(static_cast<size_t>(p));
    inv_.resize(static_cast<size_t>(p));
    for (long a = 1; a < p; ++a) {
        mpz_fdiv_r(q_mod_[static_cast<size_t>(a)].get_mpz_t(), quot_.at(a).get_mpz_t(),
                   mod.get_mpz_t());
        Int base(a);
        mpz_invert(inv_[static_cast<size_t>(a)].get_mpz_t(), base.get_mpz_t(), mod.get_mpz_t());
    }
    long top = std::min<long>(bern_->max_index(), 2 * (p - 1));
    div_pad_.reserve(static_cast<size_t>(top) + 1);
    bern_pad_.reserve(static_cast<size_t>(top) + 1);
    bern_pad_.push_back(PadicNumber::from_rational(Rational(1), p, work_));
    div_pad_.push_back(pad_zero()); // index 0 unused for divided values
    for (long i = 1; i <= top; ++i) {
        bern_pad_.push_back(PadicNumber::from_rational(bern_->bernoulli(i), p, work_));
        div_pad_.push_back(PadicNumber::from_rational(bern_->divided(i), p, work_));
    }
}

const StirlingRow& PrimeContext::stirling() const {
    if (!stirling_) stirling_ = std::make_unique<StirlingRow>(stirling_row(p_));
    return *stirling_;
}

const LiftFamily& PrimeContext::lifts(LiftTag tag) const {
    auto idx = static_cast<size_t>(tag);
    if (!lifts_[idx])
        lifts_[idx] = std::make_unique<LiftFamily>(
            build_lift_family(*bern_, p_, tag, std::max(K_, 4)));
    return *lifts_[idx];
}

const FactorialTable& PrimeContext::factorials() const {
    if (!fact_) fact_ = std::make_unique<FactorialTable>(p_, 2 * (p_ - 1) + 2, work_);
    return *fact_;
}

const std::vector<Rational>& PrimeContext::mhs_values(long k_max) const {
    if (k_max > mhs_kmax_) {
        mhs_ = mhs_row(p_ - 1, k_max);
        mhs_kmax_ = k_max;
    }
    return mhs_;
}

const Rational& PrimeContext::conv_divided_pm1() const {
    if (!conv_pm1_) conv_pm1_ = std::make_unique<Rational>(conv_divided(*bern_, p_ - 1).value);
    return *conv_pm1_;
}

Int PrimeContext::pk(int k) const { return pow_int(p_, static_cast<unsigned long>(k)); }

PadicNumber PrimeContext::div_pad(long i) const {
    if (i >= 1 && i < static_cast<long>(div_pad_.size())) return div_pad_[static_cast<size_t>(i)];
    return PadicNumber::from_rational(bern_->divided(i), p_, work_);
}

PadicNumber PrimeContext::bern_pad(long i) const {
    if (i >= 0 && i < static_cast<long>(bern_pad_.size())) return bern_pad_[static_cast<size_t>(i)];
    return PadicNumber::from_rational(bern_->bernoulli(i), p_, work_);
}

Int em_mixed_convolution(const PrimeContext& ctx, long lo, long hi, long order, bool divided,
                   bool* empty) {
    const long p = ctx.p();
    if (empty) *empty = (lo > hi);
    Int acc = 0;
    long start = lo + (lo % 2);
    for (long i = start; i <= hi; i += 2) {
        long d_index = order - i;
        long em_digit = ctx.em().at(d_index);
        if (em_digit == 0) continue;
        Int x = divided ? ctx.div_pad(i).residue(1) : ctx.bern_pad(i).residue(1);
        acc += x * em_digit;
    }
    Int mod(p);
    mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
    return acc;
}


} // namespace clab
