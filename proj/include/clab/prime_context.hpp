#pragma once

#include <memory>
#include <vector>

#include "clab/bernoulli.hpp"
#include "clab/combinatorics.hpp"
#include "clab/convolutions.hpp"
#include "clab/hensel.hpp"
#include "clab/padic.hpp"
#include "clab/quotients.hpp"

namespace clab {

/// Factorials up to a bound split as n! = unit * p^val with the unit kept
/// mod p^w; lets binomial and multinomial coefficients be formed in O(1)
/// modular steps even when p divides them.
struct FactorialTable {
    long prime = 0;
    int prec = 0;
    std::vector<Int> unit, inv_unit;
    std::vector<long> val;

    FactorialTable(long p, long max_n, int w);
    /// C(n, k) as valuation + unit parts.
    std::pair<long, Int> binom_parts(long n, long k) const;
};

/// Per-prime bundle of caches: quotient tables, harmonic tables, reduced
/// Bernoulli values, Ernvall-Metsankyla residues, Stirling row and lift
/// families. Built by one worker and used by that worker only; the shared
/// BernoulliCache is immutable.
class PrimeContext {
  public:
    PrimeContext(long p, int K, std::shared_ptr<const BernoulliCache> bern);

    long p() const { return p_; }
    int K() const { return K_; }
    /// Internal absolute working precision for reduced values.
    int work() const { return work_; }

    const BernoulliCache& bern() const { return *bern_; }
    const QuotientTable& quot() const { return quot_; }
    const EMResidueTable& em() const { return em_; }
    const HarmonicTable& harm() const { return harm_; } // orders up to 2p + 2

    const StirlingRow& stirling() const;              // lazy
    const LiftFamily& lifts(LiftTag tag) const;       // lazy, precision max(K, 4)
    const FactorialTable& factorials() const;         // lazy, up to 2(p-1) + 2
    const std::vector<Rational>& mhs_values(long k_max) const; // e_k over p-1 reciprocals

    /// Exact full convolution of divided Bernoulli numbers at order p-1
    /// (shared by several evaluators).
    const Rational& conv_divided_pm1() const;

    const Rational& agoh() const { return agoh_; }

    Int pk(int k) const; // p^k

    /// q_a mod p^work.
    const Int& q_mod(long a) const { return q_mod_[static_cast<size_t>(a)]; }
    /// a^{-1} mod p^work.
    const Int& inv(long a) const { return inv_[static_cast<size_t>(a)]; }

    /// Reduced divided Bernoulli / Bernoulli values, cached for
    /// indices in [0, 2(p-1)]; falls back to exact reduction beyond.
    PadicNumber div_pad(long i) const;
    PadicNumber bern_pad(long i) const;

    PadicNumber pad(const Rational& x) const { return PadicNumber::from_rational(x, p_, work_); }
    PadicNumber pad_zero() const { return PadicNumber::zero(p_, work_); }

    /// Residue of an exact rational in [0, p^k).
    Int rres(const Rational& x, int k) const { return reduce_mod(x, p_, k).value(); }

  private:
    long p_;
    int K_;
    int work_;
    std::shared_ptr<const BernoulliCache> bern_;
    QuotientTable quot_;
    EMResidueTable em_;
    HarmonicTable harm_;
    Rational agoh_;
    std::vector<Int> q_mod_, inv_;
    std::vector<PadicNumber> div_pad_, bern_pad_;

    // Lazily built pieces; contexts are confined to one worker, so plain
    // pointers without locking are fine.
    mutable std::unique_ptr<StirlingRow> stirling_;
    mutable std::unique_ptr<LiftFamily> lifts_[3];
    mutable std::unique_ptr<FactorialTable> fact_;
    mutable std::vector<Rational> mhs_;
    mutable long mhs_kmax_ = -1;
    mutable std::unique_ptr<Rational> conv_pm1_;
};

/// Mixed convolution against Ernvall-Metsankyla residues, mod p: the sum over
/// even i in [lo, hi] of X_i * D_{order-i}, where X_i is the divided (or
/// ordinary) Bernoulli value and D the first Hensel digit of the Kummer
/// difference. An empty window yields 0 and sets *empty so callers can flag
/// it in reports instead of folding it silently.
Int em_mixed_convolution(const PrimeContext& ctx, long lo, long hi, long order, bool divided,
                         bool* empty = nullptr);

} // namespace clab
