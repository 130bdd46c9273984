#pragma once

#include <iosfwd>
#include <vector>

#include "clab/padic.hpp"
#include "clab/rational.hpp"

namespace clab {

/// Exact Bernoulli numbers B_0..B_max and the divided values B_t/t,
/// with the B_1 = -1/2 convention. Built once, immutable afterwards,
/// safe to share read-only between workers.
///
/// Even indices come from an integer-only tangent-number triangle; the
/// final division by 4^n(4^n - 1) is the only rational step.
class BernoulliCache {
  public:
    explicit BernoulliCache(long max_index);

    long max_index() const { return static_cast<long>(table_.size()) - 1; }

    const Rational& bernoulli(long n) const;

    /// B_t / t, t >= 1.
    const Rational& divided(long t) const;

    /// Writes "n numerator/denominator" lines.
    void dump(std::ostream& os) const;

    /// Reads lines written by dump(); entries beyond max_index extend the
    /// table, entries are validated for shape only.
    static BernoulliCache load(std::istream& is, long max_index);

  private:
    BernoulliCache() = default;
    void build(long max_index);

    std::vector<Rational> table_;
    std::vector<Rational> divided_;
};

/// Ernvall-Metsankyla residue at even index i in [2, p-3]: the first Hensel
/// digit of B_{p-1+i}/(p-1+i) - B_i/i. Verifies the Kummer congruence
/// (valuation >= 1) before extracting the digit.
long em_residue(const BernoulliCache& cache, long p, long i);

/// All residues for even i in [2, p-3].
struct EMResidueTable {
    long prime = 0;
    std::vector<long> digits; // indexed by i/2 - 1 for even i in [2, p-3]

    long at(long i) const;
};

EMResidueTable build_em_table(const BernoulliCache& cache, long p);

/// The Agoh-Giuga quotient (1 + p B_{p-1})/p as an exact rational.
/// Distinct from the generic Hensel digit notation: it is its own quantity.
Rational agoh_giuga_exact(const BernoulliCache& cache, long p);

PadicResidue agoh_giuga(const BernoulliCache& cache, long p, int K);

/// Product of the primes q with (q-1) | n, the von Staudt-Clausen
/// denominator of B_n for even n.
Int von_staudt_clausen_denominator(long n);

} // namespace clab
