#pragma once

#include <vector>

#include "clab/rational.hpp"

namespace clab {

/// Exact harmonic-type sums with prefix tables for orders 1 and 2.
class HarmonicTable {
  public:
    explicit HarmonicTable(long max_order);

    long max_order() const { return static_cast<long>(h1_.size()) - 1; }

    /// Sum of 1/i for i <= n (0 for n = 0).
    const Rational& h1(long n) const;

    /// Sum of 1/i^2 for i <= n.
    const Rational& h2(long n) const;

  private:
    std::vector<Rational> h1_, h2_;
};

/// One-off harmonic number of order t.
Rational harmonic(long t);

/// Generalized harmonic sum of 1/x^k over x <= n.
Rational harmonic_power(long n, long k);

/// Multiple harmonic sum of depth k and order n: the elementary symmetric
/// function of the reciprocals 1/1, ..., 1/n of degree k. Computed by the
/// product-expansion recurrence; 1 for k = 0 (empty product).
Rational mhs(long k, long n);

/// e_0..e_kmax of {1/1, ..., 1/n} in one pass.
std::vector<Rational> mhs_row(long n, long k_max);

/// Unsigned Stirling numbers of the first kind on p letters: the unsigned
/// coefficient row of the falling factorial x(x-1)...(x-(p-1)).
struct StirlingRow {
    long p = 0;
    std::vector<Int> s; // s[k] = coefficient for x^k, k in [1, p]; s[0] unused

    const Int& at(long k) const;
};

StirlingRow stirling_row(long p);

/// Verifies C(2(p-1)-2n, s) = C(p-1-2n, s) (1 + s/(2n+1)) mod p and returns
/// the common residue. Throws HypothesisError outside the valid window.
long binom_shift_residue(long p, long n, long s);

} // namespace clab
