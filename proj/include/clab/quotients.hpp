#pragma once

#include <vector>

#include "clab/padic.hpp"
#include "clab/rational.hpp"

namespace clab {

/// Exact Fermat quotient (a^{p-1} - 1)/p for a in [1, p-1].
Int fermat_quotient(long p, long a);

/// Exact Wilson quotient ((p-1)! + 1)/p.
Int wilson_quotient(long p);

/// S_m(n) = 1^m + 2^m + ... + (n-1)^m, exact.
Int power_sum(long m, long n);

/// S_m(n) reduced mod p^K.
PadicResidue power_sum_mod(long p, long m, long n, int K);

/// Per-prime table of exact Fermat quotients plus the Wilson quotient.
/// Quotients are stored exactly; reduction happens at sum time.
struct QuotientTable {
    long prime = 0;
    std::vector<Int> q; // q[a] for a in [1, p-1]; q[0] unused
    Int wilson;

    explicit QuotientTable(long p);
    const Int& at(long a) const;
};

/// Sum over a in [1, p-1] of a^t q_a^m, reduced mod p^K. A negative t means
/// the inverse power: a^t is realized as (a^{-1} mod p^K)^{-t}.
PadicResidue weighted_power_sum(const QuotientTable& table, long t, int m, int K);

} // namespace clab
