#pragma once

#include <vector>

#include "clab/bernoulli.hpp"
#include "clab/padic.hpp"
#include "clab/quotients.hpp"

namespace clab {

/// The three polynomial families X^{p-1} + c whose integer points in [1, p-1]
/// lift to p-adic roots:
///   teichmuller:      c = -1          (roots are the Teichmuller lifts)
///   wilson_analog:    c = (p-1)!
///   bernoulli_analog: c = p B_{p-1}
enum class LiftTag { teichmuller, wilson_analog, bernoulli_analog };

const char* lift_tag_name(LiftTag tag);

/// The constant term c of the family polynomial, exact.
Rational lift_constant(const BernoulliCache& cache, long p, LiftTag tag);

/// The unique root of X^{p-1} + c congruent to a mod p, to precision K.
/// Newton iteration with doubled working precision at each step.
/// Throws NotSimpleRootError if the derivative is not a unit at a.
PadicResidue lift_root(long p, long a, const Rational& c, int K);

/// All p-1 lifted roots of one family with their correction residues
/// (root = a + p * correction; corrections carry precision K-1).
struct LiftFamily {
    long prime = 0;
    int precision = 0;
    LiftTag tag = LiftTag::teichmuller;
    std::vector<PadicResidue> roots;       // index a in [1, p-1]
    std::vector<PadicResidue> corrections; // same indexing, precision K-1

    const PadicResidue& root(long a) const;
    const PadicResidue& correction(long a) const;
};

LiftFamily build_lift_family(const BernoulliCache& cache, long p, LiftTag tag, int K);

/// Newton-formula verification on a lift family: power sums s_t and
/// elementary symmetric functions sigma_t of the roots vanish mod p^K for
/// t in [1, p-2], the root product equals the polynomial constant, and
/// shifted power sums sum_a root_a^{p-1+t} vanish for sampled t.
/// Failures are collected, not thrown.
struct SymmetricCheckReport {
    bool power_sums_vanish = true;
    bool elementary_vanish = true;
    bool product_matches = true;
    bool shifted_sums_vanish = true;
    std::vector<long> failing_t;

    bool all_ok() const {
        return power_sums_vanish && elementary_vanish && product_matches && shifted_sums_vanish;
    }
};

SymmetricCheckReport newton_symmetric_check(const BernoulliCache& cache, const LiftFamily& family,
                                            int K);

/// Per-base verification data for the second-order expansion of the
/// bernoulli_analog corrections: lhs is the lifted correction mod p^2, rhs is
/// a(q_a + AG) + a p (1 + AG)(q_a + AG) mod p^2. Needs family precision >= 3.
struct CorrectionExpansionEntry {
    long base = 0;
    Int lhs, rhs;
};

std::vector<CorrectionExpansionEntry> second_order_correction_expansion(
    const BernoulliCache& cache, const QuotientTable& quotients, const LiftFamily& family);

} // namespace clab
