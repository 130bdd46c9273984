#pragma once

// Shared helpers for the congruence evaluators. Internal to src/.

#include <string>
#include <vector>

#include "clab/registry.hpp"

namespace clab::checks {

using Sink = std::vector<CongruenceReport>;

inline std::string modulus_str(long p, int k) {
    std::string s = std::to_string(p);
    if (k != 1) s += "^" + std::to_string(k);
    return s;
}

inline bool selected(const SweepOptions& o, const std::string& params) {
    return !o.only_params || *o.only_params == params;
}

inline void emit_residues(Sink& out, const char* id, long p, std::string params, int k,
                          const Int& lhs, const Int& rhs, std::string note = {},
                          bool exploratory = false) {
    CongruenceReport r;
    r.id = id;
    r.prime = p;
    r.params = std::move(params);
    r.modulus = modulus_str(p, k);
    r.lhs = lhs.get_str();
    r.rhs = rhs.get_str();
    if (exploratory) {
        r.status = CheckStatus::exploratory;
        r.note = std::string(lhs == rhs ? "observed-equal" : "observed-unequal");
        if (!note.empty()) r.note += ";" + note;
    } else {
        r.status = lhs == rhs ? CheckStatus::pass : CheckStatus::fail;
        r.note = std::move(note);
    }
    out.push_back(std::move(r));
}

inline void emit_exact(Sink& out, const char* id, std::string params, const Rational& lhs,
                       const Rational& rhs, std::string note = {}) {
    CongruenceReport r;
    r.id = id;
    r.prime = 0;
    r.params = std::move(params);
    r.modulus = "exact";
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    r.status = lhs == rhs ? CheckStatus::pass : CheckStatus::fail;
    r.note = std::move(note);
    out.push_back(std::move(r));
}

inline void emit_skip(Sink& out, const char* id, long p, std::string params, std::string reason) {
    CongruenceReport r;
    r.id = id;
    r.prime = p;
    r.params = std::move(params);
    r.modulus = "-";
    r.status = CheckStatus::skipped_hypothesis;
    r.note = std::move(reason);
    out.push_back(std::move(r));
}

inline void emit_fail(Sink& out, const char* id, long p, std::string params, int k,
                      std::string reason) {
    CongruenceReport r;
    r.id = id;
    r.prime = p;
    r.params = std::move(params);
    r.modulus = modulus_str(p, k);
    r.status = CheckStatus::fail;
    r.note = std::move(reason);
    out.push_back(std::move(r));
}

/// Sum over a of q_a^m a^t mod p^k (negative t = inverse powers).
inline Int wsum(const PrimeContext& ctx, long t, int m, int k) {
    return weighted_power_sum(ctx.quot(), t, m, k).value();
}

/// Sum over a and over i in [lo, hi] of X_i a^{-i} q_a^2 a^{-2n} mod p^k,
/// where X_i is the divided (or ordinary) Bernoulli number. The index-1 term
/// (X_1 = -1/2 for the divided family) participates when lo = 1.
Int window_qb_sum(const PrimeContext& ctx, long lo, long hi, long two_n, bool divided, int k);

/// Binomial convolution of divided Bernoulli numbers at (possibly large)
/// order, evaluated p-adically; von Staudt poles are compensated by the
/// p-divisibility of the binomial weights.
PadicNumber bconv_pad(const PrimeContext& ctx, long order);

/// Cubic convolution (plain or multinomial) of divided Bernoulli numbers at
/// (possibly large) order, evaluated p-adically.
PadicNumber cubic_pad(const PrimeContext& ctx, long order, bool multinomial);

/// Exact second-depth multiple harmonic sum (H_n^2 - H_{n,2})/2 via the
/// context harmonic tables (n up to 2p).
Rational mhs2_exact(const PrimeContext& ctx, long n);

// Registered evaluators, grouped by theme.
void eval_c01(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c02(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c03(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c04(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c05(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c06(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c07(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c08(const BernoulliCache&, const SweepOptions&, Sink&);
void eval_c09(const BernoulliCache&, const SweepOptions&, Sink&);
void eval_c10(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c11(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c12(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c13(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c14(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c15(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c16(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c17(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c18(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c19(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c20(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c21(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c22(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c23(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c24(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c25(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c26(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c27(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c28(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c29(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c30(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c31(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c32(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c33(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c34(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c35(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c36(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c37(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c38(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c39(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c40(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c41(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c42(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c43(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c44(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c45(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c46(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c47(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c48(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c49(const PrimeContext&, const SweepOptions&, Sink&);
void eval_c50(const PrimeContext&, const SweepOptions&, Sink&);

/// Smallest even order >= 4 at which the cubic convolution identity holds
/// exactly (cross-checked through the sweep cap by the evaluator).
long cubic_identity_start(const BernoulliCache& cache, long cap);

} // namespace clab::checks
