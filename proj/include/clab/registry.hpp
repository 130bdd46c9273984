#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clab/prime_context.hpp"

namespace clab {

enum class CheckStatus { pass, fail, skipped_hypothesis, exploratory };

const char* status_name(CheckStatus s);

/// Outcome of one (check, prime, parameters) evaluation. lhs and rhs are the
/// two independently computed residues; pass means lhs == rhs at the stated
/// modulus. Exploratory checks always carry status "exploratory" with the
/// observed outcome in the note.
struct CongruenceReport {
    std::string id;
    long prime = 0; // 0 for prime-independent checks
    std::string params;
    std::string modulus; // "p^k" as a literal number, or "exact"
    std::string lhs, rhs;
    CheckStatus status = CheckStatus::fail;
    std::string note;
};

/// Sweep-level knobs threaded through the evaluators.
struct SweepOptions {
    long max_two_n = 0;            // extra cap on 2n sweeps; 0 = none
    long max_identity_order = 40;  // cap for the exact identity checks
    long mhs_cap = 40;             // intrinsic cap for the exact multiple-harmonic-sum check
    // When set, evaluators emit only records whose canonical parameter
    // string equals this value (used by single-shot runs).
    std::optional<std::string> only_params;
};

struct CheckDefinition {
    std::string id;
    std::string title;
    std::string statement;
    int min_prime = 5;
    bool global = false; // prime-independent (exact identities)
    bool exploratory = false;
    void (*eval)(const PrimeContext&, const SweepOptions&, std::vector<CongruenceReport>&) = nullptr;
    void (*eval_global)(const BernoulliCache&, const SweepOptions&,
                        std::vector<CongruenceReport>&) = nullptr;
};

/// The full catalog, ordered by id.
const std::vector<CheckDefinition>& check_catalog();

const CheckDefinition* find_check(const std::string& id);

/// Runs a single check for one prime, optionally restricted to an exact
/// parameter string such as "t=4" or "2n=6,form=2".
std::vector<CongruenceReport> run_check(const std::string& id, const PrimeContext& ctx,
                                        const std::optional<std::string>& params_filter,
                                        const SweepOptions& opts = {});

struct SuiteMeta {
    std::string version;
    long p_min = 0, p_max = 0;
    int precision = 0;
    long cubic_identity_start = 0;  // smallest even order at which the cubic identity held
    std::string main_congruence_reading;    // winning parenthesization reading, empty if none
    std::vector<std::string> assumptions;
};

struct SuiteSummary {
    // per-check counts: pass, fail, skipped, exploratory
    std::map<std::string, std::array<long, 4>> by_check;
    long passed = 0, failed = 0, skipped = 0, exploratory = 0;
};

struct SuiteResult {
    SuiteMeta meta;
    std::vector<CongruenceReport> records; // sorted by (id, prime, params)
    SuiteSummary summary;

    bool ok() const { return summary.failed == 0; }
};

/// Runs the selected checks over all primes in [p_min, p_max]. The shared
/// Bernoulli cache must already cover 5(p_max - 1). Work is fanned out one
/// prime per task; records are order-normalized afterwards so results are
/// byte-identical for a fixed configuration regardless of worker count.
SuiteResult run_suite(long p_min, long p_max, int K, const std::set<std::string>& check_ids,
                      const SweepOptions& opts, std::shared_ptr<const BernoulliCache> cache,
                      int workers);

/// Bernoulli table size needed for a sweep up to p_max with exact identity
/// checks swept up to max_identity_order.
long required_bernoulli_index(long p_max, long max_identity_order = 40);

} // namespace clab
