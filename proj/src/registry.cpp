#include "clab/registry.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "check_support.hpp"
#include "clab/errors.hpp"

namespace clab {

const char* status_name(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped_hypothesis: return "skipped-hypothesis";
    case CheckStatus::exploratory: return "exploratory";
    }
    return "?";
}

const std::vector<CheckDefinition>& check_catalog() {
    using namespace checks;
    static const std::vector<CheckDefinition> catalog = {
        {"C01", "first-order weighted power sums",
         "sum_a q_a a^t = -B_t/t mod p for even t not divisible by p-1; = w_p otherwise", 5, false,
         false, eval_c01},
        {"C02", "irregular pair criterion",
         "sum_a q_a a^t vanishes mod p exactly when p divides the numerator of B_t/t", 5, false,
         false, eval_c02},
        {"C03", "odd-exponent quotient sums mod p^2",
         "sum_a a^{2t+1} q_a = -p B_{2t} mod p^2 for 2t not 0,2 mod p-1", 7, false, false,
         eval_c03},
        {"C04", "even-exponent quotient sums mod p^2",
         "sum_a a^{2t} q_a = B_{p-1+2t} - B_{2t} mod p^2 for 2t not 0,2 mod p-1", 7, false, false,
         eval_c04},
        {"C05", "squared-quotient expansion of the Kummer difference",
         "B_{p-1+t}/(p-1+t) = B_t/t - (p/2) sum_a q_a^2 a^t mod p^2, even t in [4, p-3]", 7, false,
         false, eval_c05},
        {"C06", "correction expansion of divided Bernoulli numbers",
         "B_t/t = -sum a^{t-1} v_a - p (t-1)/2 sum a^{t-2} v_a^2 mod p^2 with Teichmuller v_a", 7,
         false, false, eval_c06},
        {"C07", "convolution form of first-order weighted sums mod p^2",
         "sum_a a^t q_a expanded through quadratic convolutions and the order-t harmonic number",
         7, false, false, eval_c07},
        {"C08", "quadratic convolution identity (exact)",
         "plain convolution = binomial convolution + 2 H_m B_m/m, exactly over Q", 0, true, false,
         nullptr, eval_c08},
        {"C09", "cubic convolution identity (exact)",
         "multinomial cubic + 3 H_n binomial + 6 A_{2,n} B_n/n = plain cubic + (n^2-3n+5)/4 "
         "B_{n-2}/(n-2), exactly over Q",
         0, true, false, nullptr, eval_c09},
        {"C10", "per-base quotient expansion",
         "a q_a = -1 + (1 - AG) a - sum_k C(p,k)/p B_k a^{p-k} mod p", 5, false, false, eval_c10},
        {"C11", "harmonic-weighted convolution",
         "sum_i B_i/i B_{p-1-i}/(p-1-i) H_{p-1-i} = 2 B_{p-3}/(p-3) mod p", 7, false, false,
         eval_c11},
        {"C12", "mixed harmonic-weighted convolutions",
         "both orderings of sum_i H_i B_i B_{p-1-i}/(p-1-i) equal -B_{p-3}/(p-3) mod p", 7, false,
         false, eval_c12},
        {"C13", "odd-exponent squared-quotient sums",
         "B_{p+t-2} - B_{t-1} = -sum_a a^t q_a^2 mod p, odd t in [5, p-2]", 7, false, false,
         eval_c13},
        {"C14", "squared vs plain quotient weights",
         "sum_a q_a^2 a^t = -sum_a q_a a^{t-1} mod p, odd t in [5, p-2]", 7, false, false,
         eval_c14},
        {"C15", "correction-weighted vanishing sum",
         "sum_a q_a a^{t-1} (1 + v_a) = 0 mod p, odd t in [5, p-2]", 7, false, false, eval_c15},
        {"C16", "even-exponent squared-quotient form",
         "B_t/t = sum_a a^{t+1} q_a^2 mod p, even t in [4, p-3]", 7, false, false, eval_c16},
        {"C17", "reciprocal-window double sum",
         "sum_a sum_{i<=p-3} (B_i/i) a^{-i} q_a^2 a^{-2n} = w_p S2 + S3 mod p", 7, false, false,
         eval_c17},
        {"C18", "reciprocal-window double sum from index 2",
         "dropping the index-1 term adds half a divided Bernoulli number", 11, false, false,
         eval_c18},
        {"C19", "squared-quotient residue, three forms",
         "sum q_a^2 = -w_p^2 - conv(p-1) = -(AG-1)^2 - digit = quartic quotient, mod p", 7, false,
         false, eval_c19},
        {"C20", "p B_{k(p-1)} mod p^2",
         "p B_{k(p-1)} = -(k-1)(p-1) + k p B_{p-1} mod p^2, k in {2..5}", 5, false, false,
         eval_c20},
        {"C21", "a^2-weighted squared-quotient residue, three forms",
         "sum q_a^2 a^2 = w_p/6 - 1/4 - truncated conv = -2 D_2 - 1/2 = quartic quotient, mod p",
         7, false, false, eval_c21},
        {"C22", "third-power quotient sums, convolution and Bernoulli forms",
         "sum_a q_a^3 a^{-2n} through EM-weighted convolutions and the quartic Bernoulli "
         "quotient, mod p",
         7, false, false, eval_c22},
        {"C23", "truncated mixed convolution reduction",
         "truncated EM convolution = -full EM convolution + Wilson and quartic tails, mod p", 11,
         false, false, eval_c23},
        {"C24", "halved double-sum corollary at 2n=0",
         "-(1/2) sum_a sum_k (B_k/k) a^{-k} q_a^2 against the cubic Bernoulli quotient, mod p", 11,
         false, false, eval_c24},
        {"C25", "main truncated Bernoulli-EM congruence",
         "ordinary-Bernoulli truncated EM convolution against mixed convolutions, digit terms and "
         "the quartic quotient; ambiguous digit term tried under documented readings",
         11, false, false, eval_c25},
        {"C26", "root-weighted power sums mod p^3",
         "sum_a a^{t-1} root_a for the three lifted families against Bernoulli forms", 7, false,
         false, eval_c26},
        {"C27", "depth-2 MHS across the shifted window",
         "A_{2,2(p-1)-2n} = A_{2,p-1-2n} + 2 H_{2n+1,2} + H_{2n+1}(1/p + 1/(2n+1)) mod p", 11,
         false, false, eval_c27},
        {"C28", "pole-compensated binomial residue",
         "C(2(p-1)-2n-i, p-1) B_{p-1}/(p-1) = -1/(2n+1+i) mod p", 11, false, false, eval_c28},
        {"C29", "depth-2 MHS reflection",
         "A_{2,p-1-2n} = -A_{2,2n} + H_{2n}^2 mod p", 11, false, false, eval_c29},
        {"C30", "truncated convolution lemmas",
         "closed forms for truncated convolutions at offsets 4 and 6, and EM reductions of "
         "double sums",
         7, false, false, eval_c30},
        {"C31", "exact MHS vs Bernoulli expansion mod p^4",
         "elementary symmetric function of reciprocals of depth 2n against the cubic/quadratic "
         "Bernoulli formula",
         7, false, false, eval_c31},
        {"C32", "multinomial cubic differential term",
         "m-cubic(2(p-1)-2n) - m-cubic(p-1-2n) = -3/(2n+1) conv + 6/(2n+1) H_{2n} B mod p", 11,
         false, false, eval_c32},
        {"C33", "partial sums of the shifted multinomial cubic",
         "the five stated reductions of the S-decomposition, each mod p", 11, false, false,
         eval_c33},
        {"C34", "cubic differential decomposition rows",
         "the full decomposition and its three row reductions, mod p^4", 11, false, false,
         eval_c34},
        {"C35", "cubic differential term mod p^3",
         "p^3 (cubic(2(p-1)-2n) - cubic(p-1-2n)) = 3 p^2 conv(p-1-2n) mod p^3", 11, false, false,
         eval_c35},
        {"C36", "power sums in Bernoulli form mod p^3",
         "S_t = p B_t + p^2 t B_{t-1}/2 + p^3 t(t-1) B_{t-2}/6 mod p^3", 5, false, false,
         eval_c36},
        {"C37", "odd-exponent Newton expansion via corrections",
         "p^2 t B_{t-1}/2 = -t p sum v_a a^{t-1} - p^2 t(t-1)/2 sum v_a^2 a^{t-2} mod p^3", 7,
         false, false, eval_c37},
        {"C38", "per-base reciprocal Bernoulli tail",
         "sum_{i<=p-3} (B_i/i) a^{-i} = w_p + q_a mod p", 5, false, false, eval_c38},
        {"C39", "double-sum reduction with literal residues",
         "the third-power quotient sum with literal squared-quotient residues, mod p", 7, false,
         false, eval_c39},
        {"C40", "Wilson-analog correction sums mod p^2",
         "sum_a w_a a^{t-1} in even and odd exponent forms", 7, false, false, eval_c40},
        {"C41", "second-order correction expansion",
         "z_a = a(q_a + AG) + a p (1 + AG)(q_a + AG) mod p^2", 7, false, false, eval_c41},
        {"C42", "cubic identity specialization at order p-1",
         "cubic(p-1) = sum_i B_i/i bconv(p-1-i) + 6 B_{p-1}/(p-1) A_{2,p-1} - 9/4 B_{p-3}/(p-3) "
         "mod p",
         11, false, false, eval_c42},
        {"C43", "cubic residue from the factorial expansion",
         "cubic(p-1) equals the third digit of the factorial-based combination, mod p", 11, false,
         false, eval_c43},
        {"C44", "depth-2 MHS at order p-1 mod p^3",
         "A_{2,p-1} = H_{p-1}/p and = -p(B_{2p-4}/(2p-4) - 2 B_{p-3}/(p-3)) mod p^3", 11, false,
         false, eval_c44},
        {"C45", "harmonic shift congruences",
         "reflection formulas for harmonic numbers across p, mod p^2 and mod p", 7, false, false,
         eval_c45},
        {"C46", "binomial shift congruence",
         "C(2(p-1)-2n, s) = C(p-1-2n, s)(1 + s/(2n+1)) mod p over the full window", 7, false,
         false, eval_c46},
        {"C47", "Kummer baseline",
         "B_{p-1+t}/(p-1+t) = B_t/t mod p for even t in [2, p-3]", 5, false, false, eval_c47},
        {"C48", "Wolstenholme valuations",
         "H_{p-1} = 0 mod p^2 and H_{p-1,2} = 0 mod p for p >= 5", 5, false, false, eval_c48},
        {"C49", "floor-weighted residue representation (exploratory)",
         "B_i/i as a double sum weighted by floor(b^{-1} a / p); bracket reading is a guess", 5,
         false, true, eval_c49},
        {"C50", "Newton symmetric-function verification",
         "power sums and elementary symmetric functions of the Teichmuller roots vanish mod p^K",
         5, false, false, eval_c50},
    };
    return catalog;
}

const CheckDefinition* find_check(const std::string& id) {
    for (const CheckDefinition& c : check_catalog())
        if (c.id == id) return &c;
    return nullptr;
}

std::vector<CongruenceReport> run_check(const std::string& id, const PrimeContext& ctx,
                                        const std::optional<std::string>& params_filter,
                                        const SweepOptions& opts) {
    const CheckDefinition* def = find_check(id);
    if (!def) throw Error("unknown check id: " + id);
    std::vector<CongruenceReport> out;
    SweepOptions o = opts;
    o.only_params = params_filter;
    if (def->global) {
        def->eval_global(ctx.bern(), o, out);
    } else if (ctx.p() < def->min_prime) {
        checks::emit_skip(out, def->id.c_str(), ctx.p(), params_filter.value_or("-"),
                          "prime below hypothesis");
    } else {
        def->eval(ctx, o, out);
    }
    if (out.empty() && params_filter)
        checks::emit_skip(out, def->id.c_str(), ctx.p(), *params_filter,
                          "parameters outside the hypothesis domain");
    return out;
}

long required_bernoulli_index(long p_max, long max_identity_order) {
    return std::max(5 * (p_max - 1) + 2, max_identity_order + 2);
}

namespace {

void accumulate(SuiteSummary& s, const CongruenceReport& r) {
    auto& row = s.by_check[r.id];
    switch (r.status) {
    case CheckStatus::pass:
        ++row[0];
        ++s.passed;
        break;
    case CheckStatus::fail:
        ++row[1];
        ++s.failed;
        break;
    case CheckStatus::skipped_hypothesis:
        ++row[2];
        ++s.skipped;
        break;
    case CheckStatus::exploratory:
        ++row[3];
        ++s.exploratory;
        break;
    }
}

// Intersect the per-record passing reading sets for the main truncated
// congruence; returns the first reading (in documented order) that passed
// everywhere, or empty.
std::string resolve_main_congruence_reading(std::vector<CongruenceReport>& records) {
    static const char* order[] = {"A", "B", "C", "D"};
    std::array<bool, 4> everywhere{true, true, true, true};
    bool saw_any = false;
    for (const CongruenceReport& r : records) {
        if (r.id != "C25" || r.status == CheckStatus::skipped_hypothesis) continue;
        saw_any = true;
        auto pos = r.note.find("readings=");
        std::string set = pos == std::string::npos ? "" : r.note.substr(pos + 9);
        for (int i = 0; i < 4; ++i)
            if (set.find(order[i]) == std::string::npos) everywhere[static_cast<size_t>(i)] = false;
    }
    if (!saw_any) return "";
    std::string winner;
    for (int i = 0; i < 4; ++i)
        if (everywhere[static_cast<size_t>(i)]) {
            winner = order[i];
            break;
        }
    if (winner.empty()) {
        // no single reading satisfies every tested case: the congruence is
        // not verified as stated, so the records may not stand as passes
        for (CongruenceReport& r : records)
            if (r.id == "C25" && r.status == CheckStatus::pass) {
                r.status = CheckStatus::fail;
                r.note += ";no reading passed across the whole sweep";
            }
    }
    return winner;
}

} // namespace

SuiteResult run_suite(long p_min, long p_max, int K, const std::set<std::string>& check_ids,
                      const SweepOptions& opts, std::shared_ptr<const BernoulliCache> cache,
                      int workers) {
    SuiteResult result;
    result.meta.version = "1.0.0";
    result.meta.p_min = p_min;
    result.meta.p_max = p_max;
    result.meta.precision = K;

    auto enabled = [&](const std::string& id) {
        return check_ids.empty() || check_ids.count(id) > 0;
    };
    if (cache->max_index() < required_bernoulli_index(p_max, opts.max_identity_order))
        throw Error("Bernoulli cache too small for the requested prime window");

    // Prime-independent checks run once, up front.
    for (const CheckDefinition& def : check_catalog()) {
        if (!def.global || !enabled(def.id)) continue;
        def.eval_global(*cache, opts, result.records);
    }
    if (enabled("C09")) {
        result.meta.cubic_identity_start =
            checks::cubic_identity_start(*cache, opts.max_identity_order);
        result.meta.assumptions.push_back(
            "cubic identity verified from even order " +
            std::to_string(result.meta.cubic_identity_start) + " through " +
            std::to_string(opts.max_identity_order));
    }

    std::vector<long> primes = primes_in(p_min, p_max);
    std::vector<std::vector<CongruenceReport>> per_prime(primes.size());

    unsigned hw = std::thread::hardware_concurrency();
    int nworkers = workers > 0 ? workers : (hw ? static_cast<int>(hw) : 1);
    nworkers = std::min<int>(nworkers, static_cast<int>(primes.size()) + 1);
    nworkers = std::max(nworkers, 1);

    std::atomic<size_t> next{0};
    auto work = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= primes.size()) break;
            PrimeContext ctx(primes[i], K, cache);
            std::vector<CongruenceReport>& sink = per_prime[i];
            for (const CheckDefinition& def : check_catalog()) {
                if (def.global || !enabled(def.id)) continue;
                if (ctx.p() < def.min_prime) {
                    checks::emit_skip(sink, def.id.c_str(), ctx.p(), "-", "prime below hypothesis");
                    continue;
                }
                def.eval(ctx, opts, sink);
            }
        }
    };
    if (nworkers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(nworkers));
        for (int i = 0; i < nworkers; ++i) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }
    for (auto& batch : per_prime)
        for (auto& r : batch) result.records.push_back(std::move(r));

    // Normalized ordering: by check id, then prime; parameter order within a
    // group is the evaluator's deterministic enumeration order.
    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const CongruenceReport& a, const CongruenceReport& b) {
                         if (a.id != b.id) return a.id < b.id;
                         return a.prime < b.prime;
                     });

    result.meta.main_congruence_reading = resolve_main_congruence_reading(result.records);
    if (enabled("C25") && !result.meta.main_congruence_reading.empty())
        result.meta.assumptions.push_back("main truncated congruence verified under reading " +
                                          result.meta.main_congruence_reading);
    result.meta.assumptions.push_back(
        "row identification for the decomposition checks: row 1 = harmonic-weighted binomial "
        "difference, row 2 = gap-harmonic-weighted binomial convolution including the 1/p term, "
        "row 3 = depth-2 MHS terms");

    for (const CongruenceReport& r : result.records) accumulate(result.summary, r);
    return result;
}

} // namespace clab
