// Command-line front end: `verify` runs the congruence suite over a prime
// window and writes a report; `tables` dumps per-prime quotient/residue
// tables; `bernoulli` prints exact Bernoulli numbers.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "clab/report.hpp"

namespace {

using namespace clab;

struct CliConfig {
    std::string primes = "11..97";
    int precision = 5;
    std::string checks = "all";
    long max_two_n = 0;
    long max_identity_order = 40;
    std::string format = "json";
    std::string out;
    int workers = 0;
    std::string cache;
};

int parse_prime_window(const std::string& s, long& lo, long& hi) {
    auto pos = s.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stol(s);
        } else {
            lo = std::stol(s.substr(0, pos));
            hi = std::stol(s.substr(pos + 2));
        }
    } catch (const std::exception&) {
        return -1;
    }
    if (lo < 5 || hi < lo) return -1;
    return 0;
}

std::set<std::string> parse_check_list(const std::string& s) {
    std::set<std::string> ids;
    if (s == "all" || s.empty()) return ids;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (!find_check(tok)) throw CLI::ValidationError("--checks", "unknown check id: " + tok);
        ids.insert(tok);
    }
    return ids;
}

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::json;
    if (s == "csv") return ReportFormat::csv;
    if (s == "text") return ReportFormat::text;
    throw CLI::ValidationError("--format", "expected json, csv or text");
}

// File values fill in any option the command line left untouched.
void apply_config_file(const std::string& path, CLI::App* cmd, CliConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    nlohmann::json j;
    in >> j;
    auto unset = [&](const char* name) {
        CLI::Option* o = cmd->get_option_no_throw(name);
        return o && o->count() == 0;
    };
    if (j.contains("primes") && unset("--primes")) cfg.primes = j["primes"].get<std::string>();
    if (j.contains("precision") && unset("--precision")) cfg.precision = j["precision"].get<int>();
    if (j.contains("checks") && unset("--checks")) {
        if (j["checks"].is_array()) {
            std::string joined;
            for (const auto& c : j["checks"]) {
                if (!joined.empty()) joined += ",";
                joined += c.get<std::string>();
            }
            cfg.checks = joined;
        } else {
            cfg.checks = j["checks"].get<std::string>();
        }
    }
    if (j.contains("max_2n") && unset("--max-2n")) cfg.max_two_n = j["max_2n"].get<long>();
    if (j.contains("max_identity_order"))
        cfg.max_identity_order = j["max_identity_order"].get<long>();
    if (j.contains("format") && unset("--format")) cfg.format = j["format"].get<std::string>();
    if (j.contains("out") && unset("--out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("workers") && unset("--workers")) cfg.workers = j["workers"].get<int>();
    if (j.contains("cache") && unset("--cache")) cfg.cache = j["cache"].get<std::string>();
}

std::shared_ptr<const BernoulliCache> build_cache(long needed, const std::string& path) {
    if (!path.empty()) {
        std::ifstream in(path);
        if (in) {
            try {
                return std::make_shared<BernoulliCache>(BernoulliCache::load(in, needed));
            } catch (const Error&) {
                // stale or short cache file: rebuild below and overwrite
            }
        }
    }
    auto cache = std::make_shared<BernoulliCache>(needed);
    if (!path.empty()) {
        std::ofstream out(path);
        if (out) cache->dump(out);
    }
    return cache;
}

int run_verify(const CliConfig& cfg) {
    long p_lo = 0, p_hi = 0;
    if (parse_prime_window(cfg.primes, p_lo, p_hi) != 0) {
        std::cerr << "error: invalid prime window '" << cfg.primes << "'\n";
        return 2;
    }
    if (cfg.precision < 1 || cfg.precision > 8) {
        std::cerr << "error: precision must be in [1, 8]\n";
        return 2;
    }
    std::set<std::string> ids;
    ReportFormat fmt;
    try {
        ids = parse_check_list(cfg.checks);
        fmt = parse_format(cfg.format);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    SweepOptions opts;
    opts.max_two_n = cfg.max_two_n;
    opts.max_identity_order = cfg.max_identity_order;

    std::string cache_path = cfg.cache;
    if (const char* env = std::getenv("CONGRUENCE_LAB_CACHE")) cache_path = env;

    auto cache = build_cache(required_bernoulli_index(p_hi, cfg.max_identity_order), cache_path);
    SuiteResult result = run_suite(p_lo, p_hi, cfg.precision, ids, opts, cache, cfg.workers);

    if (cfg.out.empty()) {
        write_report(std::cout, result, fmt);
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file " << cfg.out << "\n";
            return 3;
        }
        write_report(out, result, fmt);
        if (!out.good()) {
            std::cerr << "error: failed writing " << cfg.out << "\n";
            return 3;
        }
    }
    std::cerr << "pass=" << result.summary.passed << " fail=" << result.summary.failed
              << " skipped=" << result.summary.skipped
              << " exploratory=" << result.summary.exploratory << "\n";
    return result.summary.failed == 0 ? 0 : 1;
}

int run_tables(long p, int precision, const std::string& format, const std::string& out_path) {
    if (!is_prime(p)) {
        std::cerr << "error: " << p << " is not prime\n";
        return 2;
    }
    ReportFormat fmt;
    try {
        fmt = parse_format(format);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto cache = std::make_shared<BernoulliCache>(2 * (p - 1) + 2);
    PrimeContext ctx(p, precision, cache);
    std::ostringstream os;
    if (fmt == ReportFormat::json) {
        nlohmann::ordered_json j;
        j["p"] = p;
        j["wilson_quotient"] = ctx.quot().wilson.get_str();
        nlohmann::ordered_json q = nlohmann::ordered_json::array();
        for (long a = 1; a < p; ++a) q.push_back(ctx.quot().at(a).get_str());
        j["fermat_quotients"] = q;
        nlohmann::ordered_json em;
        for (long i = 2; i <= p - 3; i += 2) em[std::to_string(i)] = ctx.em().at(i);
        j["em_residues"] = em;
        nlohmann::ordered_json st = nlohmann::ordered_json::array();
        for (long k = 1; k <= p; ++k) st.push_back(ctx.stirling().at(k).get_str());
        j["stirling_row"] = st;
        os << j.dump(2) << '\n';
    } else if (fmt == ReportFormat::csv) {
        os << "table,key,value\n";
        os << "wilson,-," << ctx.quot().wilson.get_str() << '\n';
        for (long a = 1; a < p; ++a)
            os << "fermat," << a << ',' << ctx.quot().at(a).get_str() << '\n';
        for (long i = 2; i <= p - 3; i += 2) os << "em," << i << ',' << ctx.em().at(i) << '\n';
        for (long k = 1; k <= p; ++k)
            os << "stirling," << k << ',' << ctx.stirling().at(k).get_str() << '\n';
    } else {
        os << "p = " << p << '\n';
        os << "wilson quotient = " << ctx.quot().wilson.get_str() << '\n';
        for (long a = 1; a < p; ++a) os << "q_" << a << " = " << ctx.quot().at(a).get_str() << '\n';
        for (long i = 2; i <= p - 3; i += 2) os << "em_" << i << " = " << ctx.em().at(i) << '\n';
        for (long k = 1; k <= p; ++k)
            os << "stirling_" << k << " = " << ctx.stirling().at(k).get_str() << '\n';
    }
    if (out_path.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file " << out_path << "\n";
            return 3;
        }
        out << os.str();
    }
    return 0;
}

int run_bernoulli(long lo, long hi) {
    if (lo < 0) {
        std::cerr << "error: negative index\n";
        return 2;
    }
    if (hi < lo) hi = lo;
    BernoulliCache cache(hi);
    for (long n = lo; n <= hi; ++n) {
        std::cout << "B_" << n << " = " << to_string(cache.bernoulli(n));
        if (n >= 1) std::cout << "   B_" << n << "/" << n << " = " << to_string(cache.divided(n));
        std::cout << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"congruence-lab: exact verification of Bernoulli / Fermat-quotient congruences"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string config_path;

    CLI::App* verify = app.add_subcommand("verify", "run the congruence suite");
    verify->add_option("--primes", cfg.primes, "prime window A..B (default 11..97)");
    verify->add_option("--precision", cfg.precision, "working precision K in [1, 8]");
    verify->add_option("--checks", cfg.checks, "comma-separated check ids, or 'all'");
    verify->add_option("--max-2n", cfg.max_two_n, "cap parameter sweeps at this 2n (0 = none)");
    verify->add_option("--format", cfg.format, "json | csv | text");
    verify->add_option("--out", cfg.out, "output path (default stdout)");
    verify->add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
    verify->add_option("--cache", cfg.cache,
                       "Bernoulli cache file (env CONGRUENCE_LAB_CACHE overrides)");
    verify->add_option("--config", config_path, "JSON config file; flags override file values");

    long tables_p = 0;
    int tables_k = 5;
    std::string tables_format = "text", tables_out;
    CLI::App* tables = app.add_subcommand("tables", "dump per-prime tables");
    tables->add_option("prime", tables_p, "prime to tabulate")->required();
    tables->add_option("--precision", tables_k, "working precision K");
    tables->add_option("--format", tables_format, "json | csv | text");
    tables->add_option("--out", tables_out, "output path (default stdout)");

    long bern_lo = 0, bern_hi = -1;
    CLI::App* bern = app.add_subcommand("bernoulli", "print exact Bernoulli numbers");
    bern->add_option("from", bern_lo, "first index")->required();
    bern->add_option("to", bern_hi, "last index (defaults to first)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) {
            if (!config_path.empty()) apply_config_file(config_path, verify, cfg);
            return run_verify(cfg);
        }
        if (tables->parsed()) return run_tables(tables_p, tables_k, tables_format, tables_out);
        if (bern->parsed()) return run_bernoulli(bern_lo, bern_hi < 0 ? bern_lo : bern_hi);
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
