#include "clab/report.hpp"

#include <ostream>

#include <json.hpp>

namespace clab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json record_json(const CongruenceReport& r) {
    ordered_json j;
    j["id"] = r.id;
    j["p"] = r.prime;
    j["params"] = r.params;
    j["modulus"] = r.modulus;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["status"] = status_name(r.status);
    j["note"] = r.note;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void write_json(std::ostream& os, const SuiteResult& result) {
    ordered_json j;
    ordered_json meta;
    meta["p_range"] = {result.meta.p_min, result.meta.p_max};
    meta["K"] = result.meta.precision;
    meta["version"] = result.meta.version;
    if (result.meta.cubic_identity_start > 0)
        meta["cubic_identity_start"] = result.meta.cubic_identity_start;
    if (!result.meta.main_congruence_reading.empty())
        meta["winning_reading"] = result.meta.main_congruence_reading;
    meta["assumptions"] = result.meta.assumptions;
    j["meta"] = meta;
    ordered_json records = ordered_json::array();
    for (const CongruenceReport& r : result.records) records.push_back(record_json(r));
    j["records"] = records;
    ordered_json summary;
    for (const auto& [id, row] : result.summary.by_check) {
        ordered_json s;
        s["pass"] = row[0];
        s["fail"] = row[1];
        s["skipped"] = row[2];
        s["exploratory"] = row[3];
        summary[id] = s;
    }
    ordered_json totals;
    totals["pass"] = result.summary.passed;
    totals["fail"] = result.summary.failed;
    totals["skipped"] = result.summary.skipped;
    totals["exploratory"] = result.summary.exploratory;
    j["summary"] = {{"per_check", summary}, {"totals", totals}};
    os << j.dump(2) << '\n';
}

void write_csv(std::ostream& os, const SuiteResult& result) {
    os << "id,p,params,modulus,lhs,rhs,status,note\n";
    for (const CongruenceReport& r : result.records) {
        os << r.id << ',' << r.prime << ',' << csv_escape(r.params) << ',' << r.modulus << ','
           << r.lhs << ',' << r.rhs << ',' << status_name(r.status) << ',' << csv_escape(r.note)
           << '\n';
    }
}

void write_text(std::ostream& os, const SuiteResult& result) {
    os << "primes [" << result.meta.p_min << ", " << result.meta.p_max
       << "], K=" << result.meta.precision << ", version " << result.meta.version << '\n';
    if (result.meta.cubic_identity_start > 0)
        os << "cubic identity start: " << result.meta.cubic_identity_start << '\n';
    if (!result.meta.main_congruence_reading.empty())
        os << "winning reading: " << result.meta.main_congruence_reading << '\n';
    for (const std::string& a : result.meta.assumptions) os << "note: " << a << '\n';
    os << '\n';
    for (const CongruenceReport& r : result.records) {
        os << r.id << " p=" << r.prime << ' ' << r.params << " [" << r.modulus
           << "] lhs=" << r.lhs << " rhs=" << r.rhs << ' ' << status_name(r.status);
        if (!r.note.empty()) os << " (" << r.note << ')';
        os << '\n';
    }
    os << '\n';
    for (const auto& [id, row] : result.summary.by_check)
        os << id << ": pass=" << row[0] << " fail=" << row[1] << " skipped=" << row[2]
           << " exploratory=" << row[3] << '\n';
    os << "totals: pass=" << result.summary.passed << " fail=" << result.summary.failed
       << " skipped=" << result.summary.skipped << " exploratory=" << result.summary.exploratory
       << '\n';
}

void write_report(std::ostream& os, const SuiteResult& result, ReportFormat format) {
    switch (format) {
    case ReportFormat::json: write_json(os, result); break;
    case ReportFormat::csv: write_csv(os, result); break;
    case ReportFormat::text: write_text(os, result); break;
    }
}

} // namespace clab
