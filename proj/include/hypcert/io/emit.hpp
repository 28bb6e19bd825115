#pragma once

// Report rendering. JSON is an array of objects with a fixed key set
// {check_id, p, l, j0, z0, branch, lhs, rhs, verdict, skip_reason, ms};
// CSV carries the same columns in that order with a header row. Timings are
// zeroed unless explicitly requested so that identical runs emit identical
// bytes.

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypcert/errors.hpp"
#include "hypcert/verify/report.hpp"

namespace hypcert::io {

using verify::CongruenceReport;
using verify::Verdict;

enum class OutputFormat { Json, Csv, Human };

inline OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "human") return OutputFormat::Human;
    throw usage_error("unknown output format: " + name);
}

namespace detail {

inline nlohmann::ordered_json to_json(const CongruenceReport& r, bool with_timings) {
    nlohmann::ordered_json j;
    j["check_id"] = r.check_id;
    j["p"] = r.p;
    j["l"] = r.l;
    j["j0"] = r.j0 ? nlohmann::ordered_json(*r.j0) : nlohmann::ordered_json(nullptr);
    j["z0"] = r.z0 ? nlohmann::ordered_json(*r.z0) : nlohmann::ordered_json(nullptr);
    j["branch"] = r.branch ? nlohmann::ordered_json(*r.branch) : nlohmann::ordered_json(nullptr);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["verdict"] = verify::to_string(r.verdict);
    j["skip_reason"] =
        r.skip_reason ? nlohmann::ordered_json(*r.skip_reason) : nlohmann::ordered_json(nullptr);
    j["ms"] = with_timings ? r.ms : 0;
    return j;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace detail

inline std::string render_json(const std::vector<CongruenceReport>& reports,
                               bool with_timings = false) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(detail::to_json(r, with_timings));
    return arr.dump(2) + "\n";
}

inline std::string render_csv(const std::vector<CongruenceReport>& reports,
                              bool with_timings = false) {
    std::ostringstream os;
    os << "check_id,p,l,j0,z0,branch,lhs,rhs,verdict,skip_reason,ms\n";
    for (const auto& r : reports) {
        os << detail::csv_escape(r.check_id) << ',' << r.p << ',' << r.l << ','
           << detail::csv_escape(r.j0.value_or("")) << ',' << detail::csv_escape(r.z0.value_or(""))
           << ',' << detail::csv_escape(r.branch.value_or("")) << ',' << detail::csv_escape(r.lhs)
           << ',' << detail::csv_escape(r.rhs) << ',' << verify::to_string(r.verdict) << ','
           << detail::csv_escape(r.skip_reason.value_or("")) << ','
           << (with_timings ? r.ms : 0) << '\n';
    }
    return os.str();
}

inline std::string render_human(const std::vector<CongruenceReport>& reports,
                                bool with_timings = false) {
    struct Col {
        const char* name;
        size_t width;
    };
    auto field = [&](const CongruenceReport& r, int c) -> std::string {
        switch (c) {
            case 0: return r.check_id;
            case 1: return std::to_string(r.p);
            case 2: return std::to_string(r.l);
            case 3: return r.j0.value_or("-");
            case 4: return r.z0.value_or("-");
            case 5: return r.branch.value_or("-");
            case 6: return r.lhs.empty() ? "-" : r.lhs;
            case 7: return r.rhs.empty() ? "-" : r.rhs;
            case 8: return verify::to_string(r.verdict);
            default: return r.skip_reason.value_or("");
        }
    };
    Col cols[] = {{"check", 5}, {"p", 1},   {"l", 1},       {"j0", 2},     {"z0", 2},
                  {"branch", 6}, {"lhs", 3}, {"rhs", 3},     {"verdict", 7}, {"reason", 6}};
    for (const auto& r : reports)
        for (int c = 0; c < 10; ++c) cols[c].width = std::max(cols[c].width, field(r, c).size());

    std::ostringstream os;
    for (int c = 0; c < 10; ++c)
        os << std::left << std::setw(static_cast<int>(cols[c].width) + 2) << cols[c].name;
    os << '\n';
    for (const auto& r : reports) {
        for (int c = 0; c < 10; ++c)
            os << std::left << std::setw(static_cast<int>(cols[c].width) + 2) << field(r, c);
        if (with_timings) os << r.ms << "ms";
        if (!r.note.empty()) os << "  [" << r.note << "]";
        os << '\n';
    }
    return os.str();
}

inline std::string render_reports(const std::vector<CongruenceReport>& reports, OutputFormat f,
                                  bool with_timings = false) {
    switch (f) {
        case OutputFormat::Json: return render_json(reports, with_timings);
        case OutputFormat::Csv: return render_csv(reports, with_timings);
        default: return render_human(reports, with_timings);
    }
}

inline void emit_report(const std::vector<CongruenceReport>& reports, OutputFormat f,
                        std::ostream& sink, bool with_timings = false) {
    sink << render_reports(reports, f, with_timings);
    sink.flush();
}

// Inverse of render_json, used for round-trip checks and downstream tools.
inline std::vector<CongruenceReport> parse_json_reports(const std::string& text) {
    auto arr = nlohmann::json::parse(text);
    std::vector<CongruenceReport> out;
    for (const auto& j : arr) {
        CongruenceReport r;
        r.check_id = j.at("check_id").get<std::string>();
        r.p = j.at("p").get<uint64_t>();
        r.l = j.at("l").get<uint32_t>();
        if (!j.at("j0").is_null()) r.j0 = j.at("j0").get<std::string>();
        if (!j.at("z0").is_null()) r.z0 = j.at("z0").get<std::string>();
        if (!j.at("branch").is_null()) r.branch = j.at("branch").get<std::string>();
        r.lhs = j.at("lhs").get<std::string>();
        r.rhs = j.at("rhs").get<std::string>();
        std::string v = j.at("verdict").get<std::string>();
        r.verdict = v == "pass" ? Verdict::Pass : (v == "fail" ? Verdict::Fail : Verdict::Skip);
        if (!j.at("skip_reason").is_null()) r.skip_reason = j.at("skip_reason").get<std::string>();
        r.ms = j.at("ms").get<int64_t>();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace hypcert::io
