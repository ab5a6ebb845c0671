// Machine-readable verification reports: per-check records with replayable
// witnesses, emitted as JSON or markdown.  Given identical inputs and seed the
// JSON output is byte-stable.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "reclift/linalg.hpp"

namespace reclift {

inline constexpr const char* kToolVersion = "0.1.0";

/// A concrete failure witness: enough matrix data to replay the failing check.
struct Witness {
    std::string description;
    std::vector<std::pair<std::string, Mat>> matrices;
    std::vector<std::pair<std::string, std::string>> facts;
};

struct CheckRecord {
    std::string name;
    std::string mode;   // "", "fast", "thorough"
    std::string scope;  // what was quantified over
    int samples = 0;
    bool pass = true;
    std::vector<Witness> witnesses;
    std::vector<std::string> notes;

    void fail(Witness w) {
        pass = false;
        witnesses.push_back(std::move(w));
    }
};

struct Report {
    std::string tool_version = kToolVersion;
    std::string input_digest;
    uint64_t seed = 0;
    bool degenerate = false;
    std::vector<CheckRecord> checks;

    std::string verdict() const {
        if (checks.empty()) return "no-checks";
        for (const auto& c : checks)
            if (!c.pass) return "fail";
        return "pass";
    }

    bool all_pass() const { return verdict() == "pass"; }
};

/// FNV-1a digest of the canonical input text.
inline std::string fnv1a_digest(const std::string& text) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace detail {

inline nlohmann::ordered_json mat_to_json(const Mat& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(row);
    }
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["p"] = m.modulus();
    j["entries"] = rows;
    return j;
}

}  // namespace detail

inline std::string emit_json(const Report& r) {
    nlohmann::ordered_json j;
    j["version"] = r.tool_version;
    j["input-digest"] = r.input_digest;
    j["seed"] = r.seed;
    j["degenerate"] = r.degenerate;
    j["verdict"] = r.verdict();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["mode"] = c.mode;
        jc["scope"] = c.scope;
        jc["samples"] = c.samples;
        jc["pass"] = c.pass;
        nlohmann::ordered_json ws = nlohmann::ordered_json::array();
        for (const auto& w : c.witnesses) {
            nlohmann::ordered_json jw;
            jw["description"] = w.description;
            nlohmann::ordered_json ms = nlohmann::ordered_json::array();
            for (const auto& [name, m] : w.matrices) {
                nlohmann::ordered_json jm;
                jm["name"] = name;
                jm["matrix"] = detail::mat_to_json(m);
                ms.push_back(jm);
            }
            jw["matrices"] = ms;
            nlohmann::ordered_json fs = nlohmann::ordered_json::array();
            for (const auto& [k, v] : w.facts) {
                nlohmann::ordered_json jf;
                jf["key"] = k;
                jf["value"] = v;
                fs.push_back(jf);
            }
            jw["facts"] = fs;
            ws.push_back(jw);
        }
        jc["witnesses"] = ws;
        jc["notes"] = c.notes;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

inline std::string emit_markdown(const Report& r) {
    std::string out;
    out += "# verification report\n\n";
    out += "- version: " + r.tool_version + "\n";
    out += "- input digest: `" + r.input_digest + "`\n";
    out += "- seed: " + std::to_string(r.seed) + "\n";
    if (r.degenerate) out += "- **degenerate instance**\n";
    out += "- verdict: **" + r.verdict() + "**\n\n";
    out += "| check | mode | samples | result |\n|---|---|---|---|\n";
    for (const auto& c : r.checks)
        out += "| " + c.name + " | " + (c.mode.empty() ? "-" : c.mode) + " | " +
               std::to_string(c.samples) + " | " + (c.pass ? "pass" : "FAIL") + " |\n";
    out += "\n";
    for (const auto& c : r.checks) {
        if (!c.notes.empty() || !c.witnesses.empty()) {
            out += "## " + c.name + "\n\n";
            if (!c.scope.empty()) out += "scope: " + c.scope + "\n\n";
            for (const auto& n : c.notes) out += "- " + n + "\n";
            for (const auto& w : c.witnesses) {
                out += "- witness: " + w.description + "\n";
                for (const auto& [k, v] : w.facts) out += "  - " + k + ": " + v + "\n";
                for (const auto& [name, m] : w.matrices)
                    out += "  - " + name + " = " + m.to_string() + "\n";
            }
            out += "\n";
        }
    }
    return out;
}

}  // namespace reclift
