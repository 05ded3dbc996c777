#pragma once

// Report records and their NDJSON serialization. Key order is fixed and no
// record contains timestamps or floats, so equal inputs produce equal bytes.

#include "ssqlab/series.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace ssqlab {

using Json = nlohmann::ordered_json;

inline Json subgroup_json(const Subgroup& s) {
    Json j;
    j["order"] = s.order();
    j["generators"] = s.generator_strings();
    return j;
}

inline Json witness_json(const SSWitness& w) {
    Json j;
    j["b"] = subgroup_json(w.subgroup_b);
    Json sylows = Json::array();
    for (const auto& [p, syl] : w.checked_sylows) {
        Json e;
        e["p"] = p;
        e["order"] = syl.order();
        e["generators"] = syl.generator_strings();
        sylows.push_back(std::move(e));
    }
    j["checked_sylows"] = std::move(sylows);
    return j;
}

inline Json certificate_json(const SeriesCertificate& cert) {
    Json j;
    Json chain = Json::array();
    for (const Subgroup& t : cert.series.chain) chain.push_back(subgroup_json(t));
    j["chain"] = std::move(chain);
    Json evidence = Json::array();
    for (std::size_t i = 0; i < cert.evidence.size(); ++i) {
        const TermEvidence& ev = cert.evidence[i];
        Json e;
        e["term"] = i + 1;
        e["ss_witness"] = ev.ss_witness ? witness_json(*ev.ss_witness) : Json(nullptr);
        if (ev.subnormal_chain) {
            Json c = Json::array();
            for (const Subgroup& s : *ev.subnormal_chain) c.push_back(subgroup_json(s));
            e["subnormal_chain"] = std::move(c);
        } else {
            e["subnormal_chain"] = nullptr;
        }
        evidence.push_back(std::move(e));
    }
    j["evidence"] = std::move(evidence);
    return j;
}

struct ReportRecord {
    std::string suite;
    std::string group;
    std::size_t order = 0;
    bool solvable = false;
    bool supersolvable = false;
    bool nilpotent = false;
    // predicate description -> certificate (null when the search found none)
    std::vector<std::pair<std::string, std::optional<SeriesCertificate>>> series_found;
    bool pass = true;
    std::string note;    // e.g. why a group was skipped; empty when unused
    Json counterexample; // null on pass, concrete payload on fail
};

inline Json to_json(const ReportRecord& r) {
    Json j;
    j["record"] = "result";
    j["suite"] = r.suite;
    j["group"] = r.group;
    j["order"] = r.order;
    j["solvable"] = r.solvable;
    j["supersolvable"] = r.supersolvable;
    j["nilpotent"] = r.nilpotent;
    Json sf = Json::object();
    for (const auto& [label, cert] : r.series_found)
        sf[label] = cert ? certificate_json(*cert) : Json(nullptr);
    j["series_found"] = std::move(sf);
    j["outcome"] = r.pass ? "pass" : "fail";
    j["note"] = r.note;
    j["counterexample"] = r.counterexample.is_null() ? Json(nullptr) : r.counterexample;
    return j;
}

inline void emit_report(const std::vector<ReportRecord>& records, std::ostream& out) {
    if (records.empty()) return; // no results, no file contents
    Json header;
    header["record"] = "header";
    header["schema"] = "ssqlab-report";
    header["version"] = 1;
    header["results"] = records.size();
    out << header.dump() << "\n";
    for (const auto& r : records) out << to_json(r).dump() << "\n";
}

inline void emit_report(const std::vector<ReportRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary); // binary: identical bytes everywhere
    if (!out) throw Error("cannot write report to '" + path + "'");
    emit_report(records, out);
}

} // namespace ssqlab
