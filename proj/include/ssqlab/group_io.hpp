#pragma once

// The group file format:
//
//   name: <label>
//   degree: <n>
//   gen: <disjoint cycle notation>
//   gen: ...
//
// '#' starts a comment, blank lines are ignored, and several records may
// appear in one file separated by blank lines. The writer emits exactly this
// shape, so write -> read -> write round-trips byte for byte.

#include "ssqlab/group.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace ssqlab {

namespace detail {

inline std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace detail

// Parses every record in the stream. Errors carry 1-based line numbers.
inline std::vector<GroupSpec> read_group_specs(std::istream& in,
                                               const std::string& origin = "<input>") {
    std::vector<GroupSpec> out;
    std::string line;
    std::size_t lineno = 0;

    struct Pending {
        std::string name;
        long degree = -1;
        std::vector<std::pair<std::string, std::size_t>> gen_texts; // text, line
        bool started = false;
    } cur;

    auto fail = [&](std::size_t ln, const std::string& msg) {
        throw Error(origin + ":" + std::to_string(ln) + ": " + msg);
    };
    auto flush = [&](std::size_t ln) {
        if (!cur.started) return;
        if (cur.degree < 0) fail(ln, "record '" + cur.name + "' has no degree line");
        if (cur.gen_texts.empty()) fail(ln, "record '" + cur.name + "' has no generators");
        GroupSpec spec;
        spec.name = cur.name;
        spec.degree = static_cast<std::size_t>(cur.degree);
        for (const auto& [text, gln] : cur.gen_texts) {
            try {
                spec.generators.push_back(parse_permutation(text, spec.degree));
            } catch (const Error& e) {
                fail(gln, e.what());
            }
        }
        out.push_back(std::move(spec));
        cur = Pending{};
    };

    while (std::getline(in, line)) {
        ++lineno;
        std::string s = detail::strip(line);
        if (auto hash = s.find('#'); hash != std::string::npos) s = detail::strip(s.substr(0, hash));
        if (s.empty()) {
            // blank line: record separator once the current record is complete
            if (cur.started && cur.degree >= 0 && !cur.gen_texts.empty()) flush(lineno);
            continue;
        }
        auto colon = s.find(':');
        if (colon == std::string::npos) fail(lineno, "expected 'key: value', got '" + s + "'");
        std::string key = detail::strip(s.substr(0, colon));
        std::string value = detail::strip(s.substr(colon + 1));
        if (key == "name") {
            if (cur.started) flush(lineno); // implicit separator
            if (value.empty()) fail(lineno, "empty group name");
            cur.started = true;
            cur.name = value;
        } else if (key == "degree") {
            if (!cur.started) fail(lineno, "degree before name");
            try {
                cur.degree = std::stol(value);
            } catch (...) {
                fail(lineno, "bad degree '" + value + "'");
            }
            if (cur.degree < 1) fail(lineno, "degree must be positive");
        } else if (key == "gen") {
            if (!cur.started) fail(lineno, "gen before name");
            if (cur.degree < 0) fail(lineno, "gen before degree");
            cur.gen_texts.emplace_back(value, lineno);
        } else {
            fail(lineno, "unknown key '" + key + "'");
        }
    }
    flush(lineno + 1);
    return out;
}

inline std::vector<GroupSpec> read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open group file '" + path + "'");
    return read_group_specs(in, path);
}

inline void write_group_spec(std::ostream& out, const GroupSpec& spec) {
    out << "name: " << spec.name << "\n";
    out << "degree: " << spec.degree << "\n";
    for (const auto& g : spec.generators) out << "gen: " << format_permutation(g) << "\n";
}

inline std::string format_group_specs(const std::vector<GroupSpec>& specs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (i) out << "\n";
        write_group_spec(out, specs[i]);
    }
    return out.str();
}

} // namespace ssqlab
