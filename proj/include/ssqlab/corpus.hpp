#pragma once

// Built-in group corpus and file ingestion. Every construction carries its
// documented order, asserted at materialization -- a wrong generator set is a
// hard failure, not a silently corrupted corpus.

#include "ssqlab/group.hpp"
#include "ssqlab/group_io.hpp"

#include <cstdlib>
#include <string>
#include <vector>

namespace ssqlab {

struct CorpusEntry {
    std::string name;
    std::string source; // "builtin" or the originating file path
    GroupPtr group;
};

namespace detail {

struct BuiltinSpec {
    std::string name;
    std::size_t degree;
    std::vector<std::string> gens;
    std::size_t order;
};

inline std::vector<BuiltinSpec> builtin_specs(bool extended) {
    std::vector<BuiltinSpec> out;

    auto cyclic_gen = [](std::size_t n) {
        if (n == 1) return std::string("()");
        std::string s = "(";
        for (std::size_t i = 1; i <= n; ++i) {
            if (i > 1) s += ' ';
            s += std::to_string(i);
        }
        return s + ")";
    };
    for (std::size_t n = 1; n <= 24; ++n)
        out.push_back({"C" + std::to_string(n), n == 1 ? 1 : n, {cyclic_gen(n)}, n});

    // dihedral groups of order 2m on m points: rotation + reflection
    for (std::size_t m = 3; m <= 12; ++m) {
        std::string refl;
        for (std::size_t i = 2; i <= (m + 1) / 2; ++i) {
            refl += "(" + std::to_string(i) + " " + std::to_string(m + 2 - i) + ")";
        }
        out.push_back({"D" + std::to_string(2 * m), m, {cyclic_gen(m), refl}, 2 * m});
    }

    out.push_back({"E4", 4, {"(1 2)", "(3 4)"}, 4});
    out.push_back({"E8", 6, {"(1 2)", "(3 4)", "(5 6)"}, 8});
    out.push_back({"E9", 6, {"(1 2 3)", "(4 5 6)"}, 9});
    out.push_back({"E27", 9, {"(1 2 3)", "(4 5 6)", "(7 8 9)"}, 27});

    out.push_back({"Q8", 8, {"(1 2 5 6)(3 8 7 4)", "(1 3 5 7)(2 4 6 8)"}, 8});
    // SL(2,3) acting on the 8 nonzero vectors of F_3^2
    out.push_back({"SL(2,3)", 8, {"(1 6 2 3)(4 7 8 5)", "(1 4 7)(2 8 5)"}, 24});
    out.push_back({"A4", 4, {"(1 2 3)", "(1 2)(3 4)"}, 12});
    out.push_back({"S4", 4, {"(1 2 3 4)", "(1 2)"}, 24});
    out.push_back({"A5", 5, {"(1 2 3 4 5)", "(3 4 5)"}, 60});
    out.push_back({"S5", 5, {"(1 2 3 4 5)", "(1 2)"}, 120});
    out.push_back({"S3xS3", 6, {"(1 2 3)", "(1 2)", "(4 5 6)", "(4 5)"}, 36});
    // dicyclic C3 : C4, the C4 acting by inversion
    out.push_back({"C3:C4", 7, {"(1 2 3)", "(2 3)(4 5 6 7)"}, 12});
    // PSL(2,7) = GL(3,2) acting on the 7 nonzero vectors of F_2^3
    out.push_back({"PSL(2,7)", 7, {"(1 2 3 4 5 6 7)", "(2 4)(5 6)"}, 168});

    if (extended) {
        out.push_back({"A6", 6, {"(1 2 3 4 5)", "(4 5 6)"}, 360});
        // PGL(2,7) as Moebius transformations of the projective line over F_7;
        // points 1..7 are the field elements 0..6, point 8 is infinity
        out.push_back({"PGL(2,7)", 8,
                       {"(1 2 3 4 5 6 7)", "(2 4 3 7 5 6)", "(1 8)(3 5)(4 6)"},
                       336});
    }
    return out;
}

} // namespace detail

inline GroupPtr materialize_builtin(const detail::BuiltinSpec& b, std::size_t cap) {
    GroupSpec spec;
    spec.name = b.name;
    spec.degree = b.degree;
    for (const auto& s : b.gens) spec.generators.push_back(parse_permutation(s, b.degree));
    GroupPtr g = Group::generate(std::move(spec), cap);
    if (g->order() != b.order)
        throw Error("corpus construction '" + b.name + "' has order " +
                    std::to_string(g->order()) + ", expected " + std::to_string(b.order));
    return g;
}

inline std::vector<CorpusEntry> corpus_default(bool extended = false,
                                               std::size_t cap = kDefaultOrderCap) {
    std::vector<CorpusEntry> out;
    for (const auto& b : detail::builtin_specs(extended))
        out.push_back({b.name, "builtin", materialize_builtin(b, cap)});
    return out;
}

inline GroupPtr corpus_builtin(const std::string& name, std::size_t cap = kDefaultOrderCap) {
    for (const auto& b : detail::builtin_specs(/*extended=*/true))
        if (b.name == name) return materialize_builtin(b, cap);
    throw Error("unknown builtin group '" + name + "'");
}

inline bool is_builtin_name(const std::string& name) {
    for (const auto& b : detail::builtin_specs(/*extended=*/true))
        if (b.name == name) return true;
    return false;
}

inline std::vector<CorpusEntry> ingest_groups(const std::string& path,
                                              std::size_t cap = kDefaultOrderCap) {
    std::vector<CorpusEntry> out;
    for (GroupSpec& spec : read_group_file(path)) {
        CorpusEntry e;
        e.name = spec.name;
        e.source = path;
        e.group = Group::generate(std::move(spec), cap);
        out.push_back(std::move(e));
    }
    return out;
}

// The generation cap, overridable through the environment.
inline std::size_t order_cap_from_env() {
    if (const char* v = std::getenv("SSQLAB_ORDER_CAP")) {
        char* end = nullptr;
        unsigned long n = std::strtoul(v, &end, 10);
        if (end && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
        throw Error("SSQLAB_ORDER_CAP must be a positive integer, got '" + std::string(v) + "'");
    }
    return kDefaultOrderCap;
}

} // namespace ssqlab
