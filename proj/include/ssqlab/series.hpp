#pragma once

// Maximal subgroup series G = G_0 > G_1 > ... > G_n = 1 (each term maximal in
// its predecessor), series-level predicates, and a memoized depth-first
// search for a series all of whose proper terms satisfy a predicate
// relative to the top group G.

#include "ssqlab/group.hpp"
#include "ssqlab/lattice.hpp"
#include "ssqlab/quasinorm.hpp"
#include "ssqlab/structure.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace ssqlab {

enum class SeriesKind {
    central,       // [G, G_{i-1}] <= G_i
    normal,        // every term normal in G
    subnormal,     // every term subnormal in G
    s_permutable,  // every term S-permutable in G
    ss_quasinormal,// every term SS-quasinormal in G
    cc_permutable, // every term c-c-permutable in G
};

inline const char* to_string(SeriesKind k) {
    switch (k) {
        case SeriesKind::central: return "central";
        case SeriesKind::normal: return "normal";
        case SeriesKind::subnormal: return "subnormal";
        case SeriesKind::s_permutable: return "s-permutable";
        case SeriesKind::ss_quasinormal: return "ss-quasinormal";
        case SeriesKind::cc_permutable: return "cc-permutable";
    }
    return "?";
}

struct SeriesPredicate {
    SeriesKind kind;
    bool require_subnormal = false; // additionally demand subnormality in G

    std::string describe() const {
        std::string s = to_string(kind);
        if (require_subnormal) s += "+subnormal";
        return s;
    }
};

struct MaximalSeries {
    std::vector<Subgroup> chain; // G = chain[0] > ... > chain.back() = 1
};

// Per-term evidence: an SS witness for ss-quasinormal terms, the
// normal-closure descent chain when subnormality was required.
struct TermEvidence {
    std::optional<SSWitness> ss_witness;
    std::optional<std::vector<Subgroup>> subnormal_chain;
};

struct SeriesCertificate {
    MaximalSeries series;
    std::vector<TermEvidence> evidence; // evidence[i] belongs to chain[i+1]
};

// True iff the chain starts at G, ends at the trivial subgroup, and every
// step is a maximal inclusion (checked against the materialized lattice).
inline bool is_maximal_series(const Group& g, const std::vector<Subgroup>& chain) {
    if (chain.empty()) return false;
    for (const Subgroup& t : chain)
        if (&t.parent() != &g) throw Error("series term belongs to a different group");
    if (!chain.front().is_whole() || !chain.back().is_trivial()) return false;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto maxima = maximal_subgroups(chain[i]);
        bool ok = false;
        for (const Subgroup& m : maxima)
            if (m == chain[i + 1]) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

namespace detail {

struct TermCheck {
    bool ok = false;
    TermEvidence evidence;
};

// Predicate for one proper term, relative to the fixed top group. The central
// kind is edge-based and handled by the callers.
inline TermCheck check_series_term(const Group& g, const Subgroup& term,
                                   const SeriesPredicate& pred) {
    TermCheck r;
    const Subgroup whole = g.whole();
    switch (pred.kind) {
        case SeriesKind::central: throw Error("central terms are edge-checked");
        case SeriesKind::normal: r.ok = is_normal_in(term, whole); break;
        case SeriesKind::subnormal: {
            auto chain = subnormal_chain(term, whole);
            r.ok = chain.has_value();
            if (r.ok) r.evidence.subnormal_chain = std::move(chain);
            break;
        }
        case SeriesKind::s_permutable: r.ok = is_s_permutable(term, whole); break;
        case SeriesKind::ss_quasinormal: {
            SSResult res = is_ss_quasinormal(term, whole);
            r.ok = res.ok;
            if (r.ok) r.evidence.ss_witness = std::move(res.witness);
            break;
        }
        case SeriesKind::cc_permutable: r.ok = is_cc_permutable(term, whole); break;
    }
    if (r.ok && pred.require_subnormal && pred.kind != SeriesKind::subnormal) {
        auto chain = subnormal_chain(term, g.whole());
        if (!chain) return {};
        r.evidence.subnormal_chain = std::move(chain);
    }
    return r;
}

} // namespace detail

struct SeriesCheck {
    bool ok = false;
    std::optional<SeriesCertificate> certificate;   // populated on success
    std::optional<std::size_t> failing_index;       // index into chain on failure
    std::string failing_reason;
};

// Evaluates the predicate on every term below G (the trivial term included,
// G itself exempt). Requires a valid maximal series.
inline SeriesCheck series_satisfies(const Group& g, const MaximalSeries& series,
                                    const SeriesPredicate& pred) {
    if (!is_maximal_series(g, series.chain)) throw Error("not a maximal subgroup series");
    SeriesCheck out;
    std::vector<TermEvidence> evidence;
    for (std::size_t i = 1; i < series.chain.size(); ++i) {
        const Subgroup& term = series.chain[i];
        if (pred.kind == SeriesKind::central) {
            if (!term.contains(commutator(g.whole(), series.chain[i - 1]))) {
                out.failing_index = i;
                out.failing_reason = "[G, term " + std::to_string(i - 1) +
                                     "] is not inside term " + std::to_string(i);
                return out;
            }
            TermEvidence ev;
            if (pred.require_subnormal) {
                auto chain = subnormal_chain(term, g.whole());
                if (!chain) {
                    out.failing_index = i;
                    out.failing_reason = "term of order " + std::to_string(term.order()) +
                                         " is not subnormal in G";
                    return out;
                }
                ev.subnormal_chain = std::move(chain);
            }
            evidence.push_back(std::move(ev));
        } else {
            detail::TermCheck tc = detail::check_series_term(g, term, pred);
            if (!tc.ok) {
                out.failing_index = i;
                out.failing_reason = "term of order " + std::to_string(term.order()) +
                                     " is not " + pred.describe() + " in G";
                return out;
            }
            evidence.push_back(std::move(tc.evidence));
        }
    }
    out.ok = true;
    out.certificate = SeriesCertificate{series, std::move(evidence)};
    return out;
}

// Depth-first search for a maximal series whose proper terms all satisfy the
// predicate relative to G. Children are explored in lattice order, so the
// first certificate found is deterministic. Subgroups whose subtree is
// exhausted are memoized and never revisited; for the per-term kinds a
// predicate failure is position-independent and memoized the same way.
inline std::optional<SeriesCertificate> find_series(const Group& g, const SeriesPredicate& pred) {
    using Key = std::vector<ElemId>;
    std::unordered_set<Key, detail::IdVecHash> dead;
    std::map<Key, detail::TermCheck> term_cache;

    std::vector<Subgroup> chain{g.whole()};
    std::vector<TermEvidence> evidence;

    auto term_ok = [&](const Subgroup& m) -> const detail::TermCheck& {
        auto it = term_cache.find(m.elems());
        if (it == term_cache.end())
            it = term_cache.emplace(m.elems(), detail::check_series_term(g, m, pred)).first;
        return it->second;
    };

    auto dfs = [&](auto&& self, const Subgroup& t) -> bool {
        if (t.is_trivial()) return true;
        std::optional<Subgroup> commutator_with_g; // for the central kind
        if (pred.kind == SeriesKind::central)
            commutator_with_g = commutator(g.whole(), t);
        for (const Subgroup& m : maximal_subgroups(t)) {
            if (dead.contains(m.elems())) continue;
            TermEvidence ev;
            if (pred.kind == SeriesKind::central) {
                if (!m.contains(*commutator_with_g)) continue; // edge failure: T-dependent
                if (pred.require_subnormal) {
                    auto sub = subnormal_chain(m, g.whole());
                    if (!sub) {
                        dead.insert(m.elems());
                        continue;
                    }
                    ev.subnormal_chain = std::move(sub);
                }
            } else {
                const detail::TermCheck& tc = term_ok(m);
                if (!tc.ok) {
                    dead.insert(m.elems());
                    continue;
                }
                ev = tc.evidence;
            }
            chain.push_back(m);
            evidence.push_back(std::move(ev));
            if (self(self, m)) return true;
            chain.pop_back();
            evidence.pop_back();
            dead.insert(m.elems()); // subtree exhausted
        }
        return false;
    };

    if (!dfs(dfs, g.whole())) return std::nullopt;
    return SeriesCertificate{MaximalSeries{std::move(chain)}, std::move(evidence)};
}

} // namespace ssqlab
