#pragma once

// Verification suites. Each suite runs one numbered statement against every
// corpus entry, exhaustively over the relevant subgroups, and produces one
// report record per group. A failing record always carries a concrete
// counterexample. Entries are evaluated concurrently; records are assembled
// in corpus order so reports are byte-stable.

#include "ssqlab/corpus.hpp"
#include "ssqlab/quasinorm.hpp"
#include "ssqlab/report.hpp"
#include "ssqlab/series.hpp"
#include "ssqlab/structure.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace ssqlab {

enum class SuiteId {
    fact1_central_nilpotent,
    fact2_normal_supersolvable,
    fact3_subnormal_solvable,
    thm11_spermutable,
    thm11_ccpermutable,
    thm12,
    remark13,
    thm14,
    lemma21,
    lemma22,
    lemma23,
    lemma24,
    psl27_two_indices,
};

inline const char* to_string(SuiteId id) {
    switch (id) {
        case SuiteId::fact1_central_nilpotent: return "fact-1-central-nilpotent";
        case SuiteId::fact2_normal_supersolvable: return "fact-2-normal-supersolvable";
        case SuiteId::fact3_subnormal_solvable: return "fact-3-subnormal-solvable";
        case SuiteId::thm11_spermutable: return "thm-1.1-spermutable";
        case SuiteId::thm11_ccpermutable: return "thm-1.1-ccpermutable";
        case SuiteId::thm12: return "thm-1.2";
        case SuiteId::remark13: return "remark-1.3";
        case SuiteId::thm14: return "thm-1.4";
        case SuiteId::lemma21: return "lemma-2.1";
        case SuiteId::lemma22: return "lemma-2.2";
        case SuiteId::lemma23: return "lemma-2.3";
        case SuiteId::lemma24: return "lemma-2.4";
        case SuiteId::psl27_two_indices: return "psl27-two-indices";
    }
    return "?";
}

inline std::vector<SuiteId> all_suites() {
    return {SuiteId::fact1_central_nilpotent, SuiteId::fact2_normal_supersolvable,
            SuiteId::fact3_subnormal_solvable, SuiteId::thm11_spermutable,
            SuiteId::thm11_ccpermutable,      SuiteId::thm12,
            SuiteId::remark13,                SuiteId::thm14,
            SuiteId::lemma21,                 SuiteId::lemma22,
            SuiteId::lemma23,                 SuiteId::lemma24,
            SuiteId::psl27_two_indices};
}

inline std::optional<SuiteId> parse_suite_id(const std::string& s) {
    for (SuiteId id : all_suites())
        if (s == to_string(id)) return id;
    return std::nullopt;
}

// Exhaustive quantifier suites stay affordable by capping the group order;
// larger corpus members are reported as skipped, never silently dropped.
inline constexpr std::size_t kLemmaSuiteOrderLimit = 100;
inline constexpr std::size_t kCcSuiteOrderLimit = 48;

struct SuiteOptions {
    unsigned threads = 0; // 0: hardware concurrency
};

namespace detail {

inline void fill_verdicts(ReportRecord& r, const Group& g) {
    r.order = g.order();
    r.solvable = is_solvable(g);
    r.supersolvable = is_supersolvable(g);
    r.nilpotent = is_nilpotent(g);
}

inline Json group_ref_json(const Group& g) {
    Json j;
    j["group"] = g.name();
    j["order"] = g.order();
    return j;
}

// series-existence <-> structural-property biconditionals
inline ReportRecord biconditional_record(const char* suite, const Group& g, SeriesPredicate pred,
                                         bool property, const char* property_name) {
    ReportRecord r;
    r.suite = suite;
    r.group = g.name();
    fill_verdicts(r, g);
    auto cert = find_series(g, pred);
    r.series_found.emplace_back(pred.describe(), cert);
    r.pass = cert.has_value() == property;
    if (!r.pass) {
        r.counterexample = group_ref_json(g);
        r.counterexample["series"] = pred.describe();
        r.counterexample["series_exists"] = cert.has_value();
        r.counterexample[property_name] = property;
    }
    return r;
}

inline ReportRecord run_fact1(const CorpusEntry& e) {
    return biconditional_record("fact-1-central-nilpotent", *e.group,
                                {SeriesKind::central}, is_nilpotent(*e.group), "nilpotent");
}
inline ReportRecord run_fact2(const CorpusEntry& e) {
    return biconditional_record("fact-2-normal-supersolvable", *e.group,
                                {SeriesKind::normal}, is_supersolvable(*e.group), "supersolvable");
}
inline ReportRecord run_fact3(const CorpusEntry& e) {
    return biconditional_record("fact-3-subnormal-solvable", *e.group,
                                {SeriesKind::subnormal}, is_solvable(*e.group), "solvable");
}
inline ReportRecord run_thm11_sperm(const CorpusEntry& e) {
    return biconditional_record("thm-1.1-spermutable", *e.group,
                                {SeriesKind::s_permutable}, is_supersolvable(*e.group),
                                "supersolvable");
}
inline ReportRecord run_thm11_cc(const CorpusEntry& e) {
    if (e.group->order() > kCcSuiteOrderLimit) {
        ReportRecord r;
        r.suite = "thm-1.1-ccpermutable";
        r.group = e.group->name();
        fill_verdicts(r, *e.group);
        r.note = "skipped: order > " + std::to_string(kCcSuiteOrderLimit);
        return r;
    }
    return biconditional_record("thm-1.1-ccpermutable", *e.group,
                                {SeriesKind::cc_permutable}, is_supersolvable(*e.group),
                                "supersolvable");
}

inline ReportRecord run_thm12(const CorpusEntry& e) {
    const Group& g = *e.group;
    ReportRecord r;
    r.suite = "thm-1.2";
    r.group = g.name();
    fill_verdicts(r, g);
    auto cert = find_series(g, {SeriesKind::ss_quasinormal});
    r.series_found.emplace_back("ss-quasinormal", cert);
    r.pass = !cert.has_value() || r.solvable;
    const bool must_have_none =
        g.name() == "A5" || g.name() == "S5" || g.name() == "PSL(2,7)";
    if (must_have_none && cert.has_value()) r.pass = false;
    if (!r.pass) {
        r.counterexample = group_ref_json(g);
        r.counterexample["series_exists"] = cert.has_value();
        r.counterexample["solvable"] = r.solvable;
    }
    return r;
}

inline ReportRecord run_thm14(const CorpusEntry& e) {
    return biconditional_record("thm-1.4", *e.group,
                                {SeriesKind::ss_quasinormal, /*require_subnormal=*/true},
                                is_supersolvable(*e.group), "supersolvable");
}

inline ReportRecord run_remark13(const CorpusEntry& e) {
    const Group& g = *e.group;
    ReportRecord r;
    r.suite = "remark-1.3";
    r.group = g.name();
    fill_verdicts(r, g);
    if (g.name() != "A4") {
        r.note = "not applicable (statement is about A4)";
        return r;
    }

    auto first_of_order = [&](std::size_t n) -> Subgroup {
        for (const Subgroup& s : g.subgroups())
            if (s.order() == n) return s;
        throw Error("A4 lattice is missing a subgroup of order " + std::to_string(n));
    };
    const Subgroup h3 = first_of_order(3);
    const Subgroup k4 = first_of_order(4);
    const Subgroup l2 = first_of_order(2);

    MaximalSeries omega1{{g.whole(), h3, g.trivial()}};
    MaximalSeries omega2{{g.whole(), k4, l2, g.trivial()}};

    SeriesCheck c1 = series_satisfies(g, omega1, {SeriesKind::ss_quasinormal});
    SeriesCheck c2sub = series_satisfies(g, omega2, {SeriesKind::subnormal});
    SeriesCheck c2ss = series_satisfies(g, omega2, {SeriesKind::ss_quasinormal});

    if (c1.ok) r.series_found.emplace_back("omega1 ss-quasinormal", c1.certificate);
    if (c2sub.ok) r.series_found.emplace_back("omega2 subnormal", c2sub.certificate);

    const bool omega2_rejected_at_order2 = !c2ss.ok && c2ss.failing_index &&
                                           omega2.chain[*c2ss.failing_index].order() == 2;
    r.pass = c1.ok && c2sub.ok && omega2_rejected_at_order2;
    if (!r.pass) {
        r.counterexample = group_ref_json(g);
        r.counterexample["omega1_ss_accepted"] = c1.ok;
        r.counterexample["omega2_subnormal_accepted"] = c2sub.ok;
        r.counterexample["omega2_ss_rejected_at_order2"] = omega2_rejected_at_order2;
    }
    return r;
}

// Lemma 2.1: (1) H SS-qn in G and H <= K <= G imply H SS-qn in K.
//            (2) for N normal, HN/N is SS-qn in G/N.
inline ReportRecord run_lemma21(const CorpusEntry& e) {
    const Group& g = *e.group;
    ReportRecord r;
    r.suite = "lemma-2.1";
    r.group = g.name();
    fill_verdicts(r, g);
    if (g.order() > kLemmaSuiteOrderLimit) {
        r.note = "skipped: order > " + std::to_string(kLemmaSuiteOrderLimit);
        return r;
    }
    const Subgroup whole = g.whole();
    const auto& lattice = g.subgroups();

    std::vector<std::size_t> ss_ix;
    for (std::size_t i = 0; i < lattice.size(); ++i)
        if (is_ss_quasinormal(lattice[i], whole).ok) ss_ix.push_back(i);

    for (std::size_t i : ss_ix) {
        const Subgroup& h = lattice[i];
        for (const Subgroup& k : lattice) {
            if (k.order() < h.order() || !k.contains(h)) continue;
            if (!is_ss_quasinormal(h, k).ok) {
                r.pass = false;
                r.counterexample = group_ref_json(g);
                r.counterexample["part"] = 1;
                r.counterexample["h"] = subgroup_json(h);
                r.counterexample["k"] = subgroup_json(k);
                return r;
            }
        }
    }

    for (const Subgroup& n : normal_subgroups(g)) {
        ActionImage act = coset_action(g, n);
        for (std::size_t i : ss_ix) {
            const Subgroup& h = lattice[i];
            Subgroup hn(g, product_ids(h, n)); // a subgroup since N is normal
            Subgroup image_hn = act.push_forward(hn);
            if (!is_ss_quasinormal(image_hn, act.image().whole()).ok) {
                r.pass = false;
                r.counterexample = group_ref_json(g);
                r.counterexample["part"] = 2;
                r.counterexample["h"] = subgroup_json(h);
                r.counterexample["n"] = subgroup_json(n);
                return r;
            }
        }
    }
    return r;
}

// Lemma 2.2: for nilpotent H, S-permutable <=> (H <= F(G) and SS-quasinormal).
inline ReportRecord run_lemma22(const CorpusEntry& e) {
    const Group& g = *e.group;
    ReportRecord r;
    r.suite = "lemma-2.2";
    r.group = g.name();
    fill_verdicts(r, g);
    if (g.order() > kLemmaSuiteOrderLimit) {
        r.note = "skipped: order > " + std::to_string(kLemmaSuiteOrderLimit);
        return r;
    }
    const Subgroup whole = g.whole();
    const Subgroup f = fitting(g);
    for (const Subgroup& h : g.subgroups()) {
        if (!is_nilpotent_subgroup(h)) continue;
        const bool lhs = is_s_permutable(h, whole);
        const bool rhs = f.contains(h) && is_ss_quasinormal(h, whole).ok;
        if (lhs != rhs) {
            r.pass = false;
            r.counterexample = group_ref_json(g);
            r.counterexample["h"] = subgroup_json(h);
            r.counterexample["s_permutable"] = lhs;
            r.counterexample["in_fitting_and_ss"] = rhs;
            return r;
        }
    }
    return r;
}

// Lemma 2.3: an SS-quasinormal maximal subgroup has prime-power index.
inline ReportRecord run_lemma23(const CorpusEntry& e) {
    const Group& g = *e.group;
    ReportRecord r;
    r.suite = "lemma-2.3";
    r.group = g.name();
    fill_verdicts(r, g);
    if (g.order() > kLemmaSuiteOrderLimit) {
        r.note = "skipped: order > " + std::to_string(kLemmaSuiteOrderLimit);
        return r;
    }
    const Subgroup whole = g.whole();
    for (const Subgroup& m : maximal_subgroups(g)) {
        if (!is_ss_quasinormal(m, whole).ok) continue;
        const std::size_t index = g.order() / m.order();
        if (!is_prime_power(index)) {
            r.pass = false;
            r.counterexample = group_ref_json(g);
            r.counterexample["m"] = subgroup_json(m);
            r.counterexample["index"] = index;
            return r;
        }
    }
    return r;
}

// Lemma 2.4: if G has an SS-quasinormal maximal series, so does every G/N.
inline ReportRecord run_lemma24(const CorpusEntry& e) {
    const Group& g = *e.group;
    ReportRecord r;
    r.suite = "lemma-2.4";
    r.group = g.name();
    fill_verdicts(r, g);
    if (g.order() > kLemmaSuiteOrderLimit) {
        r.note = "skipped: order > " + std::to_string(kLemmaSuiteOrderLimit);
        return r;
    }
    auto cert = find_series(g, {SeriesKind::ss_quasinormal});
    r.series_found.emplace_back("ss-quasinormal", cert);
    if (!cert) {
        r.note = "no ss-quasinormal series; hypothesis empty";
        return r;
    }
    for (const Subgroup& n : normal_subgroups(g)) {
        ActionImage act = coset_action(g, n);
        if (!find_series(act.image(), {SeriesKind::ss_quasinormal})) {
            r.pass = false;
            r.counterexample = group_ref_json(g);
            r.counterexample["n"] = subgroup_json(n);
            r.counterexample["quotient_order"] = act.image().order();
            return r;
        }
    }
    return r;
}

// PSL(2,7) is the unique corpus simple group whose maximal subgroups realize
// two distinct prime-power indices (7 and 8).
inline ReportRecord run_psl27(const CorpusEntry& e) {
    const Group& g = *e.group;
    ReportRecord r;
    r.suite = "psl27-two-indices";
    r.group = g.name();
    fill_verdicts(r, g);
    if (!is_nonabelian_simple(g)) {
        r.note = "not applicable (group is not nonabelian simple)";
        return r;
    }
    std::vector<std::size_t> pp_indices;
    for (const Subgroup& m : maximal_subgroups(g)) {
        const std::size_t index = g.order() / m.order();
        if (is_prime_power(index) &&
            std::find(pp_indices.begin(), pp_indices.end(), index) == pp_indices.end())
            pp_indices.push_back(index);
    }
    std::sort(pp_indices.begin(), pp_indices.end());
    if (g.name() == "PSL(2,7)") {
        r.pass = g.order() == 168 && pp_indices == std::vector<std::size_t>{7, 8};
    } else {
        r.pass = pp_indices.size() <= 1;
    }
    if (!r.pass) {
        r.counterexample = group_ref_json(g);
        r.counterexample["prime_power_maximal_indices"] = pp_indices;
    }
    return r;
}

inline ReportRecord run_one(SuiteId id, const CorpusEntry& e) {
    switch (id) {
        case SuiteId::fact1_central_nilpotent: return run_fact1(e);
        case SuiteId::fact2_normal_supersolvable: return run_fact2(e);
        case SuiteId::fact3_subnormal_solvable: return run_fact3(e);
        case SuiteId::thm11_spermutable: return run_thm11_sperm(e);
        case SuiteId::thm11_ccpermutable: return run_thm11_cc(e);
        case SuiteId::thm12: return run_thm12(e);
        case SuiteId::remark13: return run_remark13(e);
        case SuiteId::thm14: return run_thm14(e);
        case SuiteId::lemma21: return run_lemma21(e);
        case SuiteId::lemma22: return run_lemma22(e);
        case SuiteId::lemma23: return run_lemma23(e);
        case SuiteId::lemma24: return run_lemma24(e);
        case SuiteId::psl27_two_indices: return run_psl27(e);
    }
    throw Error("unknown suite");
}

// Entries are processed by a small worker pool; the output vector is indexed
// by corpus position, so parallelism never reorders records.
template <typename Fn>
inline void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    unsigned want = threads ? threads : std::thread::hardware_concurrency();
    if (want < 1) want = 1;
    if (want > n) want = static_cast<unsigned>(n);
    if (want <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mu;
    for (unsigned t = 0; t < want; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard lock(error_mu);
                    if (!error) error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

} // namespace detail

inline std::vector<ReportRecord> run_suite(SuiteId id, const std::vector<CorpusEntry>& corpus,
                                           const SuiteOptions& options = {}) {
    std::vector<ReportRecord> records(corpus.size());
    detail::parallel_for(corpus.size(), options.threads,
                         [&](std::size_t i) { records[i] = detail::run_one(id, corpus[i]); });
    return records;
}

inline bool all_passed(const std::vector<ReportRecord>& records) {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

} // namespace ssqlab
