#pragma once

// Structural predicates and characteristic subgroups: normality, subnormality,
// commutators, derived and chief series, solvability, supersolvability,
// nilpotency, Frattini and Fitting subgroups, centralizers and normalizers.

#include "ssqlab/action.hpp"
#include "ssqlab/arith.hpp"
#include "ssqlab/group.hpp"
#include "ssqlab/lattice.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace ssqlab {

inline bool is_normal(const Subgroup& h, const Group& g) { return is_normal_in(h, g.whole()); }

// Smallest subgroup of `ambient` containing h and normal in it: generated by
// every ambient-conjugate of every element of h.
inline Subgroup normal_closure(const Subgroup& h, const Subgroup& ambient) {
    require_same_parent(h, ambient);
    const Group& g = h.parent();
    std::vector<char> mark(g.order(), 0);
    std::vector<ElemId> gens;
    for (ElemId k : ambient.elems())
        for (ElemId x : h.elems()) {
            ElemId y = g.conj(x, k);
            if (!mark[y]) {
                mark[y] = 1;
                gens.push_back(y);
            }
        }
    return generated_subgroup(g, gens);
}

// Iterated normal-closure descent: K0 = ambient, K_{i+1} = <h^{K_i}>. The
// chain strictly decreases until it stabilizes; h is subnormal iff it reaches
// h. On success returns the witness chain ambient = K0 > ... > h.
inline std::optional<std::vector<Subgroup>> subnormal_chain(const Subgroup& h,
                                                            const Subgroup& ambient) {
    require_same_parent(h, ambient);
    if (!ambient.contains(h)) return std::nullopt;
    std::vector<Subgroup> chain{ambient};
    Subgroup cur = ambient;
    while (cur.order() > h.order()) {
        Subgroup next = normal_closure(h, cur);
        if (next.order() == cur.order()) return std::nullopt; // stuck above h
        chain.push_back(next);
        cur = next;
    }
    if (!(cur == h)) return std::nullopt;
    return chain;
}

inline bool is_subnormal(const Subgroup& h, const Subgroup& ambient) {
    return subnormal_chain(h, ambient).has_value();
}
inline bool is_subnormal(const Subgroup& h, const Group& g) {
    return is_subnormal(h, g.whole());
}

// Subgroup generated by all commutators [a,b] = a^-1 b^-1 a b.
inline Subgroup commutator(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    const Group& g = a.parent();
    std::vector<char> mark(g.order(), 0);
    std::vector<ElemId> gens;
    for (ElemId x : a.elems())
        for (ElemId y : b.elems()) {
            ElemId c = g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y));
            if (!mark[c]) {
                mark[c] = 1;
                gens.push_back(c);
            }
        }
    return generated_subgroup(g, gens);
}

struct DerivedSeries {
    std::vector<Subgroup> chain; // G >= G' >= G'' >= ..., ends where it stabilizes
    bool solvable() const { return chain.back().is_trivial(); }
};

inline DerivedSeries derived_series(const Group& g) {
    DerivedSeries ds;
    ds.chain.push_back(g.whole());
    for (;;) {
        Subgroup next = commutator(ds.chain.back(), ds.chain.back());
        if (next.order() == ds.chain.back().order()) break;
        ds.chain.push_back(next);
        if (next.is_trivial()) break;
    }
    return ds;
}

inline bool is_solvable(const Group& g) { return derived_series(g).solvable(); }

inline bool is_abelian(const Group& g) { return commutator(g.whole(), g.whole()).is_trivial(); }

// Nilpotent iff every Sylow subgroup is normal.
inline bool is_nilpotent_subgroup(const Subgroup& h) {
    for (std::uint64_t p : prime_divisors(h.order()))
        if (sylow_subgroups_all(h, p).size() != 1) return false;
    return true;
}

inline bool is_nilpotent(const Group& g) {
    const Subgroup whole = g.whole();
    for (std::uint64_t p : prime_divisors(g.order()))
        for (const Subgroup& s : sylow_subgroups_all(whole, p))
            if (!is_normal_in(s, whole)) return false;
    return true;
}

struct ChiefSeries {
    std::vector<Subgroup> chain;      // G = H_0 > H_1 > ... > H_k = 1, all normal in G
    std::vector<std::size_t> factors; // |H_i| / |H_{i+1}|
};

// Built by repeatedly factoring out the lexicographically least minimal
// normal subgroup and pulling the quotient's series back through the coset
// action. The factor multiset is independent of the choices made.
inline ChiefSeries chief_series(const Group& g) {
    ChiefSeries cs;
    cs.chain.push_back(g.whole());
    if (g.order() == 1) return cs;
    const Subgroup n = minimal_normal_subgroups(g).front();
    if (n.is_whole()) {
        cs.chain.push_back(g.trivial());
        cs.factors.push_back(g.order());
        return cs;
    }
    ActionImage act = coset_action(g, n);
    ChiefSeries sub = chief_series(act.image());
    for (std::size_t i = 1; i < sub.chain.size(); ++i)
        cs.chain.push_back(act.pull_back(sub.chain[i]));
    cs.factors = sub.factors;
    cs.chain.push_back(g.trivial());
    cs.factors.push_back(n.order());
    return cs;
}

// Supersolvable iff solvable with all chief factors of prime order. This is
// deliberately independent of the maximal-series search, which it cross-checks.
inline bool is_supersolvable(const Group& g) {
    if (!is_solvable(g)) return false;
    for (std::size_t f : chief_series(g).factors)
        if (!is_prime(f)) return false;
    return true;
}

// Frattini subgroup: intersection of all maximal subgroups.
inline Subgroup frattini(const Group& g) {
    Subgroup acc = g.whole();
    for (const Subgroup& m : maximal_subgroups(g)) acc = intersect(acc, m);
    return acc;
}

// O_p(G): the intersection of all Sylow p-subgroups.
inline Subgroup p_core(const Group& g, std::uint64_t p) {
    if (!is_prime(p)) throw Error("p_core: " + std::to_string(p) + " is not prime");
    Subgroup acc = sylow_subgroup(g, p);
    for (const Subgroup& s : sylow_subgroups_all(g, p)) acc = intersect(acc, s);
    return acc;
}

// F(G): generated by the p-cores; the largest nilpotent normal subgroup.
inline Subgroup fitting(const Group& g) {
    std::vector<ElemId> gens{g.identity_id()};
    for (std::uint64_t p : prime_divisors(g.order())) {
        const Subgroup core = p_core(g, p);
        for (ElemId x : core.elems()) gens.push_back(x);
    }
    return generated_subgroup(g, gens);
}

inline bool is_nonabelian_simple(const Group& g) {
    return g.order() > 1 && !is_abelian(g) && normal_subgroups(g).size() == 2;
}

inline Subgroup centralizer(const Group& g, const Subgroup& h) {
    if (&h.parent() != &g) throw Error("centralizer: subgroup of a different group");
    const std::vector<ElemId> gens = h.generator_ids();
    std::vector<ElemId> ids;
    for (ElemId x = 0; x < g.order(); ++x) {
        bool commutes = true;
        for (ElemId y : gens)
            if (g.mul(x, y) != g.mul(y, x)) {
                commutes = false;
                break;
            }
        if (commutes) ids.push_back(x);
    }
    return Subgroup(g, std::move(ids));
}

inline Subgroup center(const Group& g) { return centralizer(g, g.whole()); }

inline Subgroup normalizer(const Group& g, const Subgroup& h) {
    if (&h.parent() != &g) throw Error("normalizer: subgroup of a different group");
    std::vector<ElemId> ids;
    for (ElemId x = 0; x < g.order(); ++x) {
        bool fixes = true;
        for (ElemId y : h.elems())
            if (!h.contains_id(g.conj(y, x))) {
                fixes = false;
                break;
            }
        if (fixes) ids.push_back(x);
    }
    return Subgroup(g, std::move(ids));
}

} // namespace ssqlab
