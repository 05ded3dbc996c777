#pragma once

// Test-only brute-force oracles, kept deliberately independent of the library
// algorithms they cross-check. Subgroups are enumerated as closures of every
// generator set of size <= 3 (enough for every group we aim them at), series
// are searched by enumerating all maximal chains, and the permutability
// predicates are spelled out longhand from their definitions.

#include "ssqlab/group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using ssqlab::ElemId;
using ssqlab::Group;

using IdSet = std::vector<ElemId>; // sorted

inline IdSet close(const Group& g, IdSet gens) {
    std::vector<char> seen(g.order(), 0);
    std::vector<ElemId> queue{g.identity_id()};
    seen[g.identity_id()] = 1;
    for (ElemId x : gens)
        if (!seen[x]) {
            seen[x] = 1;
            queue.push_back(x);
        }
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (ElemId x : gens) {
            ElemId p = g.mul(queue[i], x);
            if (!seen[p]) {
                seen[p] = 1;
                queue.push_back(p);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

// Every subgroup, via closures of all 1-, 2- and 3-element generator sets.
inline std::vector<IdSet> all_subgroups(const Group& g) {
    std::set<IdSet> found;
    const ElemId n = static_cast<ElemId>(g.order());
    found.insert({g.identity_id()});
    for (ElemId a = 0; a < n; ++a) found.insert(close(g, {a}));
    for (ElemId a = 0; a < n; ++a)
        for (ElemId b = a + 1; b < n; ++b) found.insert(close(g, {a, b}));
    for (ElemId a = 0; a < n; ++a)
        for (ElemId b = a + 1; b < n; ++b)
            for (ElemId c = b + 1; c < n; ++c) found.insert(close(g, {a, b, c}));
    return {found.begin(), found.end()};
}

inline bool subset(const IdSet& a, const IdSet& b) { // a <= b
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IdSet product(const Group& g, const IdSet& h, const IdSet& k) {
    std::vector<char> mark(g.order(), 0);
    for (ElemId a : h)
        for (ElemId b : k) mark[g.mul(a, b)] = 1;
    IdSet out;
    for (std::size_t i = 0; i < mark.size(); ++i)
        if (mark[i]) out.push_back(static_cast<ElemId>(i));
    return out;
}

inline bool permutes(const Group& g, const IdSet& h, const IdSet& k) {
    return product(g, h, k) == product(g, k, h);
}

inline IdSet conj_set(const Group& g, const IdSet& h, ElemId x) {
    IdSet out;
    for (ElemId y : h) out.push_back(g.conj(y, x));
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_normal(const Group& g, const IdSet& h, const IdSet& ambient) {
    for (ElemId x : ambient)
        if (conj_set(g, h, x) != h) return false;
    return true;
}

// Maximal subgroups of `h` within a precomputed full lattice.
inline std::vector<IdSet> maximal_in(const std::vector<IdSet>& lattice, const IdSet& h) {
    std::vector<IdSet> inside;
    for (const IdSet& s : lattice)
        if (s.size() < h.size() && subset(s, h)) inside.push_back(s);
    std::vector<IdSet> out;
    for (const IdSet& s : inside) {
        bool covered = false;
        for (const IdSet& t : inside)
            if (t.size() > s.size() && subset(s, t)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(s);
    }
    return out;
}

inline std::vector<IdSet> sylows_of(const Group& g, const std::vector<IdSet>& lattice,
                                    const IdSet& b, std::uint64_t p) {
    std::uint64_t pp = 1;
    std::uint64_t m = b.size();
    while (m % p == 0) {
        m /= p;
        pp *= p;
    }
    std::vector<IdSet> out;
    if (pp == 1) {
        out.push_back({g.identity_id()});
        return out;
    }
    for (const IdSet& s : lattice)
        if (s.size() == pp && subset(s, b)) out.push_back(s);
    return out;
}

inline std::vector<std::uint64_t> primes_of(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    return out;
}

inline bool s_permutable(const Group& g, const std::vector<IdSet>& lattice, const IdSet& h,
                         const IdSet& ambient) {
    for (std::uint64_t p : primes_of(ambient.size()))
        for (const IdSet& syl : sylows_of(g, lattice, ambient, p))
            if (!permutes(g, h, syl)) return false;
    return true;
}

// Literal SS-quasinormality: scan every subgroup B of the ambient group.
inline bool ss_quasinormal(const Group& g, const std::vector<IdSet>& lattice, const IdSet& h,
                           const IdSet& ambient) {
    for (const IdSet& b : lattice) {
        if (!subset(b, ambient)) continue;
        if (product(g, h, b) != ambient) continue;
        bool all = true;
        for (std::uint64_t p : primes_of(b.size())) {
            for (const IdSet& syl : sylows_of(g, lattice, b, p))
                if (!permutes(g, h, syl)) {
                    all = false;
                    break;
                }
            if (!all) break;
        }
        if (all) return true;
    }
    return false;
}

inline bool subnormal(const Group& g, const std::vector<IdSet>& lattice, const IdSet& h,
                      const IdSet& ambient) {
    // breadth-first over chains ambient = K0 |> K1 |> ... |> h inside the lattice
    std::set<IdSet> level{ambient};
    while (!level.empty()) {
        std::set<IdSet> next;
        for (const IdSet& k : level) {
            if (k == h) return true;
            for (const IdSet& l : lattice)
                if (l.size() < k.size() && subset(h, l) && subset(l, k) && is_normal(g, l, k))
                    next.insert(l);
        }
        level = std::move(next);
    }
    return false;
}

inline bool cc_permutable(const Group& g, const std::vector<IdSet>& lattice, const IdSet& a,
                          const IdSet& ambient) {
    for (const IdSet& h : lattice) {
        if (!subset(h, ambient)) continue;
        IdSet gens;
        for (ElemId x : a) gens.push_back(x);
        for (ElemId x : h) gens.push_back(x);
        IdSet jn = close(g, gens);
        bool ok = false;
        for (ElemId x : jn)
            if (permutes(g, a, conj_set(g, h, x))) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

inline IdSet commutator_set(const Group& g, const IdSet& a, const IdSet& b) {
    IdSet gens;
    for (ElemId x : a)
        for (ElemId y : b)
            gens.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return close(g, gens);
}

enum class Kind { central, normal, subnormal, s_permutable, ss_quasinormal, cc_permutable };

// All maximal chains from the whole group to the trivial subgroup.
inline void all_chains_rec(const Group& g, const std::vector<IdSet>& lattice, const IdSet& top,
                           std::vector<IdSet>& cur, std::vector<std::vector<IdSet>>& out) {
    if (top.size() == 1) {
        out.push_back(cur);
        return;
    }
    for (const IdSet& m : maximal_in(lattice, top)) {
        cur.push_back(m);
        all_chains_rec(g, lattice, m, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<IdSet>> all_maximal_chains(const Group& g,
                                                          const std::vector<IdSet>& lattice) {
    IdSet whole;
    for (ElemId x = 0; x < g.order(); ++x) whole.push_back(x);
    std::vector<IdSet> cur{whole};
    std::vector<std::vector<IdSet>> out;
    all_chains_rec(g, lattice, whole, cur, out);
    return out;
}

inline bool chain_satisfies(const Group& g, const std::vector<IdSet>& lattice,
                            const std::vector<IdSet>& chain, Kind kind, bool req_subnormal) {
    IdSet whole = chain.front();
    for (std::size_t i = 1; i < chain.size(); ++i) {
        const IdSet& term = chain[i];
        bool ok = true;
        switch (kind) {
            case Kind::central: ok = subset(commutator_set(g, whole, chain[i - 1]), term); break;
            case Kind::normal: ok = is_normal(g, term, whole); break;
            case Kind::subnormal: ok = subnormal(g, lattice, term, whole); break;
            case Kind::s_permutable: ok = s_permutable(g, lattice, term, whole); break;
            case Kind::ss_quasinormal: ok = ss_quasinormal(g, lattice, term, whole); break;
            case Kind::cc_permutable: ok = cc_permutable(g, lattice, term, whole); break;
        }
        if (ok && req_subnormal) ok = subnormal(g, lattice, term, whole);
        if (!ok) return false;
    }
    return true;
}

inline bool series_exists(const Group& g, Kind kind, bool req_subnormal = false) {
    auto lattice = oracle::all_subgroups(g);
    for (const auto& chain : all_maximal_chains(g, lattice))
        if (chain_satisfies(g, lattice, chain, kind, req_subnormal)) return true;
    return false;
}

} // namespace oracle
