#pragma once

// Queries over the materialized subgroup lattice: product sets, maximal
// subgroups, Sylow subgroups, normal and minimal normal subgroups.

#include "ssqlab/group.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ssqlab {

// The set HK = { h k : h in H, k in K }. Not a subgroup in general. The
// product formula |HK| = |H| |K| / |H n K| is checked on every construction.
struct ProductSet {
    Subgroup left;
    Subgroup right;
    std::vector<ElemId> elems; // sorted
};

inline std::vector<ElemId> product_ids(const Subgroup& h, const Subgroup& k) {
    require_same_parent(h, k);
    const Group& g = h.parent();
    std::vector<char> mark(g.order(), 0);
    for (ElemId a : h.elems())
        for (ElemId b : k.elems()) mark[g.mul(a, b)] = 1;
    std::vector<ElemId> out;
    for (std::size_t i = 0; i < mark.size(); ++i)
        if (mark[i]) out.push_back(static_cast<ElemId>(i));
    return out;
}

inline ProductSet product_set(const Subgroup& h, const Subgroup& k) {
    ProductSet ps{h, k, product_ids(h, k)};
    std::uint64_t expect =
        static_cast<std::uint64_t>(h.order()) * k.order() / intersect(h, k).order();
    if (ps.elems.size() != expect) throw Error("product formula violated"); // unreachable
    return ps;
}

inline const std::vector<Subgroup>& all_subgroups(const Group& g) { return g.subgroups(); }

// Subgroups of `h`, drawn from the parent lattice, in lattice order.
inline std::vector<Subgroup> subgroups_of(const Subgroup& h) {
    std::vector<Subgroup> out;
    for (const Subgroup& s : h.parent().subgroups())
        if (s.order() <= h.order() && h.contains(s)) out.push_back(s);
    return out;
}

// Proper subgroups of `h` maximal under inclusion. Empty for the trivial subgroup.
inline std::vector<Subgroup> maximal_subgroups(const Subgroup& h) {
    std::vector<Subgroup> inside;
    for (const Subgroup& s : h.parent().subgroups())
        if (s.order() < h.order() && h.contains(s)) inside.push_back(s);
    std::vector<Subgroup> out;
    for (const Subgroup& s : inside) {
        bool covered = false;
        for (const Subgroup& t : inside)
            if (t.order() > s.order() && t.contains(s)) {
                covered = true;
                break;
            }
        if (!covered) out.push_back(s);
    }
    return out;
}

inline std::vector<Subgroup> maximal_subgroups(const Group& g) {
    return maximal_subgroups(g.whole());
}

// All Sylow p-subgroups of `h` (the full conjugacy class), in lattice order.
inline std::vector<Subgroup> sylow_subgroups_all(const Subgroup& h, std::uint64_t p) {
    if (!is_prime(p)) throw Error("sylow: " + std::to_string(p) + " is not prime");
    const std::uint64_t target = p_part(h.order(), p);
    std::vector<Subgroup> out;
    if (target == 1) {
        out.push_back(h.parent().trivial());
        return out;
    }
    for (const Subgroup& s : h.parent().subgroups())
        if (s.order() == target && h.contains(s)) out.push_back(s);
    return out;
}

inline std::vector<Subgroup> sylow_subgroups_all(const Group& g, std::uint64_t p) {
    return sylow_subgroups_all(g.whole(), p);
}

// First Sylow p-subgroup in lattice order; the trivial subgroup when p ∤ |h|.
inline Subgroup sylow_subgroup(const Subgroup& h, std::uint64_t p) {
    return sylow_subgroups_all(h, p).front();
}

inline Subgroup sylow_subgroup(const Group& g, std::uint64_t p) {
    return sylow_subgroup(g.whole(), p);
}

inline std::vector<Subgroup> normal_subgroups(const Group& g) {
    std::vector<Subgroup> out;
    const Subgroup whole = g.whole();
    for (const Subgroup& s : g.subgroups())
        if (is_normal_in(s, whole)) out.push_back(s);
    return out;
}

inline std::vector<Subgroup> minimal_normal_subgroups(const Group& g) {
    std::vector<Subgroup> normals = normal_subgroups(g);
    std::vector<Subgroup> out;
    for (const Subgroup& n : normals) {
        if (n.is_trivial()) continue;
        bool minimal = true;
        for (const Subgroup& m : normals) {
            if (m.is_trivial() || m == n) continue;
            if (m.order() < n.order() && n.contains(m)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(n);
    }
    return out;
}

} // namespace ssqlab
