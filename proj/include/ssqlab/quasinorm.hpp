#pragma once

// Subgroup permutability predicates: HK = KH, S-permutability (permutes with
// every Sylow subgroup of the ambient group), SS-quasinormality (there is a
// supplement B with ambient = HB such that H permutes with every Sylow
// subgroup of B), and complete conditional permutability.
//
// The SS definition quantifies over the full conjugacy class of Sylow
// p-subgroups of B for every prime p dividing |B|; checking a single
// representative per prime is NOT equivalent, and the test suite keeps a
// deliberately weakened variant around to prove the distinction is real.

#include "ssqlab/arith.hpp"
#include "ssqlab/group.hpp"
#include "ssqlab/lattice.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace ssqlab {

// HK = KH as sets, i.e. HK is a subgroup. Since (HK)^-1 = KH, this is the
// same as HK being closed under inversion, which needs only one product set.
inline bool permutes(const Subgroup& h, const Subgroup& k) {
    require_same_parent(h, k);
    const Group& g = h.parent();
    std::vector<char> mark(g.order(), 0);
    for (ElemId a : h.elems())
        for (ElemId b : k.elems()) mark[g.mul(a, b)] = 1;
    for (std::size_t x = 0; x < mark.size(); ++x)
        if (mark[x] && !mark[g.inv(static_cast<ElemId>(x))]) return false;
    return true;
}

// Evidence that H is SS-quasinormal: the supplement B together with every
// Sylow subgroup of B that was confirmed to permute with H.
struct SSWitness {
    Subgroup subgroup_b;
    std::vector<std::pair<std::uint64_t, Subgroup>> checked_sylows;
};

namespace detail {

// Check H against the full Sylow class of `scope` for every prime dividing
// |scope|; on success report the checked pairs.
inline std::optional<std::vector<std::pair<std::uint64_t, Subgroup>>>
permutes_with_all_sylows(const Subgroup& h, const Subgroup& scope) {
    std::vector<std::pair<std::uint64_t, Subgroup>> checked;
    for (std::uint64_t p : prime_divisors(scope.order()))
        for (const Subgroup& syl : sylow_subgroups_all(scope, p)) {
            if (!permutes(h, syl)) return std::nullopt;
            checked.emplace_back(p, syl);
        }
    return checked;
}

} // namespace detail

// H permutes with every Sylow subgroup of the ambient subgroup.
inline bool is_s_permutable(const Subgroup& h, const Subgroup& ambient) {
    require_same_parent(h, ambient);
    if (!ambient.contains(h)) throw Error("s-permutable: H is not inside the ambient subgroup");
    return detail::permutes_with_all_sylows(h, ambient).has_value();
}
inline bool is_s_permutable(const Subgroup& h, const Group& g) {
    return is_s_permutable(h, g.whole());
}

struct SSResult {
    bool ok = false;
    std::optional<SSWitness> witness; // populated exactly when ok
};

// H is SS-quasinormal in `ambient` iff some B <= ambient gives ambient = HB
// with H permuting with every Sylow subgroup of B. S-permutable subgroups get
// the witness B = ambient; otherwise candidates are scanned in lattice order,
// and only B with |H||B| = |ambient||H n B| can satisfy HB = ambient.
inline SSResult is_ss_quasinormal(const Subgroup& h, const Subgroup& ambient) {
    require_same_parent(h, ambient);
    if (!ambient.contains(h)) throw Error("ss-quasinormal: H is not inside the ambient subgroup");

    if (auto checked = detail::permutes_with_all_sylows(h, ambient))
        return {true, SSWitness{ambient, std::move(*checked)}};

    const std::uint64_t target = ambient.order();
    for (const Subgroup& b : h.parent().subgroups()) {
        if (!ambient.contains(b)) continue;
        const std::uint64_t product =
            static_cast<std::uint64_t>(h.order()) * b.order() / intersect(h, b).order();
        if (product != target) continue;
        if (auto checked = detail::permutes_with_all_sylows(h, b))
            return {true, SSWitness{b, std::move(*checked)}};
    }
    return {false, std::nullopt};
}
inline SSResult is_ss_quasinormal(const Subgroup& h, const Group& g) {
    return is_ss_quasinormal(h, g.whole());
}

// A is completely conditionally permutable: for every subgroup H of the
// ambient group there is g in <A, H> with A H^g = H^g A.
inline bool is_cc_permutable(const Subgroup& a, const Subgroup& ambient) {
    require_same_parent(a, ambient);
    if (!ambient.contains(a)) throw Error("cc-permutable: A is not inside the ambient subgroup");
    for (const Subgroup& h : a.parent().subgroups()) {
        if (!ambient.contains(h)) continue;
        const Subgroup j = join(a, h);
        bool found = false;
        for (ElemId g : j.elems())
            if (permutes(a, conjugate(h, g))) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}
inline bool is_cc_permutable(const Subgroup& a, const Group& g) {
    return is_cc_permutable(a, g.whole());
}

} // namespace ssqlab
