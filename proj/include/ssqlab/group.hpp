#pragma once

// Fully enumerated finite permutation groups. Every group of interest here has
// order at most a few hundred, so we keep the complete element set, a
// multiplication table, and (on demand) the complete subgroup lattice. Element
// ids are ranks in the lexicographic order of image vectors, which makes a
// sorted id vector the canonical form of a subgroup.

#include "ssqlab/arith.hpp"
#include "ssqlab/perm.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace ssqlab {

using ElemId = std::uint16_t;

inline constexpr std::size_t kDefaultOrderCap = 10000;
// Groups up to this order get an order^2 multiplication table.
inline constexpr std::size_t kMulTableLimit = 2048;

struct GroupSpec {
    std::string name;
    std::size_t degree = 0;
    std::vector<Permutation> generators;

    void validate() const {
        if (degree == 0) throw Error("group spec '" + name + "' has degree 0");
        if (generators.empty()) throw Error("group spec '" + name + "' has no generators");
        for (const auto& g : generators)
            if (g.degree() != degree)
                throw Error("generator degree mismatch in group spec '" + name + "'");
    }
};

class Subgroup;

class Group {
public:
    // Breadth-first closure of the generators. Throws if the order exceeds cap.
    static std::shared_ptr<const Group> generate(GroupSpec spec,
                                                 std::size_t cap = kDefaultOrderCap);

    Group(const Group&) = delete;
    Group& operator=(const Group&) = delete;

    const GroupSpec& spec() const { return spec_; }
    const std::string& name() const { return spec_.name; }
    std::size_t degree() const { return spec_.degree; }
    std::size_t order() const { return elements_.size(); }

    // Elements in canonical (image-lexicographic) order; id == rank.
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(ElemId id) const { return elements_[id]; }
    ElemId identity_id() const { return 0; } // identity is the lex minimum

    // Ids in the order breadth-first closure first discovered them.
    const std::vector<ElemId>& insertion_order() const { return insertion_order_; }

    const std::vector<ElemId>& generator_ids() const { return generator_ids_; }

    std::optional<ElemId> find(const Permutation& p) const {
        auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
        if (it == elements_.end() || *it != p) return std::nullopt;
        return static_cast<ElemId>(it - elements_.begin());
    }
    ElemId index_of(const Permutation& p) const {
        auto id = find(p);
        if (!id) throw Error("permutation is not an element of group '" + name() + "'");
        return *id;
    }

    ElemId mul(ElemId a, ElemId b) const { // a first, then b
        if (!mul_table_.empty()) return mul_table_[a * order() + b];
        return index_of(elements_[a].then(elements_[b]));
    }
    ElemId inv(ElemId a) const { return inverse_[a]; }
    ElemId conj(ElemId x, ElemId g) const { return mul(mul(inverse_[g], x), g); } // g^-1 x g

    Subgroup whole() const;
    Subgroup trivial() const;

    // The complete subgroup lattice, sorted by (order, canonical elements).
    // Computed once per group by bottom-up cyclic extension; thread-safe.
    const std::vector<Subgroup>& subgroups() const;

private:
    Group() = default;

    GroupSpec spec_;
    std::vector<Permutation> elements_;
    std::vector<ElemId> insertion_order_;
    std::vector<ElemId> generator_ids_;
    std::vector<ElemId> inverse_;
    std::vector<ElemId> mul_table_;

    mutable std::once_flag lattice_once_;
    mutable std::vector<Subgroup> lattice_;

    void build_lattice() const;
};

using GroupPtr = std::shared_ptr<const Group>;

// A subgroup is its parent plus the sorted vector of member ids (the canonical
// form). Instances are cheap values; the parent group must outlive them.
class Subgroup {
public:
    Subgroup(const Group& parent, std::vector<ElemId> elems)
        : parent_(&parent), elems_(std::move(elems)) {
        if (elems_.empty() || elems_[0] != parent.identity_id())
            throw Error("subgroup must contain the identity");
        for (std::size_t i = 0; i + 1 < elems_.size(); ++i)
            if (elems_[i] >= elems_[i + 1]) throw Error("subgroup ids must be sorted and distinct");
        if (elems_.back() >= parent.order()) throw Error("subgroup id out of range");
        for (ElemId x : elems_)
            if (!contains_id(parent.inv(x))) throw Error("subgroup is not closed under inverse");
    }

    const Group& parent() const { return *parent_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<ElemId>& elems() const { return elems_; }

    bool is_trivial() const { return elems_.size() == 1; }
    bool is_whole() const { return elems_.size() == parent_->order(); }

    bool contains_id(ElemId x) const {
        return std::binary_search(elems_.begin(), elems_.end(), x);
    }
    bool contains(const Subgroup& other) const { // other <= this
        return std::includes(elems_.begin(), elems_.end(),
                             other.elems_.begin(), other.elems_.end());
    }

    bool operator==(const Subgroup& rhs) const { return elems_ == rhs.elems_; }
    // Lattice order: by order, then by canonical element sequence.
    bool operator<(const Subgroup& rhs) const {
        if (elems_.size() != rhs.elems_.size()) return elems_.size() < rhs.elems_.size();
        return elems_ < rhs.elems_;
    }

    // Small deterministic generating set: a single generator when the subgroup
    // is cyclic, otherwise greedy accumulation in canonical element order.
    std::vector<ElemId> generator_ids() const;
    std::vector<Permutation> generators() const {
        std::vector<Permutation> out;
        for (ElemId g : generator_ids()) out.push_back(parent_->element(g));
        return out;
    }
    std::vector<std::string> generator_strings() const {
        std::vector<std::string> out;
        for (const auto& g : generators()) out.push_back(format_permutation(g));
        return out;
    }

private:
    const Group* parent_;
    std::vector<ElemId> elems_;
};

namespace detail {

struct IdVecHash {
    std::size_t operator()(const std::vector<ElemId>& v) const {
        std::size_t h = 1469598103934665603ull; // FNV-1a
        for (ElemId x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Closure of a generating id set inside a fully enumerated group.
inline std::vector<ElemId> close_ids(const Group& g, const std::vector<ElemId>& gens) {
    std::vector<char> seen(g.order(), 0);
    std::vector<ElemId> queue;
    seen[g.identity_id()] = 1;
    queue.push_back(g.identity_id());
    for (ElemId x : gens)
        if (!seen[x]) {
            seen[x] = 1;
            queue.push_back(x);
        }
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (ElemId x : gens) {
            ElemId p = g.mul(queue[qi], x);
            if (!seen[p]) {
                seen[p] = 1;
                queue.push_back(p);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

} // namespace detail

inline Subgroup generated_subgroup(const Group& g, const std::vector<ElemId>& gens) {
    return Subgroup(g, detail::close_ids(g, gens));
}

inline Subgroup Group::whole() const {
    std::vector<ElemId> ids(order());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<ElemId>(i);
    return Subgroup(*this, std::move(ids));
}

inline Subgroup Group::trivial() const {
    return Subgroup(*this, {identity_id()});
}

inline std::vector<ElemId> Subgroup::generator_ids() const {
    if (is_trivial()) return {parent_->identity_id()};
    for (ElemId x : elems_) { // single generator if the subgroup is cyclic
        if (x == parent_->identity_id()) continue;
        ElemId cur = x;
        std::size_t n = 1;
        while (cur != parent_->identity_id()) {
            cur = parent_->mul(cur, x);
            ++n;
        }
        if (n == order()) return {x};
    }
    std::vector<ElemId> gens;
    std::vector<ElemId> span{parent_->identity_id()};
    for (ElemId x : elems_) {
        if (std::binary_search(span.begin(), span.end(), x)) continue;
        gens.push_back(x);
        span = detail::close_ids(*parent_, gens);
        if (span.size() == order()) break;
    }
    return gens;
}

inline std::shared_ptr<const Group> Group::generate(GroupSpec spec, std::size_t cap) {
    spec.validate();
    // element ids are 16-bit; a larger user cap is still bounded by that
    cap = std::min(cap, static_cast<std::size_t>(std::numeric_limits<ElemId>::max()));
    auto g = std::shared_ptr<Group>(new Group());
    g->spec_ = std::move(spec);

    const auto& gens = g->spec_.generators;
    std::vector<Permutation> discovered;
    std::unordered_set<std::string> seen; // degree-sized byte keys
    auto key = [](const Permutation& p) {
        return std::string(reinterpret_cast<const char*>(p.images().data()),
                           p.images().size() * sizeof(Point));
    };
    std::deque<Permutation> queue;
    Permutation ident = Permutation::identity(g->spec_.degree);
    seen.insert(key(ident));
    discovered.push_back(ident);
    queue.push_back(ident);
    for (const auto& gen : gens)
        if (seen.insert(key(gen)).second) {
            discovered.push_back(gen);
            queue.push_back(gen);
        }
    while (!queue.empty()) {
        Permutation cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& gen : gens) {
            Permutation p = cur.then(gen);
            if (seen.insert(key(p)).second) {
                if (discovered.size() >= cap)
                    throw Error("group '" + g->spec_.name + "' exceeds order cap " +
                                std::to_string(cap));
                discovered.push_back(p);
                queue.push_back(std::move(p));
            }
        }
    }

    g->elements_ = discovered;
    std::sort(g->elements_.begin(), g->elements_.end());
    auto rank = [&](const Permutation& p) {
        return static_cast<ElemId>(
            std::lower_bound(g->elements_.begin(), g->elements_.end(), p) - g->elements_.begin());
    };
    g->insertion_order_.reserve(discovered.size());
    for (const auto& p : discovered) g->insertion_order_.push_back(rank(p));
    for (const auto& gen : gens) g->generator_ids_.push_back(rank(gen));

    const std::size_t n = g->elements_.size();
    g->inverse_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g->inverse_[i] = rank(g->elements_[i].inverse());
    if (n <= kMulTableLimit) {
        g->mul_table_.resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                g->mul_table_[i * n + j] = rank(g->elements_[i].then(g->elements_[j]));
    }
    return g;
}

// Bottom-up cyclic extension: seed with all cyclic subgroups, then repeatedly
// join known subgroups with cyclic ones (closure of the union) until nothing
// new appears. Complete because every subgroup is a join of cyclic subgroups.
inline void Group::build_lattice() const {
    struct Entry {
        std::vector<ElemId> elems;
        std::vector<ElemId> gens;
    };
    std::vector<Entry> found;
    std::unordered_set<std::vector<ElemId>, detail::IdVecHash> dedup;

    auto add = [&](std::vector<ElemId> elems, std::vector<ElemId> gens) {
        if (dedup.insert(elems).second)
            found.push_back({std::move(elems), std::move(gens)});
    };

    add({identity_id()}, {identity_id()});
    std::vector<std::size_t> cyclic_ix;
    for (ElemId x = 0; x < order(); ++x) {
        if (x == identity_id()) continue;
        auto elems = detail::close_ids(*this, {x});
        if (dedup.insert(elems).second) {
            found.push_back({std::move(elems), {x}});
            cyclic_ix.push_back(found.size() - 1);
        }
    }

    for (std::size_t i = 0; i < found.size(); ++i) {
        for (std::size_t ci : cyclic_ix) {
            ElemId cgen = found[ci].gens[0];
            if (std::binary_search(found[i].elems.begin(), found[i].elems.end(), cgen)) continue;
            std::vector<ElemId> gens = found[i].gens;
            gens.push_back(cgen);
            auto elems = detail::close_ids(*this, gens);
            add(std::move(elems), std::move(gens));
        }
    }

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (auto& e : found) out.emplace_back(*this, std::move(e.elems));
    std::sort(out.begin(), out.end());
    lattice_ = std::move(out);
}

inline const std::vector<Subgroup>& Group::subgroups() const {
    std::call_once(lattice_once_, [this] { build_lattice(); });
    return lattice_;
}

// ---- basic subgroup operations ----

inline void require_same_parent(const Subgroup& a, const Subgroup& b) {
    if (&a.parent() != &b.parent()) throw Error("subgroups have different parent groups");
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    std::vector<ElemId> ids;
    std::set_intersection(a.elems().begin(), a.elems().end(),
                          b.elems().begin(), b.elems().end(), std::back_inserter(ids));
    return Subgroup(a.parent(), std::move(ids));
}

inline Subgroup conjugate(const Subgroup& h, ElemId g) {
    const Group& G = h.parent();
    std::vector<ElemId> ids;
    ids.reserve(h.order());
    for (ElemId x : h.elems()) ids.push_back(G.conj(x, g));
    std::sort(ids.begin(), ids.end());
    return Subgroup(G, std::move(ids));
}

// Join <A, B> inside the common parent.
inline Subgroup join(const Subgroup& a, const Subgroup& b) {
    require_same_parent(a, b);
    std::vector<ElemId> gens = a.generator_ids();
    for (ElemId g : b.generator_ids()) gens.push_back(g);
    return generated_subgroup(a.parent(), gens);
}

// True iff h^g == h for every generator g of the ambient subgroup.
inline bool is_normal_in(const Subgroup& h, const Subgroup& ambient) {
    require_same_parent(h, ambient);
    std::vector<ElemId> gens = ambient.is_whole() ? ambient.parent().generator_ids()
                                                  : ambient.generator_ids();
    for (ElemId g : gens)
        for (ElemId x : h.elems())
            if (!h.contains_id(h.parent().conj(x, g))) return false;
    return true;
}

} // namespace ssqlab
