#pragma once

// The permutation action of a group on the right cosets of a subgroup, with
// the induced quotient map. For normal H this realizes G/H.

#include "ssqlab/group.hpp"

#include <memory>
#include <string>
#include <vector>

namespace ssqlab {

class ActionImage {
public:
    ActionImage(const Group& source, GroupPtr image, Subgroup kernel,
                std::vector<ElemId> to_image)
        : source_(&source), image_(std::move(image)), kernel_(std::move(kernel)),
          to_image_(std::move(to_image)) {}

    const Group& source() const { return *source_; }
    const Group& image() const { return *image_; }
    GroupPtr image_ptr() const { return image_; }
    const Subgroup& kernel() const { return kernel_; }

    ElemId map(ElemId source_id) const { return to_image_[source_id]; }

    Subgroup push_forward(const Subgroup& s) const {
        std::vector<ElemId> ids;
        for (ElemId x : s.elems()) ids.push_back(to_image_[x]);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return Subgroup(*image_, std::move(ids));
    }

    Subgroup pull_back(const Subgroup& s) const {
        std::vector<ElemId> ids;
        for (ElemId x = 0; x < source_->order(); ++x)
            if (s.contains_id(to_image_[x])) ids.push_back(x);
        return Subgroup(*source_, std::move(ids));
    }

private:
    const Group* source_;
    GroupPtr image_;
    Subgroup kernel_;
    std::vector<ElemId> to_image_;
};

// Right-multiplication action on the right cosets Hg. Cosets are numbered in
// the order their least element appears, so the construction is deterministic.
inline ActionImage coset_action(const Group& g, const Subgroup& h) {
    if (&h.parent() != &g) throw Error("coset_action: subgroup of a different group");
    const std::size_t n = g.order();
    const std::size_t m = n / h.order();

    std::vector<int> coset_of(n, -1);
    std::vector<ElemId> rep;
    rep.reserve(m);
    for (ElemId x = 0; x < n; ++x) {
        if (coset_of[x] >= 0) continue;
        int c = static_cast<int>(rep.size());
        rep.push_back(x);
        for (ElemId a : h.elems()) coset_of[g.mul(a, x)] = c;
    }

    // induced permutation of cosets for each group element
    auto induced = [&](ElemId x) {
        std::vector<Point> img(m);
        for (std::size_t c = 0; c < m; ++c)
            img[c] = static_cast<Point>(coset_of[g.mul(rep[c], x)]);
        return Permutation(std::move(img));
    };

    GroupSpec ispec;
    ispec.name = g.name() + "/" + std::to_string(h.order());
    ispec.degree = m;
    for (ElemId gid : g.generator_ids()) ispec.generators.push_back(induced(gid));
    GroupPtr image = Group::generate(std::move(ispec), /*cap=*/n);

    std::vector<ElemId> to_image(n);
    std::vector<ElemId> kernel_ids;
    for (ElemId x = 0; x < n; ++x) {
        Permutation p = induced(x);
        to_image[x] = image->index_of(p);
        if (p.is_identity()) kernel_ids.push_back(x);
    }
    if (image->order() * kernel_ids.size() != n)
        throw Error("coset action: |G| != |image| * |kernel|"); // unreachable

    return ActionImage(g, image, Subgroup(g, std::move(kernel_ids)), std::move(to_image));
}

} // namespace ssqlab
