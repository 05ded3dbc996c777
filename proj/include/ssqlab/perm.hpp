#pragma once

// Permutations of {1..n}, stored 0-based. Composition convention: (a * b)
// applies a first, then b. All text I/O uses 1-based disjoint cycle notation.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ssqlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Point = std::uint16_t; // 0-based point

class Permutation {
public:
    Permutation() = default;

    // images[i] is the image of point i; must be a bijection.
    explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (Point v : images_) {
            if (v >= images_.size() || seen[v])
                throw Error("permutation images are not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t degree) {
        Permutation p;
        p.images_.resize(degree);
        std::iota(p.images_.begin(), p.images_.end(), Point{0});
        return p;
    }

    std::size_t degree() const { return images_.size(); }
    Point apply(Point x) const { return images_[x]; }
    const std::vector<Point>& images() const { return images_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    // this first, then rhs
    Permutation then(const Permutation& rhs) const {
        if (degree() != rhs.degree()) throw Error("degree mismatch in composition");
        Permutation out;
        out.images_.resize(degree());
        for (std::size_t i = 0; i < degree(); ++i)
            out.images_[i] = rhs.images_[images_[i]];
        return out;
    }

    Permutation inverse() const {
        Permutation out;
        out.images_.resize(degree());
        for (std::size_t i = 0; i < degree(); ++i)
            out.images_[images_[i]] = static_cast<Point>(i);
        return out;
    }

    unsigned element_order() const {
        Permutation acc = *this;
        unsigned k = 1;
        while (!acc.is_identity()) {
            acc = acc.then(*this);
            ++k;
        }
        return k;
    }

    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<Point> images_;
};

inline Permutation compose(const Permutation& a, const Permutation& b) { return a.then(b); }

// Disjoint-cycle parser. Accepts "(1 2 3)(4 5)" with points separated by
// spaces or commas; "()" is the identity. Unmentioned points are fixed.
inline Permutation parse_permutation(std::string_view text, std::size_t degree) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree, false);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ',')) ++i;
    };
    skip_ws();
    if (i == text.size()) throw Error("empty permutation text");
    bool any_cycle = false;
    while (i < text.size()) {
        if (text[i] != '(') throw Error("expected '(' in cycle notation: " + std::string(text));
        ++i;
        std::vector<Point> cycle;
        for (;;) {
            skip_ws();
            if (i == text.size()) throw Error("unterminated cycle: " + std::string(text));
            if (text[i] == ')') { ++i; break; }
            if (text[i] < '0' || text[i] > '9')
                throw Error("unexpected character in cycle: " + std::string(text));
            unsigned long v = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                v = v * 10 + static_cast<unsigned long>(text[i] - '0');
                ++i;
            }
            if (v < 1 || v > degree)
                throw Error("point " + std::to_string(v) + " out of range 1.." + std::to_string(degree));
            Point pt = static_cast<Point>(v - 1);
            if (used[pt]) throw Error("repeated point " + std::to_string(v));
            used[pt] = true;
            cycle.push_back(pt);
        }
        any_cycle = true;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            images[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    if (!any_cycle) throw Error("no cycles found: " + std::string(text));
    return Permutation(std::move(images));
}

// Canonical form: cycles ordered by smallest moved point, each cycle starting
// at its smallest point, fixed points omitted; identity prints as "()".
inline std::string format_permutation(const Permutation& p) {
    std::string out;
    std::vector<bool> done(p.degree(), false);
    for (std::size_t i = 0; i < p.degree(); ++i) {
        if (done[i] || p.apply(static_cast<Point>(i)) == i) continue;
        out += '(';
        Point j = static_cast<Point>(i);
        bool first = true;
        do {
            if (!first) out += ' ';
            out += std::to_string(j + 1);
            done[j] = true;
            j = p.apply(j);
            first = false;
        } while (j != i);
        out += ')';
    }
    if (out.empty()) return "()";
    return out;
}

} // namespace ssqlab
