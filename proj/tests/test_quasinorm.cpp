#include "ssqlab/corpus.hpp"
#include "ssqlab/quasinorm.hpp"
#include "ssqlab/structure.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>

using namespace ssqlab;

namespace {

Subgroup of_order(const Group& g, std::size_t n) {
    for (const Subgroup& s : g.subgroups())
        if (s.order() == n) return s;
    throw Error("no subgroup of that order");
}

Subgroup span_of(const Group& g, std::initializer_list<const char*> gens) {
    std::vector<ElemId> ids;
    for (const char* s : gens) ids.push_back(g.index_of(parse_permutation(s, g.degree())));
    return generated_subgroup(g, ids);
}

// Re-verify an SS witness from scratch: HB covers the ambient subgroup and the
// checked list contains the complete Sylow classes of B, all permuting with H.
void check_witness(const Subgroup& h, const Subgroup& ambient, const SSWitness& w) {
    const Subgroup& b = w.subgroup_b;
    auto hb = product_ids(h, b);
    REQUIRE(hb == ambient.elems());
    for (std::uint64_t p : prime_divisors(b.order())) {
        for (const Subgroup& syl : sylow_subgroups_all(b, p)) {
            bool listed = false;
            for (const auto& [q, s] : w.checked_sylows)
                if (q == p && s == syl) listed = true;
            REQUIRE(listed);
            auto hk = product_ids(h, syl);
            auto kh = product_ids(syl, h);
            REQUIRE(hk == kh);
        }
    }
}

// Deliberately weakened SS check: one Sylow representative per prime instead
// of the full conjugacy class. Exists only to prove the full check is needed.
bool ss_one_representative(const Subgroup& h, const Subgroup& b, const Subgroup& ambient) {
    if (product_ids(h, b) != ambient.elems()) return false;
    for (std::uint64_t p : prime_divisors(b.order()))
        if (!permutes(h, sylow_subgroup(b, p))) return false;
    return true;
}

bool ss_full(const Subgroup& h, const Subgroup& b, const Subgroup& ambient) {
    if (product_ids(h, b) != ambient.elems()) return false;
    for (std::uint64_t p : prime_divisors(b.order()))
        for (const Subgroup& syl : sylow_subgroups_all(b, p))
            if (!permutes(h, syl)) return false;
    return true;
}

} // namespace

TEST_CASE("permutes") {
    GroupPtr d6 = corpus_builtin("D6"); // S3
    Subgroup c2 = span_of(*d6, {"(1 2)"});
    Subgroup c3 = of_order(*d6, 3);
    CHECK(permutes(c2, c3)); // HK = S3
    CHECK(permutes(c2, d6->whole()));
    CHECK(permutes(c2, c2));

    GroupPtr a4 = corpus_builtin("A4");
    Subgroup h = span_of(*a4, {"(1 2)(3 4)"});
    Subgroup k = span_of(*a4, {"(1 2 3)"});
    CHECK(!permutes(h, k)); // |HK| = 6 but A4 has no subgroup of order 6
    CHECK(permutes(h, a4->whole()));

    GroupPtr s4 = corpus_builtin("S4");
    CHECK_THROWS_AS(permutes(h, s4->trivial()), Error);
}

TEST_CASE("permutes is equivalent to elementwise HK = KH") {
    for (const char* name : {"D6", "A4", "S4", "Q8", "C3:C4"}) {
        GroupPtr g = corpus_builtin(name);
        for (const Subgroup& h : g->subgroups())
            for (const Subgroup& k : g->subgroups()) {
                INFO(name << " |H|=" << h.order() << " |K|=" << k.order());
                CHECK(permutes(h, k) == (product_ids(h, k) == product_ids(k, h)));
            }
    }
}

TEST_CASE("s-permutability") {
    GroupPtr a4 = corpus_builtin("A4");
    CHECK(is_s_permutable(of_order(*a4, 4), *a4)); // normal V4
    CHECK(is_s_permutable(a4->whole(), *a4));
    CHECK(!is_s_permutable(of_order(*a4, 3), *a4));

    GroupPtr d6 = corpus_builtin("D6");
    CHECK(!is_s_permutable(span_of(*d6, {"(1 2)"}), *d6)); // fails against a conjugate Sylow 2
    CHECK(is_s_permutable(of_order(*d6, 3), *d6));
}

TEST_CASE("ss-quasinormality on A4 (the motivating example)") {
    GroupPtr a4 = corpus_builtin("A4");

    SSResult h3 = is_ss_quasinormal(of_order(*a4, 3), *a4);
    REQUIRE(h3.ok);
    REQUIRE(h3.witness.has_value());
    CHECK(h3.witness->subgroup_b.order() == 4); // minimal witness: B = V4
    check_witness(of_order(*a4, 3), a4->whole(), *h3.witness);

    SSResult l2 = is_ss_quasinormal(of_order(*a4, 2), *a4);
    CHECK(!l2.ok);
    CHECK(!l2.witness.has_value());

    SSResult v4 = is_ss_quasinormal(of_order(*a4, 4), *a4);
    REQUIRE(v4.ok);
    CHECK(v4.witness->subgroup_b.is_whole()); // normal -> s-permutable -> B = G
    check_witness(of_order(*a4, 4), a4->whole(), *v4.witness);
}

TEST_CASE("trivial and degenerate ss cases") {
    GroupPtr g = corpus_builtin("S4");
    SSResult triv = is_ss_quasinormal(g->trivial(), *g);
    REQUIRE(triv.ok);
    CHECK(triv.witness->subgroup_b.is_whole());

    SSResult whole = is_ss_quasinormal(g->whole(), *g);
    CHECK(whole.ok);

    GroupPtr one = corpus_builtin("C1");
    CHECK(is_ss_quasinormal(one->whole(), *one).ok); // trivial in trivial

    // H relative to itself as ambient
    Subgroup s3 = of_order(*g, 6);
    CHECK(is_ss_quasinormal(s3, s3).ok);
    CHECK_THROWS_AS(is_ss_quasinormal(g->whole(), s3), Error); // H not inside ambient
}

TEST_CASE("implication chain: normal => s-permutable => ss-quasinormal") {
    for (const auto& e : corpus_default()) {
        const Group& g = *e.group;
        if (g.order() > 24) continue;
        const Subgroup whole = g.whole();
        for (const Subgroup& h : g.subgroups()) {
            INFO(e.name << " |H|=" << h.order());
            const bool normal = is_normal_in(h, whole);
            const bool sperm = is_s_permutable(h, whole);
            if (normal) CHECK(sperm);
            if (sperm) {
                SSResult ss = is_ss_quasinormal(h, whole);
                REQUIRE(ss.ok);
                CHECK(ss.witness->subgroup_b.is_whole()); // witness B = G on the fast path
            }
        }
    }
}

TEST_CASE("ss-quasinormality agrees with the longhand oracle on order <= 24") {
    for (const auto& e : corpus_default()) {
        const Group& g = *e.group;
        if (g.order() > 24) continue;
        auto lattice = oracle::all_subgroups(g);
        const Subgroup whole = g.whole();
        for (const Subgroup& h : g.subgroups()) {
            INFO(e.name << " |H|=" << h.order());
            CHECK(is_ss_quasinormal(h, whole).ok ==
                  oracle::ss_quasinormal(g, lattice, h.elems(), whole.elems()));
            CHECK(is_s_permutable(h, whole) ==
                  oracle::s_permutable(g, lattice, h.elems(), whole.elems()));
        }
    }
}

TEST_CASE("every returned witness re-verifies") {
    for (const char* name : {"A4", "S4", "SL(2,3)", "D12", "C3:C4"}) {
        GroupPtr g = corpus_builtin(name);
        const Subgroup whole = g->whole();
        for (const Subgroup& h : g->subgroups()) {
            SSResult r = is_ss_quasinormal(h, whole);
            if (!r.ok) continue;
            INFO(name << " |H|=" << h.order());
            check_witness(h, whole, *r.witness);
        }
    }
}

TEST_CASE("checking one Sylow representative per prime is NOT equivalent") {
    // The SS definition quantifies over every Sylow subgroup of B. A weakened
    // check that looks at one representative per prime must disagree with the
    // full check for some (H, B) pair somewhere on the corpus; if it never
    // does, this mutation test has gone vacuous and fails loudly.
    std::size_t disagreements = 0;
    for (const auto& e : corpus_default()) {
        const Group& g = *e.group;
        if (g.order() > 24) continue;
        const Subgroup whole = g.whole();
        for (const Subgroup& h : g.subgroups())
            for (const Subgroup& b : g.subgroups()) {
                const bool weak = ss_one_representative(h, b, whole);
                const bool full = ss_full(h, b, whole);
                if (full) CHECK(weak); // full check is strictly stronger
                if (weak != full) ++disagreements;
            }
    }
    CHECK(disagreements > 0);
}

TEST_CASE("cc-permutability") {
    GroupPtr d6 = corpus_builtin("D6");
    CHECK(is_cc_permutable(span_of(*d6, {"(1 2)"}), *d6));
    CHECK(is_cc_permutable(of_order(*d6, 3), *d6)); // normal
    CHECK(is_cc_permutable(d6->whole(), *d6));      // A = G

    GroupPtr a4 = corpus_builtin("A4");
    CHECK(is_cc_permutable(of_order(*a4, 4), *a4)); // normal
    CHECK(!is_cc_permutable(of_order(*a4, 2), *a4));
    CHECK(!is_cc_permutable(of_order(*a4, 3), *a4));

    // normal subgroups are always cc-permutable
    for (const char* name : {"S4", "Q8", "C3:C4"}) {
        GroupPtr g = corpus_builtin(name);
        for (const Subgroup& n : normal_subgroups(*g)) CHECK(is_cc_permutable(n, *g));
    }
}

TEST_CASE("cc-permutability agrees with the longhand oracle on small groups") {
    for (const char* name : {"D6", "A4", "Q8", "C3:C4", "C12"}) {
        GroupPtr g = corpus_builtin(name);
        auto lattice = oracle::all_subgroups(*g);
        const Subgroup whole = g->whole();
        for (const Subgroup& a : g->subgroups()) {
            INFO(name << " |A|=" << a.order());
            CHECK(is_cc_permutable(a, whole) ==
                  oracle::cc_permutable(*g, lattice, a.elems(), whole.elems()));
        }
    }
}
