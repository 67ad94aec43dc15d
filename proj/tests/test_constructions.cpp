#include <doctest.h>

#include "kripke/constructions.hpp"
#include "kripke/enumerate.hpp"
#include "kripke/errors.hpp"
#include "kripke/named.hpp"
#include "kripke/semantics.hpp"
#include "oracles.hpp"

using namespace kripke;

namespace {

WorldSet S(const char* bits) { return WorldSet::from_bitstring(bits); }

}  // namespace

TEST_CASE("products") {
    CHECK(product(uni_chain(2), uni_singleton()) == lift_unimodal(uni_chain(2)));
    Frame r = product(uni_cluster(2), uni_cluster(2));
    CHECK(r == rect(2, 2));
    CHECK(frame_property(r, "com"));
    CHECK(frame_property(r, "cr"));
    Frame p = product(uni_chain(2), uni_chain(2));
    CHECK(valid(p, Formula::conj(named_formula("com"), named_formula("chr"))));
    // (a,b) -> a*|g|+b; R1 moves a, R2 moves b.
    Frame q = product(uni_chain(2), uni_chain(3));
    CHECK(q.related(Modality::One, 1, 4));   // (0,1) -> (1,1)
    CHECK_FALSE(q.related(Modality::One, 1, 5));
    CHECK(q.related(Modality::Two, 3, 5));   // (1,0) -> (1,2)
    CHECK_FALSE(q.related(Modality::Two, 5, 3));
}

TEST_CASE("products of preorders are commutative and Church-Rosser") {
    oracle::Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        UniFrame a = oracle::random_preorder(rng, 1 + rng.below(4));
        UniFrame b = oracle::random_preorder(rng, 1 + rng.below(4));
        Frame p = product(a, b);
        CHECK(frame_property(p, "com"));
        CHECK(frame_property(p, "cr"));
    }
}

TEST_CASE("ordered sums") {
    Frame t = ordered_sum(rect(2, 2), singleton(), SumKind::Both);
    CHECK(t == tack(SumKind::Both, 2));
    for (int a = 0; a < 4; ++a) {
        CHECK(t.related(Modality::One, a, 4));
        CHECK(t.related(Modality::Two, a, 4));
        CHECK_FALSE(t.related(Modality::One, 4, a));
    }
    Frame t1 = ordered_sum(rect(2, 2), singleton(), SumKind::One);
    CHECK(t1 == tack(SumKind::One, 2));
    CHECK(t1.related(Modality::One, 0, 4));
    CHECK_FALSE(t1.related(Modality::Two, 0, 4));
    Frame t2 = tack(SumKind::Two, 2);
    CHECK_FALSE(t2.related(Modality::One, 0, 4));
    CHECK(t2.related(Modality::Two, 0, 4));
    CHECK(ordered_sum(singleton(), singleton(), SumKind::Both) == pair_frame(uni_chain(2), uni_chain(2)));
    CHECK(tack(SumKind::Both, 1).size() == 2);
    CHECK(tack(SumKind::Both, 1) == pair_frame(uni_chain(2), uni_chain(2)));
}

TEST_CASE("ordered sum is associative up to isomorphism") {
    oracle::Rng rng(23);
    for (int i = 0; i < 200; ++i) {
        Frame a = oracle::random_frame(rng, 1 + rng.below(2), 50);
        Frame b = oracle::random_frame(rng, 1 + rng.below(2), 50);
        Frame c = oracle::random_frame(rng, 1 + rng.below(2), 50);
        Frame left = ordered_sum(ordered_sum(a, b, SumKind::Both), c, SumKind::Both);
        Frame right = ordered_sum(a, ordered_sum(b, c, SumKind::Both), SumKind::Both);
        CHECK(canonical_code(left) == canonical_code(right));
    }
}

TEST_CASE("tense sums") {
    CHECK(tense_sum(singleton(), singleton()) == lintgrz(2));
    for (int n = 1; n <= 5; ++n) {
        Frame acc = singleton();
        for (int i = 0; i < n; ++i) acc = tense_sum(acc, singleton());
        CHECK(acc == lintgrz(n + 1));
    }
    CHECK_THROWS_AS(tense_sum(lift_unimodal(uni_chain(2)), singleton()), NotTense);
    CHECK_THROWS_AS(tense_sum(singleton(), lift_unimodal(uni_chain(2))), NotTense);
}

TEST_CASE("builders") {
    Frame mf = match_frame(1, SumKind::One, 2);
    CHECK(mf.size() == 3);
    CHECK(mf.rows(Modality::One) == std::vector<WorldSet>{S("111"), S("011"), S("001")});
    CHECK(mf.rows(Modality::Two) == std::vector<WorldSet>{S("110"), S("110"), S("001")});
    Frame mf2 = match_frame(2, SumKind::Two, 2);
    CHECK(mf2.rows(Modality::One) == std::vector<WorldSet>{S("110"), S("110"), S("001")});
    CHECK(mf2.rows(Modality::Two) == std::vector<WorldSet>{S("111"), S("011"), S("001")});
    CHECK(frame_property(lintgrz(3), "tense"));
    CHECK(univ_chain(3) == pair_frame(uni_chain(3), uni_cluster(3)));
    UniFrame tp = tack_pre(2);
    CHECK(tp.n == 3);
    CHECK(tp.rows == std::vector<WorldSet>{S("111"), S("111"), S("001")});
    CHECK(rect(2, 3).spec() == "rect(2,3)");
    CHECK(match_frame(2, SumKind::Both, 3).spec() == "match(2,both,3)");
    CHECK_THROWS_AS(build_named_frame("nope", {}), UnknownName);
    CHECK(build_named_frame("tack", {3}, SumKind::Two) == tack(SumKind::Two, 3));
}

TEST_CASE("tacks have two clusters and height two") {
    for (int m = 1; m <= 5; ++m)
        for (SumKind k : {SumKind::Both, SumKind::One, SumKind::Two}) {
            auto info = analyze(tack(k, m));
            CHECK(info.height == 2);
            CHECK(info.cluster_count() == 2);
        }
}
