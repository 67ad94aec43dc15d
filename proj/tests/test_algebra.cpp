#include <doctest.h>

#include <set>

#include "kripke/algebra.hpp"
#include "kripke/constructions.hpp"
#include "kripke/enumerate.hpp"
#include "kripke/errors.hpp"
#include "kripke/semantics.hpp"
#include "oracles.hpp"

using namespace kripke;

namespace {

WorldSet S(const char* bits) { return WorldSet::from_bitstring(bits); }

Valuation random_valuation(oracle::Rng& rng, int n, int vars) {
    Valuation v;
    for (int i = 0; i < vars; ++i) v[i] = WorldSet(rng.next() & WorldSet::full(n).bits());
    return v;
}

std::vector<WorldSet> sorted_as_set(std::vector<WorldSet> xs) {
    std::sort(xs.begin(), xs.end());
    return xs;
}

// Partition from the oracle's least-representative labelling.
std::vector<WorldSet> classes(const std::vector<int>& rep) {
    std::map<int, WorldSet> by;
    for (std::size_t w = 0; w < rep.size(); ++w) by[rep[w]].insert(static_cast<int>(w));
    std::vector<WorldSet> out;
    for (const auto& [r, s] : by) out.push_back(s);
    return sorted_as_set(out);
}

// Atoms of the one-variable free algebra over f: pointed copies (theta, w) up to
// bisimilarity, decided pair by pair on the disjoint union of two copies.
std::uint64_t pairwise_atoms(const Frame& f) {
    const int n = f.size();
    const int copies = 1 << n;
    std::vector<WorldSet> r1, r2;
    for (int half = 0; half < 2; ++half)
        for (int a = 0; a < n; ++a) {
            r1.push_back(WorldSet(f.successors(Modality::One, a).bits() << (half * n)));
            r2.push_back(WorldSet(f.successors(Modality::Two, a).bits() << (half * n)));
        }
    Frame both(r1, r2);
    // rep[c * n + w]: least bisimilar pointed copy seen so far.
    std::vector<int> rep(static_cast<std::size_t>(copies * n), -1);
    std::uint64_t atoms = 0;
    for (int c = 0; c < copies; ++c)
        for (int w = 0; w < n; ++w) {
            if (rep[static_cast<std::size_t>(c * n + w)] >= 0) continue;
            ++atoms;
            for (int d = c; d < copies; ++d) {
                Valuation v{{0, WorldSet(static_cast<std::uint64_t>(c) | (static_cast<std::uint64_t>(d) << n))}};
                std::vector<int> cls = oracle::naive_bisim_classes(both, v);
                for (int x = 0; x < n; ++x)
                    if (cls[static_cast<std::size_t>(n + x)] == cls[static_cast<std::size_t>(w)] &&
                        rep[static_cast<std::size_t>(d * n + x)] < 0)
                        rep[static_cast<std::size_t>(d * n + x)] = c * n + w;
            }
        }
    return atoms;
}

}  // namespace

TEST_CASE("generated subalgebra examples") {
    SetAlgebra a = generated_subalgebra(singleton(), {});
    CHECK(a.elements == std::vector<WorldSet>{S("0"), S("1")});

    Frame le_nabla = pair_frame(uni_chain(2), uni_cluster(2));
    SetAlgebra b = generated_subalgebra(le_nabla, {S("10")});
    CHECK(b.elements == std::vector<WorldSet>{S("00"), S("01"), S("10"), S("11")});
    CHECK(b.generators == std::vector<std::size_t>{2});

    Frame r = rect(2, 2);
    SetAlgebra c = generated_subalgebra(r, {S("1100")});
    CHECK(sorted_as_set(c.elements) == oracle::naive_closure(r, {S("1100")}));
    CHECK(c.elements.size() == 4);

    CHECK_THROWS_AS(generated_subalgebra(lift_unimodal(uni_discrete(5)), {S("10000"), S("01000"), S("00100")}, 4),
                    CapExceeded);
}

TEST_CASE("generated subalgebra matches the naive closure") {
    oracle::Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + rng.below(7);
        Frame f = oracle::random_frame(rng, n, 10 + rng.below(60));
        std::vector<WorldSet> gens;
        for (int i = rng.below(3); i > 0; --i) gens.push_back(WorldSet(rng.next() & f.worlds().bits()));
        SetAlgebra a = generated_subalgebra(f, gens);
        CHECK(sorted_as_set(a.elements) == oracle::naive_closure(f, gens));
        CHECK_NOTHROW(verify_algebra(f, a.elements));
        for (std::size_t i = 0; i < gens.size(); ++i) CHECK(a.elements[a.generators[i]] == gens[i]);
        for (std::size_t i = 1; i < a.elements.size(); ++i)
            CHECK(bitstring_key(a.elements[i - 1], n) < bitstring_key(a.elements[i], n));
    }
}

TEST_CASE("free algebra examples") {
    CHECK(free_algebra_count({singleton()}, 0) == 2);
    CHECK(free_algebra_count({singleton()}, 1) == 4);
    CHECK(oracle::naive_free_count({singleton()}, 1) == 4);

    std::uint64_t prev = 0;
    for (int m = 1; m <= 3; ++m) {
        FreeAlgebraAtoms a = free_algebra_atoms({tack(SumKind::Both, m)}, 1, std::uint64_t{1} << 20);
        CHECK(a.atoms > prev);
        prev = a.atoms;
    }
    // Atom counts frozen from the pairwise bisimulation oracle.
    CHECK(pairwise_atoms(tack(SumKind::Both, 1)) == 4);
    CHECK(pairwise_atoms(tack(SumKind::Both, 2)) == 32);
    CHECK(free_algebra_atoms({tack(SumKind::Both, 1)}, 1, 1 << 20).atoms == 4);
    CHECK(free_algebra_atoms({tack(SumKind::Both, 2)}, 1, 1 << 20).atoms == 32);
    CHECK(free_algebra_count({tack(SumKind::Both, 1)}, 1) == 16);
    CHECK(oracle::naive_free_count({tack(SumKind::Both, 1)}, 1) == 16);
    CHECK_THROWS_AS(free_algebra_count({tack(SumKind::Both, 3)}, 1), CapExceeded);
    CHECK_THROWS_AS(free_algebra_count({tack(SumKind::Both, 3)}, 3), BudgetExceeded);
}

TEST_CASE("free algebra count matches the tuple closure") {
    oracle::Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Frame> frames;
        for (int i = 1 + rng.below(2); i > 0; --i) frames.push_back(oracle::random_frame(rng, 1 + rng.below(3), 40));
        int k = rng.below(3);
        std::uint64_t total = 0;
        for (const Frame& f : frames) total += std::uint64_t{1} << (f.size() * k);
        if (total > 64) k = 1;
        std::uint64_t mine = 0;
        try {
            mine = free_algebra_count(frames, k, 1 << 12);
        } catch (const CapExceeded&) {
            continue;
        }
        CHECK(mine == oracle::naive_free_count(frames, k));
    }
}

TEST_CASE("free algebra count is monotone") {
    oracle::Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        Frame f = oracle::random_frame(rng, 1 + rng.below(3), 50);
        Frame g = oracle::random_frame(rng, 1 + rng.below(3), 50);
        std::uint64_t prev = 0;
        for (int k = 0; k <= 2; ++k) {
            std::uint64_t a = free_algebra_atoms({f}, k, 1 << 20).atoms;
            CHECK(a >= prev);
            prev = a;
            CHECK(free_algebra_atoms({f, g}, k, 1 << 20).atoms >= a);
        }
    }
}

TEST_CASE("block system examples") {
    Frame chain = lift_unimodal(uni_chain(2));
    BlockSystem a = block_system({chain, {{0, S("00")}}}, 10);
    CHECK(a.layers[0] == std::vector<WorldSet>{S("11")});
    CHECK(a.last() == std::vector<WorldSet>{S("11")});
    CHECK(a.stabilization == 1);

    BlockSystem b = block_system({chain, {{0, S("01")}}}, 10);
    CHECK(b.layers.size() == 2);
    CHECK(b.layers[1] == std::vector<WorldSet>{S("10"), S("01")});
    CHECK(b.stabilization == 1);

    // A dead end splits off only at layer 2.
    BlockSystem c = block_system({lift_unimodal(uni_chain(2)).set_spec(""), {}}, 10);
    CHECK(c.last().size() == 1);
    Frame dead(2);
    dead.relate(Modality::One, 0, 1);
    BlockSystem d = block_system({dead, {}}, 10);
    REQUIRE(d.layers.size() == 3);
    CHECK(d.layers[1].size() == 1);
    CHECK(d.layers[2] == std::vector<WorldSet>{S("10"), S("01")});
    CHECK(d.parent[2] == std::vector<int>{0, 0});
    CHECK(d.stabilization == 2);

    BlockSystem e = block_system({dead, {}}, 1);
    CHECK(e.layers.size() == 2);
    CHECK_FALSE(e.stabilization);
    CHECK(block_system({dead, {}}, 0).layers.size() == 1);
}

TEST_CASE("stabilized blocks are the bisimulation classes and the atoms") {
    oracle::Rng rng(21);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + rng.below(8);
        Frame f = oracle::random_frame(rng, n, 10 + rng.below(60));
        Valuation v = random_valuation(rng, n, rng.below(3));
        BlockSystem bs = block_system({f, v}, n + 2);
        REQUIRE(bs.stabilization);
        std::vector<WorldSet> blocks = sorted_as_set(bs.last());
        CHECK(blocks == classes(oracle::naive_bisim_classes(f, v)));
        std::vector<WorldSet> gens;
        for (const auto& [var, s] : v) gens.push_back(s);
        CHECK(sorted_as_set(generated_subalgebra(f, gens, 1 << 20).atoms) == blocks);
        for (std::size_t i = 1; i < bs.layers.size(); ++i) {
            REQUIRE(bs.parent[i].size() == bs.layers[i].size());
            for (std::size_t j = 0; j < bs.layers[i].size(); ++j)
                CHECK(bs.layers[i][j].subset_of(bs.layers[i - 1][static_cast<std::size_t>(bs.parent[i][j])]));
        }
    }
}

TEST_CASE("beta formula examples") {
    Frame chain = lift_unimodal(uni_chain(2));
    DefinabilityCertificate c = beta_formula({chain, {{0, S("01")}}}, 0);
    CHECK(c.extension == S("10"));
    CHECK(eval(chain, {{0, S("01")}}, c.beta) == S("10"));

    Frame r = rect(2, 2);
    for (int w = 0; w < 4; ++w) {
        Valuation v{{0, WorldSet::single(w)}};
        DefinabilityCertificate d = beta_formula({r, v}, w);
        CHECK(eval(r, v, d.beta) == WorldSet::single(w));
        CHECK(d.modal_depth >= 1);
    }
    CHECK_THROWS_AS(beta_formula({r, {{0, S("0000")}}}, 1), NotDefinable);

    Frame cycle(4);
    for (int a = 0; a < 4; ++a) cycle.relate(Modality::One, a, (a + 1) % 4);
    CHECK_THROWS_AS(beta_formula({cycle, {{0, S("1000")}}}, 0), NotPretransitive);
}

TEST_CASE("beta certificates define exactly their world") {
    oracle::Rng rng(31);
    int certified = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + rng.below(6);
        UniFrame u1 = oracle::random_preorder(rng, n);
        UniFrame u2 = oracle::random_preorder(rng, n);
        Frame f = pair_frame(u1, u2);
        Valuation v = random_valuation(rng, n, 1 + rng.below(2));
        int r = rng.below(n);
        try {
            DefinabilityCertificate c = beta_formula({f, v}, r);
            ++certified;
            CHECK(eval(f, v, c.beta) == WorldSet::single(r));
            CHECK(c.modal_depth == modal_depth(c.beta));
            for (int a : c.domain) REQUIRE(c.alpha[static_cast<std::size_t>(a)]);
        } catch (const NotPretransitive&) {
        } catch (const NotDefinable&) {
        }
    }
    CHECK(certified > 50);
}
