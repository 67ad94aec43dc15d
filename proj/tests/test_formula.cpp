#include <doctest.h>

#include <fstream>
#include <string>

#include "kripke/errors.hpp"
#include "kripke/named.hpp"
#include "kripke/syntax.hpp"
#include "oracles.hpp"

using namespace kripke;

namespace {

Formula P(int i) { return Formula::var(i); }
Formula D(int m, Formula f) { return Formula::dia(static_cast<Modality>(m), f); }
Formula B(int m, Formula f) { return Formula::box(static_cast<Modality>(m), f); }

}  // namespace

TEST_CASE("parse reads the grammar") {
    CHECK(parse("p0 -> [1](<1>p0 | false)") ==
          Formula::imp(P(0), B(1, Formula::disj(D(1, P(0)), Formula::bot()))));
    Formula vee = Formula::disj(D(1, P(0)), D(2, P(0)));
    Formula vee2 = Formula::disj(D(1, vee), D(2, vee));
    CHECK(parse("<*>p0") == Formula::disj(P(0), Formula::disj(vee, vee2)));
    CHECK(parse("[v]p0") == Formula::negation(Formula::disj(D(1, Formula::negation(P(0))), D(2, Formula::negation(P(0))))));
    CHECK(parse("<r>p3") == Formula::dia(Modality::Reach, P(3)));
}

TEST_CASE("precedence and associativity") {
    CHECK(parse("p0 -> p1 -> p2") == Formula::imp(P(0), Formula::imp(P(1), P(2))));
    CHECK(parse("p0 & p1 | p2") == Formula::disj(Formula::conj(P(0), P(1)), P(2)));
    CHECK(parse("p0 | p1 & p2") == Formula::disj(P(0), Formula::conj(P(1), P(2))));
    CHECK(parse("p0 <-> p1 <-> p2") == Formula::iff(Formula::iff(P(0), P(1)), P(2)));
    CHECK(parse("~<1>p0 & p1") == Formula::conj(Formula::negation(D(1, P(0))), P(1)));
    CHECK(parse("p0 -> p1 <-> p2") == Formula::iff(Formula::imp(P(0), P(1)), P(2)));
}

TEST_CASE("utf8 aliases") {
    CHECK(parse("\xC2\xACp0 \xE2\x88\xA7 p1 \xE2\x86\x92 \xE2\x8A\xA5") ==
          Formula::imp(Formula::conj(Formula::negation(P(0)), P(1)), Formula::bot()));
    CHECK(parse("p0 \xE2\x88\xA8 \xE2\x8A\xA4 \xE2\x86\x94 p1") == Formula::iff(Formula::disj(P(0), Formula::top()), P(1)));
}

TEST_CASE("syntax errors carry offset and expectations") {
    try {
        parse("p0 p1");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 3);
        const auto& exp = e.expected();
        CHECK(std::find(exp.begin(), exp.end(), "&") != exp.end());
        CHECK(std::find(exp.begin(), exp.end(), "end of input") != exp.end());
    }
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("(p0"), SyntaxError);
    CHECK_THROWS_AS(parse("<3>p0"), SyntaxError);
    CHECK_THROWS_AS(parse("p0 &"), SyntaxError);
    CHECK_THROWS_AS(parse("q"), SyntaxError);
    try {
        parse("p0 & )");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 5);
    }
}

TEST_CASE("print is canonical") {
    CHECK(print(Formula::bot()) == "false");
    CHECK(print(D(2, P(3))) == "<2>p3");
    CHECK(print(Formula::conj(P(0), P(1))) == "(p0 & p1)");
    CHECK(print(parse("~p0 -> [2]p1 <-> true")) == "((~p0 -> [2]p1) <-> true)");
}

TEST_CASE("round trip on random formulas") {
    oracle::Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        Formula f = oracle::random_formula(rng, 8, 4);
        std::string s = print(f);
        CHECK(parse(s) == f);
        CHECK(print(parse(s)) == s);
    }
}

TEST_CASE("substitute") {
    CHECK(substitute(D(1, P(0)), {{0, Formula::bot()}}) == D(1, Formula::bot()));
    CHECK(substitute(Formula::conj(P(0), P(1)), {{0, P(1)}}) == Formula::conj(P(1), P(1)));
    // Simultaneous, not sequential.
    CHECK(substitute(Formula::conj(P(0), P(1)), {{0, P(1)}, {1, P(0)}}) == Formula::conj(P(1), P(0)));
    Formula renamed = substitute(named_formula("presym", {1}), {{0, P(5)}, {1, P(6)}});
    CHECK(renamed == parse("p6 -> <*>(p6 & [*](p5 -> [1](p6 -> <1>p5)))"));
}

TEST_CASE("substitution depth bound") {
    oracle::Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        Formula f = oracle::random_formula(rng, 5, 3);
        std::map<int, Formula> sigma;
        int worst = 0;
        for (int v = 0; v < 3; ++v) {
            sigma[v] = oracle::random_formula(rng, 3, 3);
            worst = std::max(worst, modal_depth(sigma[v]));
        }
        CHECK(modal_depth(substitute(f, sigma)) <= modal_depth(f) + worst);
    }
}

TEST_CASE("modal depth") {
    CHECK(modal_depth(parse("p0 & ~p1")) == 0);
    CHECK(modal_depth(parse("<1>[2]p0")) == 2);
    CHECK(modal_depth(named_formula("bh", {2, 1})) == 3);
    CHECK(modal_depth(parse("<*>p0")) == 2);
}

TEST_CASE("named formulas") {
    CHECK(named_formula("bh", {0, 1}) == Formula::bot());
    CHECK(named_formula("presym", {1}) == parse("p1 -> <*>(p1 & [*](p0 -> [1](p1 -> <1>p0)))"));
    CHECK(named_formula("dd") == parse("<2>p0 & <2>p1 -> <2>(<1>p0 & <1>p1)"));
    CHECK(named_formula("presym") == Formula::conj(named_formula("presym", {1}), named_formula("presym", {2})));
    CHECK(named_formula_call("bh(1,*)") == named_formula("bh", {1, 4}));
    CHECK(named_formula_call("mck(v)") == named_formula("mck", {3}));
    CHECK_THROWS_AS(named_formula("nope"), UnknownName);
    CHECK_THROWS_AS(named_formula("bh", {1}), ArityMismatch);
    CHECK_THROWS_AS(named_formula("mck", {5}), ArityMismatch);
    CHECK(variables(named_formula("rp", {2, 3})) == std::set<int>{0, 1, 2, 3});
}

TEST_CASE("registry matches golden transcriptions") {
    std::ifstream in(std::string(KRIPKE_TEST_DIR) + "/golden/registry.txt");
    REQUIRE(in);
    std::string line;
    int seen = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        std::string call = line.substr(0, tab), text = line.substr(tab + 1);
        INFO(call);
        Formula named = named_formula_call(call);
        CHECK(named == parse(text));
        CHECK(print(named) == print(parse(text)));
        ++seen;
    }
    CHECK(seen >= 20);
}

TEST_CASE("swap_modalities") {
    CHECK(swap_modalities(parse("<1>[2]p0")) == parse("<2>[1]p0"));
    CHECK(swap_modalities(swap_modalities(named_formula("dd"))) == named_formula("dd"));
}

TEST_CASE("dag sharing keeps expansions small") {
    Formula f = P(0);
    for (int i = 0; i < 20; ++i) f = Formula::dia(ModalToken::Star, f);
    CHECK(dag_size(f) < 200);
    CHECK(modal_depth(f) == 40);
}
