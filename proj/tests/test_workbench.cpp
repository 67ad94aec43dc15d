#include <doctest.h>

#include <set>

#include "kripke/constructions.hpp"
#include "kripke/errors.hpp"
#include "kripke/named.hpp"
#include "kripke/syntax.hpp"
#include "kripke/workbench.hpp"
#include "oracles.hpp"

using namespace kripke;

namespace {

bool has_line(const CheckRecord& r, const std::string& needle) {
    for (const auto& l : r.transcript)
        if (l.find(needle) != std::string::npos) return true;
    return false;
}

const ProfileRow& row(const std::vector<ProfileRow>& rows, const std::string& label) {
    for (const auto& r : rows)
        if (r.label == label) return r;
    FAIL("no profile row " << label);
    return rows.front();
}

}  // namespace

TEST_CASE("anchors appear verbatim in the notes file") {
    const std::string notes = read_file(std::string(KRIPKE_DATA_DIR) + "/anchors.txt");
    REQUIRE_FALSE(notes.empty());
    for (const auto& id : check_ids()) {
        INFO(id);
        CHECK(notes.find(id + "\t" + check_anchor(id) + "\n") != std::string::npos);
    }
}

TEST_CASE("registry ids and unknown checks") {
    auto ids = check_ids();
    CHECK(ids.size() == 23);
    CHECK(ids.front() == "C1");
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == ids.size());
    CHECK_THROWS_AS(run_check("C99"), UnknownCheck);
    CHECK_THROWS_AS(check_anchor("C99"), UnknownCheck);
}

TEST_CASE("meta records carry a one line reason") {
    for (const auto& id : check_ids()) {
        if (id[0] != 'M' && id != "C16") continue;
        CheckRecord r = run_check(id);
        CHECK(r.status == Status::Meta);
        CHECK(r.transcript.size() == 1);
        CHECK_FALSE(r.transcript[0].empty());
    }
}

TEST_CASE("presym refutation check") {
    CheckRecord r = run_check("C5");
    CHECK(r.status == Status::Pass);
    CHECK(has_line(r, "falsified at world 0"));
    // Independent evaluation of the same valuation.
    Frame f = univ_chain(2);
    Valuation theta{{0, WorldSet::from_bitstring("10")}, {1, WorldSet::from_bitstring("11")}};
    CHECK_FALSE(oracle::holds(f, theta, named_formula("presym", {1}), 0));
}

TEST_CASE("height check lists every preorder") {
    CheckRecord r = run_check("C1", Json{{"n", 4}});
    CHECK(r.status == Status::Pass);
    CHECK(r.params["n"] == 4);
    CHECK(r.params["seed"] == kDefaultSeed);
    // Preorders up to isomorphism on 1..4 points: 1, 3, 9, 33.
    CHECK(has_line(r, "46 preorders up to isomorphism"));
}

TEST_CASE("checks are deterministic and seeded") {
    Json p{{"n", 3}, {"samples", 12}};
    std::string a = record_to_json(run_check("C3", p)).dump();
    std::string b = record_to_json(run_check("C3", p)).dump();
    CHECK(a == b);
    p["seed"] = 7;
    CHECK(record_to_json(run_check("C3", p)).dump() != a);
}

TEST_CASE("report schema") {
    std::vector<CheckRecord> recs = {run_check("C5"), run_check("M2")};
    Json j = Json::parse(report_json(recs));
    REQUIRE(j.size() == 2);
    for (const auto& rec : j) {
        std::vector<std::string> keys;
        for (auto it = rec.begin(); it != rec.end(); ++it) keys.push_back(it.key());
        CHECK(keys == std::vector<std::string>{"id", "anchor", "status", "params", "transcript"});
    }
    CHECK(j[1]["status"] == "meta-not-verifiable");
}

TEST_CASE("distinguishing matrix agrees with the scalar route") {
    CheckRecord r = run_check("C7");
    CHECK(r.status == Status::Pass);
    const std::vector<Frame> frames = {tack(SumKind::Both, 3), tack(SumKind::One, 3), tack(SumKind::Two, 3),
                                       rect(3, 3)};
    const std::vector<std::string> calls = {"bh(1,*)", "mck(1)", "mck(2)", "bh(1,1)", "bh(1,2)"};
    for (const Frame& f : frames) {
        std::string cells;
        for (const auto& call : calls)
            cells += refutes_witness_scalar(GeneralFrame(f), named_formula_call(call), std::uint64_t{1} << 26) ? 'F' : 'T';
        CHECK(has_line(r, f.spec() + " " + cells));
    }
}

TEST_CASE("match check failures are exactly dd on the one-sided R2 sums") {
    CheckRecord r = run_check("C12");
    int mismatches = 0;
    for (const auto& l : r.transcript) {
        if (l.rfind("MISMATCH", 0) != 0) continue;
        ++mismatches;
        CHECK((l.find("match(1,2,") != std::string::npos || l.find("match(2,1,") != std::string::npos));
        // dd is the only refuted entry on the line.
        auto first = l.find("refuted");
        CHECK(l.substr(first - 3, 3) == "dd ");
        CHECK(l.find("refuted", first + 1) == std::string::npos);
    }
    CHECK(mismatches == 8);
    CHECK(r.status == Status::Fail);

    // The refutation by the recursive oracle, and dd on the other kinds.
    Formula dd = named_formula("dd");
    Valuation theta{{0, WorldSet::from_bitstring("001")}, {1, WorldSet::from_bitstring("010")}};
    CHECK_FALSE(oracle::holds(match_frame(1, SumKind::Two, 2), theta, dd, 0));
    for (int m = 1; m <= 3; ++m) {
        CHECK(oracle::frame_valid(match_frame(1, SumKind::One, m), dd));
        CHECK(oracle::frame_valid(match_frame(1, SumKind::Both, m), dd));
        CHECK_FALSE(oracle::frame_valid(match_frame(1, SumKind::Two, m), dd));
        CHECK(oracle::frame_valid(match_frame(1, SumKind::Two, m), named_formula("match2_ax")));
    }
}

TEST_CASE("remaining checks pass at default parameters") {
    for (const char* id : {"C3", "C4", "C6", "C8", "C9", "C10", "C11", "C13", "C14", "C15"}) {
        CheckRecord r = run_check(id);
        INFO(id << ": " << (r.transcript.empty() ? "" : r.transcript.back()));
        CHECK(r.status == Status::Pass);
    }
}

TEST_CASE("axiom profile examples") {
    auto rect_rows = axiom_profile(rect(2, 2));
    CHECK(row(rect_rows, "bh(1,*)").verdict == "valid");
    CHECK(row(rect_rows, "conv").verdict == "refuted");
    // A two-point cluster inside rect(2,2) refutes McKinsey for <1>.
    CHECK(row(rect_rows, "mck(1)").verdict == "refuted");
    CHECK_FALSE(oracle::frame_valid(rect(2, 2), named_formula("mck", {1})));

    auto tack_rows = axiom_profile(tack(SumKind::One, 2));
    CHECK(row(tack_rows, "mck(1)").verdict == "valid");
    CHECK(row(tack_rows, "bh(1,2)").verdict == "valid");
    CHECK(row(tack_rows, "bh(1,*)").verdict == "refuted");

    auto point_rows = axiom_profile(singleton());
    CHECK(point_rows.size() == profile_instances().size());
    for (const auto& pr : point_rows) {
        INFO(pr.label);
        CHECK(pr.verdict == "valid");
    }

    // Witnesses of refuted rows falsify the formula.
    for (const auto& pr : rect_rows)
        if (pr.witness) CHECK_FALSE(oracle::holds(rect(2, 2), pr.witness->valuation, parse(pr.formula), pr.witness->world));
}

TEST_CASE("profile marks budget exhaustion per row") {
    auto rows = axiom_profile(rect(3, 3), 16);
    bool any = false;
    for (const auto& pr : rows) any = any || pr.verdict == "budget";
    CHECK(any);
}
