#include "kripke/workbench.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "kripke/algebra.hpp"
#include "kripke/constructions.hpp"
#include "kripke/enumerate.hpp"
#include "kripke/errors.hpp"
#include "kripke/morphisms.hpp"
#include "kripke/named.hpp"
#include "kripke/syntax.hpp"

namespace kripke {

namespace {

std::size_t idx(int w) { return static_cast<std::size_t>(w); }

std::string rows_str(const std::vector<WorldSet>& rows, int n) {
    std::string out;
    for (std::size_t a = 0; a < rows.size(); ++a) {
        if (a) out += '|';
        out += rows[a].to_bitstring(n);
    }
    return out;
}

std::string frame_str(const Frame& f) {
    if (!f.spec().empty()) return f.spec();
    return "r1=" + rows_str(f.rows(Modality::One), f.size()) + " r2=" + rows_str(f.rows(Modality::Two), f.size());
}

std::string verdict(bool v) { return v ? "valid" : "refuted"; }

UniFrame converse(const UniFrame& u) {
    UniFrame c{u.n, std::vector<WorldSet>(idx(u.n))};
    for (int a = 0; a < u.n; ++a)
        for (int b : u.rows[idx(a)]) c.rows[idx(b)].insert(a);
    return c;
}

bool bit_of(const std::vector<std::uint64_t>& bits, std::uint64_t i) { return (bits[i / 64] >> (i % 64)) & 1U; }

struct Ctx {
    Json params;
    std::uint64_t seed;
    std::uint64_t budget;
    std::vector<std::string> transcript;
    bool ok = true;

    int get(const char* key, int fallback) {
        if (!params.contains(key)) params[key] = fallback;
        return params[key].get<int>();
    }
    void log(std::string line) { transcript.push_back(std::move(line)); }
    void fail(const std::string& line) {
        ok = false;
        log("MISMATCH " + line);
    }
    bool valid(const Frame& f, const Formula& phi) { return kripke::valid(f, phi, budget); }
    bool valid(const GeneralFrame& g, const Formula& phi) { return kripke::valid(g, phi, budget); }
};

struct CheckDef {
    const char* id;
    const char* anchor;
    const char* procedure;
    std::function<void(Ctx&)> run;  // empty for meta records
    const char* reason = "";
};

// --- C1: bounded height ------------------------------------------------------

void check_height(Ctx& c) {
    const int n_max = c.get("n", 5);
    const int k_max = c.get("k", 4);
    std::vector<Formula> bh;
    for (int k = 0; k <= k_max; ++k) bh.push_back(named_formula("bh", {k, 1}));
    int frames = 0;
    for (int n = 1; n <= n_max; ++n)
        for (const UniFrame& p : preorders_up_to_iso(n)) {
            Frame f = lift_unimodal(p);
            const int h = analyze(f).height;
            std::string grid;
            for (int k = 0; k <= k_max; ++k) {
                bool sem = c.valid(f, bh[idx(k)]);
                bool fo = h <= k;
                grid += sem ? 'T' : 'F';
                if (sem != fo)
                    c.fail("preorder " + rows_str(p.rows, n) + " height " + std::to_string(h) + ": bh(" +
                           std::to_string(k) + ",1) " + verdict(sem));
            }
            ++frames;
            c.log("n=" + std::to_string(n) + " " + rows_str(p.rows, n) + " height " + std::to_string(h) +
                  " bh(0.." + std::to_string(k_max) + ",1)=" + grid);
        }
    c.log(std::to_string(frames) + " preorders up to isomorphism");
}

// --- C2: correspondence on bimodal frames ------------------------------------

void check_correspondence(Ctx& c) {
    const int n_max = c.get("n", 4);
    const int m_max = c.get("m", 2);
    const int samples = c.get("samples", 300);

    // rp(m,v) only uses the union relation, and so does RP_m: frames (U, empty)
    // for every U cover all frames with that union.
    for (int m = 0; m <= m_max; ++m) {
        Formula rp = named_formula("rp", {m, 3});
        for (int n = 1; n <= n_max; ++n) {
            int classes = 0, holds = 0, bad = 0;
            for (const UniFrame& u : relations_up_to_iso(n)) {
                Frame f(u.rows, std::vector<WorldSet>(idx(n)));
                bool sem = c.valid(f, rp);
                bool fo = frame_property(f, "rp", {m});
                ++classes;
                holds += sem;
                if (sem != fo) {
                    ++bad;
                    c.fail("rp(" + std::to_string(m) + ",v) on union " + rows_str(u.rows, n));
                }
            }
            c.log("rp(" + std::to_string(m) + ",v) n=" + std::to_string(n) + ": " + std::to_string(classes) +
                  " union relations up to isomorphism, " + std::to_string(holds) + " valid, " + std::to_string(bad) +
                  " mismatches");
        }
    }
    // The reduction itself, on random frames with both relations.
    Rng rng(c.seed);
    int sampled_bad = 0;
    for (int i = 0; i < samples; ++i) {
        const int n = 1 + rng.below(n_max);
        const std::uint64_t per = std::uint64_t{1} << (n * n);
        Frame f(relation_from_code(rng.next() % per, n).rows, relation_from_code(rng.next() % per, n).rows);
        for (int m = 0; m <= m_max; ++m)
            if (c.valid(f, named_formula("rp", {m, 3})) != frame_property(f, "rp", {m})) {
                ++sampled_bad;
                c.fail("rp(" + std::to_string(m) + ",v) on sampled frame " + frame_str(f));
            }
    }
    c.log("rp on " + std::to_string(samples) + " sampled bimodal frames: " + std::to_string(sampled_bad) +
          " mismatches");

    // com, chr, conv: R1 ranges over relations up to isomorphism, R2 over all
    // relations. Every bimodal frame is isomorphic to one of these.
    const std::pair<const char*, const char*> pairs[] = {{"com", "com"}, {"chr", "cr"}, {"conv", "tense"}};
    for (auto [formula, prop] : pairs) {
        ValidityChecker vc(named_formula(formula));
        for (int n = 1; n <= n_max; ++n) {
            std::uint64_t frames = 0, holds = 0, bad = 0;
            const std::uint64_t per = std::uint64_t{1} << (n * n);
            for (const UniFrame& r1 : relations_up_to_iso(n)) {
                auto sem = vc.valid_for_every_r2(r1, c.budget);
                auto fo = property_for_every_r2(r1, prop);
                for (std::uint64_t code = 0; code < per; ++code) {
                    bool s = bit_of(sem, code);
                    holds += s;
                    if (s != bit_of(fo, code)) {
                        if (++bad <= 5)
                            c.fail(std::string(formula) + " on r1=" + rows_str(r1.rows, n) +
                                   " r2=" + rows_str(relation_from_code(code, n).rows, n));
                    }
                }
                frames += per;
            }
            if (bad > 5) c.ok = false;
            c.log(std::string(formula) + " vs " + prop + " n=" + std::to_string(n) + ": " + std::to_string(frames) +
                  " frames (r1 up to isomorphism), " + std::to_string(holds) + " valid, " + std::to_string(bad) +
                  " mismatches");
        }
    }
}

// --- C3: commutator on products ----------------------------------------------

void check_products_commute(Ctx& c) {
    const int n_max = c.get("n", 4);
    const int samples = c.get("samples", 40);
    Formula com = named_formula("com"), chr = named_formula("chr");
    std::vector<std::vector<UniFrame>> pre(idx(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) pre[idx(n)] = labeled_preorders(n);
    Rng rng(c.seed);
    auto draw = [&]() {
        const auto& pool = pre[idx(1 + rng.below(n_max))];
        return pool[static_cast<std::size_t>(rng.below(static_cast<int>(pool.size())))];
    };
    std::vector<std::pair<UniFrame, UniFrame>> cases = {{uni_chain(2), uni_chain(2)}, {uni_cluster(2), uni_cluster(2)}};
    for (int i = 0; i < samples; ++i) {
        UniFrame a = draw();
        UniFrame b = draw();
        cases.emplace_back(a, b);
    }
    for (const auto& [a, b] : cases) {
        Frame f = product(a, b);
        bool v1 = c.valid(f, com), v2 = c.valid(f, chr);
        bool p1 = frame_property(f, "com"), p2 = frame_property(f, "cr");
        std::string line = rows_str(a.rows, a.n) + " x " + rows_str(b.rows, b.n) + ": com " + verdict(v1) + ", chr " +
                           verdict(v2);
        if (!(v1 && v2 && p1 && p2)) c.fail(line);
        else c.log(line);
    }
}

// --- C4, C8: formulas on all small preorder products -----------------------

void check_on_products(Ctx& c, const std::vector<std::string>& calls) {
    const int n_max = c.get("n", 3);
    std::vector<UniFrame> pre;
    for (int n = 1; n <= n_max; ++n)
        for (const UniFrame& u : preorders_up_to_iso(n)) pre.push_back(u);
    std::vector<Formula> phis;
    for (const auto& call : calls) phis.push_back(named_formula_call(call));
    int count = 0;
    for (const UniFrame& a : pre)
        for (const UniFrame& b : pre) {
            Frame f = product(a, b);
            std::string line = rows_str(a.rows, a.n) + " x " + rows_str(b.rows, b.n) + ":";
            bool all = true;
            for (std::size_t i = 0; i < phis.size(); ++i) {
                bool v = c.valid(f, phis[i]);
                all = all && v;
                line += " " + calls[i] + " " + verdict(v);
            }
            ++count;
            if (!all) c.fail(line);
            else c.log(line);
        }
    c.log(std::to_string(count) + " products of preorders up to isomorphism");
}

// --- C5: the presym refutation ---------------------------------------------

void check_presym_refutation(Ctx& c) {
    Frame f = univ_chain(2);
    Formula phi = named_formula("presym", {1});
    Valuation theta{{kVarP, WorldSet::single(0)}, {kVarQ, f.worlds()}};
    WorldSet ext = eval(f, theta, phi);
    c.log("frame " + frame_str(f) + ", p=" + theta[kVarP].to_bitstring(2) + " q=" + theta[kVarQ].to_bitstring(2));
    c.log("presym(1) holds at " + ext.to_bitstring(2));
    if (ext.contains(0)) c.fail("presym(1) is not falsified at world 0");
    else c.log("falsified at world 0");
    if (auto w = refutes_witness(f, phi, c.budget)) {
        c.log("least witness: p=" + w->valuation[kVarP].to_bitstring(2) + " q=" + w->valuation[kVarQ].to_bitstring(2) +
              " at world " + std::to_string(w->world));
    } else {
        c.fail("presym(1) valid on " + frame_str(f));
    }
}

// --- C6: tack p-morphisms ----------------------------------------------------

void check_tack_pmorphisms(Ctx& c) {
    const int m_max = c.get("m", 3);
    for (int m = 1; m <= m_max; ++m)
        for (int size : {m, m + 1}) {
            // Cluster {0..size-1} below the top point `size` in each factor.
            Frame full = product(tack_pre(size), tack_pre(size));
            const int side = size + 1;
            for (SumKind kind : {SumKind::Both, SumKind::One, SumKind::Two}) {
                WorldSet domain;
                for (int a = 0; a < side; ++a)
                    for (int b = 0; b < side; ++b) {
                        bool keep = kind == SumKind::Both || (kind == SumKind::One ? b < size : a < size);
                        if (keep) domain.insert(a * side + b);
                    }
                Restricted<Frame> src = restriction(full, domain);
                Frame dst = tack(kind, m);
                WorldMap f;
                for (int w : src.origin) {
                    int a = w / side, b = w % side;
                    f.push_back(a < size && b < size ? (a % m) * m + (b % m) : m * m);
                }
                auto v = check_pmorphism(src.frame, dst, f);
                std::string line = "tack_pre(" + std::to_string(size) + ")^2 restricted to " +
                                   std::to_string(src.frame.size()) + " worlds -> " + dst.spec() + ": ";
                if (v) {
                    c.fail(line + v->describe());
                    continue;
                }
                line += "p-morphism";
                if (size == m) {
                    auto found = find_pmorphism(src.frame, dst);
                    line += found ? ", search finds one" : ", search finds none";
                    if (!found) c.ok = false;
                }
                c.log(line);
            }
        }
}

// --- C7: distinguishing matrix ---------------------------------------------

void check_matrix(Ctx& c) {
    const std::vector<Frame> frames = {tack(SumKind::Both, 3), tack(SumKind::One, 3), tack(SumKind::Two, 3), rect(3, 3)};
    const std::vector<std::string> calls = {"bh(1,*)", "mck(1)", "mck(2)", "bh(1,1)", "bh(1,2)"};
    // Frozen on first computation; a change is a regression.
    const std::vector<std::string> golden = {"FTTFF", "FTFFT", "FFTTF", "TFFTT"};
    std::vector<std::string> rows;
    c.log("columns: bh(1,*) mck(1) mck(2) bh(1,1) bh(1,2)");
    for (const Frame& f : frames) {
        std::string row;
        for (const auto& call : calls) row += c.valid(f, named_formula_call(call)) ? 'T' : 'F';
        rows.push_back(row);
        c.log(f.spec() + " " + row);
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i] != golden[i]) c.fail(frames[i].spec() + " expected " + golden[i]);
    // Pattern from the separation argument: only the rectangle validates bh(1,*),
    // only the two-sided tack validates both McKinsey formulas.
    int bh_rows = 0, mck_rows = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bh_rows += rows[i][0] == 'T';
        mck_rows += rows[i][1] == 'T' && rows[i][2] == 'T';
    }
    if (bh_rows != 1 || rows[3][0] != 'T') c.fail("rect(3,3) is not the unique bh(1,*) frame");
    if (mck_rows != 1 || rows[0][1] != 'T' || rows[0][2] != 'T') c.fail("tack(both,3) is not the unique mck(1)&mck(2) frame");
    if (c.ok) c.log("rect(3,3) alone validates bh(1,*); tack(both,3) alone validates mck(1) and mck(2)");
}

// --- C9: tense linear preorders ----------------------------------------------

void check_lint(Ctx& c) {
    const int n_max = c.get("n", 5);
    Formula com = named_formula("com"), chr = named_formula("chr");
    for (int n = 1; n <= n_max; ++n)
        for (const UniFrame& p : preorders_up_to_iso(n)) {
            if (!frame_property(lift_unimodal(p), "linear", {1})) continue;
            Frame f = pair_frame(p, converse(p));
            std::vector<WorldSet> star = reach_closure(f);
            bool closed = true;
            for (int a = 0; a < n; ++a)
                closed = closed && star[idx(a)] == (f.successors(Modality::One, a) | f.successors(Modality::Two, a));
            bool rooted = !analyze(f).members.empty() && generated_subframe(f, WorldSet::single(0)).domain == f.worlds();
            bool v1 = c.valid(f, com), v2 = c.valid(f, chr);
            bool fo = frame_property(f, "com") && frame_property(f, "cr") && frame_property(f, "tense");
            std::string line = "n=" + std::to_string(n) + " " + rows_str(p.rows, n) + ": com " + verdict(v1) +
                               ", chr " + verdict(v2) + ", (R1uR2)* = R1uR2 " + (closed ? "yes" : "no") +
                               (rooted ? ", rooted" : ", not rooted");
            if (!(v1 && v2 && fo && closed && rooted)) c.fail(line);
            else c.log(line);
        }
}

// --- C10 - C12: formulas on families ----------------------------------------

void expect_valid(Ctx& c, const Frame& f, const std::vector<std::string>& calls, bool swap = false) {
    std::string line = frame_str(f) + ":";
    bool all = true;
    for (const auto& call : calls) {
        Formula phi = named_formula_call(call);
        if (swap) phi = swap_modalities(phi);
        auto w = refutes_witness(f, phi, c.budget);
        all = all && !w;
        line += " " + (swap ? "swap " : std::string()) + call + " " + verdict(!w);
        if (w) {
            line += " [";
            for (const auto& [var, set] : w->valuation) line += "p" + std::to_string(var) + "=" + set.to_bitstring(f.size()) + " ";
            line += "at " + std::to_string(w->world) + "]";
        }
    }
    if (!all) c.fail(line);
    else c.log(line);
}

void check_lintgrz(Ctx& c) {
    const int n_max = c.get("n", 5);
    for (int n = 1; n <= n_max; ++n) {
        Frame f = lintgrz(n);
        expect_valid(c, f, {"grz(1)", "grz(2)", "dot3(1)", "dot3(2)", "s4_ax(1)", "s4_ax(2)", "conv"});
        bool side = frame_property(f, "tense") && frame_property(f, "poset", {1}) && frame_property(f, "linear", {1}) &&
                    frame_property(f, "poset", {2}) && frame_property(f, "linear", {2});
        std::vector<WorldSet> star = reach_closure(f);
        bool closed = true;
        for (int a = 0; a < n; ++a)
            closed = closed && star[idx(a)] == (f.successors(Modality::One, a) | f.successors(Modality::Two, a));
        std::string line = frame_str(f) + ": tense linear posets " + (side ? "yes" : "no") + ", (R1uR2)* = R1uR2 " +
                           (closed ? "yes" : "no");
        if (!(side && closed)) c.fail(line);
        else c.log(line);
    }
}

void check_univ(Ctx& c) {
    const int m_max = c.get("m", 5);
    for (int m = 1; m <= m_max; ++m) expect_valid(c, univ_chain(m), {"dd", "u_incl", "s5_ax(2)"});
}

void check_match(Ctx& c) {
    const int m_max = c.get("m", 4);
    const std::vector<std::string> common = {"s4_ax(1)", "s4_ax(2)", "grz(1)", "dot3(1)", "dot3(2)", "com", "chr",
                                             "trans(v)", "dd", "mck(*)", "bh(2,*)", "presym(2)"};
    const std::map<SumKind, std::vector<std::string>> extra = {
        {SumKind::One, {"sym2"}}, {SumKind::Two, {"match2_ax"}}, {SumKind::Both, {"mck(2)", "match12_ax"}}};
    for (int axis : {1, 2})
        for (SumKind kind : {SumKind::One, SumKind::Two, SumKind::Both})
            for (int m = 1; m <= m_max; ++m) {
                // (m,nabla,<=) + kind is the modality swap of (m,<=,nabla) + mirrored
                // kind, so axis 2 frames get the swapped list of the mirrored kind.
                SumKind logic = axis == 1 || kind == SumKind::Both ? kind
                                : kind == SumKind::One             ? SumKind::Two
                                                                   : SumKind::One;
                std::vector<std::string> calls = common;
                for (const auto& e : extra.at(logic)) calls.push_back(e);
                expect_valid(c, match_frame(axis, kind, m), calls, axis == 2);
            }
}

// --- C13: cluster algebras under Grz.3 ----------------------------------------

void check_grz3_clusters(Ctx& c) {
    const int n_max = c.get("n", 5);
    const int samples = c.get("samples", 6);
    Formula grz = named_formula("grz", {1}), dot3 = named_formula("dot3", {1});
    Rng rng(c.seed);
    int frames = 0, vacuous = 0, clusters = 0;
    for (int n = 1; n <= n_max; ++n)
        for (const UniFrame& p : preorders_up_to_iso(n)) {
            Frame f = lift_unimodal(p);
            if (!frame_property(f, "linear", {1})) continue;
            SkeletonInfo info = analyze(f);
            for (int s = 0; s < samples; ++s) {
                // Generators are unions of clusters on odd samples, arbitrary otherwise.
                std::vector<WorldSet> gens;
                for (int k = rng.below(3); k > 0; --k) {
                    WorldSet g(rng.next() & f.worlds().bits());
                    if (s % 2 == 1) {
                        WorldSet whole;
                        for (WorldSet cl : info.members)
                            if (!(cl & g).empty()) whole |= cl;
                        g = whole;
                    }
                    gens.push_back(g);
                }
                SetAlgebra a = generated_subalgebra(f, gens);
                GeneralFrame g(f, a.elements);
                ++frames;
                if (!(c.valid(g, grz) && c.valid(g, dot3))) {
                    ++vacuous;
                    continue;
                }
                for (WorldSet cl : info.members) {
                    if (!g.admissible(cl)) continue;
                    ++clusters;
                    std::uint64_t size = restriction(g, cl).frame.algebra_size();
                    if (size != 2)
                        c.fail(rows_str(p.rows, n) + " cluster " + cl.to_bitstring(n) + " carries " +
                               std::to_string(size) + " sets");
                }
            }
        }
    c.log(std::to_string(frames) + " general frames on linear preorders, " + std::to_string(frames - vacuous) +
          " validate Grz.3 for <1>, " + std::to_string(clusters) + " admissible clusters checked");
    if (clusters == 0) c.fail("no admissible cluster was examined");
}

// --- C14: definable points ---------------------------------------------------

struct CorpusModel {
    Frame frame;
    Valuation valuation;
    int target;
};

std::vector<CorpusModel> beta_corpus() {
    auto ws = [](const char* bits) { return WorldSet::from_bitstring(bits); };
    return {
        {lift_unimodal(uni_chain(2)).set_spec("chain(2)"), {{0, ws("01")}}, 0},
        {rect(2, 2), {{0, ws("1000")}}, 0},
        {rect(2, 2), {{0, ws("1000")}}, 3},
        {lintgrz(3), {{0, ws("100")}, {1, ws("001")}}, 1},
        {tack(SumKind::Both, 1), {{0, ws("01")}}, 0},
        {tack(SumKind::One, 2), {{0, ws("10000")}, {1, ws("01000")}}, 0},
        {univ_chain(3), {{0, ws("010")}}, 0},
        {pair_frame(uni_chain(3), uni_chain(3)).set_spec("(3,<=,<=)"), {{0, ws("010")}}, 0},
        {match_frame(1, SumKind::One, 2), {{0, ws("100")}}, 1},
        {rect(2, 3), {{0, ws("100000")}, {1, ws("000010")}}, 5},
    };
}

void check_beta(Ctx& c) {
    for (const CorpusModel& cm : beta_corpus()) {
        std::string desc = frame_str(cm.frame) + " with";
        for (const auto& [var, set] : cm.valuation)
            desc += " p" + std::to_string(var) + "=" + set.to_bitstring(cm.frame.size());
        desc += ", r=" + std::to_string(cm.target);
        try {
            DefinabilityCertificate cert = beta_formula({cm.frame, cm.valuation}, cm.target);
            std::string line = desc + ": beta depth " + std::to_string(cert.modal_depth) + ", " +
                               std::to_string(dag_size(cert.beta)) + " nodes, holds at " +
                               cert.extension.to_bitstring(cm.frame.size());
            if (cert.extension != WorldSet::single(cm.target)) c.fail(line);
            else c.log(line);
        } catch (const Error& e) {
            c.fail(desc + ": " + e.what());
        }
    }
}

// --- C15: free algebras over tacks --------------------------------------------

void check_free_growth(Ctx& c) {
    const int m_max = c.get("m", 3);
    const int k = c.get("k", 1);
    c.log("exploratory: no reference values exist for these counts");
    std::uint64_t prev = 0;
    for (int m = 1; m <= m_max; ++m) {
        FreeAlgebraAtoms a = free_algebra_atoms({tack(SumKind::Both, m)}, k, c.budget);
        std::string line = "tack(both," + std::to_string(m) + "), k=" + std::to_string(k) + ": " +
                           std::to_string(a.copies) + " valuations, " + std::to_string(a.atoms) + " atoms, " +
                           "2^" + std::to_string(a.atoms) + " formulas up to equivalence";
        if (a.atoms <= prev) c.fail(line + " (not increasing)");
        else c.log(line);
        prev = a.atoms;
    }
}

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"C1", "bh_n is valid on a preorder exactly when its height is at most n",
         "bh(k,1) against height on all preorders up to isomorphism", check_height},
        {"C2", "rp_m(<v>) corresponds to RP_m; com, chr and conv correspond to commutation, confluence and converse",
         "semantic validity against the first-order condition on all bimodal frames up to isomorphism",
         check_correspondence},
        {"C3", "product frames validate com and chr", "com and chr on sampled products of preorders",
         check_products_commute},
        {"C4", "presym_1 and presym_2 are valid on products of preorders",
         "presym(1), presym(2) on all products of small preorders",
         [](Ctx& c) { check_on_products(c, {"presym(1)", "presym(2)"}); }},
        {"C5", "presym_1 fails on (2,<=,nabla) under p={0}, q={0,1} at world 0",
         "evaluation under the fixed valuation, then the least witness", check_presym_refutation},
        {"C6", "products of tack preorders map onto tack frames; one-sided tacks from restrictions",
         "check_pmorphism on the collapsing maps, find_pmorphism where the source cluster has size m",
         check_tack_pmorphisms},
        {"C7", "bh_1(<*>) and the one-sided McKinsey formulas separate rect(3,3) and the three tacks",
         "validity matrix of five formulas over four frames, compared with the frozen table", check_matrix},
        {"C8", "cas is valid on products of preorders", "cas on all products of small preorders",
         [](Ctx& c) { check_on_products(c, {"cas"}); }},
        {"C9", "on tense linear preorders com and chr hold and (R1 u R2)* = R1 u R2",
         "com, chr and the reachability identity on (P, P^-1) for linear preorders P", check_lint},
        {"C10", "(n,<=,>=) validates Grz and .3 for both modalities, and conv",
         "Grz, .3, S4 and conv on (n,<=,>=), plus the frame conditions", check_lintgrz},
        {"C11", "(m,<=,nabla) validates dd, <1>p -> <2>p and S5 for <2>", "dd, u_incl, s5_ax(2) on (m,<=,nabla)",
         check_univ},
        {"C12", "match frames validate the shared match axioms and the axioms of their sum kind",
         "the formula list on every match frame, both axes, all kinds", check_match},
        {"C13", "under Grz.3 every admissible cluster carries the two-element algebra",
         "restriction algebras of admissible clusters on general frames over linear preorders",
         check_grz3_clusters},
        {"C14", "beta(r) holds exactly at r when the points generated by r are definable",
         "beta certificates on a fixed corpus of ten models", check_beta},
        {"C15", "free algebras over tack frames grow with the tack size",
         "atoms of the one-variable free algebra of tack(both,m)", check_free_growth},
        {"C16", "product frames use the standard relation: (a,b) R1 (c,d) iff a R c and b = d",
         "meta record", nullptr,
         "the variant clause comparing a with b is a notational slip; the standard product is implemented"},
        {"M1", "pre-local tabularity of the tack and match logics", "meta record", nullptr,
         "statements about all finitely generated extensions; needs infinite frames"},
        {"M2", "canonical frames over maximal consistent sets", "meta record", nullptr,
         "canonical frames are infinite"},
        {"M3", "infinite subframes of canonical frames and big clusters", "meta record", nullptr,
         "relies on compactness over infinite frames"},
        {"M4", "finite height and tense linear covers", "meta record", nullptr,
         "classification theorems over all logics of a class"},
        {"M5", "axiomatization of the product-matching logics", "meta record", nullptr,
         "completeness claims are not finitely checkable"},
        {"M6", "transfer to intuitionistic logics", "meta record", nullptr, "outside the bimodal setting"},
        {"M7", "tack logics as logics of single countable frames", "meta record", nullptr,
         "the countable frames are infinite; C6 checks the finite surrogates"},
    };
    return defs;
}

const CheckDef& find_def(std::string_view id) {
    for (const auto& d : registry())
        if (d.id == id) return d;
    throw UnknownCheck("unknown check " + std::string(id));
}

}  // namespace

std::string to_string(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Meta: return "meta-not-verifiable";
    }
    return "?";
}

Json record_to_json(const CheckRecord& r) {
    Json j;
    j["id"] = r.id;
    j["anchor"] = r.anchor;
    j["status"] = to_string(r.status);
    j["params"] = r.params;
    j["transcript"] = r.transcript;
    return j;
}

std::vector<std::string> check_ids() {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.emplace_back(d.id);
    return out;
}

std::string check_anchor(std::string_view id) { return find_def(id).anchor; }

CheckRecord run_check(std::string_view id, const Json& params) {
    const CheckDef& def = find_def(id);
    CheckRecord rec;
    rec.id = def.id;
    rec.anchor = def.anchor;
    rec.procedure = def.procedure;
    if (!def.run) {
        rec.status = Status::Meta;
        rec.params = Json::object();
        rec.transcript = {def.reason};
        return rec;
    }
    Ctx c;
    c.params = params.is_object() ? params : Json::object();
    if (!c.params.contains("seed")) c.params["seed"] = kDefaultSeed;
    if (!c.params.contains("budget")) c.params["budget"] = kWorkbenchBudget;
    c.seed = c.params["seed"].get<std::uint64_t>();
    c.budget = c.params["budget"].get<std::uint64_t>();
    try {
        def.run(c);
    } catch (const BudgetExceeded& e) {
        c.ok = false;
        c.log(std::string("stopped: ") + e.what());
    }
    rec.params = c.params;
    rec.status = c.ok ? Status::Pass : Status::Fail;
    rec.transcript = std::move(c.transcript);
    return rec;
}

std::vector<CheckRecord> run_all(const Json& params) {
    std::vector<CheckRecord> out;
    for (const auto& id : check_ids()) {
        Json p = Json::object();
        for (const char* key : {"seed", "budget"})
            if (params.contains(key)) p[key] = params[key];
        out.push_back(run_check(id, p));
    }
    return out;
}

std::string report_json(const std::vector<CheckRecord>& records) {
    Json arr = Json::array();
    for (const auto& r : records) arr.push_back(record_to_json(r));
    return arr.dump(2) + "\n";
}

std::vector<ProfileRow> axiom_profile(const Frame& f, std::uint64_t budget) {
    std::vector<ProfileRow> rows;
    for (const auto& inst : profile_instances()) {
        ProfileRow row;
        row.label = inst.label;
        Formula phi = named_formula(inst.name, inst.params);
        row.formula = print(phi);
        try {
            row.witness = refutes_witness(f, phi, budget);
            row.verdict = row.witness ? "refuted" : "valid";
        } catch (const BudgetExceeded&) {
            row.verdict = "budget";
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace kripke
