// kripkebench: command line front end for the kripke library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "kripke/algebra.hpp"
#include "kripke/constructions.hpp"
#include "kripke/errors.hpp"
#include "kripke/frame_io.hpp"
#include "kripke/morphisms.hpp"
#include "kripke/semantics.hpp"
#include "kripke/syntax.hpp"
#include "kripke/workbench.hpp"

using namespace kripke;

namespace {

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kNegative = 1;  // refuted, not a p-morphism, none found, check failed
constexpr int kBudget = 2;
constexpr int kError = 3;

GeneralFrame load_frame_file(const std::string& path) { return load_frame(read_file(path)); }

Json witness_json(const Witness& w, int n) {
    return Json{{"world", w.world}, {"valuation", valuation_to_json(w.valuation, n)}};
}

Json sets_json(const std::vector<WorldSet>& sets, int n) {
    Json arr = Json::array();
    for (WorldSet s : sets) arr.push_back(s.to_bitstring(n));
    return arr;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite bimodal Kripke frames: validity, p-morphisms, algebras and registered checks"};
    app.require_subcommand(1);
    int code = kOk;

    // build
    std::string b_name, b_kind = "both", b_out;
    std::vector<int> b_sizes;
    int b_axis = 1;
    auto* build = app.add_subcommand("build", "Construct a named frame and write it as JSON");
    build->add_option("name", b_name, "cluster, chain, singleton, rect, tack, match, lintgrz, univ_chain, tack_pre, "
                                      "product_tack_pre")->required();
    build->add_option("-m,--size", b_sizes, "Size parameters (rect takes one or two)");
    build->add_option("--kind", b_kind, "Sum kind: both, 1 or 2");
    build->add_option("--axis", b_axis, "Match frame axis: 1 or 2");
    build->add_option("-o,--output", b_out, "Output file (default stdout)");
    build->callback([&] {
        Frame f = build_named_frame(b_name, b_sizes, sum_kind_from_string(b_kind), b_axis);
        std::string text = store_frame(f);
        if (b_out.empty()) {
            std::cout << text << (text.ends_with('\n') ? "" : "\n");
        } else {
            std::ofstream out(b_out);
            if (!out) throw FormatError("cannot write " + b_out);
            out << text;
        }
    });

    // valid
    std::string v_frame, v_formula;
    std::uint64_t v_budget = kDefaultBudget;
    auto* validc = app.add_subcommand("valid", "Frame validity; exit 0 valid, 1 refuted, 2 budget exceeded");
    validc->add_option("--frame", v_frame)->required();
    validc->add_option("--formula", v_formula)->required();
    validc->add_option("--budget", v_budget, "Valuation-world pairs");
    validc->callback([&] {
        GeneralFrame g = load_frame_file(v_frame);
        Formula phi = parse(v_formula);
        try {
            auto w = refutes_witness(g, phi, v_budget);
            if (!w) {
                emit(Json{{"verdict", "valid"}});
                return;
            }
            Json j{{"verdict", "refuted"}};
            j["witness"] = witness_json(*w, g.size());
            emit(j);
            code = kNegative;
        } catch (const BudgetExceeded& e) {
            emit(Json{{"verdict", "budget"}, {"message", e.what()}});
            code = kBudget;
        }
    });

    // pmorph
    std::string p_from, p_to, p_map;
    std::uint64_t p_budget = kDefaultSearchBudget;
    auto* pmorph = app.add_subcommand("pmorph", "Check or search p-morphisms");
    pmorph->require_subcommand(1);
    auto* pcheck = pmorph->add_subcommand("check", "Verify a map; exit 1 with the violated clause");
    auto* pfind = pmorph->add_subcommand("find", "Lexicographically least p-morphism; exit 1 if none");
    for (auto* sub : {pcheck, pfind}) {
        sub->add_option("--from", p_from)->required();
        sub->add_option("--to", p_to)->required();
    }
    pcheck->add_option("--map", p_map, "JSON array indexed by source world")->required();
    pfind->add_option("--budget", p_budget, "Search nodes");
    pcheck->callback([&] {
        GeneralFrame g = load_frame_file(p_from), h = load_frame_file(p_to);
        WorldMap f = Json::parse(read_file(p_map)).get<WorldMap>();
        if (auto v = check_pmorphism(g, h, f)) {
            emit(Json{{"pmorphism", false}, {"clause", to_string(v->clause)}, {"violation", v->describe()}});
            code = kNegative;
        } else {
            emit(Json{{"pmorphism", true}});
        }
    });
    pfind->callback([&] {
        GeneralFrame g = load_frame_file(p_from), h = load_frame_file(p_to);
        try {
            if (auto f = find_pmorphism(g, h, p_budget)) {
                emit(Json{{"found", true}, {"map", *f}});
            } else {
                emit(Json{{"found", false}});
                code = kNegative;
            }
        } catch (const BudgetExceeded& e) {
            emit(Json{{"found", nullptr}, {"message", e.what()}});
            code = kBudget;
        }
    });

    // freealg
    std::string fa_frames;
    int fa_k = 1;
    std::uint64_t fa_cap = kDefaultCap, fa_budget = std::uint64_t{1} << 20;
    auto* freealg = app.add_subcommand("freealg", "Size of the k-generated free algebra of a finite set of frames");
    freealg->add_option("--frames", fa_frames, "Comma separated frame files")->required();
    freealg->add_option("-k", fa_k)->required();
    freealg->add_option("--cap", fa_cap);
    freealg->add_option("--budget", fa_budget, "Frame-valuation copies");
    freealg->callback([&] {
        std::vector<Frame> frames;
        for (const auto& path : split(fa_frames, ',')) frames.push_back(load_frame_file(path).frame());
        try {
            FreeAlgebraAtoms a = free_algebra_atoms(frames, fa_k, fa_budget);
            Json j{{"k", fa_k}, {"copies", a.copies}, {"atoms", a.atoms}};
            if (a.atoms < 64 && (std::uint64_t{1} << a.atoms) <= fa_cap) {
                j["count"] = std::uint64_t{1} << a.atoms;
            } else {
                j["count"] = nullptr;
                j["message"] = "count 2^" + std::to_string(a.atoms) + " exceeds cap " + std::to_string(fa_cap);
                code = kBudget;
            }
            emit(j);
        } catch (const BudgetExceeded& e) {
            emit(Json{{"count", nullptr}, {"message", e.what()}});
            code = kBudget;
        }
    });

    // blocks / beta
    std::string m_frame, m_val;
    int bl_layers = 64, be_r = 0;
    auto* blocks = app.add_subcommand("blocks", "Layered block system of a model");
    auto* beta = app.add_subcommand("beta", "Formula defining a single world of a model");
    for (auto* sub : {blocks, beta}) {
        sub->add_option("--frame", m_frame)->required();
        sub->add_option("--valuation", m_val)->required();
    }
    blocks->add_option("--layers", bl_layers, "Largest layer index computed");
    beta->add_option("-r", be_r, "Target world")->required();
    auto load_model = [&] {
        Frame f = load_frame_file(m_frame).frame();
        Valuation v = load_valuation(read_file(m_val), f.size());
        return Model{f, v};
    };
    blocks->callback([&] {
        Model m = load_model();
        BlockSystem bs = block_system(m, bl_layers);
        Json layers = Json::array();
        for (const auto& layer : bs.layers) layers.push_back(sets_json(layer, bs.n));
        Json j{{"layers", layers}};
        j["stabilization"] = bs.stabilization ? Json(*bs.stabilization) : Json(nullptr);
        emit(j);
    });
    beta->callback([&] {
        Model m = load_model();
        DefinabilityCertificate c = beta_formula(m, be_r);
        const int n = m.frame.size();
        Json alpha = Json::object();
        for (std::size_t a = 0; a < c.alpha.size(); ++a)
            if (c.alpha[a]) alpha[std::to_string(a)] = print(*c.alpha[a]);
        emit(Json{{"target", c.target},
                  {"domain", c.domain.to_bitstring(n)},
                  {"alpha", alpha},
                  {"gamma", print(c.gamma)},
                  {"beta", print(c.beta)},
                  {"extension", c.extension.to_bitstring(n)},
                  {"modal_depth", c.modal_depth},
                  {"transcript", c.transcript}});
    });

    // check
    bool c_all = false, c_json = false;
    std::string c_id;
    std::uint64_t c_seed = kDefaultSeed, c_budget = kWorkbenchBudget;
    auto* check = app.add_subcommand("check", "Run registered checks; exit 1 if any fails");
    auto* all_flag = check->add_flag("--all", c_all);
    auto* id_opt = check->add_option("--id", c_id);
    all_flag->excludes(id_opt);
    check->add_option("--seed", c_seed);
    check->add_option("--budget", c_budget);
    check->add_flag("--json", c_json, "Machine readable report");
    check->callback([&] {
        if (!c_all && c_id.empty()) throw CLI::ValidationError("check", "give --all or --id");
        Json params{{"seed", c_seed}, {"budget", c_budget}};
        std::vector<CheckRecord> recs = c_all ? run_all(params) : std::vector<CheckRecord>{run_check(c_id, params)};
        for (const auto& r : recs)
            if (r.status == Status::Fail) code = kNegative;
        if (c_json) {
            std::cout << report_json(recs);
            return;
        }
        for (const auto& r : recs) {
            std::cout << r.id << " " << to_string(r.status) << ": " << r.anchor << "\n";
            for (const auto& line : r.transcript)
                if (r.status != Status::Pass || c_id == r.id) std::cout << "    " << line << "\n";
        }
    });

    // analyze
    std::string a_frame;
    auto* analyzec = app.add_subcommand("analyze", "Clusters, skeleton and height");
    analyzec->add_option("--frame", a_frame)->required();
    analyzec->callback([&] {
        Frame f = load_frame_file(a_frame).frame();
        SkeletonInfo info = analyze(f);
        Json above = Json::array();
        for (std::uint64_t bits : info.above) {
            Json row = Json::array();
            for (int j = 0; j < info.cluster_count(); ++j)
                if ((bits >> j) & 1U) row.push_back(j);
            above.push_back(row);
        }
        emit(Json{{"n", f.size()},
                  {"clusters", sets_json(info.members, f.size())},
                  {"above", above},
                  {"height", info.height},
                  {"depth", info.depth}});
    });

    // profile
    std::string pr_frame;
    std::uint64_t pr_budget = kDefaultBudget;
    bool pr_json = false;
    auto* profile = app.add_subcommand("profile", "Validity of every registry formula");
    profile->add_option("--frame", pr_frame)->required();
    profile->add_option("--budget", pr_budget);
    profile->add_flag("--json", pr_json);
    profile->callback([&] {
        Frame f = load_frame_file(pr_frame).frame();
        auto rows = axiom_profile(f, pr_budget);
        if (pr_json) {
            Json arr = Json::array();
            for (const auto& r : rows) {
                Json j{{"label", r.label}, {"formula", r.formula}, {"verdict", r.verdict}};
                if (r.witness) j["witness"] = witness_json(*r.witness, f.size());
                arr.push_back(j);
            }
            emit(arr);
            return;
        }
        std::size_t width = 0;
        for (const auto& r : rows) width = std::max(width, r.label.size());
        for (const auto& r : rows) std::cout << r.label << std::string(width + 2 - r.label.size(), ' ') << r.verdict << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kError;
    } catch (const Error& e) {
        std::cerr << "kripkebench: " << e.what() << "\n";
        return kError;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "kripkebench: bad JSON: " << e.what() << "\n";
        return kError;
    }
    return code;
}
