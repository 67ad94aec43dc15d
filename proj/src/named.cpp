#include "kripke/named.hpp"

#include <charconv>
#include <functional>
#include <map>

#include "kripke/errors.hpp"

namespace kripke {

namespace {

Formula p() { return Formula::var(kVarP); }
Formula q() { return Formula::var(kVarQ); }

Formula dia_n(ModalToken t, int times, Formula f) {
    for (int i = 0; i < times; ++i) f = Formula::dia(t, f);
    return f;
}

Formula bh(int n, ModalToken t) {
    Formula f = Formula::bot();
    for (int k = 1; k <= n; ++k) {
        Formula pk = Formula::var(k);
        f = Formula::imp(pk, Formula::box(t, Formula::disj(Formula::dia(t, pk), f)));
    }
    return f;
}

Formula rp(int m, ModalToken t) {
    // p0 & <>(p1 & <>(... & <>p_{m+1}))
    Formula chain = Formula::var(m + 1);
    for (int i = m; i >= 0; --i) chain = Formula::conj(Formula::var(i), Formula::dia(t, chain));
    std::vector<Formula> cases;
    for (int i = 0; i <= m + 1; ++i)
        for (int j = i + 1; j <= m + 1; ++j)
            cases.push_back(dia_n(t, i, Formula::conj(Formula::var(i), Formula::var(j))));
    for (int i = 0; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            cases.push_back(dia_n(t, i, Formula::conj(Formula::var(i), Formula::dia(t, Formula::var(j + 1)))));
    return Formula::imp(chain, disj_all(cases));
}

Formula presym(int i) {
    auto star = ModalToken::Star;
    ModalToken ti = modal_token(i);
    Formula inner = Formula::imp(p(), Formula::box(ti, Formula::imp(q(), Formula::dia(ti, p()))));
    return Formula::imp(q(), Formula::dia(star, Formula::conj(q(), Formula::box(star, inner))));
}

Formula mck(ModalToken t) {
    return Formula::imp(Formula::box(t, Formula::dia(t, p())), Formula::dia(t, Formula::box(t, p())));
}

Formula dot3(ModalToken t) {
    return Formula::imp(Formula::conj(Formula::dia(t, p()), Formula::dia(t, q())),
                        Formula::disj(Formula::dia(t, Formula::conj(p(), Formula::dia(t, q()))),
                                      Formula::dia(t, Formula::conj(q(), Formula::dia(t, p())))));
}

Formula s4_ax(ModalToken t) {
    return Formula::conj(Formula::imp(p(), Formula::dia(t, p())),
                         Formula::imp(Formula::dia(t, Formula::dia(t, p())), Formula::dia(t, p())));
}

Formula s5_ax(ModalToken t) {
    return Formula::conj(s4_ax(t), Formula::imp(p(), Formula::box(t, Formula::dia(t, p()))));
}

Formula grz(ModalToken t) {
    Formula inner = Formula::box(t, Formula::imp(p(), Formula::box(t, p())));
    return Formula::imp(Formula::box(t, Formula::imp(inner, p())), p());
}

using M = Modality;

struct Entry {
    std::vector<std::size_t> arities;
    std::function<Formula(const std::vector<int>&)> build;
};

int nonneg(int x, const char* what) {
    if (x < 0) throw ArityMismatch(std::string("negative parameter for ") + what);
    return x;
}

const std::map<std::string, Entry, std::less<>>& registry() {
    static const std::map<std::string, Entry, std::less<>> table = {
        {"bh", {{2}, [](const auto& a) { return bh(nonneg(a[0], "bh"), modal_token(a[1])); }}},
        {"rp", {{2}, [](const auto& a) { return rp(nonneg(a[0], "rp"), modal_token(a[1])); }}},
        {"com",
         {{0},
          [](const auto&) {
              return Formula::iff(Formula::dia(M::One, Formula::dia(M::Two, p())),
                                  Formula::dia(M::Two, Formula::dia(M::One, p())));
          }}},
        {"chr",
         {{0},
          [](const auto&) {
              return Formula::imp(Formula::dia(M::One, Formula::box(M::Two, p())),
                                  Formula::box(M::Two, Formula::dia(M::One, p())));
          }}},
        {"presym",
         {{0, 1},
          [](const auto& a) { return a.empty() ? Formula::conj(presym(1), presym(2)) : presym(a[0]); }}},
        {"conv",
         {{0},
          [](const auto&) {
              return Formula::conj(Formula::imp(Formula::dia(M::One, Formula::box(M::Two, p())), p()),
                                   Formula::imp(Formula::dia(M::Two, Formula::box(M::One, p())), p()));
          }}},
        {"dd",
         {{0},
          [](const auto&) {
              return Formula::imp(
                  Formula::conj(Formula::dia(M::Two, p()), Formula::dia(M::Two, q())),
                  Formula::dia(M::Two, Formula::conj(Formula::dia(M::One, p()), Formula::dia(M::One, q()))));
          }}},
        {"mck", {{1}, [](const auto& a) { return mck(modal_token(a[0])); }}},
        {"dot3", {{1}, [](const auto& a) { return dot3(modal_token(a[0])); }}},
        {"sym2",
         {{0}, [](const auto&) { return Formula::imp(p(), Formula::box(M::Two, Formula::dia(M::Two, p()))); }}},
        {"match2_ax",
         {{0},
          [](const auto&) {
              return Formula::imp(Formula::conj(p(), Formula::dia(M::One, q())),
                                  Formula::dia(M::Two, Formula::conj(q(), Formula::dia(M::Two, p()))));
          }}},
        {"match12_ax",
         {{0},
          [](const auto&) {
              return Formula::imp(Formula::conj(p(), Formula::dia(M::Two, q())),
                                  Formula::disj(Formula::dia(M::One, q()),
                                                Formula::dia(M::Two, Formula::conj(q(), Formula::dia(M::Two, p())))));
          }}},
        {"cas",
         {{0},
          [](const auto&) {
              auto star = ModalToken::Star;
              Formula bsp = Formula::box(star, p());
              Formula lhs = Formula::box(star, Formula::imp(Formula::box(M::One, Formula::imp(Formula::box(M::One, p()), bsp)), bsp));
              return Formula::imp(lhs, bsp);
          }}},
        {"u_incl", {{0}, [](const auto&) { return Formula::imp(Formula::dia(M::One, p()), Formula::dia(M::Two, p())); }}},
        {"triv_ax",
         {{1}, [](const auto& a) { return Formula::iff(p(), Formula::dia(modal_token(a[0]), p())); }}},
        {"s4_ax", {{1}, [](const auto& a) { return s4_ax(modal_token(a[0])); }}},
        {"s5_ax", {{1}, [](const auto& a) { return s5_ax(modal_token(a[0])); }}},
        {"trans",
         {{1},
          [](const auto& a) {
              ModalToken t = modal_token(a[0]);
              return Formula::imp(Formula::dia(t, Formula::dia(t, p())), Formula::dia(t, p()));
          }}},
        {"grz", {{1}, [](const auto& a) { return grz(modal_token(a[0])); }}},
    };
    return table;
}

}  // namespace

ModalToken modal_token(int code) {
    switch (code) {
    case 1: return ModalToken::One;
    case 2: return ModalToken::Two;
    case 3: return ModalToken::Vee;
    case 4: return ModalToken::Star;
    default: throw ArityMismatch("modality token must be 1, 2, 3 (v) or 4 (*), got " + std::to_string(code));
    }
}

Formula named_formula(std::string_view name, const std::vector<int>& params) {
    const auto& table = registry();
    auto it = table.find(name);
    if (it == table.end()) throw UnknownName("unknown formula name '" + std::string(name) + "'");
    const Entry& e = it->second;
    bool ok = false;
    for (std::size_t k : e.arities) ok = ok || k == params.size();
    if (!ok)
        throw ArityMismatch("'" + std::string(name) + "' does not take " + std::to_string(params.size()) +
                            " parameters");
    return e.build(params);
}

Formula named_formula_call(std::string_view call) {
    auto open = call.find('(');
    std::string_view name = call.substr(0, open);
    std::vector<int> params;
    if (open != std::string_view::npos) {
        if (call.back() != ')') throw FormatError("missing ')' in '" + std::string(call) + "'");
        std::string_view args = call.substr(open + 1, call.size() - open - 2);
        while (!args.empty()) {
            auto comma = args.find(',');
            std::string_view tok = args.substr(0, comma);
            while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
            while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
            if (tok == "v") {
                params.push_back(3);
            } else if (tok == "*") {
                params.push_back(4);
            } else {
                int x = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
                if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty())
                    throw FormatError("bad parameter '" + std::string(tok) + "'");
                params.push_back(x);
            }
            if (comma == std::string_view::npos) break;
            args.remove_prefix(comma + 1);
        }
    }
    return named_formula(name, params);
}

const std::vector<NamedInstance>& profile_instances() {
    static const std::vector<NamedInstance> list = [] {
        std::vector<NamedInstance> out;
        auto add = [&](std::string name, std::vector<int> params) {
            std::string label = name;
            if (!params.empty()) {
                label += '(';
                bool counted = name == "bh" || name == "rp";
                for (std::size_t i = 0; i < params.size(); ++i) {
                    if (i) label += ',';
                    bool token = counted ? i == 1 : name != "presym" && name != "s4_ax" && name != "s5_ax";
                    label += token && params[i] == 3   ? "v"
                             : token && params[i] == 4 ? "*"
                                                       : std::to_string(params[i]);
                }
                label += ')';
            }
            out.push_back({std::move(name), std::move(params), std::move(label)});
        };
        for (int t : {1, 2, 4}) add("bh", {1, t});
        add("bh", {2, 4});
        add("rp", {1, 3});
        add("com", {});
        add("chr", {});
        add("presym", {1});
        add("presym", {2});
        add("conv", {});
        add("dd", {});
        for (int t : {1, 2, 4}) add("mck", {t});
        for (int t : {1, 2}) add("dot3", {t});
        add("sym2", {});
        add("match2_ax", {});
        add("match12_ax", {});
        add("cas", {});
        add("u_incl", {});
        for (int t : {1, 2}) add("triv_ax", {t});
        for (int t : {1, 2}) add("s4_ax", {t});
        for (int t : {1, 2}) add("s5_ax", {t});
        add("trans", {3});
        for (int t : {1, 2}) add("grz", {t});
        return out;
    }();
    return list;
}

}  // namespace kripke
