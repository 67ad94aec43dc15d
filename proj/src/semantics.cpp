#include "kripke/semantics.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "kripke/errors.hpp"

namespace kripke {

namespace detail {

// Straight-line program over distinct subterms, children before parents.
struct Op {
    NodeKind kind;
    int index;  // variable slot for Var, modality for Dia/Box
    int a = -1;
    int b = -1;
};

struct Program {
    std::vector<Op> ops;
    std::vector<int> vars;  // slot -> variable index, ascending
    bool uses_reach = false;
    int root() const { return static_cast<int>(ops.size()) - 1; }
};

}  // namespace detail

namespace {

using detail::Op;
using detail::Program;

std::size_t idx(int w) { return static_cast<std::size_t>(w); }

Program compile(const Formula& f) {
    Program prog;
    auto vs = variables(f);
    prog.vars.assign(vs.begin(), vs.end());
    std::map<int, int> slot;
    for (std::size_t i = 0; i < prog.vars.size(); ++i) slot[prog.vars[i]] = static_cast<int>(i);

    std::unordered_map<const Formula::Node*, int> done;
    std::map<std::tuple<int, int, int, int>, int> interned;
    std::vector<std::pair<const Formula::Node*, bool>> stack{{f.id(), false}};
    while (!stack.empty()) {
        auto [n, expanded] = stack.back();
        stack.pop_back();
        if (done.count(n)) continue;
        int k = arity(n->kind);
        if (!expanded) {
            stack.push_back({n, true});
            if (k == 2) stack.push_back({n->rhs.get(), false});
            if (k >= 1) stack.push_back({n->lhs.get(), false});
            continue;
        }
        Op op{n->kind, n->kind == NodeKind::Var ? slot[n->index] : n->index};
        if (k >= 1) op.a = done.at(n->lhs.get());
        if (k == 2) op.b = done.at(n->rhs.get());
        auto key = std::make_tuple(static_cast<int>(op.kind), op.index, op.a, op.b);
        auto it = interned.find(key);
        if (it == interned.end()) {
            if ((op.kind == NodeKind::Dia || op.kind == NodeKind::Box) && op.index == 0) prog.uses_reach = true;
            it = interned.emplace(key, static_cast<int>(prog.ops.size())).first;
            prog.ops.push_back(op);
        }
        done[n] = it->second;
    }
    // The root was the last node finished; make sure it sits last.
    int root = done.at(f.id());
    if (root != prog.root()) {
        prog.ops.push_back(prog.ops[idx(root)]);
    }
    return prog;
}

struct Relations {
    const std::vector<WorldSet>* r[3] = {nullptr, nullptr, nullptr};
    std::vector<WorldSet> reach;

    Relations(const Frame& f, bool need_reach) {
        r[1] = &f.rows(Modality::One);
        r[2] = &f.rows(Modality::Two);
        if (need_reach) {
            reach = reach_closure(f);
            r[0] = &reach;
        }
    }
};

// --- scalar route -----------------------------------------------------------

WorldSet run_scalar(const Program& p, const Relations& rel, int n, const std::vector<WorldSet>& slots,
                    std::vector<WorldSet>& val) {
    const WorldSet all = WorldSet::full(n);
    val.resize(p.ops.size());
    for (std::size_t i = 0; i < p.ops.size(); ++i) {
        const Op& op = p.ops[i];
        WorldSet out;
        switch (op.kind) {
        case NodeKind::Var: out = slots[idx(op.index)]; break;
        case NodeKind::Bot: break;
        case NodeKind::Top: out = all; break;
        case NodeKind::Not: out = val[idx(op.a)].complement(n); break;
        case NodeKind::And: out = val[idx(op.a)] & val[idx(op.b)]; break;
        case NodeKind::Or: out = val[idx(op.a)] | val[idx(op.b)]; break;
        case NodeKind::Imp: out = val[idx(op.a)].complement(n) | val[idx(op.b)]; break;
        case NodeKind::Iff: out = WorldSet(~(val[idx(op.a)].bits() ^ val[idx(op.b)].bits())) & all; break;
        case NodeKind::Dia: {
            const auto& rows = *rel.r[op.index];
            WorldSet u = val[idx(op.a)];
            for (int w = 0; w < n; ++w)
                if (!(rows[idx(w)] & u).empty()) out.insert(w);
            break;
        }
        case NodeKind::Box: {
            const auto& rows = *rel.r[op.index];
            WorldSet u = val[idx(op.a)];
            for (int w = 0; w < n; ++w)
                if (rows[idx(w)].subset_of(u)) out.insert(w);
            break;
        }
        }
        val[i] = out;
    }
    return val.back();
}

WorldSet eval_impl(const Frame& frame, const Valuation& v, const Formula& f) {
    Program p = compile(f);
    Relations rel(frame, p.uses_reach);
    std::vector<WorldSet> slots;
    for (int var : p.vars) {
        auto it = v.find(var);
        slots.push_back(it == v.end() ? WorldSet() : (it->second & frame.worlds()));
    }
    std::vector<WorldSet> val;
    return run_scalar(p, rel, frame.size(), slots, val);
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > ~std::uint64_t{0} / b) return ~std::uint64_t{0};
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r = sat_mul(r, base);
    return r;
}

void enforce_budget(std::uint64_t valuations, int n, std::uint64_t budget) {
    std::uint64_t pairs = sat_mul(valuations, static_cast<std::uint64_t>(std::max(n, 1)));
    if (pairs > budget)
        throw BudgetExceeded(valuations, budget,
                             "budget exceeded: " + std::to_string(valuations) + " valuations on " + std::to_string(n) +
                                 " worlds, budget " + std::to_string(budget) + " valuation-world pairs");
}

Witness make_witness(const Program& p, const std::vector<WorldSet>& slots, int world) {
    Witness w;
    for (std::size_t i = 0; i < p.vars.size(); ++i) w.valuation[p.vars[i]] = slots[i];
    w.world = world;
    return w;
}

std::vector<WorldSet> domain_of(const GeneralFrame& g) {
    // Admissible sets in bit-string order.
    std::vector<WorldSet> dom;
    const int n = g.size();
    if (g.algebra()) {
        dom = *g.algebra();
    } else {
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) dom.push_back(WorldSet(s));
    }
    std::sort(dom.begin(), dom.end(), [n](WorldSet a, WorldSet b) { return bitstring_key(a, n) < bitstring_key(b, n); });
    return dom;
}

std::optional<Witness> scalar_search(const GeneralFrame& g, const Program& p) {
    const int n = g.size();
    Relations rel(g.frame(), p.uses_reach);
    std::vector<WorldSet> dom = domain_of(g);
    const std::size_t k = p.vars.size();
    std::vector<std::size_t> pos(k, 0);
    std::vector<WorldSet> slots(k), val;
    const WorldSet all = g.frame().worlds();
    for (;;) {
        for (std::size_t i = 0; i < k; ++i) slots[i] = dom[pos[i]];
        WorldSet truth = run_scalar(p, rel, n, slots, val);
        if (truth != all) return make_witness(p, slots, (all - truth).first());
        // Odometer; the first variable is the most significant digit.
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (++pos[i] < dom.size()) break;
            pos[i] = 0;
            if (i == 0) return std::nullopt;
        }
        if (k == 0) return std::nullopt;
    }
}

// --- bitsliced route --------------------------------------------------------
//
// A valuation of k variables on n worlds is a k*n bit number t whose most
// significant bit is (variable slot 0, world 0). Numeric order of t is the
// lexicographic order of valuations. 64 consecutive t share one machine word:
// lane l of every word belongs to valuation base + l.

constexpr std::array<std::uint64_t, 6> kLanePattern = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

// Least refuting valuation t and a world where it fails, or none.
std::optional<std::pair<std::uint64_t, int>> bitsliced_find(const Frame& frame, const Program& p) {
    const int n = frame.size();
    const int k = static_cast<int>(p.vars.size());
    const int bits = k * n;
    if (bits > 62) throw BudgetExceeded(~std::uint64_t{0}, ~std::uint64_t{0});
    const std::vector<WorldSet>* rel[3] = {nullptr, &frame.rows(Modality::One), &frame.rows(Modality::Two)};
    std::vector<WorldSet> reach;
    if (p.uses_reach) {
        reach = reach_closure(frame);
        rel[0] = &reach;
    }
    const std::size_t nops = p.ops.size();
    // Reused between calls; checks on many small frames are dominated by allocation otherwise.
    thread_local std::vector<std::uint64_t> val;
    val.resize(nops * idx(n));
    auto at = [&](std::size_t op, int w) -> std::uint64_t& { return val[op * idx(n) + idx(w)]; };

    const std::uint64_t total = std::uint64_t{1} << bits;
    const std::uint64_t lanes_mask = bits >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << total) - 1);

    for (std::uint64_t base = 0; base < total; base += 64) {
        for (std::size_t i = 0; i < nops; ++i) {
            const Op& op = p.ops[i];
            for (int w = 0; w < n; ++w) {
                std::uint64_t out = 0;
                switch (op.kind) {
                case NodeKind::Var: {
                    int bit = bits - 1 - (op.index * n + w);
                    out = bit < 6 ? kLanePattern[idx(bit)] : (((base >> bit) & 1U) ? ~std::uint64_t{0} : 0);
                    break;
                }
                case NodeKind::Bot: break;
                case NodeKind::Top: out = ~std::uint64_t{0}; break;
                case NodeKind::Not: out = ~at(idx(op.a), w); break;
                case NodeKind::And: out = at(idx(op.a), w) & at(idx(op.b), w); break;
                case NodeKind::Or: out = at(idx(op.a), w) | at(idx(op.b), w); break;
                case NodeKind::Imp: out = ~at(idx(op.a), w) | at(idx(op.b), w); break;
                case NodeKind::Iff: out = ~(at(idx(op.a), w) ^ at(idx(op.b), w)); break;
                case NodeKind::Dia:
                    for (int s : (*rel[op.index])[idx(w)]) out |= at(idx(op.a), s);
                    break;
                case NodeKind::Box:
                    out = ~std::uint64_t{0};
                    for (int s : (*rel[op.index])[idx(w)]) out &= at(idx(op.a), s);
                    break;
                }
                at(i, w) = out;
            }
        }
        std::uint64_t refuted = 0;
        for (int w = 0; w < n; ++w) refuted |= ~at(nops - 1, w);
        refuted &= lanes_mask;
        if (refuted == 0) continue;
        int lane = std::countr_zero(refuted);
        int world = 0;
        while (!((~at(nops - 1, world) >> lane) & 1U)) ++world;
        return std::make_pair(base + static_cast<std::uint64_t>(lane), world);
    }
    return std::nullopt;
}

std::optional<Witness> bitsliced_search(const Frame& frame, const Program& p) {
    auto hit = bitsliced_find(frame, p);
    if (!hit) return std::nullopt;
    const int n = frame.size();
    const int k = static_cast<int>(p.vars.size());
    const int bits = k * n;
    auto [t, world] = *hit;
    std::vector<WorldSet> slots(idx(k));
    for (int s = 0; s < k; ++s)
        for (int w = 0; w < n; ++w)
            if ((t >> (bits - 1 - (s * n + w))) & 1U) slots[idx(s)].insert(w);
    return make_witness(p, slots, world);
}

}  // namespace

WorldSet eval(const Frame& frame, const Valuation& v, const Formula& f) { return eval_impl(frame, v, f); }

WorldSet eval(const GeneralFrame& g, const Valuation& v, const Formula& f) {
    for (const auto& [var, s] : v)
        if (!g.admissible(s))
            throw FormatError("value of p" + std::to_string(var) + " (" + s.to_bitstring(g.size()) +
                              ") is not in the algebra");
    return eval_impl(g.frame(), v, f);
}

WorldSet reach_modality_eval(const Frame& frame, const Valuation& v, const Formula& f) {
    return eval_impl(frame, v, f);
}

std::uint64_t valuations_needed(const GeneralFrame& g, const Formula& f) {
    return sat_pow(g.algebra_size(), variables(f).size());
}

ValidityChecker::ValidityChecker(const Formula& f) : prog_(std::make_shared<const Program>(compile(f))) {}

std::size_t ValidityChecker::variable_count() const { return prog_->vars.size(); }

std::optional<Witness> ValidityChecker::refute(const GeneralFrame& g, std::uint64_t budget) const {
    enforce_budget(sat_pow(g.algebra_size(), prog_->vars.size()), g.size(), budget);
    if (g.size() == 0) return std::nullopt;
    if (g.full_powerset()) return bitsliced_search(g.frame(), *prog_);
    return scalar_search(g, *prog_);
}

std::optional<Witness> ValidityChecker::refute(const Frame& f, std::uint64_t budget) const {
    const int n = f.size();
    std::uint64_t per = n >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << n;
    enforce_budget(sat_pow(per, prog_->vars.size()), n, budget);
    if (n == 0) return std::nullopt;
    return bitsliced_search(f, *prog_);
}

bool ValidityChecker::valid(const Frame& f, std::uint64_t budget) const {
    const int n = f.size();
    std::uint64_t per = n >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << n;
    enforce_budget(sat_pow(per, prog_->vars.size()), n, budget);
    if (n == 0) return true;
    return !bitsliced_find(f, *prog_).has_value();
}

std::vector<std::uint64_t> ValidityChecker::valid_for_every_r2(const UniFrame& r1, std::uint64_t budget) const {
    const Program& p = *prog_;
    const int n = r1.n;
    if (n < 1 || n > 4) throw FormatError("second-relation sweeps need 1 to 4 worlds");
    if (p.uses_reach) throw FormatError("second-relation sweeps do not support <r>");
    const int k = static_cast<int>(p.vars.size());
    enforce_budget(sat_pow(std::uint64_t{1} << n, idx(k)), n, budget);

    // Lane L of the result stands for the relation with code L.
    const int edges = n * n;
    const std::size_t lanes = std::size_t{1} << edges;
    const std::size_t words = std::max<std::size_t>(1, lanes / 64);
    const std::uint64_t last_mask = lanes >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << lanes) - 1;
    std::vector<std::vector<std::uint64_t>> edge(idx(edges), std::vector<std::uint64_t>(words));
    for (int j = 0; j < edges; ++j)
        for (std::size_t wd = 0; wd < words; ++wd)
            edge[idx(j)][wd] = j < 6 ? kLanePattern[idx(j)] : (((wd >> (j - 6)) & 1U) ? ~std::uint64_t{0} : 0);

    const std::size_t nops = p.ops.size();
    std::vector<std::uint64_t> val(nops * idx(n) * words);
    auto at = [&](std::size_t op, int w) { return val.data() + (op * idx(n) + idx(w)) * words; };
    std::vector<std::uint64_t> ok(words, ~std::uint64_t{0});
    ok.back() &= last_mask;

    const int bits = k * n;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << bits); ++t) {
        for (std::size_t i = 0; i < nops; ++i) {
            const Op& op = p.ops[i];
            for (int w = 0; w < n; ++w) {
                std::uint64_t* out = at(i, w);
                const std::uint64_t* a = op.a >= 0 ? at(idx(op.a), w) : nullptr;
                const std::uint64_t* b = op.b >= 0 ? at(idx(op.b), w) : nullptr;
                switch (op.kind) {
                case NodeKind::Var: {
                    bool on = (t >> (bits - 1 - (op.index * n + w))) & 1U;
                    std::fill(out, out + words, on ? ~std::uint64_t{0} : 0);
                    break;
                }
                case NodeKind::Bot: std::fill(out, out + words, 0); break;
                case NodeKind::Top: std::fill(out, out + words, ~std::uint64_t{0}); break;
                case NodeKind::Not: for (std::size_t x = 0; x < words; ++x) out[x] = ~a[x]; break;
                case NodeKind::And: for (std::size_t x = 0; x < words; ++x) out[x] = a[x] & b[x]; break;
                case NodeKind::Or: for (std::size_t x = 0; x < words; ++x) out[x] = a[x] | b[x]; break;
                case NodeKind::Imp: for (std::size_t x = 0; x < words; ++x) out[x] = ~a[x] | b[x]; break;
                case NodeKind::Iff: for (std::size_t x = 0; x < words; ++x) out[x] = ~(a[x] ^ b[x]); break;
                case NodeKind::Dia:
                case NodeKind::Box: {
                    const bool dia = op.kind == NodeKind::Dia;
                    std::fill(out, out + words, dia ? 0 : ~std::uint64_t{0});
                    for (int s = 0; s < n; ++s) {
                        const std::uint64_t* x = at(idx(op.a), s);
                        if (op.index == 1) {
                            if (!r1.related(w, s)) continue;
                            for (std::size_t y = 0; y < words; ++y) out[y] = dia ? out[y] | x[y] : out[y] & x[y];
                        } else {
                            const std::uint64_t* e = edge[idx(w * n + s)].data();
                            for (std::size_t y = 0; y < words; ++y)
                                out[y] = dia ? out[y] | (x[y] & e[y]) : out[y] & (x[y] | ~e[y]);
                        }
                    }
                    break;
                }
                }
            }
        }
        std::uint64_t any = 0;
        for (int w = 0; w < n; ++w) {
            const std::uint64_t* r = at(nops - 1, w);
            for (std::size_t x = 0; x < words; ++x) ok[x] &= r[x];
        }
        for (std::uint64_t x : ok) any |= x;
        if (!any) break;
    }
    return ok;
}

std::optional<Witness> refutes_witness(const GeneralFrame& g, const Formula& f, std::uint64_t budget) {
    return ValidityChecker(f).refute(g, budget);
}

std::optional<Witness> refutes_witness(const Frame& frame, const Formula& f, std::uint64_t budget) {
    return refutes_witness(GeneralFrame(frame), f, budget);
}

bool valid(const GeneralFrame& g, const Formula& f, std::uint64_t budget) {
    return !refutes_witness(g, f, budget).has_value();
}

bool valid(const Frame& frame, const Formula& f, std::uint64_t budget) {
    return !refutes_witness(GeneralFrame(frame), f, budget).has_value();
}

std::optional<Witness> refutes_witness_scalar(const GeneralFrame& g, const Formula& f, std::uint64_t budget) {
    enforce_budget(valuations_needed(g, f), g.size(), budget);
    if (g.size() == 0) return std::nullopt;
    return scalar_search(g, compile(f));
}

}  // namespace kripke
