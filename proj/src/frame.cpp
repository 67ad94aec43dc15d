#include "kripke/frame.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <set>

#include "kripke/errors.hpp"

namespace kripke {

namespace {

void check_size(int n) {
    if (n < 0 || n > kMaxWorlds) throw FormatError("world count must be in 0..64, got " + std::to_string(n));
}

std::size_t idx(int w) { return static_cast<std::size_t>(w); }

}  // namespace

Frame::Frame(int n) : n_(n) {
    check_size(n);
    r1_.assign(idx(n), WorldSet());
    r2_.assign(idx(n), WorldSet());
}

Frame::Frame(std::vector<WorldSet> r1, std::vector<WorldSet> r2)
    : n_(static_cast<int>(r1.size())), r1_(std::move(r1)), r2_(std::move(r2)) {
    check_size(n_);
    if (r2_.size() != r1_.size()) throw FormatError("relations have different sizes");
    WorldSet all = worlds();
    for (int a = 0; a < n_; ++a)
        if (!r1_[idx(a)].subset_of(all) || !r2_[idx(a)].subset_of(all))
            throw FormatError("relation row " + std::to_string(a) + " mentions a world >= n");
}

const std::vector<WorldSet>& Frame::rows(Modality m) const {
    if (m == Modality::One) return r1_;
    if (m == Modality::Two) return r2_;
    throw FormatError("frames store only R1 and R2");
}

void Frame::relate(Modality m, int a, int b) {
    if (m == Modality::Reach) throw FormatError("frames store only R1 and R2");
    (m == Modality::One ? r1_ : r2_)[idx(a)].insert(b);
}

void Frame::set_row(Modality m, int a, WorldSet row) {
    if (m == Modality::Reach) throw FormatError("frames store only R1 and R2");
    if (!row.subset_of(worlds())) throw FormatError("row leaves the frame");
    (m == Modality::One ? r1_ : r2_)[idx(a)] = row;
}

WorldSet Frame::preimage(Modality m, WorldSet u) const {
    const auto& r = rows(m);
    WorldSet out;
    for (int a = 0; a < n_; ++a)
        if (!(r[idx(a)] & u).empty()) out.insert(a);
    return out;
}

WorldSet Frame::box_preimage(Modality m, WorldSet u) const {
    const auto& r = rows(m);
    WorldSet out;
    for (int a = 0; a < n_; ++a)
        if (r[idx(a)].subset_of(u)) out.insert(a);
    return out;
}

// ---------------------------------------------------------------------------

void verify_algebra(const Frame& f, const std::vector<WorldSet>& algebra) {
    const int n = f.size();
    std::set<WorldSet> elems;
    for (WorldSet s : algebra) {
        if (!s.subset_of(f.worlds())) throw FormatError("algebra set " + s.to_bitstring(n) + " mentions a world >= n");
        if (!elems.insert(s).second) throw FormatError("algebra lists " + s.to_bitstring(n) + " twice");
    }
    auto need = [&](WorldSet s, const std::string& how) {
        if (!elems.count(s))
            throw FormatError("algebra not closed under " + how + ": missing " + s.to_bitstring(n));
    };
    for (WorldSet a : algebra) need(a.complement(n), "complement of " + a.to_bitstring(n));
    need(WorldSet(), "bottom");
    need(f.worlds(), "top");
    for (WorldSet a : algebra) {
        need(f.preimage(Modality::One, a), "<1> of " + a.to_bitstring(n));
        need(f.preimage(Modality::Two, a), "<2> of " + a.to_bitstring(n));
        for (WorldSet b : algebra)
            need(a & b, "intersection of " + a.to_bitstring(n) + " and " + b.to_bitstring(n));
    }
}

GeneralFrame::GeneralFrame(Frame f) : frame_(std::move(f)) {}

GeneralFrame::GeneralFrame(Frame f, std::vector<WorldSet> algebra) : frame_(std::move(f)) {
    verify_algebra(frame_, algebra);
    algebra_ = std::move(algebra);
}

bool GeneralFrame::admissible(WorldSet s) const {
    if (!s.subset_of(frame_.worlds())) return false;
    if (!algebra_) return true;
    return std::find(algebra_->begin(), algebra_->end(), s) != algebra_->end();
}

std::uint64_t GeneralFrame::algebra_size() const {
    if (algebra_) return algebra_->size();
    if (size() >= 64) return ~std::uint64_t{0};
    return std::uint64_t{1} << size();
}

// ---------------------------------------------------------------------------

std::vector<WorldSet> reach_closure(const std::vector<WorldSet>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<WorldSet> c = rows;
    for (int a = 0; a < n; ++a) c[idx(a)].insert(a);
    // C := C o C until stable; at most log2(n) + 1 rounds.
    for (;;) {
        std::vector<WorldSet> next(c.size());
        for (int a = 0; a < n; ++a)
            for (int b : c[idx(a)]) next[idx(a)] |= c[idx(b)];
        if (next == c) return c;
        c = std::move(next);
    }
}

std::vector<WorldSet> reach_closure(const Frame& f) {
    std::vector<WorldSet> u(idx(f.size()));
    for (int a = 0; a < f.size(); ++a)
        u[idx(a)] = f.successors(Modality::One, a) | f.successors(Modality::Two, a);
    return reach_closure(u);
}

SkeletonInfo analyze(const Frame& f) {
    const int n = f.size();
    std::vector<WorldSet> adj(idx(n));
    for (int a = 0; a < n; ++a) adj[idx(a)] = f.successors(Modality::One, a) | f.successors(Modality::Two, a);

    // Tarjan, iterative. Components come out sinks first.
    std::vector<int> index(idx(n), -1), low(idx(n), 0), comp(idx(n), -1);
    std::vector<int> stack;
    std::vector<bool> on_stack(idx(n), false);
    std::vector<WorldSet> found;
    int counter = 0;
    struct Frame_ {
        int v;
        WorldSet rest;
    };
    for (int s = 0; s < n; ++s) {
        if (index[idx(s)] >= 0) continue;
        std::vector<Frame_> call{{s, adj[idx(s)]}};
        index[idx(s)] = low[idx(s)] = counter++;
        stack.push_back(s);
        on_stack[idx(s)] = true;
        while (!call.empty()) {
            Frame_& top = call.back();
            if (!top.rest.empty()) {
                int w = top.rest.first();
                top.rest.erase(w);
                if (index[idx(w)] < 0) {
                    index[idx(w)] = low[idx(w)] = counter++;
                    stack.push_back(w);
                    on_stack[idx(w)] = true;
                    call.push_back({w, adj[idx(w)]});
                } else if (on_stack[idx(w)]) {
                    low[idx(top.v)] = std::min(low[idx(top.v)], index[idx(w)]);
                }
                continue;
            }
            int v = top.v;
            call.pop_back();
            if (!call.empty()) low[idx(call.back().v)] = std::min(low[idx(call.back().v)], low[idx(v)]);
            if (low[idx(v)] == index[idx(v)]) {
                WorldSet c;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[idx(w)] = false;
                    c.insert(w);
                } while (w != v);
                found.push_back(c);
            }
        }
    }

    SkeletonInfo info;
    // Deterministic ids: by least member.
    std::sort(found.begin(), found.end(), [](WorldSet a, WorldSet b) { return a.first() < b.first(); });
    info.members = found;
    info.cluster.assign(idx(n), -1);
    for (std::size_t c = 0; c < found.size(); ++c)
        for (int w : found[c]) info.cluster[idx(w)] = static_cast<int>(c);
    for (int a = 0; a < n; ++a) comp[idx(a)] = info.cluster[idx(a)];

    const int k = info.cluster_count();
    std::vector<std::uint64_t> direct(static_cast<std::size_t>(k), 0);
    for (int a = 0; a < n; ++a)
        for (int b : adj[idx(a)])
            if (comp[idx(a)] != comp[idx(b)]) direct[idx(comp[idx(a)])] |= std::uint64_t{1} << comp[idx(b)];

    // Longest chains and reachability over the acyclic skeleton, memoized.
    std::vector<int> cdepth(static_cast<std::size_t>(k), 0);
    info.above.assign(static_cast<std::size_t>(k), 0);
    std::function<void(int)> visit = [&](int c) {
        if (cdepth[idx(c)] > 0) return;
        int best = 0;
        std::uint64_t up = std::uint64_t{1} << c;
        for (int d : WorldSet(direct[idx(c)])) {
            visit(d);
            best = std::max(best, cdepth[idx(d)]);
            up |= info.above[idx(d)];
        }
        cdepth[idx(c)] = best + 1;
        info.above[idx(c)] = up;
    };
    for (int c = 0; c < k; ++c) visit(c);

    info.depth.assign(idx(n), 0);
    for (int a = 0; a < n; ++a) info.depth[idx(a)] = cdepth[idx(comp[idx(a)])];
    info.height = k == 0 ? 0 : *std::max_element(cdepth.begin(), cdepth.end());
    return info;
}

// ---------------------------------------------------------------------------

namespace {

Modality param_modality(const std::vector<int>& params, std::string_view prop) {
    if (params.size() != 1 || (params[0] != 1 && params[0] != 2))
        throw UnknownProperty(std::string(prop) + " takes one relation index, 1 or 2");
    return params[0] == 1 ? Modality::One : Modality::Two;
}

bool reflexive(const std::vector<WorldSet>& r) {
    for (std::size_t a = 0; a < r.size(); ++a)
        if (!r[a].contains(static_cast<int>(a))) return false;
    return true;
}

bool transitive(const std::vector<WorldSet>& r) {
    for (const WorldSet& ra : r)
        for (int b : ra)
            if (!r[idx(b)].subset_of(ra)) return false;
    return true;
}

bool symmetric(const std::vector<WorldSet>& r) {
    for (std::size_t a = 0; a < r.size(); ++a)
        for (int b : r[a])
            if (!r[idx(b)].contains(static_cast<int>(a))) return false;
    return true;
}

bool antisymmetric(const std::vector<WorldSet>& r) {
    for (std::size_t a = 0; a < r.size(); ++a)
        for (int b : r[a])
            if (b != static_cast<int>(a) && r[idx(b)].contains(static_cast<int>(a))) return false;
    return true;
}

bool connected(const std::vector<WorldSet>& r) {
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            if (!r[a].contains(static_cast<int>(b)) && !r[b].contains(static_cast<int>(a))) return false;
    return true;
}

// xRy & xRz -> yRz | zRy
bool nonbranching(const std::vector<WorldSet>& r) {
    for (const WorldSet& rx : r)
        for (int y : rx)
            for (int z : rx)
                if (!r[idx(y)].contains(z) && !r[idx(z)].contains(y)) return false;
    return true;
}

std::vector<WorldSet> compose(const std::vector<WorldSet>& r, const std::vector<WorldSet>& s) {
    std::vector<WorldSet> out(r.size());
    for (std::size_t a = 0; a < r.size(); ++a)
        for (int b : r[a]) out[a] |= s[idx(b)];
    return out;
}

bool rp_holds(const std::vector<WorldSet>& r, int m) {
    const int n = static_cast<int>(r.size());
    std::vector<int> xs;
    // Each chain x0 R x1 R ... R x_{m+1} must repeat a point or contain a skip x_i R x_{j+1}, i < j <= m.
    std::function<bool()> extend = [&]() -> bool {
        if (static_cast<int>(xs.size()) == m + 2) {
            for (int i = 0; i <= m + 1; ++i)
                for (int j = i + 1; j <= m + 1; ++j)
                    if (xs[idx(i)] == xs[idx(j)]) return true;
            for (int i = 0; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    if (r[idx(xs[idx(i)])].contains(xs[idx(j + 1)])) return true;
            return false;
        }
        WorldSet next = xs.empty() ? WorldSet::full(n) : r[idx(xs.back())];
        for (int y : next) {
            xs.push_back(y);
            bool ok = extend();
            xs.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    return extend();
}

}  // namespace

bool frame_property(const Frame& f, std::string_view prop, const std::vector<int>& params) {
    const int n = f.size();
    const auto& r1 = f.rows(Modality::One);
    const auto& r2 = f.rows(Modality::Two);
    auto no_params = [&] {
        if (!params.empty()) throw UnknownProperty(std::string(prop) + " takes no parameters");
    };
    if (prop == "com") {
        no_params();
        return compose(r1, r2) == compose(r2, r1);
    }
    if (prop == "cr") {
        no_params();
        // a R1 b & a R2 c -> exists d: b R2 d & c R1 d
        for (int a = 0; a < n; ++a)
            for (int b : r1[idx(a)])
                for (int c : r2[idx(a)])
                    if ((r2[idx(b)] & r1[idx(c)]).empty()) return false;
        return true;
    }
    if (prop == "rp") {
        if (params.size() != 1 || params[0] < 0) throw UnknownProperty("rp takes one parameter m >= 0");
        std::vector<WorldSet> u(idx(n));
        for (int a = 0; a < n; ++a) u[idx(a)] = r1[idx(a)] | r2[idx(a)];
        return rp_holds(u, params[0]);
    }
    if (prop == "tense") {
        no_params();
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (r1[idx(a)].contains(b) != r2[idx(b)].contains(a)) return false;
        return true;
    }
    if (prop == "prenoetherian") {
        no_params();
        static bool noted = false;
        if (!noted) {
            std::clog << "note: every finite frame is prenoetherian; the condition only separates infinite frames\n";
            noted = true;
        }
        return true;
    }
    if (prop == "reflexive") return reflexive(f.rows(param_modality(params, prop)));
    if (prop == "transitive") return transitive(f.rows(param_modality(params, prop)));
    if (prop == "symmetric") return symmetric(f.rows(param_modality(params, prop)));
    if (prop == "preorder") {
        const auto& r = f.rows(param_modality(params, prop));
        return reflexive(r) && transitive(r);
    }
    if (prop == "equivalence") {
        const auto& r = f.rows(param_modality(params, prop));
        return reflexive(r) && transitive(r) && symmetric(r);
    }
    if (prop == "linear") {
        const auto& r = f.rows(param_modality(params, prop));
        return reflexive(r) && transitive(r) && connected(r);
    }
    if (prop == "nonbranching") return nonbranching(f.rows(param_modality(params, prop)));
    if (prop == "poset") {
        const auto& r = f.rows(param_modality(params, prop));
        return reflexive(r) && transitive(r) && antisymmetric(r);
    }
    if (prop == "universal") {
        const auto& r = f.rows(param_modality(params, prop));
        return std::all_of(r.begin(), r.end(), [&](WorldSet s) { return s == f.worlds(); });
    }
    throw UnknownProperty("unknown frame property '" + std::string(prop) + "'");
}

// ---------------------------------------------------------------------------

namespace {

Frame restrict_frame(const Frame& f, const std::vector<int>& origin) {
    const int m = static_cast<int>(origin.size());
    std::vector<int> renum(idx(f.size()), -1);
    for (int i = 0; i < m; ++i) renum[idx(origin[idx(i)])] = i;
    Frame out(m);
    for (int i = 0; i < m; ++i)
        for (Modality md : {Modality::One, Modality::Two})
            for (int b : f.successors(md, origin[idx(i)]))
                if (renum[idx(b)] >= 0) out.relate(md, i, renum[idx(b)]);
    return out;
}

WorldSet renumber_set(WorldSet s, const std::vector<int>& origin) {
    WorldSet out;
    for (std::size_t i = 0; i < origin.size(); ++i)
        if (s.contains(origin[i])) out.insert(static_cast<int>(i));
    return out;
}

std::vector<int> members_of(WorldSet y) {
    std::vector<int> out;
    for (int w : y) out.push_back(w);
    return out;
}

}  // namespace

Restricted<Frame> restriction(const Frame& f, WorldSet y) {
    y &= f.worlds();
    if (y.empty()) throw EmptyRestriction();
    auto origin = members_of(y);
    return {restrict_frame(f, origin), y, origin};
}

Restricted<GeneralFrame> restriction(const GeneralFrame& g, WorldSet y) {
    y &= g.frame().worlds();
    if (y.empty()) throw EmptyRestriction();
    auto origin = members_of(y);
    Frame sub = restrict_frame(g.frame(), origin);
    if (g.full_powerset()) return {GeneralFrame(std::move(sub)), y, origin};

    std::vector<WorldSet> alg;
    std::set<WorldSet> seen;
    for (WorldSet a : *g.algebra()) {
        WorldSet r = renumber_set(a & y, origin);
        if (seen.insert(r).second) alg.push_back(r);
    }
    bool inside = g.admissible(y);
    // Closure is re-verified by the constructor in either case.
    GeneralFrame out(std::move(sub), std::move(alg));
    if (!inside) out.mark_restricted_outside_algebra();
    return {std::move(out), y, origin};
}

Restricted<Frame> generated_subframe(const Frame& f, WorldSet y) {
    y &= f.worlds();
    if (y.empty()) throw EmptyRestriction();
    auto c = reach_closure(f);
    WorldSet up;
    for (int a : y) up |= c[idx(a)];
    return restriction(f, up);
}

Restricted<GeneralFrame> generated_subframe(const GeneralFrame& g, WorldSet y) {
    y &= g.frame().worlds();
    if (y.empty()) throw EmptyRestriction();
    auto c = reach_closure(g.frame());
    WorldSet up;
    for (int a : y) up |= c[idx(a)];
    return restriction(g, up);
}

Frame lift_unimodal(const UniFrame& u) {
    if (static_cast<int>(u.rows.size()) != u.n) throw FormatError("unimodal frame has wrong row count");
    std::vector<WorldSet> delta(idx(u.n));
    for (int a = 0; a < u.n; ++a) delta[idx(a)] = WorldSet::single(a);
    return Frame(u.rows, delta);
}

UniFrame unimodal_from_rows(const std::vector<std::string>& rows) {
    UniFrame u;
    u.n = static_cast<int>(rows.size());
    check_size(u.n);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != u.n)
            throw FormatError("row length " + std::to_string(r.size()) + " differs from n = " + std::to_string(u.n));
        u.rows.push_back(WorldSet::from_bitstring(r));
    }
    return u;
}

std::vector<std::uint64_t> property_for_every_r2(const UniFrame& r1, std::string_view prop) {
    const int n = r1.n;
    if (n < 1 || n > 4) throw FormatError("second-relation sweeps need 1 to 4 worlds");
    const int edges = n * n;
    const std::size_t lanes = std::size_t{1} << edges;
    const std::size_t words = std::max<std::size_t>(1, lanes / 64);
    const std::uint64_t all = ~std::uint64_t{0};
    static constexpr std::uint64_t kPattern[6] = {
        0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
        0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
    };
    // Lanes where a R2 b, for word wd.
    auto m = [&](int a, int b, std::size_t wd) -> std::uint64_t {
        int j = a * n + b;
        return j < 6 ? kPattern[j] : (((wd >> (j - 6)) & 1U) ? all : 0);
    };
    auto r1r = [&](int a, int b) { return r1.related(a, b); };

    std::vector<std::uint64_t> ok(words, all);
    if (lanes < 64) ok[0] = (std::uint64_t{1} << lanes) - 1;
    for (std::size_t wd = 0; wd < words; ++wd) {
        std::uint64_t good = all;
        if (prop == "com") {
            // R1;R2 = R2;R1 pointwise.
            for (int a = 0; a < n; ++a)
                for (int c = 0; c < n; ++c) {
                    std::uint64_t x = 0, y = 0;
                    for (int b = 0; b < n; ++b) {
                        if (r1r(a, b)) x |= m(b, c, wd);
                        if (r1r(b, c)) y |= m(a, b, wd);
                    }
                    good &= ~(x ^ y);
                }
        } else if (prop == "cr") {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    if (!r1r(a, b)) continue;
                    for (int c = 0; c < n; ++c) {
                        std::uint64_t meet = 0;
                        for (int d = 0; d < n; ++d)
                            if (r1r(c, d)) meet |= m(b, d, wd);
                        good &= ~m(a, c, wd) | meet;
                    }
                }
        } else if (prop == "tense") {
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) good &= r1r(a, b) ? m(b, a, wd) : ~m(b, a, wd);
        } else {
            throw UnknownProperty("no second-relation sweep for property " + std::string(prop));
        }
        ok[wd] &= good;
    }
    return ok;
}

}  // namespace kripke
