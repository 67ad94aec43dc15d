#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace oracle {

namespace {

std::size_t ix(int w) { return static_cast<std::size_t>(w); }

bool rel(const Frame& f, int m, int a, int b) {
    return f.related(m == 1 ? Modality::One : Modality::Two, a, b);
}

}  // namespace

std::vector<WorldSet> bfs_reach(const Frame& f) {
    const int n = f.size();
    std::vector<WorldSet> out(ix(n));
    for (int s = 0; s < n; ++s) {
        std::deque<int> q{s};
        WorldSet seen = WorldSet::single(s);
        while (!q.empty()) {
            int a = q.front();
            q.pop_front();
            for (int b = 0; b < n; ++b)
                if ((rel(f, 1, a, b) || rel(f, 2, a, b)) && !seen.contains(b)) {
                    seen.insert(b);
                    q.push_back(b);
                }
        }
        out[ix(s)] = seen;
    }
    return out;
}

namespace {

bool holds_rec(const Frame& f, const Valuation& v, const Formula& phi, int w, const std::vector<WorldSet>& reach) {
    auto succ = [&](int m, int b) {
        if (m == 0) return reach[ix(w)].contains(b);
        return rel(f, m, w, b);
    };
    switch (phi.kind()) {
    case NodeKind::Var: {
        auto it = v.find(phi.var_index());
        return it != v.end() && it->second.contains(w);
    }
    case NodeKind::Bot: return false;
    case NodeKind::Top: return true;
    case NodeKind::Not: return !holds_rec(f, v, phi.lhs(), w, reach);
    case NodeKind::And: return holds_rec(f, v, phi.lhs(), w, reach) && holds_rec(f, v, phi.rhs(), w, reach);
    case NodeKind::Or: return holds_rec(f, v, phi.lhs(), w, reach) || holds_rec(f, v, phi.rhs(), w, reach);
    case NodeKind::Imp: return !holds_rec(f, v, phi.lhs(), w, reach) || holds_rec(f, v, phi.rhs(), w, reach);
    case NodeKind::Iff: return holds_rec(f, v, phi.lhs(), w, reach) == holds_rec(f, v, phi.rhs(), w, reach);
    case NodeKind::Dia:
    case NodeKind::Box: {
        int m = static_cast<int>(phi.modality());
        bool dia = phi.kind() == NodeKind::Dia;
        for (int b = 0; b < f.size(); ++b) {
            if (!succ(m, b)) continue;
            bool t = holds_rec(f, v, phi.lhs(), b, reach);
            if (dia && t) return true;
            if (!dia && !t) return false;
        }
        return !dia;
    }
    }
    return false;
}

}  // namespace

bool holds(const Frame& f, const Valuation& v, const Formula& phi, int w) {
    return holds_rec(f, v, phi, w, bfs_reach(f));
}

WorldSet extension(const Frame& f, const Valuation& v, const Formula& phi) {
    auto reach = bfs_reach(f);
    WorldSet out;
    for (int w = 0; w < f.size(); ++w)
        if (holds_rec(f, v, phi, w, reach)) out.insert(w);
    return out;
}

std::optional<Witness> least_witness(const Frame& f, const Formula& phi) {
    auto vars_set = variables(phi);
    std::vector<int> vars(vars_set.begin(), vars_set.end());
    const int n = f.size();
    const std::size_t len = vars.size() * ix(n);
    auto reach = bfs_reach(f);
    // Strings over {0,1} of length len in lexicographic order.
    std::string s(len, '0');
    for (;;) {
        Valuation v;
        for (std::size_t i = 0; i < vars.size(); ++i)
            v[vars[i]] = WorldSet::from_bitstring(s.substr(i * ix(n), ix(n)));
        for (int w = 0; w < n; ++w)
            if (!holds_rec(f, v, phi, w, reach)) return Witness{v, w};
        std::size_t i = len;
        while (i > 0 && s[i - 1] == '1') s[--i] = '0';
        if (i == 0) return std::nullopt;
        s[i - 1] = '1';
    }
}

bool frame_valid(const Frame& f, const Formula& phi) { return !least_witness(f, phi).has_value(); }

std::vector<Frame> all_frames(int n) {
    std::vector<Frame> out;
    const std::uint64_t per = std::uint64_t{1} << (n * n);
    auto rows_of = [n](std::uint64_t code) {
        std::vector<WorldSet> rows(ix(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if ((code >> (a * n + b)) & 1U) rows[ix(a)].insert(b);
        return rows;
    };
    for (std::uint64_t c1 = 0; c1 < per; ++c1)
        for (std::uint64_t c2 = 0; c2 < per; ++c2) out.emplace_back(rows_of(c1), rows_of(c2));
    return out;
}

std::vector<UniFrame> all_preorders(int n) {
    std::vector<UniFrame> out;
    const std::uint64_t per = std::uint64_t{1} << (n * n);
    for (std::uint64_t code = 0; code < per; ++code) {
        auto r = [&](int a, int b) { return ((code >> (a * n + b)) & 1U) != 0; };
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = r(a, a);
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                for (int c = 0; c < n && ok; ++c)
                    if (r(a, b) && r(b, c) && !r(a, c)) ok = false;
        if (!ok) continue;
        UniFrame u{n, std::vector<WorldSet>(ix(n))};
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (r(a, b)) u.rows[ix(a)].insert(b);
        out.push_back(u);
    }
    return out;
}

int brute_height(const UniFrame& r) {
    // Longest sequence a1 R a2 R ... with no a_{i+1} R a_i (strict steps) in a preorder.
    const int n = r.n;
    std::vector<int> best(ix(n), 0);
    // Strict order is acyclic, so n rounds of relaxation suffice.
    for (int round = 0; round < n + 1; ++round)
        for (int a = 0; a < n; ++a) {
            int b_best = 1;
            for (int b = 0; b < n; ++b)
                if (r.related(a, b) && !r.related(b, a)) b_best = std::max(b_best, best[ix(b)] + 1);
            best[ix(a)] = b_best;
        }
    int h = 0;
    for (int x : best) h = std::max(h, x);
    return h;
}

std::vector<WorldSet> naive_closure(const Frame& f, const std::vector<WorldSet>& gens) {
    const int n = f.size();
    std::set<WorldSet> s(gens.begin(), gens.end());
    s.insert(WorldSet());
    s.insert(f.worlds());
    for (;;) {
        std::set<WorldSet> next = s;
        for (WorldSet a : s) {
            next.insert(a.complement(n));
            for (int m = 1; m <= 2; ++m) {
                WorldSet d;
                for (int x = 0; x < n; ++x)
                    for (int y : a)
                        if (rel(f, m, x, y)) d.insert(x);
                next.insert(d);
            }
            for (WorldSet b : s) next.insert(a & b);
        }
        if (next.size() == s.size()) break;
        s = std::move(next);
    }
    return {s.begin(), s.end()};
}

std::vector<int> naive_bisim_classes(const Frame& f, const Valuation& v) {
    const int n = f.size();
    std::vector<std::vector<bool>> z(ix(n), std::vector<bool>(ix(n), true));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (const auto& [var, s] : v)
                if (s.contains(a) != s.contains(b)) z[ix(a)][ix(b)] = false;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!z[ix(a)][ix(b)]) continue;
                bool ok = true;
                for (int m = 1; m <= 2 && ok; ++m) {
                    for (int x = 0; x < n && ok; ++x) {
                        if (rel(f, m, a, x)) {
                            bool match = false;
                            for (int y = 0; y < n; ++y) match = match || (rel(f, m, b, y) && z[ix(x)][ix(y)]);
                            ok = match;
                        }
                        if (ok && rel(f, m, b, x)) {
                            bool match = false;
                            for (int y = 0; y < n; ++y) match = match || (rel(f, m, a, y) && z[ix(y)][ix(x)]);
                            ok = match;
                        }
                    }
                }
                if (!ok) {
                    z[ix(a)][ix(b)] = false;
                    changed = true;
                }
            }
    }
    // Class id = least equivalent world.
    std::vector<int> cls(ix(n));
    for (int a = 0; a < n; ++a) {
        int c = a;
        for (int b = 0; b < a; ++b)
            if (z[ix(a)][ix(b)]) {
                c = b;
                break;
            }
        cls[ix(a)] = c;
    }
    return cls;
}

bool is_pmorphism(const Frame& g, const Frame& h, const std::vector<int>& map) {
    std::vector<bool> hit(ix(h.size()), false);
    for (int x : map) hit[ix(x)] = true;
    for (bool b : hit)
        if (!b) return false;
    for (int m = 1; m <= 2; ++m)
        for (int a = 0; a < g.size(); ++a) {
            for (int b = 0; b < g.size(); ++b)
                if (rel(g, m, a, b) && !rel(h, m, map[ix(a)], map[ix(b)])) return false;
            for (int y = 0; y < h.size(); ++y) {
                if (!rel(h, m, map[ix(a)], y)) continue;
                bool found = false;
                for (int b = 0; b < g.size(); ++b) found = found || (rel(g, m, a, b) && map[ix(b)] == y);
                if (!found) return false;
            }
        }
    return true;
}

std::optional<std::vector<int>> exhaustive_pmorphism(const Frame& g, const Frame& h) {
    const int n = g.size(), k = h.size();
    if (k == 0 || n == 0) return std::nullopt;
    std::vector<int> map(ix(n), 0);
    for (;;) {
        if (is_pmorphism(g, h, map)) return map;
        int i = n - 1;
        while (i >= 0 && map[ix(i)] == k - 1) map[ix(i--)] = 0;
        if (i < 0) return std::nullopt;
        ++map[ix(i)];
    }
}

std::uint64_t naive_free_count(const std::vector<Frame>& frames, int k) {
    // Copies: one per (frame, valuation); a tuple stores one world-set per copy.
    struct Copy {
        const Frame* f;
        std::vector<WorldSet> theta;
    };
    std::vector<Copy> copies;
    for (const Frame& f : frames) {
        const int n = f.size();
        std::uint64_t per = std::uint64_t{1} << n;
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= per;
        for (std::uint64_t code = 0; code < count; ++code) {
            Copy c{&f, {}};
            std::uint64_t rest = code;
            for (int i = 0; i < k; ++i) {
                c.theta.push_back(WorldSet(rest % per));
                rest /= per;
            }
            copies.push_back(c);
        }
    }
    using Tuple = std::vector<std::uint64_t>;
    auto make = [&](auto pick) {
        Tuple t;
        for (const auto& c : copies) t.push_back(pick(c).bits());
        return t;
    };
    std::set<Tuple> elems;
    std::deque<Tuple> work;
    auto add = [&](Tuple t) {
        if (elems.insert(t).second) work.push_back(std::move(t));
    };
    add(make([](const Copy&) { return WorldSet(); }));
    add(make([](const Copy& c) { return c.f->worlds(); }));
    for (int i = 0; i < k; ++i) add(make([i](const Copy& c) { return c.theta[ix(i)]; }));
    while (!work.empty()) {
        Tuple t = work.front();
        work.pop_front();
        Tuple neg, d1, d2;
        for (std::size_t j = 0; j < copies.size(); ++j) {
            const Frame& f = *copies[j].f;
            WorldSet s(t[j]);
            neg.push_back(s.complement(f.size()).bits());
            d1.push_back(f.preimage(Modality::One, s).bits());
            d2.push_back(f.preimage(Modality::Two, s).bits());
        }
        add(neg);
        add(d1);
        add(d2);
        std::vector<Tuple> snapshot(elems.begin(), elems.end());
        for (const Tuple& u : snapshot) {
            Tuple meet(t.size());
            for (std::size_t j = 0; j < t.size(); ++j) meet[j] = t[j] & u[j];
            add(meet);
        }
    }
    return elems.size();
}

Frame random_frame(Rng& rng, int n, int density_percent) {
    Frame f(n);
    for (Modality m : {Modality::One, Modality::Two})
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (rng.below(100) < density_percent) f.relate(m, a, b);
    return f;
}

UniFrame random_preorder(Rng& rng, int n) {
    UniFrame u{n, std::vector<WorldSet>(ix(n))};
    for (int a = 0; a < n; ++a) {
        u.rows[ix(a)].insert(a);
        for (int b = 0; b < n; ++b)
            if (rng.below(100) < 35) u.rows[ix(a)].insert(b);
    }
    // Transitive closure, Warshall style.
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (u.rows[ix(a)].contains(k)) u.rows[ix(a)] |= u.rows[ix(k)];
    return u;
}

Formula random_formula(Rng& rng, int depth, int vars) {
    if (depth <= 0 || rng.below(5) == 0) {
        int r = rng.below(vars + 2);
        if (r == vars) return Formula::bot();
        if (r == vars + 1) return Formula::top();
        return Formula::var(r);
    }
    auto sub = [&] { return random_formula(rng, depth - 1, vars); };
    switch (rng.below(9)) {
    case 0: return Formula::negation(sub());
    case 1: return Formula::conj(sub(), sub());
    case 2: return Formula::disj(sub(), sub());
    case 3: return Formula::imp(sub(), sub());
    case 4: return Formula::iff(sub(), sub());
    case 5: return Formula::dia(Modality::One, sub());
    case 6: return Formula::dia(Modality::Two, sub());
    case 7: return Formula::box(Modality::One, sub());
    default: return Formula::box(Modality::Two, sub());
    }
}

}  // namespace oracle
