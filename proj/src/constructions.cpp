#include "kripke/constructions.hpp"

#include "kripke/errors.hpp"

namespace kripke {

namespace {

std::size_t idx(int w) { return static_cast<std::size_t>(w); }

void need_positive(int m, const char* what) {
    if (m < 1 || m > kMaxWorlds) throw FormatError(std::string(what) + " needs a size in 1..64");
}

template <class Pred>
UniFrame uni_from(int m, Pred pred) {
    UniFrame u{m, std::vector<WorldSet>(idx(m))};
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (pred(a, b)) u.rows[idx(a)].insert(b);
    return u;
}

std::string tag(const char* name, std::initializer_list<std::string> args) {
    std::string s = name;
    s += '(';
    bool first = true;
    for (const auto& a : args) {
        if (!first) s += ',';
        s += a;
        first = false;
    }
    return s + ')';
}

}  // namespace

UniFrame uni_cluster(int m) {
    need_positive(m, "cluster");
    return uni_from(m, [](int, int) { return true; });
}

UniFrame uni_chain(int m) {
    need_positive(m, "chain");
    return uni_from(m, [](int a, int b) { return a <= b; });
}

UniFrame uni_discrete(int m) {
    need_positive(m, "discrete frame");
    return uni_from(m, [](int a, int b) { return a == b; });
}

UniFrame uni_singleton() { return uni_cluster(1); }

UniFrame tack_pre(int m) {
    need_positive(m + 1, "tack preorder");
    return uni_from(m + 1, [m](int a, int b) { return a < m || b == m; });
}

Frame pair_frame(const UniFrame& r1, const UniFrame& r2) {
    if (r1.n != r2.n) throw FormatError("relations live on different world counts");
    return Frame(r1.rows, r2.rows);
}

Frame product(const UniFrame& f, const UniFrame& g) {
    const int nf = f.n, ng = g.n;
    if (nf < 1 || ng < 1) throw FormatError("product factors must be nonempty");
    if (nf * ng > kMaxWorlds) throw FormatError("product has more than 64 worlds");
    Frame out(nf * ng);
    for (int a = 0; a < nf; ++a)
        for (int b = 0; b < ng; ++b) {
            int w = a * ng + b;
            for (int c : f.rows[idx(a)]) out.relate(Modality::One, w, c * ng + b);
            for (int d : g.rows[idx(b)]) out.relate(Modality::Two, w, a * ng + d);
        }
    return out;
}

std::string to_string(SumKind k) {
    switch (k) {
    case SumKind::Both: return "both";
    case SumKind::One: return "1";
    case SumKind::Two: return "2";
    }
    return "?";
}

SumKind sum_kind_from_string(std::string_view s) {
    if (s == "both" || s == "12") return SumKind::Both;
    if (s == "1") return SumKind::One;
    if (s == "2") return SumKind::Two;
    throw FormatError("sum kind must be both, 1 or 2, got '" + std::string(s) + "'");
}

namespace {

Frame disjoint_union(const Frame& f, const Frame& g) {
    const int nf = f.size();
    if (nf + g.size() > kMaxWorlds) throw FormatError("sum has more than 64 worlds");
    Frame out(nf + g.size());
    for (Modality m : {Modality::One, Modality::Two}) {
        for (int a = 0; a < nf; ++a)
            for (int b : f.successors(m, a)) out.relate(m, a, b);
        for (int a = 0; a < g.size(); ++a)
            for (int b : g.successors(m, a)) out.relate(m, nf + a, nf + b);
    }
    return out;
}

}  // namespace

Frame ordered_sum(const Frame& f, const Frame& g, SumKind kind) {
    Frame out = disjoint_union(f, g);
    const int nf = f.size();
    for (int a = 0; a < nf; ++a)
        for (int b = 0; b < g.size(); ++b) {
            if (kind != SumKind::Two) out.relate(Modality::One, a, nf + b);
            if (kind != SumKind::One) out.relate(Modality::Two, a, nf + b);
        }
    return out;
}

Frame tense_sum(const Frame& f, const Frame& g) {
    if (!frame_property(f, "tense")) throw NotTense("left summand is not a tense frame");
    if (!frame_property(g, "tense")) throw NotTense("right summand is not a tense frame");
    Frame out = disjoint_union(f, g);
    const int nf = f.size();
    for (int a = 0; a < nf; ++a)
        for (int b = 0; b < g.size(); ++b) {
            out.relate(Modality::One, a, nf + b);
            out.relate(Modality::Two, nf + b, a);
        }
    return out;
}

Frame singleton() { return pair_frame(uni_singleton(), uni_singleton()).set_spec("singleton"); }

Frame rect(int a, int b) {
    return product(uni_cluster(a), uni_cluster(b)).set_spec(tag("rect", {std::to_string(a), std::to_string(b)}));
}

Frame tack(SumKind kind, int m) {
    return ordered_sum(rect(m, m), singleton(), kind).set_spec(tag("tack", {to_string(kind), std::to_string(m)}));
}

Frame match_frame(int axis, SumKind kind, int m) {
    if (axis != 1 && axis != 2) throw FormatError("match frame axis must be 1 or 2");
    Frame base = axis == 1 ? pair_frame(uni_chain(m), uni_cluster(m)) : pair_frame(uni_cluster(m), uni_chain(m));
    return ordered_sum(base, singleton(), kind)
        .set_spec(tag("match", {std::to_string(axis), to_string(kind), std::to_string(m)}));
}

Frame lintgrz(int n) {
    UniFrame le = uni_chain(n);
    UniFrame ge = uni_from(n, [](int a, int b) { return a >= b; });
    return pair_frame(le, ge).set_spec(tag("lintgrz", {std::to_string(n)}));
}

Frame univ_chain(int m) {
    return pair_frame(uni_chain(m), uni_cluster(m)).set_spec(tag("univ_chain", {std::to_string(m)}));
}

Frame build_named_frame(std::string_view name, const std::vector<int>& params, SumKind kind, int axis) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw ArityMismatch("builder '" + std::string(name) + "' takes " + std::to_string(k) + " size parameters");
    };
    auto p = [&](std::size_t i) { return params[i]; };
    if (name == "singleton") return need(0), singleton();
    if (name == "cluster") return need(1), lift_unimodal(uni_cluster(p(0))).set_spec(tag("cluster", {std::to_string(p(0))}));
    if (name == "chain") return need(1), lift_unimodal(uni_chain(p(0))).set_spec(tag("chain", {std::to_string(p(0))}));
    if (name == "tack_pre")
        return need(1), lift_unimodal(tack_pre(p(0))).set_spec(tag("tack_pre", {std::to_string(p(0))}));
    if (name == "rect") {
        if (params.size() == 1) return rect(p(0), p(0));
        return need(2), rect(p(0), p(1));
    }
    if (name == "tack") return need(1), tack(kind, p(0));
    if (name == "match") return need(1), match_frame(axis, kind, p(0));
    if (name == "lintgrz") return need(1), lintgrz(p(0));
    if (name == "univ_chain") return need(1), univ_chain(p(0));
    if (name == "product_tack_pre")
        return need(1), product(tack_pre(p(0)), tack_pre(p(0))).set_spec(tag("product_tack_pre", {std::to_string(p(0))}));
    throw UnknownName("unknown frame builder '" + std::string(name) + "'");
}

}  // namespace kripke
