#include "kripke/formula.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "kripke/errors.hpp"

namespace kripke {

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

NodePtr make_node(NodeKind kind, int index, NodePtr lhs = {}, NodePtr rhs = {}) {
    return std::make_shared<const Formula::Node>(Formula::Node{kind, index, std::move(lhs), std::move(rhs)});
}

const NodePtr& bot_node() {
    static const NodePtr node = make_node(NodeKind::Bot, 0);
    return node;
}

const NodePtr& top_node() {
    static const NodePtr node = make_node(NodeKind::Top, 0);
    return node;
}

}  // namespace

int arity(NodeKind k) {
    switch (k) {
    case NodeKind::Var:
    case NodeKind::Bot:
    case NodeKind::Top: return 0;
    case NodeKind::Not:
    case NodeKind::Dia:
    case NodeKind::Box: return 1;
    default: return 2;
    }
}

Formula::Formula() : node_(bot_node()) {}

Formula Formula::var(int index) {
    if (index < 0) throw FormatError("negative variable index");
    return Formula(make_node(NodeKind::Var, index));
}

Formula Formula::bot() { return Formula(); }
Formula Formula::top() { return Formula(top_node()); }

Formula Formula::negation(Formula f) { return Formula(make_node(NodeKind::Not, 0, std::move(f.node_))); }

Formula Formula::conj(Formula a, Formula b) {
    return Formula(make_node(NodeKind::And, 0, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::disj(Formula a, Formula b) {
    return Formula(make_node(NodeKind::Or, 0, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::imp(Formula a, Formula b) {
    return Formula(make_node(NodeKind::Imp, 0, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::iff(Formula a, Formula b) {
    return Formula(make_node(NodeKind::Iff, 0, std::move(a.node_), std::move(b.node_)));
}

Formula Formula::dia(Modality m, Formula f) {
    return Formula(make_node(NodeKind::Dia, static_cast<int>(m), std::move(f.node_)));
}

Formula Formula::box(Modality m, Formula f) {
    return Formula(make_node(NodeKind::Box, static_cast<int>(m), std::move(f.node_)));
}

Formula Formula::dia(ModalToken t, Formula f) {
    switch (t) {
    case ModalToken::One: return dia(Modality::One, std::move(f));
    case ModalToken::Two: return dia(Modality::Two, std::move(f));
    case ModalToken::Vee: return disj(dia(Modality::One, f), dia(Modality::Two, f));
    case ModalToken::Star: {
        Formula once = dia(ModalToken::Vee, f);
        Formula twice = dia(ModalToken::Vee, once);
        return disj(f, disj(once, twice));
    }
    }
    throw FormatError("bad modality token");
}

Formula Formula::box(ModalToken t, Formula f) {
    switch (t) {
    case ModalToken::One: return box(Modality::One, std::move(f));
    case ModalToken::Two: return box(Modality::Two, std::move(f));
    case ModalToken::Vee:
    case ModalToken::Star: return negation(dia(t, negation(std::move(f))));
    }
    throw FormatError("bad modality token");
}

NodeKind Formula::kind() const { return node_->kind; }
int Formula::var_index() const { return node_->index; }
Modality Formula::modality() const { return static_cast<Modality>(node_->index); }
Formula Formula::lhs() const { return Formula(node_->lhs); }
Formula Formula::rhs() const { return Formula(node_->rhs); }

bool operator==(const Formula& a, const Formula& b) {
    using Node = Formula::Node;
    std::vector<std::pair<const Node*, const Node*>> todo{{a.id(), b.id()}};
    std::set<std::pair<const Node*, const Node*>> seen;
    while (!todo.empty()) {
        auto [x, y] = todo.back();
        todo.pop_back();
        if (x == y) continue;
        if (!seen.insert({x, y}).second) continue;
        if (x->kind != y->kind || x->index != y->index) return false;
        int k = arity(x->kind);
        if (k >= 1) todo.push_back({x->lhs.get(), y->lhs.get()});
        if (k == 2) todo.push_back({x->rhs.get(), y->rhs.get()});
    }
    return true;
}

namespace {

/// Children-first order of the distinct nodes of a DAG.
std::vector<const Formula::Node*> postorder(const Formula& f) {
    std::vector<const Formula::Node*> order;
    std::unordered_set<const Formula::Node*> done;
    std::vector<std::pair<const Formula::Node*, bool>> stack{{f.id(), false}};
    while (!stack.empty()) {
        auto [n, expanded] = stack.back();
        stack.pop_back();
        if (done.count(n)) continue;
        if (expanded) {
            done.insert(n);
            order.push_back(n);
            continue;
        }
        stack.push_back({n, true});
        int k = arity(n->kind);
        if (k == 2) stack.push_back({n->rhs.get(), false});
        if (k >= 1) stack.push_back({n->lhs.get(), false});
    }
    return order;
}

}  // namespace

std::set<int> variables(const Formula& f) {
    std::set<int> out;
    for (const auto* n : postorder(f))
        if (n->kind == NodeKind::Var) out.insert(n->index);
    return out;
}

std::size_t dag_size(const Formula& f) { return postorder(f).size(); }

int modal_depth(const Formula& f) {
    std::unordered_map<const Formula::Node*, int> depth;
    for (const auto* n : postorder(f)) {
        int d = 0;
        switch (arity(n->kind)) {
        case 0: break;
        case 1:
            d = depth[n->lhs.get()] + ((n->kind == NodeKind::Dia || n->kind == NodeKind::Box) ? 1 : 0);
            break;
        default: d = std::max(depth[n->lhs.get()], depth[n->rhs.get()]); break;
        }
        depth[n] = d;
    }
    return depth[f.id()];
}

namespace {

template <class Leaf, class Remap>
Formula transform(const Formula& f, Leaf&& leaf, Remap&& remap) {
    std::unordered_map<const Formula::Node*, Formula> out;
    for (const auto* n : postorder(f)) {
        Formula g;
        switch (n->kind) {
        case NodeKind::Var:
        case NodeKind::Bot:
        case NodeKind::Top: g = leaf(n); break;
        case NodeKind::Not: g = Formula::negation(out[n->lhs.get()]); break;
        case NodeKind::And: g = Formula::conj(out[n->lhs.get()], out[n->rhs.get()]); break;
        case NodeKind::Or: g = Formula::disj(out[n->lhs.get()], out[n->rhs.get()]); break;
        case NodeKind::Imp: g = Formula::imp(out[n->lhs.get()], out[n->rhs.get()]); break;
        case NodeKind::Iff: g = Formula::iff(out[n->lhs.get()], out[n->rhs.get()]); break;
        case NodeKind::Dia: g = Formula::dia(remap(static_cast<Modality>(n->index)), out[n->lhs.get()]); break;
        case NodeKind::Box: g = Formula::box(remap(static_cast<Modality>(n->index)), out[n->lhs.get()]); break;
        }
        out[n] = g;
    }
    return out[f.id()];
}

}  // namespace

Formula substitute(const Formula& f, const std::map<int, Formula>& map) {
    return transform(
        f,
        [&](const Formula::Node* leaf) -> Formula {
            if (leaf->kind == NodeKind::Var)
                if (auto it = map.find(leaf->index); it != map.end()) return it->second;
            if (leaf->kind == NodeKind::Var) return Formula::var(leaf->index);
            return leaf->kind == NodeKind::Top ? Formula::top() : Formula::bot();
        },
        [](Modality m) { return m; });
}

Formula swap_modalities(const Formula& f) {
    return transform(
        f,
        [](const Formula::Node* leaf) -> Formula {
            if (leaf->kind == NodeKind::Var) return Formula::var(leaf->index);
            return leaf->kind == NodeKind::Top ? Formula::top() : Formula::bot();
        },
        [](Modality m) {
            if (m == Modality::One) return Modality::Two;
            if (m == Modality::Two) return Modality::One;
            return m;
        });
}

}  // namespace kripke
