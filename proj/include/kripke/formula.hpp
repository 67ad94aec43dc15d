#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>

namespace kripke {

enum class NodeKind : std::uint8_t { Var, Bot, Top, Not, And, Or, Imp, Iff, Dia, Box };

/// Index of a primitive modality. `Reach` is the frame-level reflexive-transitive
/// closure of R1 u R2; it is not one of the two frame relations.
enum class Modality : std::uint8_t { Reach = 0, One = 1, Two = 2 };

/// Surface modality tokens. `Vee` and `Star` are abbreviations expanded at
/// construction time: <v>F = <1>F | <2>F and <*>F = F | <v>F | <v><v>F.
enum class ModalToken : std::uint8_t { One = 1, Two = 2, Vee = 3, Star = 4 };

/// Immutable bimodal formula. Subterms are shared, so copies are cheap and
/// a formula may be a DAG.
class Formula {
public:
    struct Node;

    Formula();  // false

    static Formula var(int index);
    static Formula bot();
    static Formula top();
    static Formula negation(Formula f);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula imp(Formula a, Formula b);
    static Formula iff(Formula a, Formula b);
    static Formula dia(Modality m, Formula f);
    static Formula box(Modality m, Formula f);

    /// Diamond / box at a surface token; Vee and Star are expanded.
    static Formula dia(ModalToken t, Formula f);
    static Formula box(ModalToken t, Formula f);

    NodeKind kind() const;
    /// Variable index for Var nodes.
    int var_index() const;
    Modality modality() const;
    /// Operand of Not/Dia/Box, left operand of binary connectives.
    Formula lhs() const;
    Formula rhs() const;

    /// Identity of the shared node; used to memoize over DAGs.
    const Node* id() const { return node_.get(); }
    const std::shared_ptr<const Node>& node() const { return node_; }

    /// Wraps an existing node (as returned by id() or a child pointer).
    static Formula from_node(std::shared_ptr<const Node> node) { return Formula(std::move(node)); }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    NodeKind kind;
    int index = 0;  // variable index or modality
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
};

/// Number of operands of a node kind.
int arity(NodeKind k);

/// Variables occurring in f.
std::set<int> variables(const Formula& f);

/// Maximal nesting of modal operators.
int modal_depth(const Formula& f);

/// Number of distinct shared nodes.
std::size_t dag_size(const Formula& f);

/// Simultaneous substitution; variables absent from the map are kept.
Formula substitute(const Formula& f, const std::map<int, Formula>& map);

/// Interchanges Dia/Box 1 and 2 throughout.
Formula swap_modalities(const Formula& f);

/// Conjunction / disjunction of a list; empty lists give true / false.
template <class Range>
Formula conj_all(const Range& parts) {
    bool first = true;
    Formula acc = Formula::top();
    for (const Formula& p : parts) {
        acc = first ? p : Formula::conj(acc, p);
        first = false;
    }
    return acc;
}

template <class Range>
Formula disj_all(const Range& parts) {
    bool first = true;
    Formula acc = Formula::bot();
    for (const Formula& p : parts) {
        acc = first ? p : Formula::disj(acc, p);
        first = false;
    }
    return acc;
}

}  // namespace kripke
