#pragma once

#include <string>
#include <string_view>

#include "kripke/formula.hpp"

namespace kripke {

/// Parses the ASCII formula grammar:
///
///     F ::= false | true | p<digits> | ~F | F & F | F | F | F -> F | F <-> F
///         | <m>F | [m]F | (F)          with m in {1, 2, v, *, r}
///
/// Precedence from tightest: ~ and modal prefixes, &, |, ->, <->.
/// `&`, `|` and `<->` associate to the left, `->` to the right. The UTF-8
/// symbols ¬ ∧ ∨ → ↔ ⊥ ⊤ are accepted as aliases. `<v>`/`<*>` are expanded
/// on the spot; `<r>` is the reachability diamond.
///
/// Throws SyntaxError carrying the byte offset and the expected tokens.
Formula parse(std::string_view text);

/// Canonical fully parenthesized text; parse(print(f)) == f.
std::string print(const Formula& f);

}  // namespace kripke
