#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kripke/formula.hpp"

namespace kripke {

/// Template variables of the registry.
inline constexpr int kVarP = 0;
inline constexpr int kVarQ = 1;

/// Token parameters are 1, 2, 3 (= v) or 4 (= *).
ModalToken modal_token(int code);

/// Looks up a registry formula. Throws UnknownName / ArityMismatch.
///
///   bh(n, tok)   rp(m, tok)   com   chr   presym   presym(i)   conv   dd
///   mck(tok)     dot3(tok)    sym2  match2_ax   match12_ax   cas   u_incl
///   triv_ax(tok) s4_ax(i)     s5_ax(i)    trans(tok)   grz(tok)
Formula named_formula(std::string_view name, const std::vector<int>& params = {});

/// Parses "name" or "name(a,b)" with `v` and `*` accepted for tokens.
Formula named_formula_call(std::string_view call);

/// One instantiated registry entry, e.g. {"mck", {1}, "mck(1)"}.
struct NamedInstance {
    std::string name;
    std::vector<int> params;
    std::string label;
};

/// Fixed list of instantiations used by axiom profiles.
const std::vector<NamedInstance>& profile_instances();

}  // namespace kripke
