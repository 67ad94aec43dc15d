#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kripke/frame.hpp"

namespace kripke {

// Unimodal pieces.
UniFrame uni_cluster(int m);    // (m, nabla)
UniFrame uni_chain(int m);      // (m, <=)
UniFrame uni_discrete(int m);   // (m, Delta)
UniFrame uni_singleton();       // reflexive point
/// m-cluster with a top point m above it: aRb iff a < m or b = m.
UniFrame tack_pre(int m);

/// Same worlds, given relations: (n, r1, r2).
Frame pair_frame(const UniFrame& r1, const UniFrame& r2);

/// (a,b) -> a*|g| + b; R1 moves the first coordinate, R2 the second.
Frame product(const UniFrame& f, const UniFrame& g);

enum class SumKind { Both, One, Two };
std::string to_string(SumKind k);
/// "both"/"12", "1", "2"; throws FormatError.
SumKind sum_kind_from_string(std::string_view s);

/// f's worlds first, then g's. X x Y is added to R1, R2 or both.
Frame ordered_sum(const Frame& f, const Frame& g, SumKind kind);
/// R1 gains X x Y, R2 gains Y x X. Throws NotTense unless both inputs are tense.
Frame tense_sum(const Frame& f, const Frame& g);

Frame singleton();
Frame rect(int a, int b);
Frame tack(SumKind kind, int m);
/// axis 1: (m, <=, nabla) + o; axis 2: (m, nabla, <=) + o.
Frame match_frame(int axis, SumKind kind, int m);
Frame lintgrz(int n);      // (n, <=, >=)
Frame univ_chain(int m);   // (m, <=, nabla)

/// Builder by name for the CLI: cluster, chain, singleton, rect, tack, match,
/// lintgrz, univ_chain, tack_pre, product_tack_pre. Throws UnknownName.
Frame build_named_frame(std::string_view name, const std::vector<int>& params, SumKind kind = SumKind::Both,
                        int axis = 1);

}  // namespace kripke
