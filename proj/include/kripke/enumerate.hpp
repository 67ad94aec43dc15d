#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kripke/frame.hpp"

namespace kripke {

/// Isomorphism-invariant code of a frame with at most 8 worlds: the least
/// (r1 bits, r2 bits) over all relabelings.
using FrameCode = std::pair<std::uint64_t, std::uint64_t>;
FrameCode canonical_code(const Frame& f);
/// The relabeled frame that realizes canonical_code.
Frame canonical_form(const Frame& f);
FrameCode canonical_code(const UniFrame& u);

/// Relation with bit a*n+b of code set iff a R b, and back.
UniFrame relation_from_code(std::uint64_t code, int n);
std::uint64_t relation_code(const UniFrame& u);
/// Every binary relation on n worlds up to isomorphism, canonical labeling only
/// (n <= 4 is practical: 3044 classes at n = 4).
std::vector<UniFrame> relations_up_to_iso(int n);

/// Every preorder on n worlds (labeled), in increasing row-code order.
std::vector<UniFrame> labeled_preorders(int n);
/// One canonical representative per isomorphism class.
std::vector<UniFrame> preorders_up_to_iso(int n);

/// Bimodal frames on n worlds up to isomorphism (n <= 3 is practical).
std::vector<Frame> bimodal_frames_up_to_iso(int n);
/// Pairs of preorders on the same n worlds, up to simultaneous relabeling.
std::vector<Frame> preorder_pairs_up_to_iso(int n);

}  // namespace kripke
