#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kripke/constructions.hpp"
#include "kripke/frame.hpp"

namespace kripke {

/// Source world -> target world.
using WorldMap = std::vector<int>;

enum class Clause { Surjectivity, Forth, Back, Admissibility };
std::string to_string(Clause c);

/// Why a map is not a p-morphism.
///   Surjectivity:  target = the missed target world.
///   Forth:         source R source_to, image pair unrelated.
///   Back:          f(source) R target, no source successor maps to it.
///   Admissibility: preimage of `set` (a target set) is not admissible.
struct Violation {
    Clause clause;
    int modality = 0;
    int source = -1;
    int source_to = -1;
    int target = -1;
    WorldSet set{};

    std::string describe() const;
};

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t{1} << 24;

/// Checks surjectivity, then forth and back per modality, then admissibility.
/// Throws FormatError if the map is not total or leaves the target.
std::optional<Violation> check_pmorphism(const GeneralFrame& g, const GeneralFrame& h, const WorldMap& f);
std::optional<Violation> check_pmorphism(const Frame& g, const Frame& h, const WorldMap& f);

/// Lexicographically least p-morphism, or none. Backtracking counts search
/// nodes against the budget and throws BudgetExceeded past it.
std::optional<WorldMap> find_pmorphism(const GeneralFrame& g, const GeneralFrame& h,
                                       std::uint64_t budget = kDefaultSearchBudget);
std::optional<WorldMap> find_pmorphism(const Frame& g, const Frame& h, std::uint64_t budget = kDefaultSearchBudget);

/// f1 on the left summand, f2 shifted past the first target on the right.
/// The map is the same for every sum kind; `kind` only documents intent.
WorldMap union_pmorphism(const WorldMap& f1, const WorldMap& f2, int first_target_size, SumKind kind);

}  // namespace kripke
