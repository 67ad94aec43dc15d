#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kripke/formula.hpp"
#include "kripke/frame.hpp"

namespace kripke {

/// A finite modal set algebra, listed explicitly.
struct SetAlgebra {
    int n = 0;
    std::vector<WorldSet> elements;       // sorted by bit string
    std::vector<WorldSet> atoms;          // sorted by least world
    std::vector<std::size_t> generators;  // gens[i] == elements[generators[i]]
};

inline constexpr std::uint64_t kDefaultCap = 1'000'000;

/// Least family containing gens and closed under the Boolean operations and
/// both diamond preimages. Throws CapExceeded when it has more than cap elements.
SetAlgebra generated_subalgebra(const Frame& f, const std::vector<WorldSet>& gens, std::uint64_t cap = kDefaultCap);

/// Partition of the worlds of one or more frames into atoms of the algebra
/// generated by every k-valuation at once.
struct FreeAlgebraAtoms {
    std::uint64_t copies = 0;  // (frame, valuation) pairs
    std::uint64_t atoms = 0;
};

/// Atoms of the subalgebra of prod_{F, theta} Alg F generated by the
/// variable tuples. Throws BudgetExceeded when the copies exceed the budget.
FreeAlgebraAtoms free_algebra_atoms(const std::vector<Frame>& frames, int k, std::uint64_t budget);

/// Number of k-formulas up to equivalence over the frames, i.e. 2^atoms.
/// Throws BudgetExceeded, or CapExceeded when the count is above cap.
std::uint64_t free_algebra_count(const std::vector<Frame>& frames, int k, std::uint64_t cap = kDefaultCap,
                                 std::uint64_t budget = std::uint64_t{1} << 20);

/// Layers of indistinguishability by formulas of bounded modal depth.
struct BlockSystem {
    int n = 0;
    /// layers[i]: blocks of worlds agreeing on formulas of depth < i, sorted by least world.
    std::vector<std::vector<WorldSet>> layers;
    /// parent[i][j]: the block of layer i-1 containing block j of layer i (empty for i = 0).
    std::vector<std::vector<int>> parent;
    /// Least i >= 1 with layer i+1 equal to layer i, if reached.
    std::optional<int> stabilization;

    const std::vector<WorldSet>& last() const { return layers.back(); }
    int block_of(int layer, int world) const;
};

BlockSystem block_system(const Model& m, int max_layers);

struct DefinabilityCertificate {
    int target = 0;
    WorldSet domain;                           // worlds generated by the target
    std::vector<std::optional<Formula>> alpha; // per world; set on the domain only
    Formula gamma;
    Formula beta;
    WorldSet extension;                        // eval of beta on the whole model
    int modal_depth = 0;
    std::vector<std::string> transcript;
};

/// Formula true exactly at r. Requires reachability within two steps
/// (NotPretransitive) and singleton blocks on the worlds generated by r
/// (NotDefinable).
DefinabilityCertificate beta_formula(const Model& m, int r);

}  // namespace kripke
