#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "kripke/formula.hpp"
#include "kripke/frame.hpp"

namespace kripke {

/// Default validity budget, counted in valuation-world pairs.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 20;

/// Extension of f. <r> is evaluated through the reflexive-transitive
/// closure of R1 u R2; absent variables are empty.
WorldSet eval(const Frame& frame, const Valuation& v, const Formula& f);
/// As above; throws FormatError if a valuation set is not admissible.
WorldSet eval(const GeneralFrame& g, const Valuation& v, const Formula& f);

/// Same as eval; named for formulas built with Modality::Reach.
WorldSet reach_modality_eval(const Frame& frame, const Valuation& v, const Formula& f);

struct Witness {
    Valuation valuation;  // one entry per variable of the formula
    int world = 0;
};

/// Number of valuations validity has to enumerate (saturating).
std::uint64_t valuations_needed(const GeneralFrame& g, const Formula& f);

/// Lexicographically least refuting (valuation, world): valuations compare
/// variable by variable in index order, sets by bit string. Throws
/// BudgetExceeded when valuations x worlds exceeds the budget.
std::optional<Witness> refutes_witness(const GeneralFrame& g, const Formula& f,
                                       std::uint64_t budget = kDefaultBudget);
std::optional<Witness> refutes_witness(const Frame& frame, const Formula& f, std::uint64_t budget = kDefaultBudget);

bool valid(const GeneralFrame& g, const Formula& f, std::uint64_t budget = kDefaultBudget);
bool valid(const Frame& frame, const Formula& f, std::uint64_t budget = kDefaultBudget);

namespace detail {
struct Program;
}

/// A formula compiled once for validity checks on many frames.
class ValidityChecker {
public:
    explicit ValidityChecker(const Formula& f);

    std::optional<Witness> refute(const GeneralFrame& g, std::uint64_t budget = kDefaultBudget) const;
    std::optional<Witness> refute(const Frame& f, std::uint64_t budget = kDefaultBudget) const;
    /// Same verdict as refute, without building a witness.
    bool valid(const Frame& f, std::uint64_t budget = kDefaultBudget) const;
    std::size_t variable_count() const;

    /// Validity on every frame (n, r1, R2) with n <= 4 at once. Bit c of the
    /// result is set iff the formula is valid when a R2 b exactly for the set
    /// bits a*n+b of c. The budget applies per frame. <r> is not supported.
    std::vector<std::uint64_t> valid_for_every_r2(const UniFrame& r1, std::uint64_t budget = kDefaultBudget) const;

private:
    std::shared_ptr<const detail::Program> prog_;
};

/// Validity by scalar evaluation of each valuation in turn. Same contract as
/// refutes_witness; kept as an independent route for cross-checks.
std::optional<Witness> refutes_witness_scalar(const GeneralFrame& g, const Formula& f,
                                              std::uint64_t budget = kDefaultBudget);

}  // namespace kripke
