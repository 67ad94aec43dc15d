#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kripke/formula.hpp"
#include "kripke/world_set.hpp"

namespace kripke {

/// A single relation on n worlds as successor sets: rows[a] = R(a).
struct UniFrame {
    int n = 0;
    std::vector<WorldSet> rows;

    bool related(int a, int b) const { return rows[static_cast<std::size_t>(a)].contains(b); }
};

/// Finite bimodal Kripke frame. Worlds are 0..n-1.
class Frame {
public:
    Frame() = default;
    /// n worlds, both relations empty.
    explicit Frame(int n);
    Frame(std::vector<WorldSet> r1, std::vector<WorldSet> r2);

    int size() const { return n_; }
    WorldSet worlds() const { return WorldSet::full(n_); }

    /// Successors of a under R1 or R2. Modality::Reach is not stored; see reach_closure.
    WorldSet successors(Modality m, int a) const { return rows(m)[static_cast<std::size_t>(a)]; }
    bool related(Modality m, int a, int b) const { return successors(m, a).contains(b); }
    const std::vector<WorldSet>& rows(Modality m) const;

    void relate(Modality m, int a, int b);
    /// Replaces R(a).
    void set_row(Modality m, int a, WorldSet row);

    /// {a : R(a) meets u}.
    WorldSet preimage(Modality m, WorldSet u) const;
    /// {a : R(a) inside u}.
    WorldSet box_preimage(Modality m, WorldSet u) const;

    /// Constructor tag of built frames, e.g. "tack(both,3)"; empty otherwise.
    const std::string& spec() const { return spec_; }
    Frame& set_spec(std::string s) {
        spec_ = std::move(s);
        return *this;
    }

    /// Structural equality of relations (spec tags ignored).
    friend bool operator==(const Frame& a, const Frame& b) { return a.n_ == b.n_ && a.r1_ == b.r1_ && a.r2_ == b.r2_; }

private:
    int n_ = 0;
    std::vector<WorldSet> r1_;
    std::vector<WorldSet> r2_;
    std::string spec_;
};

/// Variable index -> set of worlds. Absent variables are empty.
using Valuation = std::map<int, WorldSet>;

/// Frame plus valuation; the variables are the valuation's keys.
struct Model {
    Frame frame;
    Valuation valuation;
};

/// Frame with an admissible family of sets. No algebra means the full powerset.
class GeneralFrame {
public:
    GeneralFrame() = default;
    explicit GeneralFrame(Frame f);
    /// Verifies closure; throws FormatError naming the offending set and operation.
    GeneralFrame(Frame f, std::vector<WorldSet> algebra);

    const Frame& frame() const { return frame_; }
    int size() const { return frame_.size(); }
    bool full_powerset() const { return !algebra_.has_value(); }
    /// Listed elements; empty optional for full powerset.
    const std::optional<std::vector<WorldSet>>& algebra() const { return algebra_; }
    bool admissible(WorldSet s) const;
    /// Number of admissible sets (2^n for full powerset).
    std::uint64_t algebra_size() const;

    /// Set when built as a restriction to a non-admissible set.
    bool restricted_outside_algebra() const { return outside_; }
    void mark_restricted_outside_algebra() { outside_ = true; }

private:
    Frame frame_;
    std::optional<std::vector<WorldSet>> algebra_;
    bool outside_ = false;
};

/// Throws FormatError unless the family is a modal set algebra on f.
void verify_algebra(const Frame& f, const std::vector<WorldSet>& algebra);

/// Reflexive-transitive closure of R1 u R2, by iterated squaring.
std::vector<WorldSet> reach_closure(const Frame& f);
/// Reflexive-transitive closure of a single relation.
std::vector<WorldSet> reach_closure(const std::vector<WorldSet>& rows);

struct SkeletonInfo {
    std::vector<int> cluster;               // world -> cluster id
    std::vector<WorldSet> members;          // cluster id -> worlds
    std::vector<std::uint64_t> above;       // cluster id -> bit j set iff cluster j is reachable (incl. itself)
    int height = 0;
    std::vector<int> depth;                 // world -> depth

    int cluster_count() const { return static_cast<int>(members.size()); }
};

/// Clusters (strongly connected components of R1 u R2, ids ordered by least
/// world), skeleton order, height and depth.
SkeletonInfo analyze(const Frame& f);

/// First-order frame conditions by enumeration. Throws UnknownProperty.
///   com, cr, rp(m), tense, preorder(i), equivalence(i), linear(i),
///   nonbranching(i), poset(i), universal(i), reflexive(i), transitive(i),
///   symmetric(i), prenoetherian
bool frame_property(const Frame& f, std::string_view prop, const std::vector<int>& params = {});

/// frame_property for every frame (n, r1, R2) with n <= 4 at once, bit c of
/// the result standing for the R2 with code c (bit a*n+b set iff a R2 b).
/// Supports com, cr and tense.
std::vector<std::uint64_t> property_for_every_r2(const UniFrame& r1, std::string_view prop);

/// Result of restricting to a subset; worlds are renumbered in increasing order.
template <class F>
struct Restricted {
    F frame;
    WorldSet domain;             // the subset of the original worlds
    std::vector<int> origin;     // new world -> original world
};

/// Relations and algebra intersected with y. Throws EmptyRestriction.
Restricted<GeneralFrame> restriction(const GeneralFrame& g, WorldSet y);
Restricted<Frame> restriction(const Frame& f, WorldSet y);

/// Restriction to the (R1 u R2)*-image of y.
Restricted<GeneralFrame> generated_subframe(const GeneralFrame& g, WorldSet y);
Restricted<Frame> generated_subframe(const Frame& f, WorldSet y);

/// (n, rows, Delta).
Frame lift_unimodal(const UniFrame& u);
/// Reads rows as bit strings; throws FormatError.
UniFrame unimodal_from_rows(const std::vector<std::string>& rows);

}  // namespace kripke
