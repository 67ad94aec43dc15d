#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "kripke/frame.hpp"
#include "kripke/frame_io.hpp"
#include "kripke/semantics.hpp"

namespace kripke {

enum class Status { Pass, Fail, Meta };
std::string to_string(Status s);

struct CheckRecord {
    std::string id;
    std::string anchor;
    std::string procedure;
    Json params;
    Status status = Status::Fail;
    std::vector<std::string> transcript;  // meta records: one line, the reason
};

/// {id, anchor, status, params, transcript}.
Json record_to_json(const CheckRecord& r);

inline constexpr std::uint64_t kDefaultSeed = 1729;
/// Large enough for bh(4,1) on five worlds and the 3x3 tack matrix.
inline constexpr std::uint64_t kWorkbenchBudget = std::uint64_t{1} << 24;

/// Registered ids in report order: C1..C16, then the meta records M1...
std::vector<std::string> check_ids();
/// Anchor line of a check (also listed in data/anchors.txt).
std::string check_anchor(std::string_view id);

/// Runs one check. Recognized params: "seed", "budget", plus per-check size
/// limits echoed in the record. Throws UnknownCheck.
CheckRecord run_check(std::string_view id, const Json& params = Json::object());
std::vector<CheckRecord> run_all(const Json& params = Json::object());
/// The JSON array run_all produces, serialized; byte-stable across runs.
std::string report_json(const std::vector<CheckRecord>& records);

struct ProfileRow {
    std::string label;
    std::string formula;
    std::string verdict;  // "valid", "refuted" or "budget"
    std::optional<Witness> witness;
};

/// Validity of every profile formula on f, in registry order.
std::vector<ProfileRow> axiom_profile(const Frame& f, std::uint64_t budget = kDefaultBudget);

/// Deterministic generator; draws are reduced with plain modular arithmetic
/// so sequences do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    int below(int k) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(k)); }

private:
    std::mt19937_64 engine_;
};

}  // namespace kripke
