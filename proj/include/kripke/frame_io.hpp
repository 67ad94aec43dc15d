#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "kripke/frame.hpp"

namespace kripke {

using Json = nlohmann::ordered_json;

/// {"n": int, "r1": [rows], "r2": [rows], "algebra": [sets]?, "spec": string?}
Json frame_to_json(const GeneralFrame& g);
Json frame_to_json(const Frame& f);
/// Throws FormatError on bad shape, row length, digit or non-closed algebra.
GeneralFrame frame_from_json(const Json& j);

GeneralFrame load_frame(std::string_view text);
std::string store_frame(const GeneralFrame& g);
std::string store_frame(const Frame& f);

/// {"p0": bitstring, ...}
Json valuation_to_json(const Valuation& v, int n);
Valuation valuation_from_json(const Json& j, int n);
Valuation load_valuation(std::string_view text, int n);

/// Reads a whole file; throws FormatError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace kripke
