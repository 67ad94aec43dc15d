#include "kripke/frame_io.hpp"

#include <fstream>
#include <sstream>

#include "kripke/errors.hpp"

namespace kripke {

namespace {

Json rows_json(const std::vector<WorldSet>& rows, int n) {
    Json out = Json::array();
    for (WorldSet r : rows) out.push_back(r.to_bitstring(n));
    return out;
}

WorldSet set_from_json(const Json& j, int n, const std::string& where) {
    if (!j.is_string()) throw FormatError(where + ": expected a bit string");
    const auto& s = j.get_ref<const std::string&>();
    if (static_cast<int>(s.size()) != n)
        throw FormatError(where + ": length " + std::to_string(s.size()) + " differs from n = " + std::to_string(n));
    return WorldSet::from_bitstring(s);
}

std::vector<WorldSet> rows_from_json(const Json& j, int n, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw FormatError(std::string("missing array '") + key + "'");
    const Json& arr = j[key];
    if (static_cast<int>(arr.size()) != n)
        throw FormatError(std::string(key) + " has " + std::to_string(arr.size()) + " rows, expected " +
                          std::to_string(n));
    std::vector<WorldSet> out;
    for (std::size_t i = 0; i < arr.size(); ++i)
        out.push_back(set_from_json(arr[i], n, std::string(key) + "[" + std::to_string(i) + "]"));
    return out;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

Json frame_to_json(const Frame& f) {
    Json j;
    j["n"] = f.size();
    j["r1"] = rows_json(f.rows(Modality::One), f.size());
    j["r2"] = rows_json(f.rows(Modality::Two), f.size());
    if (!f.spec().empty()) j["spec"] = f.spec();
    return j;
}

Json frame_to_json(const GeneralFrame& g) {
    Json j = frame_to_json(g.frame());
    if (g.algebra()) {
        Json a = Json::array();
        for (WorldSet s : *g.algebra()) a.push_back(s.to_bitstring(g.size()));
        j["algebra"] = a;
    }
    return j;
}

GeneralFrame frame_from_json(const Json& j) {
    if (!j.is_object()) throw FormatError("frame must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw FormatError("missing integer 'n'");
    int n = j["n"].get<int>();
    if (n < 0 || n > kMaxWorlds) throw FormatError("n must be in 0..64");
    Frame f(rows_from_json(j, n, "r1"), rows_from_json(j, n, "r2"));
    if (j.contains("spec")) {
        if (!j["spec"].is_string()) throw FormatError("'spec' must be a string");
        f.set_spec(j["spec"].get<std::string>());
    }
    if (!j.contains("algebra")) return GeneralFrame(std::move(f));
    if (!j["algebra"].is_array()) throw FormatError("'algebra' must be an array");
    std::vector<WorldSet> alg;
    for (std::size_t i = 0; i < j["algebra"].size(); ++i)
        alg.push_back(set_from_json(j["algebra"][i], n, "algebra[" + std::to_string(i) + "]"));
    return GeneralFrame(std::move(f), std::move(alg));
}

GeneralFrame load_frame(std::string_view text) { return frame_from_json(parse_json(text)); }
std::string store_frame(const GeneralFrame& g) { return frame_to_json(g).dump(); }
std::string store_frame(const Frame& f) { return frame_to_json(f).dump(); }

Json valuation_to_json(const Valuation& v, int n) {
    Json j = Json::object();
    for (const auto& [var, s] : v) j["p" + std::to_string(var)] = s.to_bitstring(n);
    return j;
}

Valuation valuation_from_json(const Json& j, int n) {
    if (!j.is_object()) throw FormatError("valuation must be a JSON object");
    Valuation v;
    for (const auto& [key, value] : j.items()) {
        if (key.size() < 2 || key[0] != 'p' || key.find_first_not_of("0123456789", 1) != std::string::npos)
            throw FormatError("bad variable name '" + key + "'");
        v[std::stoi(key.substr(1))] = set_from_json(value, n, key);
    }
    return v;
}

Valuation load_valuation(std::string_view text, int n) { return valuation_from_json(parse_json(text), n); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace kripke
