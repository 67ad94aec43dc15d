#include "kripke/world_set.hpp"

#include "kripke/errors.hpp"

namespace kripke {

std::string WorldSet::to_bitstring(int n) const {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int w = 0; w < n; ++w)
        if (contains(w)) s[static_cast<std::size_t>(w)] = '1';
    return s;
}

WorldSet WorldSet::from_bitstring(std::string_view s) {
    if (s.size() > static_cast<std::size_t>(kMaxWorlds)) throw FormatError("bit string longer than 64");
    WorldSet out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1')
            out.insert(static_cast<int>(i));
        else if (s[i] != '0')
            throw FormatError("non-binary digit '" + std::string(1, s[i]) + "' in bit string");
    }
    return out;
}

}  // namespace kripke
