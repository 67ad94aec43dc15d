#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace kripke {

/// Frames are limited to 64 worlds so that a set of worlds fits one machine word.
inline constexpr int kMaxWorlds = 64;

/// A subset of {0, ..., n-1}; world i is bit i.
class WorldSet {
public:
    constexpr WorldSet() = default;
    constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr WorldSet full(int n) {
        return WorldSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }
    static constexpr WorldSet single(int w) { return WorldSet(std::uint64_t{1} << w); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int w) const { return (bits_ >> w) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int count() const { return std::popcount(bits_); }
    /// Least member; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits_); }
    constexpr bool subset_of(WorldSet other) const { return (bits_ & ~other.bits_) == 0; }

    constexpr void insert(int w) { bits_ |= std::uint64_t{1} << w; }
    constexpr void erase(int w) { bits_ &= ~(std::uint64_t{1} << w); }

    constexpr WorldSet complement(int n) const { return WorldSet(~bits_ & full(n).bits_); }

    constexpr WorldSet operator&(WorldSet o) const { return WorldSet(bits_ & o.bits_); }
    constexpr WorldSet operator|(WorldSet o) const { return WorldSet(bits_ | o.bits_); }
    constexpr WorldSet operator-(WorldSet o) const { return WorldSet(bits_ & ~o.bits_); }
    constexpr WorldSet& operator&=(WorldSet o) { bits_ &= o.bits_; return *this; }
    constexpr WorldSet& operator|=(WorldSet o) { bits_ |= o.bits_; return *this; }
    constexpr auto operator<=>(const WorldSet&) const = default;

    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    /// Bit string of length n, world 0 leftmost.
    std::string to_bitstring(int n) const;
    /// Inverse of to_bitstring; throws FormatError on a non-binary digit.
    static WorldSet from_bitstring(std::string_view s);

private:
    std::uint64_t bits_ = 0;
};

/// Integer key whose numeric order is the lexicographic order of bit strings.
constexpr std::uint64_t bitstring_key(WorldSet s, int n) {
    std::uint64_t key = 0;
    for (int w = 0; w < n; ++w) key = (key << 1) | (s.contains(w) ? 1U : 0U);
    return key;
}

/// Inverse of bitstring_key.
constexpr WorldSet from_bitstring_key(std::uint64_t key, int n) {
    WorldSet s;
    for (int w = n - 1; w >= 0; --w, key >>= 1)
        if (key & 1U) s.insert(w);
    return s;
}

}  // namespace kripke
