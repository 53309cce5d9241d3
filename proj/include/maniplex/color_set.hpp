#ifndef MANIPLEX_COLOR_SET_HPP
#define MANIPLEX_COLOR_SET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace maniplex {

/// Maximum supported rank; colors are stored as bits of a 32-bit word.
inline constexpr int kMaxRank = 32;

/// A set of colors {0, ..., kMaxRank-1} stored as a bitmask.
class ColorSet {
public:
    constexpr ColorSet() = default;
    constexpr ColorSet(std::initializer_list<int> colors) {
        for (int c : colors) bits_ |= bit(c);
    }

    static constexpr ColorSet from_bits(std::uint32_t bits) {
        ColorSet s;
        s.bits_ = bits;
        return s;
    }
    /// Colors lo..hi inclusive; empty when hi < lo.
    static constexpr ColorSet interval(int lo, int hi) {
        ColorSet s;
        for (int c = lo; c <= hi; ++c) s.bits_ |= bit(c);
        return s;
    }
    static constexpr ColorSet all(int rank) { return interval(0, rank - 1); }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool contains(int c) const { return c >= 0 && c < kMaxRank && (bits_ & bit(c)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr ColorSet with(int c) const { return from_bits(bits_ | bit(c)); }
    constexpr ColorSet without(int c) const { return from_bits(bits_ & ~bit(c)); }
    constexpr ColorSet complement(int rank) const { return from_bits(all(rank).bits_ & ~bits_); }
    constexpr ColorSet operator|(ColorSet o) const { return from_bits(bits_ | o.bits_); }
    constexpr ColorSet operator&(ColorSet o) const { return from_bits(bits_ & o.bits_); }
    constexpr bool is_subset_of(ColorSet o) const { return (bits_ & ~o.bits_) == 0; }
    /// True when every color is below `rank`.
    constexpr bool fits_rank(int rank) const { return is_subset_of(all(rank)); }

    /// Colors in {lo..hi} shifted down by lo, i.e. the set as seen from a
    /// section whose color k is ambient color lo + k.
    constexpr ColorSet restrict_shift(int lo, int hi) const {
        ColorSet s;
        for (int c = lo; c <= hi; ++c)
            if (contains(c)) s.bits_ |= bit(c - lo);
        return s;
    }
    /// Color i becomes rank-1-i.
    constexpr ColorSet reflected(int rank) const {
        ColorSet s;
        for (int c = 0; c < rank; ++c)
            if (contains(c)) s.bits_ |= bit(rank - 1 - c);
        return s;
    }

    std::vector<int> colors() const {
        std::vector<int> out;
        for (int c = 0; c < kMaxRank; ++c)
            if (contains(c)) out.push_back(c);
        return out;
    }
    /// Brace notation, e.g. "{0,2}" or "{}".
    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int c : colors()) {
            if (!first) out += ',';
            out += std::to_string(c);
            first = false;
        }
        return out + "}";
    }

    friend constexpr bool operator==(ColorSet, ColorSet) = default;

private:
    static constexpr std::uint32_t bit(int c) { return std::uint32_t{1} << c; }
    std::uint32_t bits_ = 0;
};

}  // namespace maniplex

#endif
