#ifndef MANIPLEX_FLAGCORE_HPP
#define MANIPLEX_FLAGCORE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "maniplex/color_set.hpp"
#include "maniplex/premaniplex.hpp"

namespace maniplex {

/// Union-find with path halving and union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n);

    std::size_t find(std::size_t x);
    /// Returns true when x and y were in different sets.
    bool unite(std::size_t x, std::size_t y);
    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> weight_;
};

/**
 * A partition of the flags into blocks. Blocks are numbered 0..count-1 in
 * order of their smallest flag.
 */
class OrbitPartition {
public:
    OrbitPartition() = default;
    /// Relabels arbitrary per-flag labels into the canonical numbering.
    static OrbitPartition from_labels(const std::vector<std::size_t>& labels);

    std::uint32_t block_of(Flag f) const { return block_of_[f]; }
    std::size_t block_count() const { return block_count_; }
    std::size_t flag_count() const { return block_of_.size(); }
    const std::vector<std::uint32_t>& blocks() const { return block_of_; }
    std::vector<std::size_t> block_sizes() const;
    /// Flags of each block, ascending.
    std::vector<std::vector<Flag>> members() const;
    /// True when every block of this partition lies inside a block of other.
    bool refines(const OrbitPartition& other) const;

private:
    std::vector<std::uint32_t> block_of_;
    std::size_t block_count_ = 0;
};

/// Components of the subgraph that uses only the given colors.
OrbitPartition interval_orbits(const Premaniplex& p, ColorSet colors);

/// True when no s_i and no s_i s_j (i != j) has a fixed point.
bool is_maniplex(const Premaniplex& p);

struct Face {
    int rank;
    std::vector<Flag> flags;
};

/// The i-faces: components after deleting color i.
/// @throws Error(OutOfRange) for i outside [0, rank).
std::vector<Face> faces(const Premaniplex& p, int i);

/// Color i becomes color rank-1-i.
Premaniplex dual(const Premaniplex& p);
RootedPremaniplex dual(const RootedPremaniplex& p);

/// A section together with the ambient flag of every section flag.
struct SectionEmbedding {
    RootedPremaniplex section;
    std::vector<Flag> to_ambient;
};

/**
 * The component of the base flag under a contiguous color interval, with
 * ambient color lo+k becoming color k. Flags are numbered in BFS order from
 * the base flag, which becomes flag 0.
 * @throws Error(EmptyInterval) unless colors is a nonempty interval within the rank.
 */
SectionEmbedding section_with_embedding(const RootedPremaniplex& rp, ColorSet colors);
RootedPremaniplex section(const RootedPremaniplex& rp, ColorSet colors);

/**
 * The unique color-preserving map from `from` to `to` sending f0 to g0, if
 * one exists. Ranks must agree.
 */
std::optional<std::vector<Flag>> extend_color_map(const Premaniplex& from, Flag f0, const Premaniplex& to, Flag g0);

}  // namespace maniplex

#endif
