#ifndef MANIPLEX_MIXING_HPP
#define MANIPLEX_MIXING_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "maniplex/color_set.hpp"
#include "maniplex/premaniplex.hpp"

namespace maniplex {

/// A color-preserving surjection sending the source base flag to the
/// target base flag.
struct Covering {
    RootedPremaniplex source;
    RootedPremaniplex target;
    std::vector<Flag> map;
};

/// The covering source -> target, unique when it exists.
std::optional<Covering> find_covering(const RootedPremaniplex& source, const RootedPremaniplex& target);

/// Checks surjectivity, color preservation and base flags.
bool is_valid_covering(const Covering& c);

struct MixResult {
    RootedPremaniplex mix;
    Covering left;
    Covering right;
    /// The (left flag, right flag) pair behind each mix flag.
    std::vector<std::pair<Flag, Flag>> pairs;
};

/**
 * The component of (base_a, base_b) in the coordinatewise product. Flags are
 * numbered in BFS discovery order from the base pair, colors in increasing
 * order; the base pair is flag 0. Memory is bounded by the number of
 * reachable pairs, at most |a| * |b|.
 * @throws Error(RankMismatch)
 */
MixResult mix(const RootedPremaniplex& a, const RootedPremaniplex& b);

struct MixChain {
    RootedPremaniplex mix;
    /// Covering of the mix onto each input, in input order.
    std::vector<Covering> projections;
};

/// Left fold of mix over the inputs.
/// @throws Error(EmptyList), Error(RankMismatch)
MixChain mix_many(std::span<const RootedPremaniplex> inputs);

/// The mix with the two-flag premaniplex 2_I.
/// @throws Error(IImproper) when I holds every color.
RootedPremaniplex i_double(const RootedPremaniplex& m, ColorSet I);

/// Same premaniplex, base flag f.
/// @throws Error(OutOfRange)
RootedPremaniplex rebase(const RootedPremaniplex& m, Flag f);

/**
 * The mix of m rooted at its base flag with m rooted at the smallest flag of
 * every other automorphism orbit, in order of that flag. For a two-orbit
 * input this is the mix with the oppositely rooted copy.
 */
RootedPremaniplex smallest_regular_cover(const RootedPremaniplex& m);

}  // namespace maniplex

#endif
