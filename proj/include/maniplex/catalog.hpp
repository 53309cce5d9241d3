#ifndef MANIPLEX_CATALOG_HPP
#define MANIPLEX_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "maniplex/color_set.hpp"
#include "maniplex/premaniplex.hpp"

namespace maniplex {

/// A permutation of {0..size-1} as an image array.
using Permutation = std::vector<std::uint32_t>;

/// The p-gon: 2p flags on a cycle with alternating colors 0 and 1.
/// @throws Error(BadParameter) for p < 2.
RootedPremaniplex polygon(int p);

/// Two flags swapped by s_i for i outside I and fixed by s_i for i in I.
/// @throws Error(IImproper) when I is not a proper subset of the colors.
RootedPremaniplex two_orbit_stg(int rank, ColorSet I);

/// One flag with a semi-edge of every color.
RootedPremaniplex point(int rank);

/// The connections of p as permutations of its flags.
std::vector<Permutation> connection_permutations(const Premaniplex& p);

/// @throws Error(NotSggi) unless every x_i is an involution on a common
/// point set and x_i x_j has order at most 2 for |i - j| > 1.
void require_sggi(const std::vector<Permutation>& generators);

/// The group generated by the given permutations, identity first.
std::vector<Permutation> generated_group(const std::vector<Permutation>& generators, std::size_t point_count);

/**
 * The Cayley graph of the group generated by involutions x_0..x_{n-1}:
 * flags are group elements, s_i(g) = g x_i, and the identity is the base
 * flag. Products act left to right.
 * @throws Error(NotSggi) unless every x_i is an involution on a common point
 *         set and x_i x_j has order at most 2 for |i - j| > 1.
 */
RootedPremaniplex from_involutions(const std::vector<Permutation>& generators);

/// True when every x_i and every x_i x_j (i != j) is nontrivial, which is
/// exactly when from_involutions(generators) is a maniplex.
bool generators_give_maniplex(const std::vector<Permutation>& generators);

/// Standard generators of the hyperoctahedral group acting on the 2n signed
/// unit vectors: x_0 negates the first coordinate, x_j swaps coordinates j-1, j.
std::vector<Permutation> cube_generators(int n);
/// Adjacent transpositions of n+1 points.
std::vector<Permutation> simplex_generators(int n);

/// @throws Error(BadParameter) for n < 2.
RootedPremaniplex cube(int n);
/// @throws Error(BadParameter) for n < 2.
RootedPremaniplex simplex(int n);

/**
 * The map {4,4}_(b,c): the square tiling modulo the lattice spanned by (b,c)
 * and (-c,b). It has 8(b^2 + c^2) flags.
 * @throws Error(BadParameter) when b = c = 0.
 */
RootedPremaniplex torus_44(int b, int c);

/// The three-flag rank-4 premaniplexes st3_12 (A-B by color 1, B-C by
/// color 2) and st3_2 (1-2 by color 2, 2-3 by colors 1 and 3).
std::pair<RootedPremaniplex, RootedPremaniplex> fig2_premaniplexes();

struct CatalogEntry {
    std::string name;
    std::vector<int> parameters;
    RootedPremaniplex premaniplex;
};

/**
 * Builds an entry from a textual spec such as "polygon(5)", "point(3)",
 * "two_orbit(4,0,2)" (rank then colors of I), "cube(3)", "simplex(3)",
 * "torus44(1,2)", "st3_12" or "st3_2".
 * @throws Error(BadParameter)
 */
CatalogEntry build_catalog_entry(std::string_view spec);

/// A fixed list of small entries covering every family.
std::vector<CatalogEntry> standard_catalog();

}  // namespace maniplex

#endif
