#ifndef MANIPLEX_SYMMETRY_HPP
#define MANIPLEX_SYMMETRY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maniplex/color_set.hpp"
#include "maniplex/flagcore.hpp"
#include "maniplex/premaniplex.hpp"

namespace maniplex {

/// A color-preserving permutation of the flags, stored as its image array.
/// Composition is left to right: (a * b)(f) = b(a(f)).
class Automorphism {
public:
    Automorphism() = default;
    explicit Automorphism(std::vector<Flag> image) : image_(std::move(image)) {}

    static Automorphism identity(std::size_t flag_count);

    Flag operator()(Flag f) const { return image_[f]; }
    const std::vector<Flag>& image() const { return image_; }
    std::size_t flag_count() const { return image_.size(); }
    bool is_identity() const;

    Automorphism operator*(const Automorphism& then) const;
    Automorphism inverse() const;

    friend bool operator==(const Automorphism&, const Automorphism&) = default;

private:
    std::vector<Flag> image_;
};

/// True when a is a bijection commuting with every connection of p.
bool is_automorphism(const Premaniplex& p, const Automorphism& a);

/**
 * A group of automorphisms of one premaniplex, identity first. Since the
 * action is semiregular, an element is determined by the image of flag 0.
 */
class AutomorphismGroup {
public:
    std::size_t order() const { return elements_.size(); }
    const std::vector<Automorphism>& elements() const { return elements_; }
    const Automorphism& element(std::size_t k) const { return elements_[k]; }
    const OrbitPartition& orbits() const { return orbits_; }
    std::size_t orbit_count() const { return orbits_.block_count(); }
    bool same_orbit(Flag a, Flag b) const { return orbits_.block_of(a) == orbits_.block_of(b); }

    /// Index of the element sending `from` to `to`, if any.
    std::optional<std::size_t> element_mapping(Flag from, Flag to) const;

private:
    friend AutomorphismGroup automorphisms(const Premaniplex&);
    friend AutomorphismGroup make_subgroup(const Premaniplex&, std::vector<Automorphism>);
    static AutomorphismGroup assemble(std::size_t flag_count, std::vector<Automorphism> elements);

    std::vector<Automorphism> elements_;
    OrbitPartition orbits_;
    std::vector<std::int64_t> by_image_of_zero_;
};

/// The full automorphism group, found by extending each candidate image of
/// flag 0. Candidates are ordered by index, so the identity comes first.
AutomorphismGroup automorphisms(const Premaniplex& p);

/// Orbits of the full automorphism group, found from a generating set of
/// automorphisms without listing every element.
OrbitPartition automorphism_orbits(const Premaniplex& p);

/**
 * Wraps a caller-supplied set of automorphisms as a group.
 * @throws Error(NotASubgroup) when an element is not an automorphism of p,
 *         is repeated, or the set is not closed under products and inverses.
 */
AutomorphismGroup make_subgroup(const Premaniplex& p, std::vector<Automorphism> elements);

/// Quotient of p by a group: one flag per orbit, numbered by smallest member.
Premaniplex symmetry_type_graph(const Premaniplex& p, const AutomorphismGroup& group);
/// Rooted quotient; the base flag is the orbit of p's base flag.
RootedPremaniplex symmetry_type_graph(const RootedPremaniplex& p, const AutomorphismGroup& group);

struct TwoOrbitClass {
    enum class Kind { Regular, TwoOrbit, KOrbit };
    Kind kind = Kind::Regular;
    /// For TwoOrbit: the colors whose adjacent flags stay in the orbit.
    ColorSet colors;
    std::size_t orbit_count = 1;

    /// "regular", "2_{0,2}" or "3-orbit".
    std::string to_string() const;
    friend bool operator==(const TwoOrbitClass&, const TwoOrbitClass&) = default;
};

TwoOrbitClass two_orbit_class(const Premaniplex& p);

/**
 * A 2-coloring of the flags in which color-i edges keep the parity for
 * i in I and flip it otherwise, with `base` colored 0. Absent when no such
 * coloring exists. When I holds every color the coloring is constant.
 */
std::optional<std::vector<std::uint8_t>> orientation_parity(const Premaniplex& p, ColorSet I, Flag base = 0);
bool is_orientable(const Premaniplex& p, ColorSet I);

/// Automorphisms preserving the I-parity; the full group when p is not
/// I-orientable.
AutomorphismGroup i_even_automorphisms(const Premaniplex& p, ColorSet I);

/// True when the full-group symmetry type graph stays connected after
/// deleting the colors in I.
bool chain_transitive(const Premaniplex& p, ColorSet I);

/**
 * True when m covers t base to base and every flag over t's base flag is
 * in the automorphism orbit of m's base flag.
 */
bool is_admissible(const RootedPremaniplex& m, const RootedPremaniplex& t);

/// BFS relabeling from the base flag, colors in increasing order; equal
/// forms exactly for rooted-isomorphic inputs.
struct CanonicalForm {
    int rank = 0;
    std::vector<Flag> table;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};
CanonicalForm canonical_form(const RootedPremaniplex& p);

/// True when a color-preserving bijection sends a's base flag to b's.
bool rooted_isomorphic(const RootedPremaniplex& a, const RootedPremaniplex& b);

}  // namespace maniplex

#endif
