#ifndef MANIPLEX_POLYVARIANCE_HPP
#define MANIPLEX_POLYVARIANCE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "maniplex/catalog.hpp"
#include "maniplex/color_set.hpp"
#include "maniplex/mixing.hpp"
#include "maniplex/premaniplex.hpp"
#include "maniplex/symmetry.hpp"

namespace maniplex {

/// Flags joined by paths in colors [0,hi] and in [lo,n-1] but not in [lo,hi].
struct PipWitness {
    Flag first;
    Flag second;
    int lo;
    int hi;
};

struct PipResult {
    bool polytopal = true;
    std::optional<PipWitness> witness;
    explicit operator bool() const { return polytopal; }
};

/**
 * Path intersection test: for all 1 <= lo <= hi <= n-2, flags joined by
 * paths in colors [0,hi] and in [lo,n-1] must be joined in [lo,hi]. Ranges
 * with lo = 0 or hi = n-1 hold trivially and are skipped.
 * @throws Error(NotAManiplex)
 */
PipResult pip_check(const Premaniplex& p);

enum class PipMode {
    /// Polytopal facets plus [0,n-2] and [i,n-1] implying [i,n-2] for every i.
    FacetOnly,
    /// Polytopal facets and vertex-figures plus [0,n-2] and [1,n-1] implying [1,n-2].
    FacetAndVertex,
    /// As FacetAndVertex, with the last condition checked from the base flag
    /// only. Requires chain transitivity on colors {0, n-1}.
    MedialTransitive,
};

/**
 * Recursive polytopality test. Sections are examined with the same mode;
 * in MedialTransitive mode a section lacking the required transitivity is
 * examined with FacetAndVertex. Rank at most 2 is always polytopal.
 * @throws Error(NotAManiplex), Error(ModePreconditionViolated)
 */
bool pip_check_recursive(const RootedPremaniplex& p, PipMode mode);

/**
 * String C-group test for involutions x_0..x_{n-1}: the groups generated by
 * all but the last and all but the first are C-groups, and their intersection
 * is generated by x_1..x_{n-2}. Rank at most 2 is accepted.
 * @throws Error(NotSggi)
 */
bool is_string_c_group(const std::vector<Permutation>& generators);

/**
 * Lower variance group X(a|b): automorphisms g of a with (base_a g, base_b)
 * in the mix. Elements follow the order of mix flags over b's base flag.
 */
struct VarianceGroup {
    RootedPremaniplex host;
    std::vector<Automorphism> elements;
    bool well_defined = true;
    /// A flag of a over b's base flag outside the orbit of a's base flag.
    std::optional<Flag> witness;

    std::size_t order() const { return elements.size(); }
    /// Image of the host base flag under each element, ascending.
    std::vector<Flag> base_images() const;
};

/// @throws Error(RankMismatch)
VarianceGroup variance_group_lower(const RootedPremaniplex& a, const RootedPremaniplex& b);

/**
 * Order of the variance group of m against m rooted at the 0-adjacent flag.
 * @throws Error(NotAdmissible) unless m is chiral, or regular and orientable.
 */
std::size_t chirality_group_order(const RootedPremaniplex& m);

/**
 * The variance group of host against other on their sections under
 * `colors`, each rooted at its base flag, as images of host's base flag in
 * host's own flags.
 */
struct SectionVariance {
    std::vector<Flag> images;
    bool well_defined = true;
};
SectionVariance section_variance(const RootedPremaniplex& host, const RootedPremaniplex& other, ColorSet colors);

/**
 * Flags L of the left factor, in the orbit of the left coordinate P of mix
 * flag x under left_group, with (L, Q) joined to (P, Q) by a path in
 * `colors` inside the mix, where Q is the right coordinate of x. Ascending.
 */
std::vector<Flag> pathwise_variance(const MixResult& mx, const AutomorphismGroup& left_group, Flag x, ColorSet colors);

struct VarianceWitness {
    /// Mix flag where the containment fails.
    Flag mix_flag;
    /// Image of the right coordinate under an automorphism in the facet and
    /// vertex-figure groups but not in the medial group.
    Flag image;
};

struct PolytopalityReport {
    bool verdict = true;
    bool facets_polytopal = true;
    bool vertex_figures_polytopal = true;
    bool variance_condition = true;
    /// Mix flag whose facet or vertex-figure fails the path intersection test.
    std::optional<Flag> facet_witness;
    std::optional<Flag> vertex_figure_witness;
    std::optional<VarianceWitness> variance_witness;
    /// False if some section variance group was not well defined.
    bool variance_well_defined = true;
    /// Mix flags at which the containment was evaluated.
    std::size_t evaluated_flags = 0;
};

struct TheoremOptions {
    /// Evaluate every facet, vertex-figure and medial block of the mix
    /// instead of one representative per component of t.
    bool exhaustive = false;
};

/**
 * Decides whether mix(p1, p2) is a polytope from its facets, vertex-figures
 * and the containment X(K2|K1) n X(L2|L1) <= X(N2|N1) of section variance
 * groups at each mix flag. Mix flags over the same component of t (under the
 * relevant colors) are equivalent, so one representative per component is
 * evaluated unless options.exhaustive is set.
 * @throws Error(PreconditionViolated) unless p1 is a polytope and both
 *         inputs are t-admissible.
 */
PolytopalityReport theorem_mix_polytopality(const RootedPremaniplex& p1, const RootedPremaniplex& p2,
                                            const RootedPremaniplex& t, TheoremOptions options = {});

enum class DoubleCase {
    /// Facets or vertex-figures orientable for the shifted color set.
    FacetsOrVertexFiguresOrientable,
    /// Both non-orientable, medial sections orientable.
    MedialOrientable,
    /// Medial sections non-orientable: decided by the doubles of the sections.
    MedialNonOrientable,
};

struct DoubleVerdict {
    DoubleCase label;
    bool polytopal;
};

/// Colors of I seen from the facets, vertex-figures and medial sections.
ColorSet facet_colors(ColorSet I, int rank);
ColorSet vertex_figure_colors(ColorSet I, int rank);
ColorSet medial_colors(ColorSet I, int rank);

/**
 * Predicts whether the I-double of a regular polytope is a polytope from the
 * orientability of its facets, vertex-figures and medial sections.
 * @throws Error(PreconditionViolated) unless p is a regular polytope of
 *         rank at least 3 that is not I-orientable.
 */
DoubleVerdict i_double_polytopality(const RootedPremaniplex& p, ColorSet I);

struct CoverReport {
    PolytopalityReport report;
    ColorSet I;
    /// 1 when medial-section-transitive, otherwise 2, 3 or 4 for
    /// I = {1..n-2}, {0..n-2}, {1..n-1}.
    int part = 1;
    /// Only the variance containment was checked (I avoids 0 and n-1).
    bool containment_only = false;
    /// The opposite rooting is at the neighbor of the base flag in this color.
    int rebase_color = 0;
};

/**
 * Decides whether the smallest regular cover of a two-orbit polytope p, the
 * mix of p with its opposite rooting, is a polytope.
 * @throws Error(NotTwoOrbit), Error(NotPolytope)
 */
CoverReport src_polytopality_report(const RootedPremaniplex& p);

}  // namespace maniplex

#endif
