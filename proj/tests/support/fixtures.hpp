#ifndef MANIPLEX_TESTS_FIXTURES_HPP
#define MANIPLEX_TESTS_FIXTURES_HPP

#include <functional>
#include <string>
#include <vector>

#include "maniplex/catalog.hpp"
#include "maniplex/premaniplex.hpp"

namespace fixtures {

using maniplex::Permutation;
using maniplex::RootedPremaniplex;
using Point = std::vector<long>;
using PointMap = std::function<Point(const Point&)>;

/// Permutations induced by `maps` on the orbit of `start`; points are
/// identified through `canon`.
std::vector<Permutation> action_on_orbit(const Point& start, const std::vector<PointMap>& maps,
                                         const std::function<Point(Point)>& canon);

/// {4,3} with antipodal flags identified: 24 flags.
RootedPremaniplex hemicube();

RootedPremaniplex cross_polytope(int n);

enum class ToroidKind { Cubic = 1, FaceCentered = 2, BodyCentered = 3 };
/// Cubic toroid {4,3,4} with lattice vector (s,0,0), (s,s,0) or (s,s,s).
RootedPremaniplex cubic_toroid(int s, ToroidKind kind);

/// {3,4,3}: 1152 flags.
RootedPremaniplex cell24();

/// {K,2}: two copies of K joined by the new top color.
RootedPremaniplex ditope(const RootedPremaniplex& k);

/// Medial map of a rank-3 premaniplex; flags are (flag, half).
RootedPremaniplex medial_map(const RootedPremaniplex& k);

/// {p,2} and {2,p}.
RootedPremaniplex dihedron(int p);
RootedPremaniplex hosohedron(int p);

struct Named {
    std::string name;
    RootedPremaniplex premaniplex;
};

/// Polyhedra for closure sweeps: torus maps with b+c <= 4 that are
/// polytopes, dihedra and hosohedra.
std::vector<Named> polyhedra_corpus();

/// Torus maps with b+c <= 4 that fail the path intersection test.
std::vector<Named> non_polytopal_tori();

/// A pair p1, p2 with a common admissibility target t.
struct TheoremCase {
    std::string name;
    RootedPremaniplex p1;
    RootedPremaniplex p2;
    RootedPremaniplex t;
};

/// Pairs with p1 a polytope and both inputs t-admissible: regular pairs with
/// t a point, I-doubles, chiral and two-orbit pairs with t = 2_I.
std::vector<TheoremCase> theorem_corpus();

}  // namespace fixtures

#endif
