#include "fixtures.hpp"

#include <algorithm>
#include <map>

#include "maniplex/flagcore.hpp"
#include "maniplex/polyvariance.hpp"

namespace fixtures {

using namespace maniplex;

std::vector<Permutation> action_on_orbit(const Point& start, const std::vector<PointMap>& maps,
                                         const std::function<Point(Point)>& canon) {
    std::map<Point, std::uint32_t> index;
    std::vector<Point> points{canon(start)};
    index.emplace(points[0], 0);
    std::vector<std::vector<Point>> images(maps.size());
    for (std::size_t head = 0; head < points.size(); ++head) {
        for (std::size_t k = 0; k < maps.size(); ++k) {
            Point next = canon(maps[k](points[head]));
            if (index.emplace(next, static_cast<std::uint32_t>(points.size())).second) points.push_back(next);
            images[k].push_back(next);
        }
    }
    std::vector<Permutation> out(maps.size(), Permutation(points.size()));
    for (std::size_t k = 0; k < maps.size(); ++k)
        for (std::size_t x = 0; x < points.size(); ++x) out[k][x] = index.at(images[k][x]);
    return out;
}

RootedPremaniplex hemicube() {
    auto canon = [](Point v) {
        auto lead = std::find_if(v.begin(), v.end(), [](long x) { return x != 0; });
        if (lead != v.end() && *lead < 0)
            for (auto& x : v) x = -x;
        return v;
    };
    std::vector<PointMap> maps{
        [](const Point& v) { return Point{-v[0], v[1], v[2]}; },
        [](const Point& v) { return Point{v[1], v[0], v[2]}; },
        [](const Point& v) { return Point{v[0], v[2], v[1]}; },
    };
    return from_involutions(action_on_orbit({1, 1, 1}, maps, canon));
}

RootedPremaniplex cross_polytope(int n) { return dual(cube(n)); }

RootedPremaniplex cubic_toroid(int s, ToroidKind kind) {
    // Coordinates scaled by 8 so the base point (3,2,1)/8 is integral.
    const long unit = 8L * s;
    const long period = 2 * unit;
    std::vector<Point> cosets{{0, 0, 0}};
    if (kind == ToroidKind::Cubic) {
        for (int mask = 1; mask < 8; ++mask)
            cosets.push_back({(mask & 1) ? unit : 0, (mask & 2) ? unit : 0, (mask & 4) ? unit : 0});
    } else if (kind == ToroidKind::FaceCentered) {
        cosets.insert(cosets.end(), {{unit, unit, 0}, {unit, 0, unit}, {0, unit, unit}});
    } else {
        cosets.push_back({unit, unit, unit});
    }
    auto canon = [=](Point v) {
        Point best;
        for (const auto& c : cosets) {
            Point w(3);
            for (int k = 0; k < 3; ++k) w[k] = ((v[k] + c[k]) % period + period) % period;
            if (best.empty() || w < best) best = w;
        }
        return best;
    };
    std::vector<PointMap> maps{
        [](const Point& v) { return Point{8 - v[0], v[1], v[2]}; },
        [](const Point& v) { return Point{v[1], v[0], v[2]}; },
        [](const Point& v) { return Point{v[0], v[2], v[1]}; },
        [](const Point& v) { return Point{v[0], v[1], -v[2]}; },
    };
    return from_involutions(action_on_orbit({3, 2, 1}, maps, canon));
}

RootedPremaniplex cell24() {
    // Doubled coordinates; simple roots of F4 with the double bond in the middle.
    const std::vector<Point> roots{{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
    std::vector<PointMap> maps;
    for (const auto& a : roots) {
        maps.push_back([a](const Point& x) {
            long dot = 0, norm = 0;
            for (int k = 0; k < 4; ++k) {
                dot += x[k] * a[k];
                norm += a[k] * a[k];
            }
            Point y(x);
            for (int k = 0; k < 4; ++k) y[k] -= 2 * dot * a[k] / norm;
            return y;
        });
    }
    return from_involutions(action_on_orbit({2, 2, 0, 0}, maps, [](Point v) { return v; }));
}

RootedPremaniplex ditope(const RootedPremaniplex& k) {
    const auto& p = k.premaniplex();
    const std::size_t m = p.flag_count();
    std::vector<std::vector<Flag>> rows(static_cast<std::size_t>(p.rank()) + 1, std::vector<Flag>(2 * m));
    for (Flag f = 0; f < m; ++f) {
        for (int i = 0; i < p.rank(); ++i) {
            rows[i][f] = p.adjacent(i, f);
            rows[i][f + m] = static_cast<Flag>(p.adjacent(i, f) + m);
        }
        rows[p.rank()][f] = static_cast<Flag>(f + m);
        rows[p.rank()][f + m] = f;
    }
    return RootedPremaniplex(Premaniplex::validate(p.rank() + 1, 2 * m, rows), k.base());
}

RootedPremaniplex medial_map(const RootedPremaniplex& k) {
    const auto& p = k.premaniplex();
    const std::size_t m = p.flag_count();
    std::vector<std::vector<Flag>> rows(3, std::vector<Flag>(2 * m));
    for (Flag f = 0; f < m; ++f) {
        rows[0][f] = p.adjacent(1, f);
        rows[0][f + m] = static_cast<Flag>(p.adjacent(1, f) + m);
        rows[1][f] = p.adjacent(0, f);
        rows[1][f + m] = static_cast<Flag>(p.adjacent(2, f) + m);
        rows[2][f] = static_cast<Flag>(f + m);
        rows[2][f + m] = f;
    }
    return RootedPremaniplex(Premaniplex::validate(3, 2 * m, rows), k.base());
}

RootedPremaniplex dihedron(int p) { return ditope(polygon(p)); }

RootedPremaniplex hosohedron(int p) { return dual(dihedron(p)); }

std::vector<Named> polyhedra_corpus() {
    std::vector<Named> out;
    for (int b = 0; b <= 4; ++b) {
        for (int c = 0; b + c <= 4; ++c) {
            if (b == 0 && c == 0) continue;
            auto t = torus_44(b, c);
            if (pip_check(t.premaniplex()))
                out.push_back({"torus44(" + std::to_string(b) + "," + std::to_string(c) + ")", t});
        }
    }
    for (int p = 2; p <= 6; ++p) {
        out.push_back({"dihedron(" + std::to_string(p) + ")", dihedron(p)});
        out.push_back({"hosohedron(" + std::to_string(p) + ")", hosohedron(p)});
    }
    return out;
}

std::vector<Named> non_polytopal_tori() {
    std::vector<Named> out;
    for (int b = 0; b <= 4; ++b) {
        for (int c = 0; b + c <= 4; ++c) {
            if (b == 0 && c == 0) continue;
            auto t = torus_44(b, c);
            if (!pip_check(t.premaniplex()))
                out.push_back({"torus44(" + std::to_string(b) + "," + std::to_string(c) + ")", t});
        }
    }
    return out;
}

std::vector<TheoremCase> theorem_corpus() {
    std::vector<TheoremCase> out;
    auto add_regular = [&](const std::string& name, const RootedPremaniplex& p1, const RootedPremaniplex& p2) {
        out.push_back({name, p1, p2, point(p1.rank())});
    };
    const auto octahedron = cross_polytope(3);
    add_regular("cube x tetrahedron", cube(3), simplex(3));
    add_regular("cube x octahedron", cube(3), octahedron);
    add_regular("cube x hemicube", cube(3), hemicube());
    add_regular("tetrahedron x hemicube", simplex(3), hemicube());
    add_regular("octahedron x hemicube", octahedron, hemicube());
    add_regular("hemicube x dual hemicube", hemicube(), dual(hemicube()));
    add_regular("torus(2,0) x torus(3,0)", torus_44(2, 0), torus_44(3, 0));
    add_regular("torus(2,0) x torus(2,2)", torus_44(2, 0), torus_44(2, 2));
    add_regular("torus(2,0) x torus(1,1)", torus_44(2, 0), torus_44(1, 1));
    add_regular("torus(3,0) x torus(1,0)", torus_44(3, 0), torus_44(1, 0));
    add_regular("torus(2,2) x torus(4,0)", torus_44(2, 2), torus_44(4, 0));
    add_regular("dihedron(4) x hosohedron(3)", dihedron(4), hosohedron(3));
    add_regular("simplex(4) x cube(4)", simplex(4), cube(4));
    add_regular("simplex(4) x cross(4)", simplex(4), cross_polytope(4));
    add_regular("cube(4) x cross(4)", cube(4), cross_polytope(4));
    add_regular("toroid(2,0,0) x cube(4)", cubic_toroid(2, ToroidKind::Cubic), cube(4));
    add_regular("toroid(2,0,0) x toroid(1,0,0)", cubic_toroid(2, ToroidKind::Cubic), cubic_toroid(1, ToroidKind::Cubic));
    add_regular("toroid(2,0,0) x toroid(1,1,0)", cubic_toroid(2, ToroidKind::Cubic),
                cubic_toroid(1, ToroidKind::FaceCentered));
    add_regular("toroid(2,2,0) x toroid(1,1,1)", cubic_toroid(2, ToroidKind::FaceCentered),
                cubic_toroid(1, ToroidKind::BodyCentered));
    add_regular("24-cell x simplex(4)", cell24(), simplex(4));

    struct DoubleBase {
        std::string name;
        RootedPremaniplex p;
    };
    const std::vector<DoubleBase> double_bases{
        {"tetrahedron", simplex(3)}, {"cube", cube(3)},         {"hemicube", hemicube()},
        {"torus(2,0)", torus_44(2, 0)}, {"simplex(4)", simplex(4)}, {"cube(4)", cube(4)}};
    for (const auto& [name, p] : double_bases) {
        const int n = p.rank();
        for (std::uint32_t bits = 1; bits + 1 < (1u << n); ++bits) {
            ColorSet I = ColorSet::from_bits(bits);
            if (n == 4 && I.size() != 2) continue;
            add_regular(name + " x 2_" + I.to_string(), p, two_orbit_stg(n, I));
        }
    }

    const auto chiral_t = two_orbit_stg(3, ColorSet{});
    auto add_chiral = [&](const std::string& name, const RootedPremaniplex& p1, const RootedPremaniplex& p2) {
        out.push_back({name, p1, p2, chiral_t});
    };
    const auto t12 = torus_44(1, 2);
    add_chiral("torus(1,2) x opposite", t12, t12.rebased(t12.adjacent(0, t12.base())));
    add_chiral("torus(1,2) x torus(2,1)", t12, torus_44(2, 1));
    add_chiral("torus(1,2) x torus(1,3)", t12, torus_44(1, 3));
    add_chiral("torus(1,3) x torus(3,1)", torus_44(1, 3), torus_44(3, 1));
    add_chiral("torus(1,2) x torus(2,0)", t12, torus_44(2, 0));
    add_chiral("torus(1,2) x torus(1,1)", t12, torus_44(1, 1));
    add_chiral("torus(2,1) x cube", torus_44(2, 1), cube(3));

    const auto ditope_t = two_orbit_stg(4, ColorSet{3});
    const auto d12 = ditope(t12);
    out.push_back({"ditope(1,2) x ditope(2,1)", d12, ditope(torus_44(2, 1)), ditope_t});
    out.push_back({"ditope(1,2) x opposite", d12, d12.rebased(d12.adjacent(0, d12.base())), ditope_t});

    const auto cuboctahedron = medial_map(cube(3));
    out.push_back({"cuboctahedron x opposite", cuboctahedron, cuboctahedron.rebased(cuboctahedron.adjacent(2, 0)),
                   two_orbit_stg(3, ColorSet{0, 1})});
    const auto rhombic = dual(cuboctahedron);
    out.push_back({"rhombic dodecahedron x opposite", rhombic, rhombic.rebased(rhombic.adjacent(0, 0)),
                   two_orbit_stg(3, ColorSet{1, 2})});
    return out;
}

}  // namespace fixtures
