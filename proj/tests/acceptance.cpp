#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "maniplex/catalog.hpp"
#include "maniplex/flagcore.hpp"
#include "maniplex/mixing.hpp"
#include "maniplex/polyvariance.hpp"
#include "maniplex/symmetry.hpp"
#include "oracles.hpp"

using namespace maniplex;

namespace {

/// Collects failures of one criterion; the first few are printed.
struct Check {
    std::size_t cases = 0;
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        ++cases;
        if (!ok) failures.push_back(what);
    }
};

bool run_criterion(int number, double budget_ms, const std::function<void(Check&)>& body) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(check);
    } catch (const std::exception& e) {
        check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_ms) check.failures.push_back("over time budget of " + std::to_string(budget_ms) + " ms");
    const bool pass = check.failures.empty();
    std::printf("criterion %d: %s (%.0f ms, %zu checks)\n", number, pass ? "PASS" : "FAIL", elapsed, check.cases);
    for (std::size_t k = 0; k < check.failures.size() && k < 5; ++k) std::printf("  - %s\n", check.failures[k].c_str());
    return pass;
}

std::string pair_name(const std::string& a, const std::string& b) { return a + " x " + b; }

/// Input pairs of criterion 4: every ordered pair from the polyhedra corpus.
std::vector<std::pair<fixtures::Named, fixtures::Named>> polyhedra_pairs() {
    const auto corpus = fixtures::polyhedra_corpus();
    std::vector<std::pair<fixtures::Named, fixtures::Named>> out;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i; j < corpus.size(); ++j) out.emplace_back(corpus[i], corpus[j]);
    return out;
}

void polygon_law(Check& check) {
    for (int p = 2; p <= 12; ++p)
        for (int q = 2; q <= 12; ++q) {
            const auto name = "polygon(" + std::to_string(p) + "), polygon(" + std::to_string(q) + ")";
            const auto a = polygon(p), b = polygon(q);
            check.expect(rooted_isomorphic(mix(a, b).mix, polygon(std::lcm(p, q))), name + ": mix is not the lcm polygon");
            const auto group = variance_group_lower(a, b);
            const auto expected = static_cast<std::size_t>(p / std::gcd(p, q));
            check.expect(group.well_defined && group.order() == expected, name + ": variance order mismatch");
            check.expect(oracle::variance_order(a, b) == expected, name + ": oracle variance order mismatch");
        }
}

void figure_two(Check& check) {
    const auto [left, right] = fig2_premaniplexes();
    const auto m = mix(left, right).mix;
    const ColorSet ends{0, 3};
    check.expect(m.flag_count() == 9, "mix has " + std::to_string(m.flag_count()) + " flags, expected 9");
    check.expect(oracle::product_mix(left, right).pairs.size() == 9, "oracle mix size differs from 9");
    check.expect(chain_transitive(left.premaniplex(), ends), "left factor not chain-transitive on {0,3}");
    check.expect(chain_transitive(right.premaniplex(), ends), "right factor not chain-transitive on {0,3}");
    check.expect(!chain_transitive(m.premaniplex(), ends), "mix is chain-transitive on {0,3}");
    check.expect(oracle::chain_transitive(left.premaniplex(), ends) && oracle::chain_transitive(right.premaniplex(), ends) &&
                     !oracle::chain_transitive(m.premaniplex(), ends),
                 "oracle chain transitivity disagrees");
}

void theorem_equivalence(Check& check) {
    const auto corpus = fixtures::theorem_corpus();
    check.expect(corpus.size() >= 30, "corpus has only " + std::to_string(corpus.size()) + " cases");
    for (const auto& c : corpus) {
        const auto m = mix(c.p1, c.p2).mix;
        const bool direct = bool(pip_check(m.premaniplex()));
        const auto report = theorem_mix_polytopality(c.p1, c.p2, c.t);
        check.expect(report.verdict == direct, c.name + ": theorem verdict differs from the path intersection test");
        if (m.flag_count() <= 5000)
            check.expect(oracle::pip(m.premaniplex()) == direct, c.name + ": oracle path intersection test differs");
    }
}

void polyhedra_closure(Check& check) {
    std::set<std::string> excluded;
    for (const auto& t : fixtures::non_polytopal_tori()) excluded.insert(t.name);
    check.expect(excluded == std::set<std::string>{"torus44(0,1)", "torus44(1,0)", "torus44(1,1)"},
                 "excluded non-polytopal tori differ from {(0,1), (1,0), (1,1)}");
    for (const auto& [a, b] : polyhedra_pairs()) {
        const auto m = mix(a.premaniplex, b.premaniplex).mix;
        check.expect(bool(pip_check(m.premaniplex())), pair_name(a.name, b.name) + ": mix is not polytopal");
    }
}

void recursive_modes(Check& check) {
    std::vector<fixtures::Named> inputs;
    for (const auto& c : fixtures::theorem_corpus()) {
        inputs.push_back({c.name + " (left)", c.p1});
        inputs.push_back({c.name + " (right)", c.p2});
        inputs.push_back({c.name + " (mix)", mix(c.p1, c.p2).mix});
    }
    for (const auto& [a, b] : polyhedra_pairs()) inputs.push_back({pair_name(a.name, b.name), mix(a.premaniplex, b.premaniplex).mix});
    for (const auto& t : fixtures::non_polytopal_tori()) inputs.push_back(t);
    for (const auto& [name, rp] : inputs) {
        const auto& p = rp.premaniplex();
        if (!is_maniplex(p)) continue;
        const bool direct = bool(pip_check(p));
        check.expect(pip_check_recursive(rp, PipMode::FacetOnly) == direct, name + ": facet mode differs");
        check.expect(pip_check_recursive(rp, PipMode::FacetAndVertex) == direct, name + ": facet-vertex mode differs");
        if (chain_transitive(p, ColorSet{0, rp.rank() - 1}))
            check.expect(pip_check_recursive(rp, PipMode::MedialTransitive) == direct, name + ": medial mode differs");
    }
}

void variance_and_covering(Check& check) {
    std::vector<fixtures::Named> corpus = fixtures::polyhedra_corpus();
    for (const auto& t : fixtures::non_polytopal_tori()) corpus.push_back(t);
    const auto t12 = torus_44(1, 2);
    corpus.push_back({"torus44(1,2) opposite", t12.rebased(t12.adjacent(0, t12.base()))});
    corpus.push_back({"cube", cube(3)});
    corpus.push_back({"tetrahedron", simplex(3)});
    corpus.push_back({"hemicube", fixtures::hemicube()});
    corpus.push_back({"cuboctahedron", fixtures::medial_map(cube(3))});
    corpus.push_back({"point(3)", point(3)});
    for (std::uint32_t bits = 0; bits + 1 < 8u; ++bits)
        corpus.push_back({"2_" + ColorSet::from_bits(bits).to_string(), two_orbit_stg(3, ColorSet::from_bits(bits))});
    for (const auto& a : corpus)
        for (const auto& b : corpus) {
            const auto group = variance_group_lower(a.premaniplex, b.premaniplex);
            if (!group.well_defined) continue;
            const bool covered = find_covering(b.premaniplex, a.premaniplex).has_value();
            check.expect((group.order() == 1) == covered, pair_name(a.name, b.name) + ": triviality differs from covering");
            check.expect(oracle::covers(b.premaniplex, a.premaniplex) == covered,
                         pair_name(a.name, b.name) + ": oracle covering differs");
        }
}

void admissibility_closure(Check& check) {
    std::vector<fixtures::TheoremCase> cases = fixtures::theorem_corpus();
    std::vector<RootedPremaniplex> shared{point(3)};
    for (std::uint32_t bits = 0; bits + 1 < 8u; ++bits) shared.push_back(two_orbit_stg(3, ColorSet::from_bits(bits)));
    for (const auto& [a, b] : polyhedra_pairs())
        for (const auto& t : shared)
            if (is_admissible(a.premaniplex, t) && is_admissible(b.premaniplex, t)) {
                cases.push_back({pair_name(a.name, b.name), a.premaniplex, b.premaniplex, t});
                break;
            }
    for (const auto& c : cases) {
        if (!is_admissible(c.p1, c.t) || !is_admissible(c.p2, c.t)) {
            check.expect(false, c.name + ": an input is not admissible for its t");
            continue;
        }
        const auto m = mix(c.p1, c.p2).mix;
        check.expect(is_admissible(m, c.t), c.name + ": mix is not t-admissible");
        if (m.flag_count() <= 1500) check.expect(oracle::admissible(m, c.t), c.name + ": oracle rejects t-admissibility");
        const int n = m.rank();
        for (std::uint32_t bits = 1; bits < (1u << n); ++bits) {
            const auto I = ColorSet::from_bits(bits);
            if (oracle::component_count(c.t.premaniplex(), ColorSet::from_bits(((1u << n) - 1) & ~bits)) != 1) continue;
            check.expect(chain_transitive(m.premaniplex(), I), c.name + ": mix not chain-transitive on " + I.to_string());
            if (m.flag_count() <= 5000)
                check.expect(oracle::chain_transitive(m.premaniplex(), I),
                             c.name + ": oracle finds mix not chain-transitive on " + I.to_string());
        }
    }
}

void chirality_consistency(Check& check) {
    const auto t12 = torus_44(1, 2);
    const auto& p = t12.premaniplex();
    const auto cls = two_orbit_class(p);
    check.expect(cls.kind == TwoOrbitClass::Kind::TwoOrbit && cls.colors.empty(), "torus44(1,2) is not of class 2_{}");
    const auto src = smallest_regular_cover(t12);
    check.expect(automorphisms(src.premaniplex()).orbit_count() == 1, "cover is not regular");
    check.expect(oracle::orbit_count(src.premaniplex()) == 1, "oracle finds the cover irregular");
    check.expect(find_covering(src, t12).has_value() && oracle::covers(src, t12), "cover does not cover the input");
    const std::size_t ratio = src.flag_count() / p.flag_count();
    const std::size_t brute = oracle::monodromy_order(p) / p.flag_count();
    check.expect(src.flag_count() % p.flag_count() == 0, "cover size is not a multiple of the input size");
    check.expect(ratio == chirality_group_order(t12), "size ratio differs from the chirality group order");
    check.expect(ratio == brute, "size ratio differs from the brute-force monodromy ratio");
    const auto report = src_polytopality_report(t12);
    const bool direct = bool(pip_check(src.premaniplex()));
    check.expect(report.report.verdict == direct, "cover report differs from the path intersection test");
    check.expect(oracle::pip(src.premaniplex()) == direct, "oracle path intersection test differs");
}

void structural_invariants(Check& check) {
    const auto catalog = standard_catalog();
    for (const auto& entry : catalog) {
        const auto& rp = entry.premaniplex;
        const auto& p = rp.premaniplex();
        const auto twice = dual(dual(rp));
        check.expect(twice.premaniplex() == p && twice.base() == rp.base(), entry.name + ": dual is not an involution");
        const auto group = automorphisms(p);
        for (const auto& g : group.elements())
            for (Flag f = 0; f < p.flag_count(); ++f)
                if (g(f) == f && !g.is_identity()) check.expect(false, entry.name + ": automorphism fixes a flag");
        check.expect(group.orbit_count() * group.order() == p.flag_count(), entry.name + ": orbit count times order");
        check.expect(group.orbit_count() == oracle::orbit_count(p), entry.name + ": oracle orbit count differs");
        check.expect(group.order() == oracle::automorphisms(p).size(), entry.name + ": oracle group order differs");
    }
    for (const auto& a : catalog)
        for (const auto& b : catalog) {
            if (a.premaniplex.rank() != b.premaniplex.rank()) continue;
            const auto ab = mix(a.premaniplex, b.premaniplex).mix;
            const auto name = pair_name(a.name, b.name);
            check.expect(rooted_isomorphic(ab, mix(b.premaniplex, a.premaniplex).mix), name + ": mix not commutative");
            if (is_maniplex(a.premaniplex.premaniplex()) || is_maniplex(b.premaniplex.premaniplex()))
                check.expect(is_maniplex(ab.premaniplex()), name + ": mix with a maniplex is not a maniplex");
        }
}

}  // namespace

int main() {
    std::setvbuf(stdout, nullptr, _IOLBF, 0);
    bool all = true;
    all &= run_criterion(1, 1000, polygon_law);
    all &= run_criterion(2, 1000, figure_two);
    all &= run_criterion(3, 60000, theorem_equivalence);
    all &= run_criterion(4, 30000, polyhedra_closure);
    all &= run_criterion(5, 120000, recursive_modes);
    all &= run_criterion(6, 120000, variance_and_covering);
    all &= run_criterion(7, 120000, admissibility_closure);
    all &= run_criterion(8, 10000, chirality_consistency);
    all &= run_criterion(9, 120000, structural_invariants);
    std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
    return all ? 0 : 1;
}
