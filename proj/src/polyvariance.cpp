#include "maniplex/polyvariance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "maniplex/flagcore.hpp"

namespace maniplex {

namespace {

/// Checks that flags sharing a block of `a` and of `b` share a block of `c`.
std::optional<std::pair<Flag, Flag>> meet_violation(const OrbitPartition& a, const OrbitPartition& b,
                                                    const OrbitPartition& c) {
    std::unordered_map<std::uint64_t, Flag> first_flag;
    first_flag.reserve(a.flag_count());
    for (Flag f = 0; f < a.flag_count(); ++f) {
        const std::uint64_t key = static_cast<std::uint64_t>(a.block_of(f)) * b.block_count() + b.block_of(f);
        auto [it, inserted] = first_flag.emplace(key, f);
        if (!inserted && c.block_of(it->second) != c.block_of(f)) return std::pair{it->second, f};
    }
    return std::nullopt;
}

void require_maniplex(const Premaniplex& p) {
    if (!is_maniplex(p)) throw Error(ErrorCode::NotAManiplex, "the input has semi-edges or multiple edges");
}

class RecursivePip {
public:
    bool run(const RootedPremaniplex& rp, PipMode mode) {
        const Premaniplex& p = rp.premaniplex();
        const int n = p.rank();
        if (n <= 2) return true;
        auto key = std::make_pair(static_cast<int>(mode), canonical_form(rp).table);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool ok = sections_polytopal(rp, ColorSet::interval(0, n - 2), mode) &&
                  (mode == PipMode::FacetOnly || sections_polytopal(rp, ColorSet::interval(1, n - 1), mode)) &&
                  local_condition(rp, mode);
        memo_.emplace(std::move(key), ok);
        return ok;
    }

private:
    bool sections_polytopal(const RootedPremaniplex& rp, ColorSet colors, PipMode mode) {
        auto blocks = interval_orbits(rp.premaniplex(), colors);
        std::vector<char> done(blocks.block_count(), 0);
        for (Flag f = 0; f < rp.flag_count(); ++f) {
            auto b = blocks.block_of(f);
            if (done[b]) continue;
            done[b] = 1;
            auto sec = section(rp.rebased(f), colors);
            PipMode sub = mode;
            if (mode == PipMode::MedialTransitive && sec.rank() > 2 &&
                !chain_transitive(sec.premaniplex(), ColorSet{0, sec.rank() - 1}))
                sub = PipMode::FacetAndVertex;
            if (!run(sec, sub)) return false;
        }
        return true;
    }

    static bool local_condition(const RootedPremaniplex& rp, PipMode mode) {
        const Premaniplex& p = rp.premaniplex();
        const int n = p.rank();
        auto facets = interval_orbits(p, ColorSet::interval(0, n - 2));
        if (mode == PipMode::FacetOnly) {
            for (int i = 1; i <= n - 2; ++i) {
                if (meet_violation(facets, interval_orbits(p, ColorSet::interval(i, n - 1)),
                                   interval_orbits(p, ColorSet::interval(i, n - 2))))
                    return false;
            }
            return true;
        }
        auto vertex_figures = interval_orbits(p, ColorSet::interval(1, n - 1));
        auto medial = interval_orbits(p, ColorSet::interval(1, n - 2));
        if (mode == PipMode::FacetAndVertex) return !meet_violation(facets, vertex_figures, medial);
        const Flag base = rp.base();
        for (Flag f = 0; f < p.flag_count(); ++f) {
            if (facets.block_of(f) == facets.block_of(base) && vertex_figures.block_of(f) == vertex_figures.block_of(base) &&
                medial.block_of(f) != medial.block_of(base))
                return false;
        }
        return true;
    }

    std::map<std::pair<int, std::vector<Flag>>, bool> memo_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : p) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

using PermutationSet = std::unordered_set<Permutation, PermutationHash>;

class StringCGroup {
public:
    explicit StringCGroup(const std::vector<Permutation>& gens) : gens_(gens) {}

    bool check(std::size_t lo, std::size_t hi) {
        if (hi - lo + 1 <= 2) return true;
        if (auto it = memo_.find({lo, hi}); it != memo_.end()) return it->second;
        bool ok = check(lo, hi - 1) && check(lo + 1, hi);
        if (ok) {
            const auto& left = group(lo, hi - 1);
            const auto& right = group(lo + 1, hi);
            std::size_t common = 0;
            for (const auto& g : left) common += right.count(g);
            ok = common == group(lo + 1, hi - 1).size();
        }
        memo_[{lo, hi}] = ok;
        return ok;
    }

private:
    const PermutationSet& group(std::size_t lo, std::size_t hi) {
        auto it = groups_.find({lo, hi});
        if (it != groups_.end()) return it->second;
        std::vector<Permutation> gens(gens_.begin() + static_cast<std::ptrdiff_t>(lo),
                                      gens_.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
        auto elements = generated_group(gens, gens_[0].size());
        return groups_.emplace(std::pair{lo, hi}, PermutationSet(elements.begin(), elements.end())).first->second;
    }

    const std::vector<Permutation>& gens_;
    std::map<std::pair<std::size_t, std::size_t>, PermutationSet> groups_;
    std::map<std::pair<std::size_t, std::size_t>, bool> memo_;
};

bool contains_sorted(const std::vector<Flag>& sorted, Flag f) { return std::binary_search(sorted.begin(), sorted.end(), f); }

/// The containment X(K2|K1) n X(L2|L1) <= X(N2|N1) at one mix flag.
struct ContainmentResult {
    bool holds = true;
    bool well_defined = true;
    std::optional<Flag> image;
};

ContainmentResult containment_at(const RootedPremaniplex& p1, const RootedPremaniplex& p2, const MixResult& mx, Flag x) {
    const int n = p1.rank();
    auto [left, right] = mx.pairs[x];
    auto r1 = p1.rebased(left);
    auto r2 = p2.rebased(right);
    auto facet = section_variance(r2, r1, ColorSet::interval(0, n - 2));
    auto vertex_figure = section_variance(r2, r1, ColorSet::interval(1, n - 1));
    auto medial = section_variance(r2, r1, ColorSet::interval(1, n - 2));
    ContainmentResult out;
    out.well_defined = facet.well_defined && vertex_figure.well_defined && medial.well_defined;
    for (Flag image : facet.images) {
        if (contains_sorted(vertex_figure.images, image) && !contains_sorted(medial.images, image)) {
            out.holds = false;
            out.image = image;
            break;
        }
    }
    return out;
}

/// One mix flag per block of the mix under `colors`, or per block of t
/// (through the covering of the mix onto t) when not exhaustive.
std::vector<Flag> representatives(const MixResult& mx, const std::vector<Flag>& over_t, const RootedPremaniplex& t,
                                  ColorSet colors, bool exhaustive) {
    const auto& mix_p = mx.mix.premaniplex();
    std::vector<Flag> reps;
    if (exhaustive) {
        auto blocks = interval_orbits(mix_p, colors);
        std::vector<char> done(blocks.block_count(), 0);
        for (Flag x = 0; x < mix_p.flag_count(); ++x) {
            if (!done[blocks.block_of(x)]) {
                done[blocks.block_of(x)] = 1;
                reps.push_back(x);
            }
        }
        return reps;
    }
    auto blocks = interval_orbits(t.premaniplex(), colors);
    std::vector<char> done(blocks.block_count(), 0);
    std::size_t remaining = blocks.block_count();
    for (Flag x = 0; x < mix_p.flag_count() && remaining > 0; ++x) {
        auto b = blocks.block_of(over_t[x]);
        if (!done[b]) {
            done[b] = 1;
            --remaining;
            reps.push_back(x);
        }
    }
    return reps;
}

PolytopalityReport evaluate_mix(const RootedPremaniplex& p1, const RootedPremaniplex& p2, const RootedPremaniplex& t,
                                bool check_sections, bool exhaustive) {
    PolytopalityReport report;
    const int n = p1.rank();
    if (n <= 2) return report;
    auto mx = mix(p1, p2);
    auto to_t = extend_color_map(p1.premaniplex(), p1.base(), t.premaniplex(), t.base());
    std::vector<Flag> over_t(mx.mix.flag_count());
    for (Flag x = 0; x < over_t.size(); ++x) over_t[x] = (*to_t)[mx.left.map[x]];

    const ColorSet facet = ColorSet::interval(0, n - 2);
    const ColorSet vertex_figure = ColorSet::interval(1, n - 1);
    const ColorSet medial = ColorSet::interval(1, n - 2);
    if (check_sections) {
        for (Flag x : representatives(mx, over_t, t, facet, exhaustive)) {
            if (!pip_check(section(mx.mix.rebased(x), facet).premaniplex())) {
                report.facets_polytopal = false;
                report.facet_witness = x;
                break;
            }
        }
        for (Flag x : representatives(mx, over_t, t, vertex_figure, exhaustive)) {
            if (!pip_check(section(mx.mix.rebased(x), vertex_figure).premaniplex())) {
                report.vertex_figures_polytopal = false;
                report.vertex_figure_witness = x;
                break;
            }
        }
    }
    for (Flag x : representatives(mx, over_t, t, medial, exhaustive)) {
        ++report.evaluated_flags;
        auto result = containment_at(p1, p2, mx, x);
        report.variance_well_defined = report.variance_well_defined && result.well_defined;
        if (!result.holds) {
            report.variance_condition = false;
            report.variance_witness = VarianceWitness{x, *result.image};
            break;
        }
    }
    report.verdict = report.facets_polytopal && report.vertex_figures_polytopal && report.variance_condition;
    return report;
}

bool double_polytopal(const RootedPremaniplex& section_p, ColorSet J) {
    if (is_orientable(section_p.premaniplex(), J) || section_p.rank() <= 2) return true;
    return i_double_polytopality(section_p, J).polytopal;
}

}  // namespace

PipResult pip_check(const Premaniplex& p) {
    require_maniplex(p);
    const int n = p.rank();
    PipResult result;
    for (int hi = 1; hi <= n - 2; ++hi) {
        auto prefix = interval_orbits(p, ColorSet::interval(0, hi));
        for (int lo = 1; lo <= hi; ++lo) {
            auto suffix = interval_orbits(p, ColorSet::interval(lo, n - 1));
            auto middle = interval_orbits(p, ColorSet::interval(lo, hi));
            if (auto bad = meet_violation(prefix, suffix, middle)) {
                result.polytopal = false;
                result.witness = PipWitness{bad->first, bad->second, lo, hi};
                return result;
            }
        }
    }
    return result;
}

bool pip_check_recursive(const RootedPremaniplex& p, PipMode mode) {
    require_maniplex(p.premaniplex());
    const int n = p.rank();
    if (mode == PipMode::MedialTransitive && n > 2 && !chain_transitive(p.premaniplex(), ColorSet{0, n - 1})) {
        throw Error(ErrorCode::ModePreconditionViolated, "not transitive on chains of colors {0," + std::to_string(n - 1) + "}");
    }
    return RecursivePip().run(p, mode);
}

bool is_string_c_group(const std::vector<Permutation>& generators) {
    require_sggi(generators);
    return StringCGroup(generators).check(0, generators.size() - 1);
}

std::vector<Flag> VarianceGroup::base_images() const {
    std::vector<Flag> out;
    for (const auto& g : elements) out.push_back(g(host.base()));
    std::sort(out.begin(), out.end());
    return out;
}

VarianceGroup variance_group_lower(const RootedPremaniplex& a, const RootedPremaniplex& b) {
    auto mx = mix(a, b);
    auto group = automorphisms(a.premaniplex());
    VarianceGroup out{a, {}, true, std::nullopt};
    std::vector<char> present(a.flag_count(), 0);
    for (const auto& [left, right] : mx.pairs) {
        if (right != b.base()) continue;
        auto k = group.element_mapping(a.base(), left);
        if (!k) {
            out.well_defined = false;
            if (!out.witness) out.witness = left;
            continue;
        }
        out.elements.push_back(group.element(*k));
        present[left] = 1;
    }
    if (out.well_defined) {
        for (const auto& g : out.elements)
            for (const auto& h : out.elements)
                if (!present[h(g(a.base()))]) out.well_defined = false;
    }
    return out;
}

std::size_t chirality_group_order(const RootedPremaniplex& m) {
    auto cls = two_orbit_class(m.premaniplex());
    const bool chiral = cls.kind == TwoOrbitClass::Kind::TwoOrbit && cls.colors.empty();
    const bool rotary_regular = cls.kind == TwoOrbitClass::Kind::Regular && is_orientable(m.premaniplex(), ColorSet{});
    if (!chiral && !rotary_regular)
        throw Error(ErrorCode::NotAdmissible, "expected a chiral or an orientable regular premaniplex, got class " + cls.to_string());
    return variance_group_lower(m, m.rebased(m.adjacent(0, m.base()))).order();
}

SectionVariance section_variance(const RootedPremaniplex& host, const RootedPremaniplex& other, ColorSet colors) {
    auto embedded = section_with_embedding(host, colors);
    auto group = variance_group_lower(embedded.section, section(other, colors));
    SectionVariance out;
    out.well_defined = group.well_defined;
    for (Flag f : group.base_images()) out.images.push_back(embedded.to_ambient[f]);
    std::sort(out.images.begin(), out.images.end());
    return out;
}

std::vector<Flag> pathwise_variance(const MixResult& mx, const AutomorphismGroup& left_group, Flag x, ColorSet colors) {
    auto blocks = interval_orbits(mx.mix.premaniplex(), colors);
    auto [left, right] = mx.pairs[x];
    std::vector<Flag> out;
    for (Flag y = 0; y < mx.pairs.size(); ++y) {
        if (blocks.block_of(y) != blocks.block_of(x) || mx.pairs[y].second != right) continue;
        if (left_group.same_orbit(mx.pairs[y].first, left)) out.push_back(mx.pairs[y].first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolytopalityReport theorem_mix_polytopality(const RootedPremaniplex& p1, const RootedPremaniplex& p2,
                                            const RootedPremaniplex& t, TheoremOptions options) {
    if (p1.rank() != p2.rank() || p1.rank() != t.rank())
        throw Error(ErrorCode::PreconditionViolated, "p1, p2 and t must have equal rank");
    if (!is_maniplex(p1.premaniplex()) || !pip_check(p1.premaniplex()))
        throw Error(ErrorCode::PreconditionViolated, "p1 is not a polytope");
    if (!is_admissible(p1, t)) throw Error(ErrorCode::PreconditionViolated, "p1 is not t-admissible");
    if (!is_admissible(p2, t)) throw Error(ErrorCode::PreconditionViolated, "p2 is not t-admissible");
    return evaluate_mix(p1, p2, t, true, options.exhaustive);
}

ColorSet facet_colors(ColorSet I, int rank) { return I.restrict_shift(0, rank - 2); }
ColorSet vertex_figure_colors(ColorSet I, int rank) { return I.restrict_shift(1, rank - 1); }
ColorSet medial_colors(ColorSet I, int rank) { return I.restrict_shift(1, rank - 2); }

DoubleVerdict i_double_polytopality(const RootedPremaniplex& p, ColorSet I) {
    const int n = p.rank();
    if (n < 3) throw Error(ErrorCode::PreconditionViolated, "rank must be at least 3");
    if (!I.fits_rank(n) || I == ColorSet::all(n)) throw Error(ErrorCode::PreconditionViolated, "I must be a proper subset of the colors");
    if (two_orbit_class(p.premaniplex()).kind != TwoOrbitClass::Kind::Regular)
        throw Error(ErrorCode::PreconditionViolated, "p is not regular");
    if (!is_maniplex(p.premaniplex()) || !pip_check(p.premaniplex()))
        throw Error(ErrorCode::PreconditionViolated, "p is not a polytope");
    if (is_orientable(p.premaniplex(), I))
        throw Error(ErrorCode::PreconditionViolated, "p is " + I.to_string() + "-orientable");
    auto facet = section(p, ColorSet::interval(0, n - 2));
    auto vertex_figure = section(p, ColorSet::interval(1, n - 1));
    auto medial = section(p, ColorSet::interval(1, n - 2));
    const ColorSet jf = facet_colors(I, n);
    const ColorSet jv = vertex_figure_colors(I, n);
    if (is_orientable(facet.premaniplex(), jf) || is_orientable(vertex_figure.premaniplex(), jv))
        return {DoubleCase::FacetsOrVertexFiguresOrientable, true};
    if (is_orientable(medial.premaniplex(), medial_colors(I, n))) return {DoubleCase::MedialOrientable, false};
    return {DoubleCase::MedialNonOrientable, double_polytopal(facet, jf) && double_polytopal(vertex_figure, jv)};
}

CoverReport src_polytopality_report(const RootedPremaniplex& p) {
    auto cls = two_orbit_class(p.premaniplex());
    if (cls.kind != TwoOrbitClass::Kind::TwoOrbit)
        throw Error(ErrorCode::NotTwoOrbit, "p has class " + cls.to_string());
    if (!is_maniplex(p.premaniplex()) || !pip_check(p.premaniplex())) throw Error(ErrorCode::NotPolytope, "p is not a polytope");
    const int n = p.rank();
    CoverReport out;
    out.I = cls.colors;
    while (out.I.contains(out.rebase_color)) ++out.rebase_color;
    auto opposite = p.rebased(p.adjacent(out.rebase_color, p.base()));
    const bool medial_transitive = chain_transitive(p.premaniplex(), ColorSet{0, n - 1});
    if (medial_transitive)
        out.part = 1;
    else if (out.I == ColorSet::interval(1, n - 2))
        out.part = 2;
    else if (out.I == ColorSet::interval(0, n - 2))
        out.part = 3;
    else
        out.part = 4;
    out.containment_only = medial_transitive && !out.I.contains(0) && !out.I.contains(n - 1);
    out.report = evaluate_mix(p, opposite, two_orbit_stg(n, out.I), !out.containment_only, false);
    return out;
}

}  // namespace maniplex
