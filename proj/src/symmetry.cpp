#include "maniplex/symmetry.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace maniplex {

Automorphism Automorphism::identity(std::size_t flag_count) {
    std::vector<Flag> image(flag_count);
    std::iota(image.begin(), image.end(), Flag{0});
    return Automorphism(std::move(image));
}

bool Automorphism::is_identity() const {
    for (std::size_t f = 0; f < image_.size(); ++f)
        if (image_[f] != f) return false;
    return true;
}

Automorphism Automorphism::operator*(const Automorphism& then) const {
    std::vector<Flag> image(image_.size());
    for (std::size_t f = 0; f < image_.size(); ++f) image[f] = then.image_[image_[f]];
    return Automorphism(std::move(image));
}

Automorphism Automorphism::inverse() const {
    std::vector<Flag> image(image_.size());
    for (std::size_t f = 0; f < image_.size(); ++f) image[image_[f]] = static_cast<Flag>(f);
    return Automorphism(std::move(image));
}

bool is_automorphism(const Premaniplex& p, const Automorphism& a) {
    const std::size_t m = p.flag_count();
    if (a.flag_count() != m) return false;
    std::vector<char> hit(m, 0);
    for (Flag f = 0; f < m; ++f) {
        if (a(f) >= m || hit[a(f)]) return false;
        hit[a(f)] = 1;
    }
    for (int i = 0; i < p.rank(); ++i)
        for (Flag f = 0; f < m; ++f)
            if (a(p.adjacent(i, f)) != p.adjacent(i, a(f))) return false;
    return true;
}

AutomorphismGroup AutomorphismGroup::assemble(std::size_t flag_count, std::vector<Automorphism> elements) {
    AutomorphismGroup g;
    g.elements_ = std::move(elements);
    g.by_image_of_zero_.assign(flag_count, -1);
    for (std::size_t k = 0; k < g.elements_.size(); ++k) g.by_image_of_zero_[g.elements_[k](0)] = static_cast<std::int64_t>(k);
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> labels(flag_count, unset);
    for (Flag f = 0; f < flag_count; ++f) {
        if (labels[f] != unset) continue;
        for (const auto& a : g.elements_) labels[a(f)] = f;
    }
    g.orbits_ = OrbitPartition::from_labels(labels);
    return g;
}

std::optional<std::size_t> AutomorphismGroup::element_mapping(Flag from, Flag to) const {
    if (from == 0) {
        auto k = by_image_of_zero_[to];
        if (k < 0) return std::nullopt;
        return static_cast<std::size_t>(k);
    }
    if (!same_orbit(from, to)) return std::nullopt;
    for (std::size_t k = 0; k < elements_.size(); ++k)
        if (elements_[k](from) == to) return k;
    return std::nullopt;
}

AutomorphismGroup automorphisms(const Premaniplex& p) {
    const ColorSet signature = p.semi_edge_colors(0);
    std::vector<Automorphism> elements;
    for (Flag candidate = 0; candidate < p.flag_count(); ++candidate) {
        if (p.semi_edge_colors(candidate) != signature) continue;
        if (auto map = extend_color_map(p, 0, p, candidate)) elements.emplace_back(std::move(*map));
    }
    return AutomorphismGroup::assemble(p.flag_count(), std::move(elements));
}

OrbitPartition automorphism_orbits(const Premaniplex& p) {
    const std::size_t m = p.flag_count();
    DisjointSets sets(m);
    std::vector<Flag> representatives;
    for (Flag f = 0; f < m; ++f) {
        bool placed = false;
        for (Flag r : representatives) {
            if (sets.find(r) == sets.find(f)) {
                placed = true;
                break;
            }
            if (p.semi_edge_colors(r) != p.semi_edge_colors(f)) continue;
            if (auto map = extend_color_map(p, r, p, f)) {
                for (Flag g = 0; g < m; ++g) sets.unite(g, (*map)[g]);
                placed = true;
                break;
            }
        }
        if (!placed) representatives.push_back(f);
    }
    std::vector<std::size_t> labels(m);
    for (Flag f = 0; f < m; ++f) labels[f] = sets.find(f);
    return OrbitPartition::from_labels(labels);
}

AutomorphismGroup make_subgroup(const Premaniplex& p, std::vector<Automorphism> elements) {
    const std::size_t m = p.flag_count();
    std::vector<std::int64_t> index(m, -1);
    bool has_identity = false;
    for (std::size_t k = 0; k < elements.size(); ++k) {
        if (!is_automorphism(p, elements[k]))
            throw Error(ErrorCode::NotASubgroup, "element " + std::to_string(k) + " is not an automorphism");
        if (index[elements[k](0)] >= 0)
            throw Error(ErrorCode::NotASubgroup, "element " + std::to_string(k) + " is repeated");
        index[elements[k](0)] = static_cast<std::int64_t>(k);
        has_identity = has_identity || elements[k].is_identity();
    }
    if (!has_identity) throw Error(ErrorCode::NotASubgroup, "identity missing");
    for (const auto& a : elements) {
        if (index[a.inverse()(0)] < 0) throw Error(ErrorCode::NotASubgroup, "not closed under inverses");
        for (const auto& b : elements)
            if (index[b(a(0))] < 0) throw Error(ErrorCode::NotASubgroup, "not closed under products");
    }
    std::stable_partition(elements.begin(), elements.end(), [](const Automorphism& a) { return a.is_identity(); });
    return AutomorphismGroup::assemble(m, std::move(elements));
}

namespace {

Premaniplex quotient(const Premaniplex& p, const OrbitPartition& orbits) {
    const std::size_t k = orbits.block_count();
    std::vector<Flag> representative(k, std::numeric_limits<Flag>::max());
    for (Flag f = p.flag_count(); f-- > 0;) representative[orbits.block_of(f)] = f;
    std::vector<Flag> table(static_cast<std::size_t>(p.rank()) * k);
    for (int i = 0; i < p.rank(); ++i)
        for (std::size_t b = 0; b < k; ++b)
            table[static_cast<std::size_t>(i) * k + b] = orbits.block_of(p.adjacent(i, representative[b]));
    return detail::build_unchecked(p.rank(), k, std::move(table));
}

}  // namespace

Premaniplex symmetry_type_graph(const Premaniplex& p, const AutomorphismGroup& group) {
    return quotient(p, group.orbits());
}

RootedPremaniplex symmetry_type_graph(const RootedPremaniplex& p, const AutomorphismGroup& group) {
    return RootedPremaniplex(symmetry_type_graph(p.premaniplex(), group), group.orbits().block_of(p.base()));
}

std::string TwoOrbitClass::to_string() const {
    switch (kind) {
        case Kind::Regular: return "regular";
        case Kind::TwoOrbit: {
            std::string s = colors.to_string();
            return "2_" + s;
        }
        case Kind::KOrbit: return std::to_string(orbit_count) + "-orbit";
    }
    return "";
}

TwoOrbitClass two_orbit_class(const Premaniplex& p) {
    auto orbits = automorphism_orbits(p);
    TwoOrbitClass out;
    out.orbit_count = orbits.block_count();
    if (out.orbit_count == 1) {
        out.kind = TwoOrbitClass::Kind::Regular;
    } else if (out.orbit_count == 2) {
        out.kind = TwoOrbitClass::Kind::TwoOrbit;
        for (int i = 0; i < p.rank(); ++i)
            if (orbits.block_of(0) == orbits.block_of(p.adjacent(i, 0))) out.colors = out.colors.with(i);
    } else {
        out.kind = TwoOrbitClass::Kind::KOrbit;
    }
    return out;
}

std::optional<std::vector<std::uint8_t>> orientation_parity(const Premaniplex& p, ColorSet I, Flag base) {
    constexpr std::uint8_t unset = 2;
    std::vector<std::uint8_t> parity(p.flag_count(), unset);
    std::vector<Flag> queue{base};
    parity[base] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Flag f = queue[head];
        for (int i = 0; i < p.rank(); ++i) {
            Flag g = p.adjacent(i, f);
            std::uint8_t want = I.contains(i) ? parity[f] : static_cast<std::uint8_t>(1 - parity[f]);
            if (parity[g] == unset) {
                parity[g] = want;
                queue.push_back(g);
            } else if (parity[g] != want) {
                return std::nullopt;
            }
        }
    }
    return parity;
}

bool is_orientable(const Premaniplex& p, ColorSet I) { return orientation_parity(p, I).has_value(); }

AutomorphismGroup i_even_automorphisms(const Premaniplex& p, ColorSet I) {
    auto full = automorphisms(p);
    auto parity = orientation_parity(p, I);
    if (!parity) return full;
    std::vector<Automorphism> even;
    for (const auto& a : full.elements())
        if ((*parity)[a(0)] == (*parity)[0]) even.push_back(a);
    return make_subgroup(p, std::move(even));
}

bool chain_transitive(const Premaniplex& p, ColorSet I) {
    auto stg = quotient(p, automorphism_orbits(p));
    return interval_orbits(stg, I.complement(p.rank())).block_count() == 1;
}

bool is_admissible(const RootedPremaniplex& m, const RootedPremaniplex& t) {
    if (m.rank() != t.rank()) return false;
    auto cover = extend_color_map(m.premaniplex(), m.base(), t.premaniplex(), t.base());
    if (!cover) return false;
    auto orbits = automorphism_orbits(m.premaniplex());
    for (Flag f = 0; f < m.flag_count(); ++f)
        if ((*cover)[f] == t.base() && orbits.block_of(f) != orbits.block_of(m.base())) return false;
    return true;
}

CanonicalForm canonical_form(const RootedPremaniplex& rp) {
    const Premaniplex& p = rp.premaniplex();
    const std::size_t m = p.flag_count();
    constexpr auto unset = std::numeric_limits<Flag>::max();
    std::vector<Flag> local(m, unset);
    std::vector<Flag> order{rp.base()};
    local[rp.base()] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (int i = 0; i < p.rank(); ++i) {
            Flag g = p.adjacent(i, order[head]);
            if (local[g] == unset) {
                local[g] = static_cast<Flag>(order.size());
                order.push_back(g);
            }
        }
    }
    CanonicalForm out;
    out.rank = p.rank();
    out.table.resize(static_cast<std::size_t>(p.rank()) * m);
    for (int i = 0; i < p.rank(); ++i)
        for (std::size_t x = 0; x < m; ++x) out.table[static_cast<std::size_t>(i) * m + x] = local[p.adjacent(i, order[x])];
    return out;
}

bool rooted_isomorphic(const RootedPremaniplex& a, const RootedPremaniplex& b) {
    if (a.rank() != b.rank() || a.flag_count() != b.flag_count()) return false;
    return extend_color_map(a.premaniplex(), a.base(), b.premaniplex(), b.base()).has_value();
}

}  // namespace maniplex
