#include "maniplex/catalog.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "maniplex/flagcore.hpp"

namespace maniplex {

namespace {

constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 24;

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : p) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

Permutation compose(const Permutation& first, const Permutation& then) {
    Permutation out(first.size());
    for (std::size_t k = 0; k < first.size(); ++k) out[k] = then[first[k]];
    return out;
}

bool is_identity(const Permutation& p) {
    for (std::size_t k = 0; k < p.size(); ++k)
        if (p[k] != k) return false;
    return true;
}

void check_sggi_impl(const std::vector<Permutation>& gens) {
    if (gens.empty()) throw Error(ErrorCode::NotSggi, "no generators");
    const std::size_t d = gens[0].size();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != d) throw Error(ErrorCode::NotSggi, "generators act on different point sets");
        for (auto x : gens[i])
            if (x >= d) throw Error(ErrorCode::NotSggi, "generator " + std::to_string(i) + " is not a permutation");
        if (!is_identity(compose(gens[i], gens[i])))
            throw Error(ErrorCode::NotSggi, "generator " + std::to_string(i) + " is not an involution");
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 2; j < gens.size(); ++j) {
            auto prod = compose(gens[i], gens[j]);
            if (!is_identity(compose(prod, prod)))
                throw Error(ErrorCode::NotSggi,
                            "generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
        }
    }
}

void require(bool ok, const std::string& message) {
    if (!ok) throw Error(ErrorCode::BadParameter, message);
}

/// x -> A x + t on the integer plane, A a signed permutation matrix.
struct PlaneMap {
    std::array<int, 4> a;  // row-major 2x2
    std::array<long, 2> t;

    PlaneMap then_reflect(const PlaneMap& r) const {
        // (this o r)(x) = A (R x + u) + t
        PlaneMap out;
        out.a = {a[0] * r.a[0] + a[1] * r.a[2], a[0] * r.a[1] + a[1] * r.a[3], a[2] * r.a[0] + a[3] * r.a[2],
                 a[2] * r.a[1] + a[3] * r.a[3]};
        out.t = {a[0] * r.t[0] + a[1] * r.t[1] + t[0], a[2] * r.t[0] + a[3] * r.t[1] + t[1]};
        return out;
    }
};

long floor_div(long x, long d) {
    long q = x / d;
    if ((x % d != 0) && ((x < 0) != (d < 0))) --q;
    return q;
}

/// Upper-triangular basis (g, h), (0, k) of the lattice spanned by u and v,
/// with g, k > 0 and 0 <= h < k.
struct PlaneLattice {
    long g, h, k;

    explicit PlaneLattice(std::array<long, 2> u, std::array<long, 2> v) {
        while (v[0] != 0) {
            long q = u[0] / v[0];
            u = {u[0] - q * v[0], u[1] - q * v[1]};
            std::swap(u, v);
        }
        if (u[0] < 0) u = {-u[0], -u[1]};
        if (v[1] < 0) v = {0, -v[1]};
        g = u[0];
        k = v[1];
        h = u[1] - floor_div(u[1], k) * k;
    }

    std::array<long, 2> reduce(std::array<long, 2> x) const {
        long q = floor_div(x[0], g);
        x = {x[0] - q * g, x[1] - q * h};
        x[1] -= floor_div(x[1], k) * k;
        return x;
    }
};

std::vector<int> parse_arguments(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw Error(ErrorCode::BadParameter, "bad catalog argument '" + std::string(item) + "'");
        out.push_back(value);
        pos = end + 1;
    }
    return out;
}

}  // namespace

void require_sggi(const std::vector<Permutation>& generators) { check_sggi_impl(generators); }

std::vector<Permutation> generated_group(const std::vector<Permutation>& generators, std::size_t point_count) {
    Permutation identity(point_count);
    std::iota(identity.begin(), identity.end(), std::uint32_t{0});
    std::unordered_map<Permutation, std::size_t, PermutationHash> seen{{identity, 0}};
    std::vector<Permutation> elements{identity};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            Permutation next = compose(elements[head], g);
            if (seen.emplace(next, elements.size()).second) {
                if (elements.size() >= kMaxGroupOrder) throw Error(ErrorCode::BadParameter, "generated group is too large");
                elements.push_back(std::move(next));
            }
        }
    }
    return elements;
}

RootedPremaniplex polygon(int p) {
    require(p >= 2, "polygon needs p >= 2");
    const std::size_t m = 2 * static_cast<std::size_t>(p);
    std::vector<std::vector<Flag>> rows(2, std::vector<Flag>(m));
    for (std::size_t f = 0; f < m; ++f) {
        rows[0][f] = static_cast<Flag>(f ^ 1u);
        rows[1][f] = static_cast<Flag>(f % 2 == 0 ? (f + m - 1) % m : (f + 1) % m);
    }
    return RootedPremaniplex(Premaniplex::validate(2, m, rows), 0);
}

RootedPremaniplex two_orbit_stg(int rank, ColorSet I) {
    require(rank >= 1 && rank <= kMaxRank, "rank out of range");
    if (!I.fits_rank(rank) || I == ColorSet::all(rank))
        throw Error(ErrorCode::IImproper, "I = " + I.to_string() + " is not a proper subset of the colors");
    std::vector<std::vector<Flag>> rows(static_cast<std::size_t>(rank));
    for (int i = 0; i < rank; ++i) rows[static_cast<std::size_t>(i)] = I.contains(i) ? std::vector<Flag>{0, 1} : std::vector<Flag>{1, 0};
    return RootedPremaniplex(Premaniplex::validate(rank, 2, rows), 0);
}

RootedPremaniplex point(int rank) {
    require(rank >= 1 && rank <= kMaxRank, "rank out of range");
    std::vector<std::vector<Flag>> rows(static_cast<std::size_t>(rank), std::vector<Flag>{0});
    return RootedPremaniplex(Premaniplex::validate(rank, 1, rows), 0);
}

std::vector<Permutation> connection_permutations(const Premaniplex& p) {
    std::vector<Permutation> out;
    for (int i = 0; i < p.rank(); ++i) {
        auto r = p.row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

RootedPremaniplex from_involutions(const std::vector<Permutation>& generators) {
    require_sggi(generators);
    const int n = static_cast<int>(generators.size());
    const std::size_t d = generators[0].size();
    Permutation identity(d);
    std::iota(identity.begin(), identity.end(), std::uint32_t{0});
    std::unordered_map<Permutation, Flag, PermutationHash> index;
    std::vector<Permutation> elements{identity};
    index.emplace(identity, 0);
    std::vector<Flag> adjacency;
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (int i = 0; i < n; ++i) {
            Permutation next = compose(elements[head], generators[static_cast<std::size_t>(i)]);
            auto [it, inserted] = index.emplace(next, static_cast<Flag>(elements.size()));
            if (inserted) {
                if (elements.size() >= kMaxGroupOrder) throw Error(ErrorCode::BadParameter, "generated group is too large");
                elements.push_back(std::move(next));
            }
            adjacency.push_back(it->second);
        }
    }
    const std::size_t m = elements.size();
    std::vector<Flag> table(static_cast<std::size_t>(n) * m);
    for (std::size_t x = 0; x < m; ++x)
        for (int i = 0; i < n; ++i) table[static_cast<std::size_t>(i) * m + x] = adjacency[x * static_cast<std::size_t>(n) + i];
    return RootedPremaniplex(detail::build_unchecked(n, m, std::move(table)), 0);
}

bool generators_give_maniplex(const std::vector<Permutation>& generators) {
    require_sggi(generators);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (is_identity(generators[i])) return false;
        for (std::size_t j = 0; j < generators.size(); ++j)
            if (j != i && is_identity(compose(generators[i], generators[j]))) return false;
    }
    return true;
}

std::vector<Permutation> cube_generators(int n) {
    require(n >= 2, "cube needs n >= 2");
    const std::size_t d = 2 * static_cast<std::size_t>(n);
    std::vector<Permutation> gens;
    Permutation flip(d);
    std::iota(flip.begin(), flip.end(), std::uint32_t{0});
    std::swap(flip[0], flip[static_cast<std::size_t>(n)]);
    gens.push_back(flip);
    for (int j = 1; j < n; ++j) {
        Permutation swap(d);
        std::iota(swap.begin(), swap.end(), std::uint32_t{0});
        auto a = static_cast<std::size_t>(j - 1), b = static_cast<std::size_t>(j);
        std::swap(swap[a], swap[b]);
        std::swap(swap[a + static_cast<std::size_t>(n)], swap[b + static_cast<std::size_t>(n)]);
        gens.push_back(swap);
    }
    return gens;
}

std::vector<Permutation> simplex_generators(int n) {
    require(n >= 2, "simplex needs n >= 2");
    std::vector<Permutation> gens;
    for (int j = 0; j < n; ++j) {
        Permutation swap(static_cast<std::size_t>(n) + 1);
        std::iota(swap.begin(), swap.end(), std::uint32_t{0});
        std::swap(swap[static_cast<std::size_t>(j)], swap[static_cast<std::size_t>(j) + 1]);
        gens.push_back(swap);
    }
    return gens;
}

RootedPremaniplex cube(int n) { return from_involutions(cube_generators(n)); }

RootedPremaniplex simplex(int n) { return from_involutions(simplex_generators(n)); }

RootedPremaniplex torus_44(int b, int c) {
    require(b != 0 || c != 0, "torus_44 needs (b,c) != (0,0)");
    const PlaneLattice lattice({b, c}, {-c, b});
    const std::array<PlaneMap, 3> reflections{{
        {{-1, 0, 0, 1}, {1, 0}},
        {{0, 1, 1, 0}, {0, 0}},
        {{1, 0, 0, -1}, {0, 0}},
    }};
    auto key = [&](const PlaneMap& g) {
        auto t = lattice.reduce(g.t);
        return std::array<long, 6>{g.a[0], g.a[1], g.a[2], g.a[3], t[0], t[1]};
    };
    std::map<std::array<long, 6>, Flag> index;
    std::vector<PlaneMap> flags{PlaneMap{{1, 0, 0, 1}, {0, 0}}};
    index.emplace(key(flags[0]), 0);
    std::vector<Flag> adjacency;
    for (std::size_t head = 0; head < flags.size(); ++head) {
        for (const auto& r : reflections) {
            PlaneMap next = flags[head].then_reflect(r);
            next.t = lattice.reduce(next.t);
            auto [it, inserted] = index.emplace(key(next), static_cast<Flag>(flags.size()));
            if (inserted) flags.push_back(next);
            adjacency.push_back(it->second);
        }
    }
    const std::size_t m = flags.size();
    std::vector<std::vector<Flag>> rows(3, std::vector<Flag>(m));
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t i = 0; i < 3; ++i) rows[i][x] = adjacency[3 * x + i];
    return RootedPremaniplex(Premaniplex::validate(3, m, rows), 0);
}

std::pair<RootedPremaniplex, RootedPremaniplex> fig2_premaniplexes() {
    const std::vector<std::vector<Flag>> st3_12{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {0, 1, 2}};
    const std::vector<std::vector<Flag>> st3_2{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {0, 2, 1}};
    return {RootedPremaniplex(Premaniplex::validate(4, 3, st3_12), 0),
            RootedPremaniplex(Premaniplex::validate(4, 3, st3_2), 0)};
}

CatalogEntry build_catalog_entry(std::string_view spec) {
    while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.front()))) spec.remove_prefix(1);
    while (!spec.empty() && std::isspace(static_cast<unsigned char>(spec.back()))) spec.remove_suffix(1);
    std::string name(spec);
    std::vector<int> args;
    if (auto open = spec.find('('); open != std::string_view::npos) {
        if (spec.back() != ')') throw Error(ErrorCode::BadParameter, "unbalanced parentheses in '" + std::string(spec) + "'");
        name = std::string(spec.substr(0, open));
        args = parse_arguments(spec.substr(open + 1, spec.size() - open - 2));
    }
    auto expect = [&](std::size_t count) {
        if (args.size() != count)
            throw Error(ErrorCode::BadParameter, name + " takes " + std::to_string(count) + " argument(s)");
    };
    auto entry = [&](RootedPremaniplex rp) { return CatalogEntry{std::string(spec), args, std::move(rp)}; };
    if (name == "polygon") return expect(1), entry(polygon(args[0]));
    if (name == "point") return expect(1), entry(point(args[0]));
    if (name == "cube") return expect(1), entry(cube(args[0]));
    if (name == "simplex") return expect(1), entry(simplex(args[0]));
    if (name == "torus44") return expect(2), entry(torus_44(args[0], args[1]));
    if (name == "st3_12") return expect(0), entry(fig2_premaniplexes().first);
    if (name == "st3_2") return expect(0), entry(fig2_premaniplexes().second);
    if (name == "two_orbit") {
        if (args.empty()) throw Error(ErrorCode::BadParameter, "two_orbit needs a rank");
        ColorSet I;
        for (std::size_t k = 1; k < args.size(); ++k) {
            if (args[k] < 0 || args[k] >= args[0]) throw Error(ErrorCode::BadParameter, "color out of range");
            I = I.with(args[k]);
        }
        return entry(two_orbit_stg(args[0], I));
    }
    throw Error(ErrorCode::BadParameter, "unknown catalog family '" + name + "'");
}

std::vector<CatalogEntry> standard_catalog() {
    std::vector<std::string> specs;
    for (int p = 2; p <= 12; ++p) specs.push_back("polygon(" + std::to_string(p) + ")");
    for (int n = 1; n <= 4; ++n) {
        specs.push_back("point(" + std::to_string(n) + ")");
        for (std::uint32_t bits = 0; bits + 1 < (1u << n); ++bits) {
            std::string s = "two_orbit(" + std::to_string(n);
            for (int c : ColorSet::from_bits(bits).colors()) s += "," + std::to_string(c);
            specs.push_back(s + ")");
        }
    }
    for (int n = 2; n <= 4; ++n) {
        specs.push_back("cube(" + std::to_string(n) + ")");
        specs.push_back("simplex(" + std::to_string(n) + ")");
    }
    for (int sum = 1; sum <= 4; ++sum)
        for (int b = sum; b >= 0; --b) specs.push_back("torus44(" + std::to_string(b) + "," + std::to_string(sum - b) + ")");
    specs.push_back("st3_12");
    specs.push_back("st3_2");
    std::vector<CatalogEntry> out;
    for (const auto& s : specs) out.push_back(build_catalog_entry(s));
    return out;
}

}  // namespace maniplex
