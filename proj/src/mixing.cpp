#include "maniplex/mixing.hpp"

#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>

#include "maniplex/catalog.hpp"
#include "maniplex/flagcore.hpp"
#include "maniplex/symmetry.hpp"

namespace maniplex {

namespace {

constexpr std::size_t kDensePairLimit = std::size_t{1} << 23;

/// Pair -> mix index lookup; dense for small products, hashed otherwise.
class PairIndex {
public:
    PairIndex(std::size_t left_count, std::size_t right_count) : right_count_(right_count) {
        if (left_count * right_count <= kDensePairLimit) dense_.assign(left_count * right_count, kUnset);
    }

    static constexpr Flag kUnset = std::numeric_limits<Flag>::max();

    Flag find(Flag a, Flag b) const {
        const std::uint64_t key = static_cast<std::uint64_t>(a) * right_count_ + b;
        if (!dense_.empty()) return dense_[key];
        auto it = sparse_.find(key);
        return it == sparse_.end() ? kUnset : it->second;
    }
    void insert(Flag a, Flag b, Flag index) {
        const std::uint64_t key = static_cast<std::uint64_t>(a) * right_count_ + b;
        if (!dense_.empty())
            dense_[key] = index;
        else
            sparse_.emplace(key, index);
    }

private:
    std::size_t right_count_;
    std::vector<Flag> dense_;
    std::unordered_map<std::uint64_t, Flag> sparse_;
};

}  // namespace

std::optional<Covering> find_covering(const RootedPremaniplex& source, const RootedPremaniplex& target) {
    if (source.rank() != target.rank() || source.flag_count() < target.flag_count()) return std::nullopt;
    auto map = extend_color_map(source.premaniplex(), source.base(), target.premaniplex(), target.base());
    if (!map) return std::nullopt;
    return Covering{source, target, std::move(*map)};
}

bool is_valid_covering(const Covering& c) {
    const auto& s = c.source;
    const auto& t = c.target;
    if (s.rank() != t.rank() || c.map.size() != s.flag_count()) return false;
    if (c.map[s.base()] != t.base()) return false;
    std::vector<char> hit(t.flag_count(), 0);
    for (Flag f = 0; f < s.flag_count(); ++f) {
        if (c.map[f] >= t.flag_count()) return false;
        hit[c.map[f]] = 1;
        for (int i = 0; i < s.rank(); ++i)
            if (c.map[s.adjacent(i, f)] != t.adjacent(i, c.map[f])) return false;
    }
    for (char h : hit)
        if (!h) return false;
    return true;
}

MixResult mix(const RootedPremaniplex& a, const RootedPremaniplex& b) {
    if (a.rank() != b.rank()) {
        throw Error(ErrorCode::RankMismatch,
                    "cannot mix ranks " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
    }
    const int n = a.rank();
    const Premaniplex& pa = a.premaniplex();
    const Premaniplex& pb = b.premaniplex();
    PairIndex index(a.flag_count(), b.flag_count());
    std::vector<std::pair<Flag, Flag>> pairs{{a.base(), b.base()}};
    index.insert(a.base(), b.base(), 0);
    std::vector<Flag> adjacency;  // grows row-major by flag, n entries each
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        auto [fa, fb] = pairs[head];
        for (int i = 0; i < n; ++i) {
            Flag ga = pa.adjacent(i, fa);
            Flag gb = pb.adjacent(i, fb);
            Flag k = index.find(ga, gb);
            if (k == PairIndex::kUnset) {
                k = static_cast<Flag>(pairs.size());
                index.insert(ga, gb, k);
                pairs.emplace_back(ga, gb);
            }
            adjacency.push_back(k);
        }
    }
    const std::size_t m = pairs.size();
    std::vector<Flag> table(static_cast<std::size_t>(n) * m);
    for (std::size_t x = 0; x < m; ++x)
        for (int i = 0; i < n; ++i) table[static_cast<std::size_t>(i) * m + x] = adjacency[x * static_cast<std::size_t>(n) + i];
    RootedPremaniplex result(detail::build_unchecked(n, m, std::move(table)), 0);
    std::vector<Flag> left(m), right(m);
    for (std::size_t x = 0; x < m; ++x) {
        left[x] = pairs[x].first;
        right[x] = pairs[x].second;
    }
    return MixResult{result, Covering{result, a, std::move(left)}, Covering{result, b, std::move(right)}, std::move(pairs)};
}

MixChain mix_many(std::span<const RootedPremaniplex> inputs) {
    if (inputs.empty()) throw Error(ErrorCode::EmptyList, "mix_many needs at least one input");
    std::vector<Flag> identity(inputs[0].flag_count());
    for (Flag f = 0; f < identity.size(); ++f) identity[f] = f;
    MixChain chain{inputs[0], {Covering{inputs[0], inputs[0], std::move(identity)}}};
    for (std::size_t k = 1; k < inputs.size(); ++k) {
        auto step = mix(chain.mix, inputs[k]);
        std::vector<Covering> projections;
        for (auto& old : chain.projections) {
            std::vector<Flag> composed(step.mix.flag_count());
            for (Flag x = 0; x < composed.size(); ++x) composed[x] = old.map[step.left.map[x]];
            projections.push_back(Covering{step.mix, old.target, std::move(composed)});
        }
        projections.push_back(Covering{step.mix, inputs[k], std::move(step.right.map)});
        chain = MixChain{step.mix, std::move(projections)};
    }
    return chain;
}

RootedPremaniplex i_double(const RootedPremaniplex& m, ColorSet I) {
    return mix(m, two_orbit_stg(m.rank(), I)).mix;
}

RootedPremaniplex rebase(const RootedPremaniplex& m, Flag f) { return m.rebased(f); }

RootedPremaniplex smallest_regular_cover(const RootedPremaniplex& m) {
    auto orbits = automorphism_orbits(m.premaniplex());
    std::vector<RootedPremaniplex> rootings{m};
    std::vector<char> done(orbits.block_count(), 0);
    done[orbits.block_of(m.base())] = 1;
    for (Flag f = 0; f < m.flag_count(); ++f) {
        auto b = orbits.block_of(f);
        if (done[b]) continue;
        done[b] = 1;
        rootings.push_back(m.rebased(f));
    }
    return mix_many(rootings).mix;
}

}  // namespace maniplex
