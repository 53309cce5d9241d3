#include "maniplex/flagcore.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

namespace maniplex {

DisjointSets::DisjointSets(std::size_t n) : parent_(n), weight_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSets::find(std::size_t x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool DisjointSets::unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (weight_[x] < weight_[y]) std::swap(x, y);
    parent_[y] = x;
    weight_[x] += weight_[y];
    return true;
}

OrbitPartition OrbitPartition::from_labels(const std::vector<std::size_t>& labels) {
    OrbitPartition out;
    out.block_of_.resize(labels.size());
    std::vector<std::uint32_t> renumber;
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::size_t max_label = 0;
    for (auto l : labels) max_label = std::max(max_label, l);
    renumber.assign(labels.empty() ? 0 : max_label + 1, unset);
    for (std::size_t f = 0; f < labels.size(); ++f) {
        auto& r = renumber[labels[f]];
        if (r == unset) r = static_cast<std::uint32_t>(out.block_count_++);
        out.block_of_[f] = r;
    }
    return out;
}

std::vector<std::size_t> OrbitPartition::block_sizes() const {
    std::vector<std::size_t> sizes(block_count_, 0);
    for (auto b : block_of_) ++sizes[b];
    return sizes;
}

std::vector<std::vector<Flag>> OrbitPartition::members() const {
    std::vector<std::vector<Flag>> out(block_count_);
    for (std::size_t f = 0; f < block_of_.size(); ++f) out[block_of_[f]].push_back(static_cast<Flag>(f));
    return out;
}

bool OrbitPartition::refines(const OrbitPartition& other) const {
    if (other.flag_count() != flag_count()) return false;
    constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> image(block_count_, unset);
    for (std::size_t f = 0; f < block_of_.size(); ++f) {
        auto& img = image[block_of_[f]];
        if (img == unset)
            img = other.block_of_[f];
        else if (img != other.block_of_[f])
            return false;
    }
    return true;
}

OrbitPartition interval_orbits(const Premaniplex& p, ColorSet colors) {
    const std::size_t m = p.flag_count();
    DisjointSets sets(m);
    for (int i = 0; i < p.rank(); ++i) {
        if (!colors.contains(i)) continue;
        auto r = p.row(i);
        for (std::size_t f = 0; f < m; ++f)
            if (r[f] > f) sets.unite(f, r[f]);
    }
    std::vector<std::size_t> labels(m);
    for (std::size_t f = 0; f < m; ++f) labels[f] = sets.find(f);
    return OrbitPartition::from_labels(labels);
}

bool is_maniplex(const Premaniplex& p) {
    const int n = p.rank();
    for (Flag f = 0; f < p.flag_count(); ++f) {
        for (int i = 0; i < n; ++i) {
            Flag g = p.adjacent(i, f);
            if (g == f) return false;
            for (int j = 0; j < n; ++j)
                if (j != i && p.adjacent(j, g) == f) return false;
        }
    }
    return true;
}

std::vector<Face> faces(const Premaniplex& p, int i) {
    if (i < 0 || i >= p.rank()) {
        throw Error(ErrorCode::OutOfRange, "face rank " + std::to_string(i) + " outside [0, " +
                                               std::to_string(p.rank()) + ")");
    }
    auto part = interval_orbits(p, ColorSet::all(p.rank()).without(i));
    std::vector<Face> out;
    for (auto& flags : part.members()) out.push_back(Face{i, std::move(flags)});
    return out;
}

Premaniplex dual(const Premaniplex& p) {
    const int n = p.rank();
    std::vector<Flag> table;
    table.reserve(static_cast<std::size_t>(n) * p.flag_count());
    for (int i = 0; i < n; ++i) {
        auto r = p.row(n - 1 - i);
        table.insert(table.end(), r.begin(), r.end());
    }
    return detail::build_unchecked(n, p.flag_count(), std::move(table));
}

RootedPremaniplex dual(const RootedPremaniplex& p) { return RootedPremaniplex(dual(p.premaniplex()), p.base()); }

SectionEmbedding section_with_embedding(const RootedPremaniplex& rp, ColorSet colors) {
    const int n = rp.rank();
    if (colors.empty() || !colors.fits_rank(n)) {
        throw Error(ErrorCode::EmptyInterval, "section colors " + colors.to_string() + " are not a nonempty interval of rank " +
                                                  std::to_string(n));
    }
    const int lo = std::countr_zero(colors.bits());
    const int hi = 31 - std::countl_zero(colors.bits());
    if (ColorSet::interval(lo, hi) != colors) {
        throw Error(ErrorCode::EmptyInterval, "section colors " + colors.to_string() + " are not contiguous");
    }
    const Premaniplex& p = rp.premaniplex();
    constexpr auto unset = std::numeric_limits<Flag>::max();
    std::vector<Flag> local(p.flag_count(), unset);
    std::vector<Flag> order{rp.base()};
    local[rp.base()] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
        Flag f = order[head];
        for (int c = lo; c <= hi; ++c) {
            Flag g = p.adjacent(c, f);
            if (local[g] == unset) {
                local[g] = static_cast<Flag>(order.size());
                order.push_back(g);
            }
        }
    }
    const int rank = hi - lo + 1;
    const std::size_t m = order.size();
    std::vector<Flag> table(static_cast<std::size_t>(rank) * m);
    for (int k = 0; k < rank; ++k)
        for (std::size_t x = 0; x < m; ++x) table[static_cast<std::size_t>(k) * m + x] = local[p.adjacent(lo + k, order[x])];
    return SectionEmbedding{RootedPremaniplex(detail::build_unchecked(rank, m, std::move(table)), 0), std::move(order)};
}

RootedPremaniplex section(const RootedPremaniplex& rp, ColorSet colors) {
    return section_with_embedding(rp, colors).section;
}

std::optional<std::vector<Flag>> extend_color_map(const Premaniplex& from, Flag f0, const Premaniplex& to, Flag g0) {
    if (from.rank() != to.rank()) return std::nullopt;
    const int n = from.rank();
    constexpr auto unset = std::numeric_limits<Flag>::max();
    std::vector<Flag> map(from.flag_count(), unset);
    std::vector<Flag> queue{f0};
    queue.reserve(from.flag_count());
    map[f0] = g0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Flag f = queue[head];
        Flag g = map[f];
        for (int i = 0; i < n; ++i) {
            Flag fi = from.adjacent(i, f);
            Flag gi = to.adjacent(i, g);
            if (map[fi] == unset) {
                map[fi] = gi;
                queue.push_back(fi);
            } else if (map[fi] != gi) {
                return std::nullopt;
            }
        }
    }
    return map;
}

}  // namespace maniplex
