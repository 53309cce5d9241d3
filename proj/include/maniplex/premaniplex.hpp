#ifndef MANIPLEX_PREMANIPLEX_HPP
#define MANIPLEX_PREMANIPLEX_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "maniplex/color_set.hpp"
#include "maniplex/error.hpp"

namespace maniplex {

using Flag = std::uint32_t;

class Premaniplex;

namespace detail {
/// Builds from a flat table (row-major by color) produced by an operation
/// that preserves the axioms. Assertion builds still validate.
Premaniplex build_unchecked(int rank, std::size_t flag_count, std::vector<Flag> table);
}  // namespace detail

/**
 * A finite connected premaniplex: flags 0..flag_count-1 and one involution
 * per color. Immutable; the only public way to obtain one is validate().
 */
class Premaniplex {
public:
    /**
     * Checks shape, the involution property of every row, (s_i s_j)^2 = id
     * for |i - j| > 1, and connectivity.
     * @throws ValidationError
     */
    static Premaniplex validate(int rank, std::size_t flag_count,
                                const std::vector<std::vector<Flag>>& connections);

    int rank() const { return rank_; }
    std::size_t flag_count() const { return flag_count_; }

    /// Image of flag f under the color-i connection.
    Flag adjacent(int color, Flag f) const { return table_[static_cast<std::size_t>(color) * flag_count_ + f]; }

    std::span<const Flag> row(int color) const {
        return {table_.data() + static_cast<std::size_t>(color) * flag_count_, flag_count_};
    }
    std::vector<std::vector<Flag>> connections() const;

    /// Colors i with s_i(f) = f.
    ColorSet semi_edge_colors(Flag f) const;

    friend bool operator==(const Premaniplex&, const Premaniplex&) = default;

private:
    Premaniplex(int rank, std::size_t flag_count, std::vector<Flag> table)
        : rank_(rank), flag_count_(flag_count), table_(std::move(table)) {}

    friend Premaniplex detail::build_unchecked(int, std::size_t, std::vector<Flag>);

    int rank_;
    std::size_t flag_count_;
    std::vector<Flag> table_;
};

/**
 * A premaniplex together with a distinguished base flag. The premaniplex is
 * shared, so copies and rebasing are cheap.
 */
class RootedPremaniplex {
public:
    /// @throws Error(OutOfRange) when base >= flag_count.
    explicit RootedPremaniplex(Premaniplex p, Flag base = 0);
    RootedPremaniplex(std::shared_ptr<const Premaniplex> p, Flag base);

    const Premaniplex& premaniplex() const { return *p_; }
    const std::shared_ptr<const Premaniplex>& shared() const { return p_; }
    Flag base() const { return base_; }
    int rank() const { return p_->rank(); }
    std::size_t flag_count() const { return p_->flag_count(); }
    Flag adjacent(int color, Flag f) const { return p_->adjacent(color, f); }

    /// Same premaniplex, base flag f.
    RootedPremaniplex rebased(Flag f) const { return RootedPremaniplex(p_, f); }

private:
    std::shared_ptr<const Premaniplex> p_;
    Flag base_;
};

}  // namespace maniplex

#endif
