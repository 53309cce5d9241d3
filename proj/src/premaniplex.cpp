#include "maniplex/premaniplex.hpp"

#include <string>

namespace maniplex {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::BadShape: return "BadShape";
        case ErrorCode::NotInvolution: return "NotInvolution";
        case ErrorCode::CommutationFailure: return "CommutationFailure";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::EmptyInterval: return "EmptyInterval";
        case ErrorCode::RankMismatch: return "RankMismatch";
        case ErrorCode::EmptyList: return "EmptyList";
        case ErrorCode::NotASubgroup: return "NotASubgroup";
        case ErrorCode::NotAManiplex: return "NotAManiplex";
        case ErrorCode::ModePreconditionViolated: return "ModePreconditionViolated";
        case ErrorCode::NotSggi: return "NotSggi";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::PreconditionViolated: return "PreconditionViolated";
        case ErrorCode::NotTwoOrbit: return "NotTwoOrbit";
        case ErrorCode::NotPolytope: return "NotPolytope";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::IImproper: return "IImproper";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

namespace {

void check_axioms(int rank, std::size_t m, const std::vector<Flag>& table) {
    auto at = [&](int i, std::size_t f) { return table[static_cast<std::size_t>(i) * m + f]; };
    for (int i = 0; i < rank; ++i) {
        for (std::size_t f = 0; f < m; ++f) {
            if (at(i, at(i, f)) != f) {
                throw ValidationError(ErrorCode::NotInvolution,
                                      "s_" + std::to_string(i) + " is not an involution at flag " + std::to_string(f), i,
                                      -1, static_cast<long>(f));
            }
        }
    }
    for (int i = 0; i < rank; ++i) {
        for (int j = i + 2; j < rank; ++j) {
            for (std::size_t f = 0; f < m; ++f) {
                if (at(i, at(j, f)) != at(j, at(i, f))) {
                    throw ValidationError(ErrorCode::CommutationFailure,
                                          "s_" + std::to_string(i) + " and s_" + std::to_string(j) +
                                              " do not commute at flag " + std::to_string(f),
                                          i, j, static_cast<long>(f));
                }
            }
        }
    }
    std::vector<char> seen(m, 0);
    std::vector<Flag> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Flag f = stack.back();
        stack.pop_back();
        for (int i = 0; i < rank; ++i) {
            Flag g = at(i, f);
            if (!seen[g]) {
                seen[g] = 1;
                ++reached;
                stack.push_back(g);
            }
        }
    }
    if (reached != m) {
        throw ValidationError(ErrorCode::Disconnected,
                              "only " + std::to_string(reached) + " of " + std::to_string(m) +
                                  " flags are reachable from flag 0",
                              -1, -1, -1);
    }
}

}  // namespace

namespace detail {

Premaniplex build_unchecked(int rank, std::size_t flag_count, std::vector<Flag> table) {
#ifndef NDEBUG
    check_axioms(rank, flag_count, table);
#endif
    return Premaniplex(rank, flag_count, std::move(table));
}

}  // namespace detail

Premaniplex Premaniplex::validate(int rank, std::size_t flag_count, const std::vector<std::vector<Flag>>& connections) {
    if (rank < 1 || rank > kMaxRank) {
        throw ValidationError(ErrorCode::BadShape, "rank must lie in [1, " + std::to_string(kMaxRank) + "]", -1, -1, -1);
    }
    if (flag_count < 1) throw ValidationError(ErrorCode::BadShape, "flag_count must be at least 1", -1, -1, -1);
    if (connections.size() != static_cast<std::size_t>(rank)) {
        throw ValidationError(ErrorCode::BadShape,
                              "expected " + std::to_string(rank) + " connection rows, got " +
                                  std::to_string(connections.size()),
                              -1, -1, -1);
    }
    std::vector<Flag> table;
    table.reserve(static_cast<std::size_t>(rank) * flag_count);
    for (int i = 0; i < rank; ++i) {
        const auto& row = connections[static_cast<std::size_t>(i)];
        if (row.size() != flag_count) {
            throw ValidationError(ErrorCode::BadShape,
                                  "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                      " entries, expected " + std::to_string(flag_count),
                                  i, -1, -1);
        }
        for (std::size_t f = 0; f < flag_count; ++f) {
            if (row[f] >= flag_count) {
                throw ValidationError(ErrorCode::BadShape,
                                      "row " + std::to_string(i) + " entry " + std::to_string(f) + " is out of range", i,
                                      -1, static_cast<long>(f));
            }
            table.push_back(row[f]);
        }
    }
    check_axioms(rank, flag_count, table);
    return Premaniplex(rank, flag_count, std::move(table));
}

std::vector<std::vector<Flag>> Premaniplex::connections() const {
    std::vector<std::vector<Flag>> out;
    out.reserve(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
        auto r = row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

ColorSet Premaniplex::semi_edge_colors(Flag f) const {
    ColorSet s;
    for (int i = 0; i < rank_; ++i)
        if (adjacent(i, f) == f) s = s.with(i);
    return s;
}

RootedPremaniplex::RootedPremaniplex(Premaniplex p, Flag base)
    : RootedPremaniplex(std::make_shared<const Premaniplex>(std::move(p)), base) {}

RootedPremaniplex::RootedPremaniplex(std::shared_ptr<const Premaniplex> p, Flag base) : p_(std::move(p)), base_(base) {
    if (base_ >= p_->flag_count()) {
        throw Error(ErrorCode::OutOfRange, "base flag " + std::to_string(base_) + " is not below flag_count " +
                                               std::to_string(p_->flag_count()));
    }
}

}  // namespace maniplex
