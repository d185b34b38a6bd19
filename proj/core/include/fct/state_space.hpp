#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <vector>

#include "fct/dynamics.hpp"
#include "fct/tree.hpp"

namespace fct {

/// Full state-graph work is limited to n <= 10 (about 2.5M states).
inline constexpr int kStateCap = 10;

/// Dense indexing of all (tree, sign vector) states for one n with the root
/// colour fixed to K. State id = rank * 2^(n-1) + sign bits, so ids order
/// states by (tree rank, sign bits).
class StateSpace {
public:
    using Id = std::uint64_t;

    struct Move {
        MoveSite site;
        std::uint32_t neighbor = 0;   // rank of the rotated tree
        int upper = 0;                // old internal index of the upper participant
        int lower = 0;                // old internal index of the lower participant
        std::vector<int> vertex_map;  // old internal index -> new internal index
    };

    explicit StateSpace(int n);

    int n() const noexcept { return n_; }
    int sign_bits() const noexcept { return n_ - 1; }
    std::uint64_t tree_count() const noexcept { return trees_.size(); }
    std::uint64_t state_count() const noexcept { return tree_count() << sign_bits(); }
    std::uint32_t signs_per_tree() const noexcept { return 1U << sign_bits(); }

    Id id(std::uint64_t rank, std::uint32_t signs) const noexcept { return (rank << sign_bits()) | signs; }
    std::uint64_t rank_of(Id id) const noexcept { return id >> sign_bits(); }
    std::uint32_t signs_of(Id id) const noexcept { return static_cast<std::uint32_t>(id & (signs_per_tree() - 1)); }

    const Tree& tree(std::uint64_t rank) const { return trees_.at(rank); }
    const std::vector<Move>& moves(std::uint64_t rank) const { return moves_.at(rank); }

    bool admissible(Id id, const Move& move) const noexcept {
        const std::uint32_t s = signs_of(id);
        return bit(s, move.upper) == bit(s, move.lower);
    }

    /// Successor state; only meaningful when the move is admissible.
    Id apply(Id id, const Move& move) const noexcept;

    /// Calls f(site, neighbour id) for each admissible move in site order.
    template <class F>
    void for_each_neighbor(Id id, F&& f) const {
        for (const Move& move : moves_[rank_of(id)]) {
            if (admissible(id, move)) {
                f(move.site, apply(id, move));
            }
        }
    }

    State state(Id id) const;
    /// Throws std::invalid_argument for a non-canonical tree or root != K.
    Id id_of(const State& state) const;

    /// Connected component label of every state (admissibility is symmetric,
    /// so the state graph is undirected). Labels are dense and numbered in
    /// order of each component's smallest state id. Computed once.
    const std::vector<std::uint32_t>& components(int threads = 1) const;

private:
    bool bit(std::uint32_t signs, int vertex) const noexcept {
        return ((signs >> (sign_bits() - 1 - vertex)) & 1U) != 0;
    }

    int n_;
    std::vector<Tree> trees_;
    std::vector<std::vector<Move>> moves_;
    mutable std::once_flag components_once_;
    mutable std::vector<std::uint32_t> components_;
};

/// Shared, lazily built state space for n (thread-safe).
const StateSpace& state_space(int n);

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t size);

    std::size_t find(std::size_t x) noexcept;
    bool unite(std::size_t a, std::size_t b) noexcept;

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint32_t> size_;
};

/// DOT export of the admissible state graph; nodes labelled "tree signs".
std::string state_graph_dot(const StateSpace& space);

}  // namespace fct
