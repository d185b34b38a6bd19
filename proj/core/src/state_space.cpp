#include "fct/state_space.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fct/catalan.hpp"
#include "fct/error.hpp"
#include "fct/parallel.hpp"

namespace fct {

UnionFind::UnionFind(std::size_t size) : parent_(size), size_(size, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t x) noexcept {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(std::size_t a, std::size_t b) noexcept {
    a = find(a);
    b = find(b);
    if (a == b) {
        return false;
    }
    if (size_[a] < size_[b]) {
        std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
}

StateSpace::StateSpace(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("StateSpace: n must be at least 1");
    }
    if (n > kStateCap) {
        throw CapExceeded("StateSpace", n, kStateCap);
    }
    trees_ = enumerate_trees(n);
    moves_.resize(trees_.size());
    for (std::size_t r = 0; r < trees_.size(); ++r) {
        const Tree& tree = trees_[r];
        for (const MoveSite site : sites(tree)) {
            Rotation rotation = rotate(tree, site);
            Move move;
            move.site = site;
            move.neighbor = static_cast<std::uint32_t>(rank(rotation.tree));
            move.lower = site.vertex;
            move.upper = tree.internal_index(tree.node(tree.internal_node(site.vertex)).parent);
            move.vertex_map = std::move(rotation.vertex_map);
            moves_[r].push_back(std::move(move));
        }
    }
}

StateSpace::Id StateSpace::apply(Id id, const Move& move) const noexcept {
    const std::uint32_t old_signs = signs_of(id);
    const int m = sign_bits();
    std::uint32_t signs = 0;
    for (int k = 0; k < m; ++k) {
        std::uint32_t b = bit(old_signs, k) ? 1U : 0U;
        if (k == move.upper || k == move.lower) {
            b ^= 1U;
        }
        signs |= b << (m - 1 - move.vertex_map[static_cast<std::size_t>(k)]);
    }
    return this->id(move.neighbor, signs);
}

State StateSpace::state(Id id) const {
    return State(trees_.at(rank_of(id)), Signs(sign_bits(), signs_of(id)), Color::K);
}

StateSpace::Id StateSpace::id_of(const State& state) const {
    if (state.tree.leaf_count() != n_ || !state.tree.is_canonical()) {
        throw std::invalid_argument("state does not belong to this state space");
    }
    if (state.root != Color::K) {
        throw std::invalid_argument("state space fixes the root colour to K");
    }
    return id(rank(state.tree), state.signs.value());
}

const std::vector<std::uint32_t>& StateSpace::components(int threads) const {
    std::call_once(components_once_, [&] {
        const std::uint64_t states = state_count();
        UnionFind forest(states);
        const std::size_t chunks = chunk_count(trees_.size(), threads);
        if (chunks == 1) {
            for (Id v = 0; v < states; ++v) {
                for_each_neighbor(v, [&](MoveSite, Id w) { forest.unite(v, w); });
            }
        } else {
            // Each chunk lists its edges (once per undirected pair); unions are
            // applied afterwards in chunk order.
            std::vector<std::vector<std::pair<Id, Id>>> edges(chunks);
            parallel_chunks(trees_.size(), threads, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
                for (std::uint64_t r = begin; r < end; ++r) {
                    for (std::uint32_t s = 0; s < signs_per_tree(); ++s) {
                        const Id v = id(r, s);
                        for_each_neighbor(v, [&](MoveSite, Id w) {
                            if (v < w) {
                                edges[chunk].emplace_back(v, w);
                            }
                        });
                    }
                }
            });
            for (const auto& list : edges) {
                for (const auto& [v, w] : list) {
                    forest.unite(v, w);
                }
            }
        }
        components_.assign(states, 0);
        std::vector<std::uint32_t> label_of_root(states, UINT32_MAX);
        std::uint32_t next = 0;
        for (Id v = 0; v < states; ++v) {
            const std::size_t root = forest.find(v);
            if (label_of_root[root] == UINT32_MAX) {
                label_of_root[root] = next++;
            }
            components_[v] = label_of_root[root];
        }
    });
    return components_;
}

const StateSpace& state_space(int n) {
    if (n < 1 || n > kStateCap) {
        throw CapExceeded("state_space", n, kStateCap);
    }
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<StateSpace>> cache;
    const std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<StateSpace>(n);
    }
    return *slot;
}

std::string state_graph_dot(const StateSpace& space) {
    std::ostringstream out;
    out << "graph states_" << space.n() << " {\n";
    for (StateSpace::Id v = 0; v < space.state_count(); ++v) {
        out << "  s" << v << " [label=\"" << print_bracket(space.tree(space.rank_of(v))) << ' '
            << Signs(space.sign_bits(), space.signs_of(v)).str() << "\"];\n";
    }
    for (StateSpace::Id v = 0; v < space.state_count(); ++v) {
        space.for_each_neighbor(v, [&](MoveSite, StateSpace::Id w) {
            if (v < w) {
                out << "  s" << v << " -- s" << w << ";\n";
            }
        });
    }
    out << "}\n";
    return out.str();
}

}  // namespace fct
