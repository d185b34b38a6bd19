#include "fct/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "fct/catalan.hpp"
#include "fct/error.hpp"
#include "fct/state_space.hpp"

namespace fct {

State::State(Tree tree_in, Signs signs_in, Color root_in)
    : tree(std::move(tree_in)), signs(signs_in), root(root_in) {
    if (signs.size() != tree.internal_count()) {
        throw std::invalid_argument("sign vector has " + std::to_string(signs.size()) + " entries, tree has " +
                                    std::to_string(tree.internal_count()) + " internal vertices");
    }
}

namespace {

int upper_of(const Tree& tree, MoveSite site) {
    if (site.vertex < 1 || site.vertex >= tree.internal_count()) {
        throw InvalidMove("move site " + std::to_string(site.vertex) + " is not an internal edge");
    }
    return tree.internal_index(tree.node(tree.internal_node(site.vertex)).parent);
}

}  // namespace

bool is_admissible(const State& state, MoveSite site) {
    const int upper = upper_of(state.tree, site);
    return state.signs[upper] == state.signs[site.vertex];
}

State apply_admissible(const State& state, MoveSite site) {
    if (!is_admissible(state, site)) {
        throw InvalidMove("transplantation at site " + std::to_string(site.vertex) + " is not admissible");
    }
    Rotation rotation = rotate(state.tree, site);
    Signs signs(state.signs.size());
    for (int k = 0; k < state.signs.size(); ++k) {
        signs.set(rotation.vertex_map[static_cast<std::size_t>(k)], state.signs[k]);
    }
    signs.flip(rotation.upper);
    signs.flip(rotation.lower);
    return State(std::move(rotation.tree), signs, state.root);
}

int admissible_degree(const State& state) {
    int degree = 0;
    for (const MoveSite site : sites(state.tree)) {
        degree += is_admissible(state, site) ? 1 : 0;
    }
    return degree;
}

AdmissiblePath replay(const State& start, const std::vector<MoveSite>& moves) {
    AdmissiblePath path;
    path.moves = moves;
    path.states.reserve(moves.size() + 1);
    path.states.push_back(start);
    for (const MoveSite site : moves) {
        path.states.push_back(apply_admissible(path.states.back(), site));
    }
    return path;
}

bool is_valid(const AdmissiblePath& path) {
    if (path.states.size() != path.moves.size() + 1) {
        return false;
    }
    const LeafVector leaves = path.start().leaves();
    for (std::size_t i = 0; i < path.moves.size(); ++i) {
        const State& from = path.states[i];
        const State& to = path.states[i + 1];
        if (from.root != to.root) {
            return false;
        }
        try {
            if (!is_admissible(from, path.moves[i]) || apply_admissible(from, path.moves[i]) != to) {
                return false;
            }
        } catch (const InvalidMove&) {
            return false;
        }
        const std::vector<Color> edges = edge_colors(to.tree, to.coloring());
        if (!is_proper(to.tree, edges) || to.leaves() != leaves) {
            return false;
        }
    }
    return true;
}

namespace {

AdmissiblePath search_path(const StateSpace& space, StateSpace::Id start, std::uint64_t target, Color root) {
    const State start_state = [&] {
        State s = space.state(start);
        s.root = root;
        return s;
    }();
    if (space.rank_of(start) == target) {
        return replay(start_state, {});
    }
    std::unordered_map<StateSpace::Id, std::pair<StateSpace::Id, MoveSite>> parent;
    parent.emplace(start, std::pair{start, MoveSite{}});
    std::deque<StateSpace::Id> queue{start};
    std::optional<StateSpace::Id> reached;
    while (!queue.empty() && !reached) {
        const StateSpace::Id v = queue.front();
        queue.pop_front();
        space.for_each_neighbor(v, [&](MoveSite site, StateSpace::Id w) {
            if (reached || parent.contains(w)) {
                return;
            }
            parent.emplace(w, std::pair{v, site});
            if (space.rank_of(w) == target) {
                reached = w;
                return;
            }
            queue.push_back(w);
        });
    }
    if (!reached) {
        return AdmissiblePath{};
    }
    std::vector<MoveSite> moves;
    for (StateSpace::Id v = *reached; v != start;) {
        const auto& [from, site] = parent.at(v);
        moves.push_back(site);
        v = from;
    }
    std::reverse(moves.begin(), moves.end());
    return replay(start_state, moves);
}

}  // namespace

std::optional<AdmissiblePath> admissible_path(const State& start, const Tree& target) {
    if (start.tree.leaf_count() != target.leaf_count()) {
        throw std::invalid_argument("admissible_path: trees have different leaf counts");
    }
    if (!start.tree.is_canonical() || !target.is_canonical()) {
        throw std::invalid_argument("admissible_path: trees must have variables x1..xn in order");
    }
    const int n = start.tree.leaf_count();
    if (n > kStateCap) {
        throw CapExceeded("admissible_path", n, kStateCap);
    }
    if (start.tree == target) {
        return replay(start, {});
    }
    const StateSpace& space = state_space(n);
    // Admissibility depends on signs only, so search with root K and restore.
    State probe = start;
    probe.root = Color::K;
    AdmissiblePath path = search_path(space, space.id_of(probe), rank(target), start.root);
    if (path.states.empty()) {
        return std::nullopt;
    }
    return path;
}

std::optional<AdmissiblePath> find_admissible_path(const Tree& left, const Tree& right) {
    if (left.leaf_count() != right.leaf_count()) {
        throw std::invalid_argument("find_admissible_path: trees have different leaf counts");
    }
    const int n = left.leaf_count();
    if (n > kStateCap) {
        throw CapExceeded("find_admissible_path", n, kStateCap);
    }
    if (!left.is_canonical() || !right.is_canonical()) {
        throw std::invalid_argument("find_admissible_path: trees must have variables x1..xn in order");
    }
    if (left == right) {
        return replay(State(left, Signs(left.internal_count())), {});
    }
    const StateSpace& space = state_space(n);
    const auto& component = space.components();
    const std::uint64_t l = rank(left);
    const std::uint64_t r = rank(right);
    std::vector<std::uint32_t> target_components;
    for (std::uint32_t s = 0; s < space.signs_per_tree(); ++s) {
        target_components.push_back(component[space.id(r, s)]);
    }
    std::sort(target_components.begin(), target_components.end());
    for (std::uint32_t s = 0; s < space.signs_per_tree(); ++s) {
        const StateSpace::Id start = space.id(l, s);
        if (std::binary_search(target_components.begin(), target_components.end(), component[start])) {
            return search_path(space, start, r, Color::K);
        }
    }
    return std::nullopt;
}

nlohmann::ordered_json to_json(const State& state) {
    nlohmann::ordered_json out;
    out["tree"] = print_bracket(state.tree);
    out["signs"] = state.signs.str();
    out["root"] = std::string(1, to_char(state.root));
    return out;
}

nlohmann::ordered_json to_json(const AdmissiblePath& path) {
    nlohmann::ordered_json out;
    out["start"] = to_json(path.start());
    auto moves = nlohmann::ordered_json::array();
    for (const MoveSite site : path.moves) {
        moves.push_back(site.vertex);
    }
    out["moves"] = std::move(moves);
    auto states = nlohmann::ordered_json::array();
    for (const State& state : path.states) {
        states.push_back(to_json(state));
    }
    out["states"] = std::move(states);
    return out;
}

}  // namespace fct
