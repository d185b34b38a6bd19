#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "fct/algebra.hpp"
#include "fct/coloring.hpp"
#include "fct/tree.hpp"

namespace fct {

/// A tree together with a proper colouring in vertex-sign form.
struct State {
    Tree tree;
    Signs signs;
    Color root = Color::K;

    /// Throws std::invalid_argument if the sign vector does not fit the tree.
    State(Tree tree, Signs signs, Color root = Color::K);

    Coloring coloring() const { return Coloring{root, signs}; }
    LeafVector leaves() const { return leaf_vector(tree, coloring()); }

    friend bool operator==(const State&, const State&) = default;
};

/// A transplantation is admissible iff the two vertices joined by the site
/// carry equal signs.
bool is_admissible(const State& state, MoveSite site);

/// Rotates at `site` and flips the signs of both participants; every other
/// vertex keeps its sign. Throws InvalidMove when the site is not admissible.
State apply_admissible(const State& state, MoveSite site);

/// Number of admissible sites of a state.
int admissible_degree(const State& state);

struct AdmissiblePath {
    std::vector<MoveSite> moves;
    std::vector<State> states;  // states.front() is the start, one more than moves

    const State& start() const { return states.front(); }
    const State& finish() const { return states.back(); }
    std::size_t length() const noexcept { return moves.size(); }
};

/// Applies `moves` from `start`, throwing InvalidMove on the first
/// inadmissible step.
AdmissiblePath replay(const State& start, const std::vector<MoveSite>& moves);

/// Re-checks every step: admissible, consistent with the recorded states,
/// and leaf vector and root colour unchanged throughout.
bool is_valid(const AdmissiblePath& path);

/// Shortest admissible path from `start` to any state whose tree is
/// `target`, by BFS over states with sites tried in ascending order.
std::optional<AdmissiblePath> admissible_path(const State& start, const Tree& target);

/// Shortest admissible path from some colouring of `left` (root K) to
/// `right`. The start sign vector is the smallest one that can reach `right`.
std::optional<AdmissiblePath> find_admissible_path(const Tree& left, const Tree& right);

nlohmann::ordered_json to_json(const State& state);
/// {start:{tree,signs,root}, moves:[...], states:[...]}
nlohmann::ordered_json to_json(const AdmissiblePath& path);

}  // namespace fct
