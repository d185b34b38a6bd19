#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fct/algebra.hpp"
#include "fct/tree.hpp"

namespace fct {

/// Proper edge 3-colouring of a tree in vertex-sign form: the root edge colour
/// plus one sign per internal vertex (preorder indexed). Every Coloring
/// determines exactly one proper edge colouring and vice versa.
struct Coloring {
    Color root = Color::K;
    Signs signs;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Colour of the edge above each node, indexed by node id; node 0's entry is
/// the root edge.
std::vector<Color> edge_colors(const Tree& tree, const Coloring& coloring);

/// Restriction of edge_colors to the leaves, indexed by variable label - 1.
LeafVector leaf_vector(const Tree& tree, const Coloring& coloring);

/// True when the three edges at every internal vertex carry distinct colours.
bool is_proper(const Tree& tree, std::span<const Color> edges);

/// Reads the Coloring back from a proper edge colouring.
Coloring coloring_from_edges(const Tree& tree, std::span<const Color> edges);

/// All Colorings with the given leaf vector (and root colour when given).
/// At most one exists; the result is empty iff the leaves are not sharp for
/// the tree or the root does not match.
std::vector<Coloring> colorings_matching(const Tree& tree, std::span<const Color> leaves,
                                         std::optional<Color> root = std::nullopt);

/// All 3 * 2^(n-1) Colorings, root I < J < K then signs in numeric order.
std::vector<Coloring> all_colorings(const Tree& tree);

/// Alternating signs by depth with the root vertex '+' and root edge K.
Coloring frozen_coloring(const Tree& tree);

/// Depth of each internal vertex, preorder indexed; the root has depth 0.
std::vector<int> vertex_depths(const Tree& tree);

/// Leaf vectors x (lexicographic, I < J < K) with both cross evaluations
/// nonzero and equal.
std::vector<LeafVector> sharp_solutions(const Tree& left, const Tree& right);

}  // namespace fct
