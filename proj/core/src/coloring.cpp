#include "fct/coloring.hpp"

#include <stdexcept>
#include <string>

namespace fct {

namespace {

void check_signs(const Tree& tree, const Signs& signs) {
    if (signs.size() != tree.internal_count()) {
        throw std::invalid_argument("sign vector has " + std::to_string(signs.size()) + " entries, tree has " +
                                    std::to_string(tree.internal_count()) + " internal vertices");
    }
}

}  // namespace

std::vector<Color> edge_colors(const Tree& tree, const Coloring& coloring) {
    check_signs(tree, coloring.signs);
    const auto nodes = tree.nodes();
    std::vector<Color> out(nodes.size(), coloring.root);
    // Preorder: a parent's colour is fixed before its children are visited.
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        const Node& node = nodes[id];
        if (node.is_leaf()) {
            continue;
        }
        const Sign sign = coloring.signs[tree.internal_index(static_cast<int>(id))];
        const ChildColors children = child_colors(out[id], sign);
        out[static_cast<std::size_t>(node.left)] = children.left;
        out[static_cast<std::size_t>(node.right)] = children.right;
    }
    return out;
}

LeafVector leaf_vector(const Tree& tree, const Coloring& coloring) {
    const std::vector<Color> edges = edge_colors(tree, coloring);
    LeafVector out(static_cast<std::size_t>(tree.leaf_count()));
    const auto nodes = tree.nodes();
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        if (nodes[id].is_leaf()) {
            out[static_cast<std::size_t>(nodes[id].label - 1)] = edges[id];
        }
    }
    return out;
}

bool is_proper(const Tree& tree, std::span<const Color> edges) {
    if (static_cast<int>(edges.size()) != tree.node_count()) {
        throw std::invalid_argument("edge colouring size does not match the tree");
    }
    for (int id : tree.internal_nodes()) {
        const Node& node = tree.node(id);
        const Color p = edges[static_cast<std::size_t>(id)];
        const Color l = edges[static_cast<std::size_t>(node.left)];
        const Color r = edges[static_cast<std::size_t>(node.right)];
        if (p == l || p == r || l == r) {
            return false;
        }
    }
    return true;
}

Coloring coloring_from_edges(const Tree& tree, std::span<const Color> edges) {
    if (!is_proper(tree, edges)) {
        throw std::invalid_argument("edge colouring is not proper");
    }
    Coloring out{edges.front(), Signs(tree.internal_count())};
    for (int k = 0; k < tree.internal_count(); ++k) {
        const int id = tree.internal_node(k);
        const Node& node = tree.node(id);
        out.signs.set(k, *vertex_sign(edges[static_cast<std::size_t>(node.left)],
                                      edges[static_cast<std::size_t>(node.right)], edges[static_cast<std::size_t>(id)]));
    }
    return out;
}

std::vector<Coloring> colorings_matching(const Tree& tree, std::span<const Color> leaves, std::optional<Color> root) {
    if (static_cast<int>(leaves.size()) != tree.leaf_count()) {
        throw std::invalid_argument("leaf vector length does not match the tree");
    }
    const auto nodes = tree.nodes();
    std::vector<Klein> value(nodes.size());
    for (std::size_t k = nodes.size(); k-- > 0;) {
        const Node& node = nodes[k];
        if (node.is_leaf()) {
            value[k] = to_klein(leaves[static_cast<std::size_t>(node.label - 1)]);
            continue;
        }
        value[k] = klein_mul(value[static_cast<std::size_t>(node.left)], value[static_cast<std::size_t>(node.right)]);
        if (value[k] == Klein::E) {
            return {};
        }
    }
    std::vector<Color> edges(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        edges[k] = *to_color(value[k]);
    }
    if (root && *root != edges.front()) {
        return {};
    }
    return {coloring_from_edges(tree, edges)};
}

std::vector<Coloring> all_colorings(const Tree& tree) {
    const int m = tree.internal_count();
    std::vector<Coloring> out;
    out.reserve(3U << m);
    for (Color root : kColors) {
        for (std::uint32_t v = 0; v < (1U << m); ++v) {
            out.push_back(Coloring{root, Signs(m, v)});
        }
    }
    return out;
}

std::vector<int> vertex_depths(const Tree& tree) {
    std::vector<int> depth(static_cast<std::size_t>(tree.internal_count()), 0);
    for (int k = 1; k < tree.internal_count(); ++k) {
        const int parent = tree.node(tree.internal_node(k)).parent;
        depth[static_cast<std::size_t>(k)] = depth[static_cast<std::size_t>(tree.internal_index(parent))] + 1;
    }
    return depth;
}

Coloring frozen_coloring(const Tree& tree) {
    if (tree.leaf_count() < 2) {
        throw std::invalid_argument("frozen_coloring needs at least two leaves");
    }
    Coloring out{Color::K, Signs(tree.internal_count())};
    const std::vector<int> depth = vertex_depths(tree);
    for (int k = 0; k < tree.internal_count(); ++k) {
        out.signs.set(k, depth[static_cast<std::size_t>(k)] % 2 == 0 ? Sign::Plus : Sign::Minus);
    }
    return out;
}

std::vector<LeafVector> sharp_solutions(const Tree& left, const Tree& right) {
    if (left.leaf_count() != right.leaf_count()) {
        throw std::invalid_argument("sharp_solutions: trees have different leaf counts");
    }
    const int n = left.leaf_count();
    std::vector<LeafVector> out;
    const std::uint64_t total = power_of_three(n);
    for (std::uint64_t code = 0; code < total; ++code) {
        LeafVector x = leaf_vector_at(n, code);
        const SignedVec l = evaluate_cross(left, x);
        if (l.is_zero()) {
            continue;
        }
        if (evaluate_cross(right, x) == l) {
            out.push_back(std::move(x));
        }
    }
    return out;
}

}  // namespace fct
