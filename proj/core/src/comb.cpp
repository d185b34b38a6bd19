#include "fct/comb.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>

#include "fct/triangulation.hpp"

namespace fct {

namespace {

AdmissiblePath straighten(const Tree& tree, bool toward_left) {
    const int m = tree.internal_count();
    if (m == 0) {
        return replay(State(tree, Signs(0)), {});
    }
    Tree current = tree;
    // identity[k]: original internal index of the vertex now at index k
    std::vector<int> identity(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        identity[static_cast<std::size_t>(k)] = k;
    }
    std::vector<std::optional<Sign>> sign(static_cast<std::size_t>(m));
    std::vector<Sign> initial(static_cast<std::size_t>(m), Sign::Plus);
    std::vector<MoveSite> moves;

    auto colour = [&](int who, Sign s) {
        sign[static_cast<std::size_t>(who)] = s;
        initial[static_cast<std::size_t>(who)] = s;
    };

    int at = 0;
    while (true) {
        const Node& node = current.node(current.internal_node(at));
        const int outer = toward_left ? node.right : node.left;
        if (current.node(outer).is_leaf()) {
            const int inner = toward_left ? node.left : node.right;
            if (current.node(inner).is_leaf()) {
                break;
            }
            at = current.internal_index(inner);
            continue;
        }
        const int v = current.internal_index(outer);
        const int upper = identity[static_cast<std::size_t>(at)];
        const int lower = identity[static_cast<std::size_t>(v)];
        auto& su = sign[static_cast<std::size_t>(upper)];
        auto& sv = sign[static_cast<std::size_t>(lower)];
        if (!su && !sv) {
            colour(upper, Sign::Plus);
            colour(lower, Sign::Plus);
        } else if (!su) {
            colour(upper, *sv);
        } else if (!sv) {
            colour(lower, *su);
        } else if (*su != *sv) {
            throw std::logic_error("comb path reached a step with both participants already coloured differently");
        }
        moves.push_back(MoveSite{v});
        Rotation rotation = rotate(current, MoveSite{v});
        su = opposite(*su);
        sv = opposite(*sv);
        std::vector<int> moved(identity.size());
        for (int k = 0; k < m; ++k) {
            moved[static_cast<std::size_t>(rotation.vertex_map[static_cast<std::size_t>(k)])] =
                identity[static_cast<std::size_t>(k)];
        }
        identity = std::move(moved);
        at = rotation.upper;
        current = std::move(rotation.tree);
    }

    Signs start(m);
    for (int k = 0; k < m; ++k) {
        start.set(k, initial[static_cast<std::size_t>(k)]);
    }
    return replay(State(tree, start), moves);
}

Tree left_comb_over(int first, int last) {
    Tree out = Tree::leaf(first);
    for (int i = first + 1; i <= last; ++i) {
        out = Tree::join(out, Tree::leaf(i));
    }
    return out;
}

Tree right_comb_over(int first, int last) {
    Tree out = Tree::leaf(last);
    for (int i = last - 1; i >= first; --i) {
        out = Tree::join(Tree::leaf(i), out);
    }
    return out;
}

std::array<int, 3> shifted_triangle(std::array<int, 3> t, int shift, int vertices) {
    for (int& p : t) {
        p = ((p + shift) % vertices + vertices) % vertices;
    }
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

AdmissiblePath comb_path(const Tree& tree) { return straighten(tree, true); }

AdmissiblePath mirror_comb_path(const Tree& tree) { return straighten(tree, false); }

Tree fan_tree(int leaves, int apex) {
    if (leaves < 1) {
        throw std::invalid_argument("fan_tree: need at least one leaf");
    }
    if (apex < 0 || apex > leaves) {
        throw std::invalid_argument("fan_tree: apex must be in 0.." + std::to_string(leaves));
    }
    if (apex == 0) {
        return left_comb_over(1, leaves);
    }
    if (apex == leaves) {
        return right_comb_over(1, leaves);
    }
    return Tree::join(right_comb_over(1, apex), left_comb_over(apex + 1, leaves));
}

AdmissiblePath block_comb_path(const Tree& tree, int apex) {
    const int n = tree.leaf_count();
    if (apex < 0 || apex > n) {
        throw std::invalid_argument("block_comb_path: apex must be in 0.." + std::to_string(n));
    }
    const int vertices = n + 1;
    const Tree turned = reroot(tree, -apex);
    const AdmissiblePath inner = comb_path(turned);

    std::map<std::array<int, 3>, int> turned_index;
    for (int k = 0; k < turned.internal_count(); ++k) {
        turned_index.emplace(triangle(turned, k), k);
    }
    Signs start(tree.internal_count());
    for (int k = 0; k < tree.internal_count(); ++k) {
        const int j = turned_index.at(shifted_triangle(triangle(tree, k), -apex, vertices));
        start.set(k, inner.start().signs[j]);
    }

    std::vector<MoveSite> moves;
    Tree current = tree;
    for (std::size_t i = 0; i < inner.moves.size(); ++i) {
        const Diagonal d = site_diagonal(inner.states[i].tree, inner.moves[i]);
        const int p = (d.a + apex) % vertices;
        const int q = (d.b + apex) % vertices;
        const auto site = site_of(current, Diagonal{std::min(p, q), std::max(p, q)});
        if (!site) {
            throw std::logic_error("block_comb_path: rotated diagonal not present");
        }
        moves.push_back(*site);
        current = apply_move(current, *site);
    }
    return replay(State(tree, start), moves);
}

}  // namespace fct
