#include "fct/triangulation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "fct/error.hpp"

namespace fct {

bool crosses(Diagonal x, Diagonal y) {
    return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

Diagonal chord(const Tree& tree, int node_id) {
    const Node& node = tree.node(node_id);
    return Diagonal{node.first - 1, node.last};
}

std::array<int, 3> triangle(const Tree& tree, int internal_index) {
    const Node& node = tree.node(tree.internal_node(internal_index));
    return {node.first - 1, tree.node(node.left).last, node.last};
}

Triangulation to_triangulation(const Tree& tree) {
    Triangulation out{tree.leaf_count() + 1, {}};
    for (int k = 1; k < tree.internal_count(); ++k) {
        out.diagonals.push_back(chord(tree, tree.internal_node(k)));
    }
    std::sort(out.diagonals.begin(), out.diagonals.end());
    return out;
}

Tree from_triangulation(const Triangulation& triangulation) {
    const int n = triangulation.sides - 1;
    if (n < 1) {
        throw std::invalid_argument("triangulation needs at least two sides");
    }
    if (n > kMaxLeaves) {
        throw CapExceeded("from_triangulation", n, kMaxLeaves);
    }
    if (static_cast<int>(triangulation.diagonals.size()) != std::max(n - 2, 0)) {
        throw std::invalid_argument("triangulation of a " + std::to_string(n + 1) + "-gon needs " +
                                    std::to_string(std::max(n - 2, 0)) + " diagonals");
    }
    std::set<Diagonal> chords;
    for (const Diagonal& d : triangulation.diagonals) {
        if (d.a < 0 || d.b > n || d.b - d.a < 2 || (d.a == 0 && d.b == n)) {
            throw std::invalid_argument("(" + std::to_string(d.a) + "," + std::to_string(d.b) +
                                        ") is not a diagonal");
        }
        if (!chords.insert(d).second) {
            throw std::invalid_argument("repeated diagonal");
        }
    }
    for (auto x = chords.begin(); x != chords.end(); ++x) {
        for (auto y = std::next(x); y != chords.end(); ++y) {
            if (crosses(*x, *y)) {
                throw std::invalid_argument("diagonals cross");
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        chords.insert(Diagonal{i - 1, i});
    }

    std::vector<int> left;
    std::vector<int> right;
    std::vector<int> labels;
    auto build = [&](auto&& self, int a, int b) -> int {
        if (b - a == 1) {
            left.push_back(-1);
            right.push_back(-1);
            labels.push_back(b);
            return static_cast<int>(left.size()) - 1;
        }
        for (int m = a + 1; m < b; ++m) {
            if (chords.contains(Diagonal{a, m}) && chords.contains(Diagonal{m, b})) {
                const int l = self(self, a, m);
                const int r = self(self, m, b);
                left.push_back(l);
                right.push_back(r);
                labels.push_back(0);
                return static_cast<int>(left.size()) - 1;
            }
        }
        throw std::invalid_argument("diagonals do not triangulate the polygon");
    };
    const int root = build(build, 0, n);
    return Tree::from_links(root, left, right, labels);
}

Triangulation flip(const Triangulation& triangulation, Diagonal diagonal) {
    const auto it = std::find(triangulation.diagonals.begin(), triangulation.diagonals.end(), diagonal);
    if (it == triangulation.diagonals.end()) {
        throw InvalidMove("diagonal is not present");
    }
    const int n = triangulation.sides - 1;
    std::set<Diagonal> chords(triangulation.diagonals.begin(), triangulation.diagonals.end());
    for (int i = 1; i <= n; ++i) {
        chords.insert(Diagonal{i - 1, i});
    }
    chords.insert(Diagonal{0, n});
    auto has = [&](int p, int q) { return chords.contains(Diagonal{std::min(p, q), std::max(p, q)}); };
    int inner = -1;
    int outer = -1;
    for (int m = 0; m <= n; ++m) {
        if (m == diagonal.a || m == diagonal.b || !has(m, diagonal.a) || !has(m, diagonal.b)) {
            continue;
        }
        if (m > diagonal.a && m < diagonal.b) {
            inner = m;
        } else {
            outer = m;
        }
    }
    if (inner < 0 || outer < 0) {
        throw std::invalid_argument("malformed triangulation");
    }
    Triangulation out = triangulation;
    out.diagonals.erase(out.diagonals.begin() + (it - triangulation.diagonals.begin()));
    out.diagonals.push_back(Diagonal{std::min(inner, outer), std::max(inner, outer)});
    std::sort(out.diagonals.begin(), out.diagonals.end());
    return out;
}

Diagonal site_diagonal(const Tree& tree, MoveSite site) {
    if (site.vertex < 1 || site.vertex >= tree.internal_count()) {
        throw InvalidMove("move site " + std::to_string(site.vertex) + " is not an internal edge");
    }
    return chord(tree, tree.internal_node(site.vertex));
}

std::optional<MoveSite> site_of(const Tree& tree, Diagonal diagonal) {
    for (int k = 1; k < tree.internal_count(); ++k) {
        if (chord(tree, tree.internal_node(k)) == diagonal) {
            return MoveSite{k};
        }
    }
    return std::nullopt;
}

Tree reroot(const Tree& tree, int shift) {
    const int vertices = tree.leaf_count() + 1;
    const int s = ((shift % vertices) + vertices) % vertices;
    Triangulation shifted = to_triangulation(tree);
    for (Diagonal& d : shifted.diagonals) {
        const int p = (d.a + s) % vertices;
        const int q = (d.b + s) % vertices;
        d = Diagonal{std::min(p, q), std::max(p, q)};
    }
    std::sort(shifted.diagonals.begin(), shifted.diagonals.end());
    return from_triangulation(shifted);
}

}  // namespace fct
