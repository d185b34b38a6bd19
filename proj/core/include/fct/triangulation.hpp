#pragma once

#include <array>
#include <compare>
#include <optional>
#include <vector>

#include "fct/tree.hpp"

namespace fct {

/// Chord between polygon vertices a < b.
struct Diagonal {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

/// Triangulated (n+1)-gon with vertices 0..n. Side i (1 <= i <= n) joins
/// vertices i-1 and i and carries x_i; side 0 joins 0 and n and is the root.
struct Triangulation {
    int sides = 0;
    std::vector<Diagonal> diagonals;  // sorted

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

/// Polygon chord of a tree node: the node covering leaves i..j maps to
/// (i-1, j). Leaves map to sides, the root to side 0.
Diagonal chord(const Tree& tree, int node_id);

/// Triangle (a, m, b), a < m < b, of an internal vertex given by preorder index.
std::array<int, 3> triangle(const Tree& tree, int internal_index);

Triangulation to_triangulation(const Tree& tree);

/// Throws std::invalid_argument unless the diagonals are n-2 distinct,
/// pairwise non-crossing chords of the polygon.
Tree from_triangulation(const Triangulation& triangulation);

/// Replaces `diagonal` by the other diagonal of its quadrilateral.
Triangulation flip(const Triangulation& triangulation, Diagonal diagonal);

Diagonal site_diagonal(const Tree& tree, MoveSite site);
std::optional<MoveSite> site_of(const Tree& tree, Diagonal diagonal);

/// Relabels polygon vertices p -> p + shift (mod n+1) and reads the tree back
/// with side 0 as root again. Triangles keep their cyclic orientation.
Tree reroot(const Tree& tree, int shift);

bool crosses(Diagonal x, Diagonal y);

}  // namespace fct
