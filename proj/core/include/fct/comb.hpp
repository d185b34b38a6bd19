#pragma once

#include "fct/dynamics.hpp"
#include "fct/tree.hpp"

namespace fct {

/// Constructive admissible path to the left comb (...((x1 x2) x3)... xn).
///
/// Rotates at the current vertex's right internal edge until its right child
/// is a leaf, then descends into the left child. Signs are chosen lazily: a
/// participant that has not been coloured yet copies its partner's sign, or
/// both get '+' when neither is coloured. Vertices that never take part keep
/// '+'. The returned path is replayed and validated.
AdmissiblePath comb_path(const Tree& tree);

/// Same algorithm with left and right exchanged; ends at the right comb.
AdmissiblePath mirror_comb_path(const Tree& tree);

/// The fan whose diagonals all meet polygon vertex k (0 <= k <= n): the right
/// comb on x1..xk times the left comb on x(k+1)..xn. k = 0 is the left comb,
/// k = n the right comb.
Tree fan_tree(int leaves, int apex);

/// Admissible path to fan_tree(n, k), obtained by rotating the polygon so
/// that vertex k becomes vertex 0, running comb_path, and rotating back.
/// Throws std::invalid_argument for k outside 0..n.
AdmissiblePath block_comb_path(const Tree& tree, int apex);

}  // namespace fct
