#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fct/tree.hpp"

namespace fct {

using BigInt = boost::multiprecision::cpp_int;

/// Largest n for which enumerate_trees materialises the full list.
inline constexpr int kEnumerationCap = 14;

/// Number of bracketings of n factors, (2n-2)! / ((n-1)! n!), exactly.
BigInt catalan_g(int n);

/// catalan_g(n) as a 64-bit count; valid for n <= kMaxLeaves.
std::uint64_t tree_count(int n);

/// Position of the tree's shape in the lexicographic order of balanced-
/// parenthesis codes ('(' < ')'). The left comb has rank 0.
std::uint64_t rank(const Tree& tree);

/// Inverse of rank for trees with `leaves` leaves, labelled 1..n.
Tree unrank(int leaves, std::uint64_t rank);

/// All shapes with n leaves in rank order. Throws CapExceeded above
/// kEnumerationCap.
std::vector<Tree> enumerate_trees(int n);

}  // namespace fct
