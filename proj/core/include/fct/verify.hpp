#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fct/algebra.hpp"
#include "fct/dynamics.hpp"
#include "fct/triangulation.hpp"
#include "fct/tree.hpp"

namespace fct {

struct TreePair {
    std::uint64_t left = 0;  // ranks
    std::uint64_t right = 0;
};

/// For every ordered pair (L, R): does some colouring of L reach R by
/// admissible transplantations? Answered from the connected components of
/// the state graph.
struct ConjectureReport {
    int n = 0;
    std::uint64_t trees = 0;
    std::uint64_t states = 0;
    std::uint64_t components = 0;
    std::uint64_t isolated_states = 0;
    std::uint64_t pairs = 0;
    std::uint64_t satisfied = 0;
    std::vector<TreePair> counterexamples;  // ordered by (left, right)

    bool all_satisfied() const noexcept { return satisfied == pairs; }
};

ConjectureReport verify_conjecture(int n, int threads = 1);

/// Pairwise comparison of the shortest admissible path (over all start
/// colourings) with the rotation distance.
struct GeodesicReport {
    int n = 0;
    std::uint64_t pairs = 0;
    std::uint64_t geodesic_pairs = 0;  // some admissible path has length = rotation distance
    std::uint64_t unreachable_pairs = 0;
    struct Excess {
        TreePair pair;
        int rotation_distance = 0;
        int admissible_distance = 0;
    };
    std::vector<Excess> excess;  // pairs whose shortest admissible path is longer
};

inline constexpr int kGeodesicCap = 7;

GeodesicReport geodesic_admissibility_report(int n);

/// Frozen colourings at one n: how many trees have an admissible move under
/// their frozen colouring (expected none).
struct FrozenReport {
    int n = 0;
    std::uint64_t trees = 0;
    std::uint64_t trees_with_moves = 0;
};

FrozenReport verify_frozen(int n);

/// Two distinct trees whose frozen colourings give the same leaf vector.
struct FrozenWitness {
    int n = 0;
    Tree left;
    Tree right;
    LeafVector leaves;
};

inline constexpr int kWitnessCap = 24;

/// Smallest n <= max_n with such a pair; trees are scanned in rank order
/// and the first collision is returned.
std::optional<FrozenWitness> frozen_witness_search(int max_n);

/// Brute-force check of the equal-signs rule. For every tree, sign vector
/// (root K) and site: the rule's verdict is compared with whether the rotated
/// tree has a proper colouring with the same leaf and root colours, found by
/// enumerating its internal edge colours. Admissible moves are also checked
/// to flip exactly the two participating signs.
struct AdmissibilityReport {
    int n = 0;
    std::uint64_t checks = 0;
    std::uint64_t admissible = 0;
    std::uint64_t rule_mismatches = 0;
    std::uint64_t sign_mismatches = 0;
    struct Mismatch {
        State state;
        MoveSite site;
    };
    std::vector<Mismatch> examples;  // first few

    bool passed() const noexcept { return rule_mismatches == 0 && sign_mismatches == 0; }
};

inline constexpr int kAdmissibilityOracleCap = 7;

AdmissibilityReport verify_admissibility_rule(int n);

/// Per tree, proper edge colourings found by trying all 3^(2n-1) assignments
/// against the image of (root colour, signs) propagation.
struct ColoringBijectionReport {
    int n = 0;
    std::uint64_t trees = 0;
    std::uint64_t expected_per_tree = 0;  // 3 * 2^(n-1)
    std::uint64_t mismatched_trees = 0;
    std::vector<std::uint64_t> mismatches;  // ranks

    bool passed() const noexcept { return mismatched_trees == 0; }
};

inline constexpr int kColoringBruteForceCap = 6;

ColoringBijectionReport verify_coloring_bijection(int n);

/// Random admissible walks from random (tree, signs, root) starts. Each step
/// picks uniformly among admissible sites; leaves, root and reversibility are
/// checked at every step. Deterministic for a given seed.
struct WalkReport {
    int n = 0;
    std::uint64_t walks = 0;
    std::uint64_t steps = 0;
    std::uint64_t stuck = 0;  // walks that hit a state with no admissible move
    std::uint64_t violations = 0;
};

inline constexpr int kWalkCap = kMaxLeaves - 1;

WalkReport random_walk_check(int n, std::uint64_t walks, int steps, std::uint64_t seed);

/// A sub-polygon cut out by the diagonals two triangulations share.
struct Region {
    std::vector<int> vertices;  // polygon vertices, ascending; front-back is the region's root side
    Tree left;                  // restriction of each tree, variables renumbered 1..k
    Tree right;
};

struct FactorizedPath {
    std::vector<Diagonal> shared;
    std::vector<Region> regions;
    AdmissiblePath path;
};

/// Shared diagonals of two trees' triangulations (sorted).
std::vector<Diagonal> shared_diagonals(const Tree& left, const Tree& right);

/// Splits the problem along the shared diagonals, solves each region with
/// find_admissible_path, and concatenates the moves. Empty if some region has
/// no admissible path.
std::optional<FactorizedPath> factorized_path(const Tree& left, const Tree& right);

/// Regions of the factorization, root region first, then in preorder.
std::vector<Region> factor_regions(const Tree& left, const Tree& right);

}  // namespace fct
