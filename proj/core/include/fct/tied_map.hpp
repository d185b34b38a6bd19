#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fct/algebra.hpp"
#include "fct/tree.hpp"

namespace fct {

/// Undirected multigraph; parallel edges allowed, loops are not.
struct CubicGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    /// Throws std::invalid_argument unless every vertex has degree 3.
    void validate() const;
    bool is_connected() const;
    /// Edge ids of all bridges.
    std::vector<int> bridges() const;
    bool is_bridgeless() const { return bridges().empty(); }
};

enum class EdgeRole : std::uint8_t { Leaf, Root, Upper, Lower };

/// Upper edges belong to T(L), lower edges to T(R*). `index` is the variable
/// label for Leaf edges and the move-site index for Upper/Lower edges.
struct TiedEdge {
    int u = 0;
    int v = 0;
    EdgeRole role = EdgeRole::Leaf;
    int index = 0;
};

/// T(L) # T(R*): both trees' internal vertices, leaf edge i of L glued to leaf
/// edge i of R and the root edges glued together.
///
/// Vertex ids: internal vertex k of L is k, internal vertex k of R is
/// (n-1) + k. Half-edge 2e starts at edges[e].u, 2e+1 at edges[e].v.
/// `rotation[v]` lists the half-edges leaving v in clockwise order for the
/// drawing with L above (root up) and R below (root down, mirrored) and the
/// root edge routed around the right.
struct TiedMap {
    int leaves = 0;
    std::vector<TiedEdge> edges;
    std::vector<std::array<int, 3>> rotation;

    int vertex_count() const noexcept { return static_cast<int>(rotation.size()); }
    CubicGraph graph() const;
    /// Faces traced from the rotation system.
    int face_count() const;
};

TiedMap tie(const Tree& left, const Tree& right);

/// Edge id -> colour.
using TaitColoring = std::vector<Color>;

/// Tait colourings by most-constrained-first backtracking. Deterministic
/// order; stops after `limit` colourings when given. Throws for non-cubic
/// input.
std::vector<TaitColoring> tait_colorings(const CubicGraph& graph, std::optional<std::size_t> limit = std::nullopt);

bool is_tait_coloring(const CubicGraph& graph, const TaitColoring& coloring);

/// Leaf-edge colours of a Tait colouring of a tied map, by variable label.
LeafVector leaf_restriction(const TiedMap& map, const TaitColoring& coloring);

struct CorrespondenceReport {
    std::size_t tait_count = 0;
    std::size_t solution_count = 0;
    bool restriction_well_defined = true;  // every restriction is a sharp solution
    bool surjective = true;                // every sharp solution is hit
    std::size_t predicted_count = 0;       // sum over solutions of matching colouring products
    std::vector<std::pair<LeafVector, std::size_t>> witnesses;  // solution -> first Tait colouring index

    bool holds() const noexcept {
        return restriction_well_defined && surjective && predicted_count == tait_count;
    }
};

CorrespondenceReport coloring_correspondence(const Tree& left, const Tree& right);

struct SignViolation {
    std::uint64_t left_rank = 0;
    std::uint64_t right_rank = 0;
    LeafVector leaves;
};

struct SignTheoremReport {
    int n = 0;
    std::uint64_t checks = 0;      // ordered pairs x assignments
    std::uint64_t both_sharp = 0;  // checks where both evaluations are nonzero
    std::uint64_t violations = 0;
    std::vector<SignViolation> examples;  // first few violations
};

inline constexpr int kSignTheoremCap = 7;

/// Exhaustive check that L and R agree in sign whenever both are nonzero.
SignTheoremReport verify_sign_theorem(int n, int threads = 1);

nlohmann::ordered_json to_json(const TiedMap& map);
std::string to_dot(const TiedMap& map, const TaitColoring* coloring = nullptr);

}  // namespace fct
