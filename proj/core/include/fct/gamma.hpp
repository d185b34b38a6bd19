#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fct/tree.hpp"

namespace fct {

/// Structure-only queries on the rotation graph go up to this n.
inline constexpr int kGammaCap = 12;
/// Cycle enumeration in girth_report goes up to this n.
inline constexpr int kGirthCap = 9;

/// The rotation graph: one vertex per tree rank, one edge per transplantation.
/// adjacency[v][s - 1] is the neighbour reached through site s.
struct RotationGraph {
    int n = 0;
    std::vector<std::vector<std::uint32_t>> adjacency;

    std::size_t vertex_count() const noexcept { return adjacency.size(); }
    std::size_t edge_count() const;
    bool is_regular(std::size_t degree) const;
    bool is_connected() const;
};

RotationGraph build_gamma(int n);

/// BFS distances from one vertex; -1 for unreachable.
std::vector<int> bfs_distances(const RotationGraph& graph, std::uint32_t source);

/// Length of a shortest transplantation sequence between two trees.
int rotation_distance(const Tree& left, const Tree& right);

struct GirthReport {
    int n = 0;
    int girth = 0;  // 0 when acyclic
    std::uint64_t triangles = 0;
    std::uint64_t quadrilaterals = 0;
    std::uint64_t pentagons = 0;
};

GirthReport girth_report(int n);

/// Vertices labelled with bracket strings.
std::string to_dot(const RotationGraph& graph);

}  // namespace fct
