#include "fct/gamma.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fct/catalan.hpp"
#include "fct/error.hpp"

namespace fct {

std::size_t RotationGraph::edge_count() const {
    std::size_t degree_sum = 0;
    for (const auto& around : adjacency) {
        degree_sum += around.size();
    }
    return degree_sum / 2;
}

bool RotationGraph::is_regular(std::size_t degree) const {
    return std::all_of(adjacency.begin(), adjacency.end(),
                       [degree](const auto& around) { return around.size() == degree; });
}

bool RotationGraph::is_connected() const {
    if (adjacency.empty()) {
        return true;
    }
    const std::vector<int> dist = bfs_distances(*this, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

RotationGraph build_gamma(int n) {
    if (n < 1) {
        throw std::invalid_argument("build_gamma: n must be at least 1");
    }
    if (n > kGammaCap) {
        throw CapExceeded("build_gamma", n, kGammaCap);
    }
    RotationGraph graph;
    graph.n = n;
    const std::uint64_t count = tree_count(n);
    graph.adjacency.resize(count);
    for (std::uint64_t r = 0; r < count; ++r) {
        const Tree tree = unrank(n, r);
        auto& around = graph.adjacency[r];
        for (const MoveSite site : sites(tree)) {
            around.push_back(static_cast<std::uint32_t>(rank(apply_move(tree, site))));
        }
    }
    return graph;
}

std::vector<int> bfs_distances(const RotationGraph& graph, std::uint32_t source) {
    std::vector<int> dist(graph.vertex_count(), -1);
    std::deque<std::uint32_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const std::uint32_t v = queue.front();
        queue.pop_front();
        for (const std::uint32_t w : graph.adjacency[v]) {
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int rotation_distance(const Tree& left, const Tree& right) {
    if (left.leaf_count() != right.leaf_count()) {
        throw std::invalid_argument("rotation_distance: trees have different leaf counts");
    }
    if (left == right) {
        return 0;
    }
    // Plain BFS over trees; Gamma is never materialised here.
    const int n = left.leaf_count();
    if (n > kGammaCap) {
        throw CapExceeded("rotation_distance", n, kGammaCap);
    }
    const std::uint64_t target = rank(right);
    std::vector<int> dist(tree_count(n), -1);
    std::deque<std::pair<Tree, std::uint64_t>> queue;
    const std::uint64_t start = rank(left);
    dist[start] = 0;
    queue.emplace_back(left, start);
    while (!queue.empty()) {
        auto [tree, r] = std::move(queue.front());
        queue.pop_front();
        for (const MoveSite site : sites(tree)) {
            Tree next = apply_move(tree, site);
            const std::uint64_t nr = rank(next);
            if (dist[nr] >= 0) {
                continue;
            }
            dist[nr] = dist[r] + 1;
            if (nr == target) {
                return dist[nr];
            }
            queue.emplace_back(std::move(next), nr);
        }
    }
    throw std::logic_error("rotation graph is disconnected");
}

GirthReport girth_report(int n) {
    if (n < 4) {
        throw std::invalid_argument("girth_report: n must be at least 4 (smaller graphs are acyclic)");
    }
    if (n > kGirthCap) {
        throw CapExceeded("girth_report", n, kGirthCap);
    }
    const RotationGraph graph = build_gamma(n);
    GirthReport report;
    report.n = n;

    // Shortest cycle through each vertex via BFS with parent tracking.
    int girth = std::numeric_limits<int>::max();
    const auto count = static_cast<std::uint32_t>(graph.vertex_count());
    for (std::uint32_t s = 0; s < count; ++s) {
        std::vector<int> dist(count, -1);
        std::vector<std::int64_t> parent(count, -1);
        std::deque<std::uint32_t> queue{s};
        dist[s] = 0;
        while (!queue.empty()) {
            const std::uint32_t v = queue.front();
            queue.pop_front();
            for (const std::uint32_t w : graph.adjacency[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if (parent[v] != static_cast<std::int64_t>(w)) {
                    girth = std::min(girth, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    report.girth = girth == std::numeric_limits<int>::max() ? 0 : girth;

    // Simple cycles of length 3..5, each counted once: rooted at its smallest
    // vertex, and the two traversal directions identified.
    std::uint64_t closed[6] = {};
    std::vector<bool> on_path(count, false);
    auto extend = [&](auto&& self, std::uint32_t root, std::uint32_t v, int length) -> void {
        for (const std::uint32_t w : graph.adjacency[v]) {
            if (w == root && length >= 3) {
                ++closed[length];
                continue;
            }
            if (w <= root || on_path[w] || length == 5) {
                continue;
            }
            on_path[w] = true;
            self(self, root, w, length + 1);
            on_path[w] = false;
        }
    };
    for (std::uint32_t root = 0; root < count; ++root) {
        on_path[root] = true;
        extend(extend, root, root, 1);
        on_path[root] = false;
    }
    report.triangles = closed[3] / 2;
    report.quadrilaterals = closed[4] / 2;
    report.pentagons = closed[5] / 2;
    return report;
}

std::string to_dot(const RotationGraph& graph) {
    std::ostringstream out;
    out << "graph gamma_" << graph.n << " {\n";
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        out << "  t" << v << " [label=\"" << print_bracket(unrank(graph.n, v)) << "\"];\n";
    }
    for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
        for (const std::uint32_t w : graph.adjacency[v]) {
            if (v < w) {
                out << "  t" << v << " -- t" << w << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace fct
