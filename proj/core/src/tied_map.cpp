#include "fct/tied_map.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fct/catalan.hpp"
#include "fct/coloring.hpp"
#include "fct/error.hpp"
#include "fct/parallel.hpp"

namespace fct {

void CubicGraph::validate() const {
    std::vector<int> degree(static_cast<std::size_t>(vertex_count), 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("loops are not supported");
        }
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    for (std::size_t v = 0; v < degree.size(); ++v) {
        if (degree[v] != 3) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]) +
                                        ", expected 3");
        }
    }
}

namespace {

// incidence[v] = list of (edge id, other endpoint)
std::vector<std::vector<std::pair<int, int>>> incidence(const CubicGraph& graph) {
    std::vector<std::vector<std::pair<int, int>>> out(static_cast<std::size_t>(graph.vertex_count));
    for (std::size_t e = 0; e < graph.edges.size(); ++e) {
        const auto [u, v] = graph.edges[e];
        out[static_cast<std::size_t>(u)].emplace_back(static_cast<int>(e), v);
        out[static_cast<std::size_t>(v)].emplace_back(static_cast<int>(e), u);
    }
    return out;
}

}  // namespace

bool CubicGraph::is_connected() const {
    if (vertex_count == 0) {
        return true;
    }
    const auto adj = incidence(*this);
    std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& [e, w] : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count;
}

std::vector<int> CubicGraph::bridges() const {
    const auto adj = incidence(*this);
    const auto count = static_cast<std::size_t>(vertex_count);
    std::vector<int> order(count, -1);
    std::vector<int> low(count, 0);
    std::vector<int> out;
    int clock = 0;
    // Skips only the tree edge itself, so parallel edges are never bridges.
    auto dfs = [&](auto&& self, int v, int via) -> void {
        order[static_cast<std::size_t>(v)] = low[static_cast<std::size_t>(v)] = clock++;
        for (const auto& [e, w] : adj[static_cast<std::size_t>(v)]) {
            if (e == via) {
                continue;
            }
            if (order[static_cast<std::size_t>(w)] < 0) {
                self(self, w, e);
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                if (low[static_cast<std::size_t>(w)] > order[static_cast<std::size_t>(v)]) {
                    out.push_back(e);
                }
            } else {
                low[static_cast<std::size_t>(v)] = std::min(low[static_cast<std::size_t>(v)], order[static_cast<std::size_t>(w)]);
            }
        }
    };
    for (int v = 0; v < vertex_count; ++v) {
        if (order[static_cast<std::size_t>(v)] < 0) {
            dfs(dfs, v, -1);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

CubicGraph TiedMap::graph() const {
    CubicGraph out{vertex_count(), {}};
    out.edges.reserve(edges.size());
    for (const TiedEdge& e : edges) {
        out.edges.emplace_back(e.u, e.v);
    }
    return out;
}

int TiedMap::face_count() const {
    const std::size_t half_edges = 2 * edges.size();
    // position of each half-edge in its vertex rotation
    std::vector<std::pair<int, int>> slot(half_edges, {-1, -1});
    for (std::size_t v = 0; v < rotation.size(); ++v) {
        for (int k = 0; k < 3; ++k) {
            slot[static_cast<std::size_t>(rotation[v][static_cast<std::size_t>(k)])] = {static_cast<int>(v), k};
        }
    }
    std::vector<bool> used(half_edges, false);
    int faces = 0;
    for (std::size_t start = 0; start < half_edges; ++start) {
        if (used[start]) {
            continue;
        }
        ++faces;
        std::size_t h = start;
        while (!used[h]) {
            used[h] = true;
            const std::size_t twin = h ^ 1U;
            const auto [v, k] = slot[twin];
            h = static_cast<std::size_t>(rotation[static_cast<std::size_t>(v)][static_cast<std::size_t>((k + 1) % 3)]);
        }
    }
    return faces;
}

TiedMap tie(const Tree& left, const Tree& right) {
    const int n = left.leaf_count();
    if (right.leaf_count() != n) {
        throw std::invalid_argument("tie: trees have different leaf counts");
    }
    if (n < 2) {
        throw std::invalid_argument("tie: need at least two leaves");
    }
    TiedMap map;
    map.leaves = n;
    const int offset = n - 1;
    map.rotation.assign(static_cast<std::size_t>(2 * offset), {-1, -1, -1});

    // Half-edge of edge e leaving `vertex`.
    auto half = [&](int e, int vertex) { return map.edges[static_cast<std::size_t>(e)].u == vertex ? 2 * e : 2 * e + 1; };

    auto add_edge = [&](int u, int v, EdgeRole role, int index) {
        map.edges.push_back(TiedEdge{u, v, role, index});
        return static_cast<int>(map.edges.size()) - 1;
    };

    // Edge above each node of each tree.
    std::vector<int> above_left(static_cast<std::size_t>(left.node_count()), -1);
    std::vector<int> above_right(static_cast<std::size_t>(right.node_count()), -1);

    const int root_edge = add_edge(0, offset, EdgeRole::Root, 0);
    above_left[0] = root_edge;
    above_right[0] = root_edge;
    for (int k = 1; k < left.internal_count(); ++k) {
        const int id = left.internal_node(k);
        above_left[static_cast<std::size_t>(id)] =
            add_edge(left.internal_index(left.node(id).parent), k, EdgeRole::Upper, k);
    }
    for (int k = 1; k < right.internal_count(); ++k) {
        const int id = right.internal_node(k);
        above_right[static_cast<std::size_t>(id)] =
            add_edge(offset + right.internal_index(right.node(id).parent), offset + k, EdgeRole::Lower, k);
    }
    std::map<int, int> left_leaf_parent;
    std::map<int, int> right_leaf_parent;
    for (int id : left.leaf_nodes()) {
        left_leaf_parent[left.node(id).label] = id;
    }
    for (int id : right.leaf_nodes()) {
        right_leaf_parent[right.node(id).label] = id;
    }
    for (int label = 1; label <= n; ++label) {
        const int lid = left_leaf_parent.at(label);
        const int rid = right_leaf_parent.at(label);
        const int e = add_edge(left.internal_index(left.node(lid).parent),
                               offset + right.internal_index(right.node(rid).parent), EdgeRole::Leaf, label);
        above_left[static_cast<std::size_t>(lid)] = e;
        above_right[static_cast<std::size_t>(rid)] = e;
    }

    // L is drawn root up: clockwise (parent, right, left). R is drawn root
    // down with leaves up in the same left-to-right order: clockwise
    // (parent, left, right).
    for (int k = 0; k < left.internal_count(); ++k) {
        const int id = left.internal_node(k);
        const Node& node = left.node(id);
        map.rotation[static_cast<std::size_t>(k)] = {half(above_left[static_cast<std::size_t>(id)], k),
                                                     half(above_left[static_cast<std::size_t>(node.right)], k),
                                                     half(above_left[static_cast<std::size_t>(node.left)], k)};
    }
    for (int k = 0; k < right.internal_count(); ++k) {
        const int id = right.internal_node(k);
        const Node& node = right.node(id);
        const int v = offset + k;
        map.rotation[static_cast<std::size_t>(v)] = {half(above_right[static_cast<std::size_t>(id)], v),
                                                     half(above_right[static_cast<std::size_t>(node.left)], v),
                                                     half(above_right[static_cast<std::size_t>(node.right)], v)};
    }
    return map;
}

std::vector<TaitColoring> tait_colorings(const CubicGraph& graph, std::optional<std::size_t> limit) {
    graph.validate();
    const auto adj = incidence(graph);
    const std::size_t edge_count = graph.edges.size();
    std::vector<std::uint8_t> color(edge_count, 0);  // 0 = unset, else Color value
    std::vector<TaitColoring> out;

    // Colours still free for edge e given its coloured neighbours.
    auto available = [&](std::size_t e) {
        unsigned mask = 0b1110;
        const auto [u, v] = graph.edges[e];
        for (int end : {u, v}) {
            for (const auto& [f, w] : adj[static_cast<std::size_t>(end)]) {
                if (static_cast<std::size_t>(f) != e && color[static_cast<std::size_t>(f)] != 0) {
                    mask &= ~(1U << color[static_cast<std::size_t>(f)]);
                }
            }
        }
        return mask;
    };

    auto search = [&](auto&& self, std::size_t assigned) -> bool {
        if (limit && out.size() >= *limit) {
            return true;
        }
        if (assigned == edge_count) {
            TaitColoring c(edge_count);
            for (std::size_t e = 0; e < edge_count; ++e) {
                c[e] = static_cast<Color>(color[e]);
            }
            out.push_back(std::move(c));
            return limit && out.size() >= *limit;
        }
        std::size_t best = edge_count;
        unsigned best_mask = 0;
        int best_free = 4;
        for (std::size_t e = 0; e < edge_count; ++e) {
            if (color[e] != 0) {
                continue;
            }
            const unsigned mask = available(e);
            const int free = __builtin_popcount(mask);
            if (free < best_free) {
                best = e;
                best_mask = mask;
                best_free = free;
                if (free == 0) {
                    break;
                }
            }
        }
        if (best_free == 0) {
            return false;
        }
        for (std::uint8_t c = 1; c <= 3; ++c) {
            if ((best_mask & (1U << c)) == 0) {
                continue;
            }
            color[best] = c;
            const bool stop = self(self, assigned + 1);
            color[best] = 0;
            if (stop) {
                return true;
            }
        }
        return false;
    };
    search(search, 0);
    return out;
}

bool is_tait_coloring(const CubicGraph& graph, const TaitColoring& coloring) {
    if (coloring.size() != graph.edges.size()) {
        return false;
    }
    const auto adj = incidence(graph);
    for (const auto& around : adj) {
        unsigned seen = 0;
        for (const auto& [e, w] : around) {
            seen |= 1U << static_cast<unsigned>(coloring[static_cast<std::size_t>(e)]);
        }
        if (seen != 0b1110) {
            return false;
        }
    }
    return true;
}

LeafVector leaf_restriction(const TiedMap& map, const TaitColoring& coloring) {
    LeafVector out(static_cast<std::size_t>(map.leaves), Color::I);
    for (std::size_t e = 0; e < map.edges.size(); ++e) {
        if (map.edges[e].role == EdgeRole::Leaf) {
            out[static_cast<std::size_t>(map.edges[e].index - 1)] = coloring[e];
        }
    }
    return out;
}

CorrespondenceReport coloring_correspondence(const Tree& left, const Tree& right) {
    const TiedMap map = tie(left, right);
    const std::vector<TaitColoring> colorings = tait_colorings(map.graph());
    const std::vector<LeafVector> solutions = sharp_solutions(left, right);

    CorrespondenceReport report;
    report.tait_count = colorings.size();
    report.solution_count = solutions.size();
    std::map<LeafVector, std::size_t> first_hit;
    for (std::size_t i = 0; i < colorings.size(); ++i) {
        LeafVector x = leaf_restriction(map, colorings[i]);
        if (!std::binary_search(solutions.begin(), solutions.end(), x)) {
            report.restriction_well_defined = false;
        }
        first_hit.emplace(std::move(x), i);
    }
    for (const LeafVector& x : solutions) {
        const auto hit = first_hit.find(x);
        if (hit == first_hit.end()) {
            report.surjective = false;
        } else {
            report.witnesses.emplace_back(x, hit->second);
        }
        for (Color root : kColors) {
            report.predicted_count += colorings_matching(left, x, root).size() * colorings_matching(right, x, root).size();
        }
    }
    return report;
}

SignTheoremReport verify_sign_theorem(int n, int threads) {
    if (n < 1) {
        throw std::invalid_argument("verify_sign_theorem: n must be at least 1");
    }
    if (n > kSignTheoremCap) {
        throw CapExceeded("verify_sign_theorem", n, kSignTheoremCap);
    }
    const std::vector<Tree> trees = enumerate_trees(n);
    const std::uint64_t assignments = power_of_three(n);
    std::vector<std::vector<SignedVec>> values(trees.size(), std::vector<SignedVec>(assignments));
    for (std::uint64_t code = 0; code < assignments; ++code) {
        const LeafVector x = leaf_vector_at(n, code);
        for (std::size_t t = 0; t < trees.size(); ++t) {
            values[t][code] = evaluate_cross(trees[t], x);
        }
    }

    const std::size_t chunks = chunk_count(trees.size(), threads);
    std::vector<SignTheoremReport> partial(chunks);
    parallel_chunks(trees.size(), threads, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        SignTheoremReport& r = partial[chunk];
        for (std::size_t a = begin; a < end; ++a) {
            for (std::size_t b = 0; b < trees.size(); ++b) {
                for (std::uint64_t code = 0; code < assignments; ++code) {
                    ++r.checks;
                    const SignedVec& x = values[a][code];
                    const SignedVec& y = values[b][code];
                    if (x.is_zero() || y.is_zero()) {
                        continue;
                    }
                    ++r.both_sharp;
                    if (!(x == y)) {
                        ++r.violations;
                        if (r.examples.size() < 8) {
                            r.examples.push_back(SignViolation{a, b, leaf_vector_at(n, code)});
                        }
                    }
                }
            }
        }
    });
    SignTheoremReport report;
    report.n = n;
    for (SignTheoremReport& r : partial) {
        report.checks += r.checks;
        report.both_sharp += r.both_sharp;
        report.violations += r.violations;
        for (SignViolation& v : r.examples) {
            if (report.examples.size() < 8) {
                report.examples.push_back(std::move(v));
            }
        }
    }
    return report;
}

namespace {

const char* role_name(EdgeRole role) {
    switch (role) {
        case EdgeRole::Leaf:
            return "leaf";
        case EdgeRole::Root:
            return "root";
        case EdgeRole::Upper:
            return "upper";
        case EdgeRole::Lower:
            return "lower";
    }
    return "?";
}

std::string edge_label(const TiedEdge& e) {
    switch (e.role) {
        case EdgeRole::Leaf:
            return "x" + std::to_string(e.index);
        case EdgeRole::Root:
            return "root";
        case EdgeRole::Upper:
            return "L" + std::to_string(e.index);
        case EdgeRole::Lower:
            return "R" + std::to_string(e.index);
    }
    return "?";
}

std::string vertex_name(const TiedMap& map, int v) {
    const int offset = map.leaves - 1;
    return v < offset ? "L" + std::to_string(v) : "R" + std::to_string(v - offset);
}

}  // namespace

nlohmann::ordered_json to_json(const TiedMap& map) {
    nlohmann::ordered_json out;
    out["leaves"] = map.leaves;
    auto vertices = nlohmann::ordered_json::array();
    for (int v = 0; v < map.vertex_count(); ++v) {
        vertices.push_back(vertex_name(map, v));
    }
    out["vertices"] = std::move(vertices);
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t e = 0; e < map.edges.size(); ++e) {
        const TiedEdge& edge = map.edges[e];
        nlohmann::ordered_json item;
        item["id"] = e;
        item["u"] = vertex_name(map, edge.u);
        item["v"] = vertex_name(map, edge.v);
        item["role"] = role_name(edge.role);
        item["label"] = edge_label(edge);
        edges.push_back(std::move(item));
    }
    out["edges"] = std::move(edges);
    auto rotation = nlohmann::ordered_json::array();
    for (const auto& around : map.rotation) {
        rotation.push_back(nlohmann::ordered_json::array({around[0], around[1], around[2]}));
    }
    out["rotation"] = std::move(rotation);
    out["half_edge_convention"] = "half-edge 2e leaves edges[e].u, 2e+1 leaves edges[e].v; clockwise order";
    return out;
}

std::string to_dot(const TiedMap& map, const TaitColoring* coloring) {
    static constexpr const char* kDotColor[] = {"black", "red", "forestgreen", "blue"};
    std::ostringstream out;
    out << "graph tied_map {\n";
    for (int v = 0; v < map.vertex_count(); ++v) {
        out << "  " << vertex_name(map, v) << ";\n";
    }
    for (std::size_t e = 0; e < map.edges.size(); ++e) {
        const TiedEdge& edge = map.edges[e];
        out << "  " << vertex_name(map, edge.u) << " -- " << vertex_name(map, edge.v) << " [label=\""
            << edge_label(edge);
        if (coloring != nullptr) {
            const Color c = (*coloring)[e];
            out << ":" << to_char(c) << "\", color=\"" << kDotColor[static_cast<int>(c)];
        }
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace fct
