#include "fct/verify.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <unordered_map>

#include "fct/catalan.hpp"
#include "fct/coloring.hpp"
#include "fct/error.hpp"
#include "fct/gamma.hpp"
#include "fct/state_space.hpp"

namespace fct {

ConjectureReport verify_conjecture(int n, int threads) {
    if (n < 1) {
        throw std::invalid_argument("verify_conjecture: n must be at least 1");
    }
    if (n > kStateCap) {
        throw CapExceeded("verify_conjecture", n, kStateCap);
    }
    const StateSpace& space = state_space(n);
    const auto& component = space.components(threads);
    const std::uint64_t trees = space.tree_count();

    ConjectureReport report;
    report.n = n;
    report.trees = trees;
    report.states = space.state_count();
    report.components = component.empty() ? 0 : *std::max_element(component.begin(), component.end()) + 1;
    for (StateSpace::Id v = 0; v < space.state_count(); ++v) {
        bool any = false;
        space.for_each_neighbor(v, [&](MoveSite, StateSpace::Id) { any = true; });
        report.isolated_states += any ? 0 : 1;
    }

    // trees present in each component
    std::vector<std::vector<std::uint32_t>> members(report.components);
    for (std::uint64_t r = 0; r < trees; ++r) {
        for (std::uint32_t s = 0; s < space.signs_per_tree(); ++s) {
            auto& list = members[component[space.id(r, s)]];
            if (list.empty() || list.back() != r) {
                list.push_back(static_cast<std::uint32_t>(r));
            }
        }
    }
    std::vector<std::uint8_t> linked(trees * trees, 0);
    for (std::uint64_t r = 0; r < trees; ++r) {
        linked[r * trees + r] = 1;
    }
    for (const auto& list : members) {
        for (const std::uint32_t a : list) {
            for (const std::uint32_t b : list) {
                linked[a * trees + b] = 1;
            }
        }
    }
    report.pairs = trees * trees;
    for (std::uint64_t a = 0; a < trees; ++a) {
        for (std::uint64_t b = 0; b < trees; ++b) {
            if (linked[a * trees + b] != 0) {
                ++report.satisfied;
            } else {
                report.counterexamples.push_back(TreePair{a, b});
            }
        }
    }
    return report;
}

GeodesicReport geodesic_admissibility_report(int n) {
    if (n < 1) {
        throw std::invalid_argument("geodesic_admissibility_report: n must be at least 1");
    }
    if (n > kGeodesicCap) {
        throw CapExceeded("geodesic_admissibility_report", n, kGeodesicCap);
    }
    const StateSpace& space = state_space(n);
    const RotationGraph gamma = build_gamma(n);
    const std::uint64_t trees = space.tree_count();

    GeodesicReport report;
    report.n = n;
    std::vector<int> dist(space.state_count());
    for (std::uint64_t target = 0; target < trees; ++target) {
        const std::vector<int> rotation = bfs_distances(gamma, static_cast<std::uint32_t>(target));
        // Multi-source BFS from every colouring of the target; the state graph
        // is undirected so this gives distances towards the target.
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<StateSpace::Id> queue;
        for (std::uint32_t s = 0; s < space.signs_per_tree(); ++s) {
            const StateSpace::Id v = space.id(target, s);
            dist[v] = 0;
            queue.push_back(v);
        }
        while (!queue.empty()) {
            const StateSpace::Id v = queue.front();
            queue.pop_front();
            space.for_each_neighbor(v, [&](MoveSite, StateSpace::Id w) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            });
        }
        for (std::uint64_t source = 0; source < trees; ++source) {
            ++report.pairs;
            int best = -1;
            for (std::uint32_t s = 0; s < space.signs_per_tree(); ++s) {
                const int d = dist[space.id(source, s)];
                if (d >= 0 && (best < 0 || d < best)) {
                    best = d;
                }
            }
            if (best < 0) {
                ++report.unreachable_pairs;
            } else if (best == rotation[source]) {
                ++report.geodesic_pairs;
            } else {
                report.excess.push_back({TreePair{source, target}, rotation[source], best});
            }
        }
    }
    std::sort(report.excess.begin(), report.excess.end(), [](const auto& x, const auto& y) {
        return std::pair{x.pair.left, x.pair.right} < std::pair{y.pair.left, y.pair.right};
    });
    return report;
}

FrozenReport verify_frozen(int n) {
    if (n < 2) {
        throw std::invalid_argument("verify_frozen: n must be at least 2");
    }
    if (n > kEnumerationCap) {
        throw CapExceeded("verify_frozen", n, kEnumerationCap);
    }
    FrozenReport report;
    report.n = n;
    for (const Tree& tree : enumerate_trees(n)) {
        ++report.trees;
        const State state(tree, frozen_coloring(tree).signs);
        if (admissible_degree(state) > 0) {
            ++report.trees_with_moves;
        }
    }
    return report;
}

std::optional<FrozenWitness> frozen_witness_search(int max_n) {
    if (max_n > kWitnessCap) {
        throw CapExceeded("frozen_witness_search", max_n, kWitnessCap);
    }
    for (int n = 2; n <= max_n; ++n) {
        std::unordered_map<std::string, std::uint64_t> seen;
        const std::uint64_t count = tree_count(n);
        for (std::uint64_t r = 0; r < count; ++r) {
            Tree tree = unrank(n, r);
            LeafVector leaves = leaf_vector(tree, frozen_coloring(tree));
            const auto [it, fresh] = seen.emplace(to_string(leaves), r);
            if (!fresh) {
                return FrozenWitness{n, unrank(n, it->second), std::move(tree), std::move(leaves)};
            }
        }
    }
    return std::nullopt;
}

namespace {

bool proper_at(const Tree& tree, std::span<const Color> edges, int id) {
    const Node& node = tree.node(id);
    const Color p = edges[static_cast<std::size_t>(id)];
    const Color l = edges[static_cast<std::size_t>(node.left)];
    const Color r = edges[static_cast<std::size_t>(node.right)];
    return p != l && p != r && l != r;
}

// All proper colourings of `tree` with leaf and root colours pinned.
std::vector<std::vector<Color>> pinned_colorings(const Tree& tree, std::span<const Color> leaves, Color root) {
    std::vector<Color> edges(static_cast<std::size_t>(tree.node_count()), root);
    std::vector<int> free;
    for (int id = 0; id < tree.node_count(); ++id) {
        const Node& node = tree.node(id);
        if (node.is_leaf()) {
            edges[static_cast<std::size_t>(id)] = leaves[static_cast<std::size_t>(node.label - 1)];
        } else if (id != 0) {
            free.push_back(id);
        }
    }
    const std::uint64_t total = power_of_three(static_cast<int>(free.size()));
    std::vector<std::vector<Color>> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (const int id : free) {
            edges[static_cast<std::size_t>(id)] = static_cast<Color>(c % 3 + 1);
            c /= 3;
        }
        bool ok = true;
        for (const int id : tree.internal_nodes()) {
            if (!proper_at(tree, edges, id)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(edges);
        }
    }
    return out;
}

constexpr std::size_t kExampleLimit = 16;

}  // namespace

AdmissibilityReport verify_admissibility_rule(int n) {
    if (n < 2) {
        throw std::invalid_argument("verify_admissibility_rule: n must be at least 2");
    }
    if (n > kAdmissibilityOracleCap) {
        throw CapExceeded("verify_admissibility_rule", n, kAdmissibilityOracleCap);
    }
    AdmissibilityReport report;
    report.n = n;
    for (const Tree& tree : enumerate_trees(n)) {
        for (std::uint32_t bits = 0; bits < (1U << (n - 1)); ++bits) {
            const State state(tree, Signs(n - 1, bits));
            const LeafVector leaves = state.leaves();
            for (const MoveSite site : sites(tree)) {
                ++report.checks;
                const Rotation rotation = rotate(tree, site);
                const auto found = pinned_colorings(rotation.tree, leaves, state.root);
                const bool rule = is_admissible(state, site);
                bool sign_ok = true;
                if (rule && found.size() == 1) {
                    ++report.admissible;
                    const State next = apply_admissible(state, site);
                    sign_ok = next.signs == coloring_from_edges(rotation.tree, found[0]).signs;
                    const int upper = tree.internal_index(tree.node(tree.internal_node(site.vertex)).parent);
                    for (int k = 0; k < n - 1; ++k) {
                        const bool flipped =
                            next.signs[rotation.vertex_map[static_cast<std::size_t>(k)]] != state.signs[k];
                        sign_ok = sign_ok && flipped == (k == site.vertex || k == upper);
                    }
                }
                const bool rule_ok = rule == !found.empty() && found.size() <= 1;
                report.rule_mismatches += rule_ok ? 0 : 1;
                report.sign_mismatches += sign_ok ? 0 : 1;
                if ((!rule_ok || !sign_ok) && report.examples.size() < kExampleLimit) {
                    report.examples.push_back({state, site});
                }
            }
        }
    }
    return report;
}

ColoringBijectionReport verify_coloring_bijection(int n) {
    if (n < 1) {
        throw std::invalid_argument("verify_coloring_bijection: n must be at least 1");
    }
    if (n > kColoringBruteForceCap) {
        throw CapExceeded("verify_coloring_bijection", n, kColoringBruteForceCap);
    }
    ColoringBijectionReport report;
    report.n = n;
    report.expected_per_tree = std::uint64_t{3} << (n - 1);
    const int edges = 2 * n - 1;
    const std::uint64_t total = power_of_three(edges);
    std::vector<Color> assignment(static_cast<std::size_t>(edges));
    const auto trees = enumerate_trees(n);
    for (std::uint64_t r = 0; r < trees.size(); ++r) {
        const Tree& tree = trees[r];
        ++report.trees;
        std::set<std::vector<Color>> brute;
        for (std::uint64_t code = 0; code < total; ++code) {
            std::uint64_t c = code;
            for (auto& color : assignment) {
                color = static_cast<Color>(c % 3 + 1);
                c /= 3;
            }
            if (is_proper(tree, assignment)) {
                brute.insert(assignment);
            }
        }
        std::set<std::vector<Color>> image;
        for (const Coloring& coloring : all_colorings(tree)) {
            image.insert(edge_colors(tree, coloring));
        }
        if (brute != image || brute.size() != report.expected_per_tree) {
            ++report.mismatched_trees;
            report.mismatches.push_back(r);
        }
    }
    return report;
}

WalkReport random_walk_check(int n, std::uint64_t walks, int steps, std::uint64_t seed) {
    if (n < 2) {
        throw std::invalid_argument("random_walk_check: n must be at least 2");
    }
    if (n > kWalkCap) {
        throw CapExceeded("random_walk_check", n, kWalkCap);
    }
    // Raw engine output only; library distributions differ between vendors.
    std::mt19937_64 rng(seed);
    WalkReport report;
    report.n = n;
    report.walks = walks;
    const std::uint64_t trees = tree_count(n);
    for (std::uint64_t w = 0; w < walks; ++w) {
        const Color root = kColors[rng() % 3];
        State state(unrank(n, rng() % trees), Signs(n - 1, static_cast<std::uint32_t>(rng() % (1U << (n - 1)))), root);
        const LeafVector leaves = state.leaves();
        for (int step = 0; step < steps; ++step) {
            std::vector<MoveSite> options;
            for (const MoveSite site : sites(state.tree)) {
                if (is_admissible(state, site)) {
                    options.push_back(site);
                }
            }
            if (options.empty()) {
                ++report.stuck;
                break;
            }
            const MoveSite site = options[rng() % options.size()];
            const Rotation rotation = rotate(state.tree, site);
            State next = apply_admissible(state, site);
            ++report.steps;
            const bool ok = next.leaves() == leaves && next.root == root &&
                            apply_admissible(next, rotation.inverse) == state;
            report.violations += ok ? 0 : 1;
            state = std::move(next);
        }
    }
    return report;
}

std::vector<Diagonal> shared_diagonals(const Tree& left, const Tree& right) {
    if (left.leaf_count() != right.leaf_count()) {
        throw std::invalid_argument("shared_diagonals: trees have different leaf counts");
    }
    const Triangulation a = to_triangulation(left);
    const Triangulation b = to_triangulation(right);
    std::vector<Diagonal> out;
    std::set_intersection(a.diagonals.begin(), a.diagonals.end(), b.diagonals.begin(), b.diagonals.end(),
                          std::back_inserter(out));
    return out;
}

namespace {

// Restriction of `tree` below `top`, stopping at leaves and at nodes whose
// chord is shared. Appends region vertices (the right end of each boundary
// chord) to `vertices` when given.
Tree restrict_region(const Tree& tree, int top, const std::set<Diagonal>& cuts, std::vector<int>* vertices) {
    int next_label = 1;
    auto build = [&](auto&& self, int id, bool is_top) -> Tree {
        const Node& node = tree.node(id);
        if (!is_top && (node.is_leaf() || cuts.contains(chord(tree, id)))) {
            if (vertices != nullptr) {
                vertices->push_back(node.last);
            }
            return Tree::leaf(next_label++);
        }
        Tree l = self(self, node.left, false);
        Tree r = self(self, node.right, false);
        return Tree::join(l, r);
    };
    return build(build, top, true);
}

int node_with_chord(const Tree& tree, Diagonal d) {
    for (int id : tree.internal_nodes()) {
        if (chord(tree, id) == d) {
            return id;
        }
    }
    throw std::logic_error("shared chord missing from tree");
}

}  // namespace

std::vector<Region> factor_regions(const Tree& left, const Tree& right) {
    const std::vector<Diagonal> shared = shared_diagonals(left, right);
    const std::set<Diagonal> cuts(shared.begin(), shared.end());
    std::vector<int> tops{0};
    for (int id : left.internal_nodes()) {
        if (id != 0 && cuts.contains(chord(left, id))) {
            tops.push_back(id);
        }
    }
    std::vector<Region> out;
    for (const int top : tops) {
        const Diagonal d = chord(left, top);
        Region region;
        region.vertices.push_back(d.a);
        region.left = restrict_region(left, top, cuts, &region.vertices);
        std::vector<int> check{d.a};
        region.right = restrict_region(right, top == 0 ? 0 : node_with_chord(right, d), cuts, &check);
        if (check != region.vertices) {
            throw std::logic_error("factor_regions: region boundaries disagree");
        }
        out.push_back(std::move(region));
    }
    return out;
}

std::optional<FactorizedPath> factorized_path(const Tree& left, const Tree& right) {
    if (left.leaf_count() != right.leaf_count()) {
        throw std::invalid_argument("factorized_path: trees have different leaf counts");
    }
    if (!left.is_canonical() || !right.is_canonical()) {
        throw std::invalid_argument("factorized_path: trees must have variables x1..xn in order");
    }
    FactorizedPath out;
    out.shared = shared_diagonals(left, right);
    out.regions = factor_regions(left, right);

    std::map<std::array<int, 3>, int> left_index;
    for (int k = 0; k < left.internal_count(); ++k) {
        left_index.emplace(triangle(left, k), k);
    }
    Signs start(left.internal_count());
    std::vector<Diagonal> flips;
    for (const Region& region : out.regions) {
        const std::optional<AdmissiblePath> sub = find_admissible_path(region.left, region.right);
        if (!sub) {
            return std::nullopt;
        }
        const auto& v = region.vertices;
        for (int k = 0; k < region.left.internal_count(); ++k) {
            const auto t = triangle(region.left, k);
            const std::array<int, 3> mapped{v[static_cast<std::size_t>(t[0])], v[static_cast<std::size_t>(t[1])],
                                            v[static_cast<std::size_t>(t[2])]};
            start.set(left_index.at(mapped), sub->start().signs[k]);
        }
        for (std::size_t i = 0; i < sub->moves.size(); ++i) {
            const Diagonal d = site_diagonal(sub->states[i].tree, sub->moves[i]);
            flips.push_back(Diagonal{v[static_cast<std::size_t>(d.a)], v[static_cast<std::size_t>(d.b)]});
        }
    }
    std::vector<MoveSite> moves;
    Tree current = left;
    for (const Diagonal& d : flips) {
        const auto site = site_of(current, d);
        if (!site) {
            throw std::logic_error("factorized_path: region diagonal not present in the full tree");
        }
        moves.push_back(*site);
        current = apply_move(current, *site);
    }
    out.path = replay(State(left, start), moves);
    return out;
}

}  // namespace fct
