#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "fct/catalan.hpp"
#include "fct/comb.hpp"
#include "fct/coloring.hpp"
#include "fct/dynamics.hpp"
#include "fct/error.hpp"
#include "fct/gamma.hpp"
#include "fct/state_space.hpp"
#include "fct/verify.hpp"
#include "support/oracles.hpp"

using namespace fct;

namespace {

State make_state(const char* tree, const char* signs) { return State(parse_bracket(tree), Signs::parse(signs)); }

bool path_is_proper(const AdmissiblePath& path) {
    return std::all_of(path.states.begin(), path.states.end(), [](const State& s) {
        return oracle::proper(s.tree, oracle::propagate(s.tree, s.root, s.signs));
    });
}

// Frozen signs from depth parity, computed without the engine.
Signs depth_parity_signs(const Tree& t) {
    Signs s(t.internal_count());
    for (int k = 0; k < t.internal_count(); ++k) {
        int depth = 0;
        for (int id = t.node(t.internal_node(k)).parent; id >= 0; id = t.node(id).parent) {
            ++depth;
        }
        s.set(k, depth % 2 == 0 ? Sign::Plus : Sign::Minus);
    }
    return s;
}

}  // namespace

TEST_CASE("rotation graph structure") {
    const RotationGraph g3 = build_gamma(3);
    CHECK(g3.vertex_count() == 2);
    CHECK(g3.edge_count() == 1);
    const RotationGraph g4 = build_gamma(4);
    CHECK(g4.vertex_count() == 5);
    CHECK(g4.edge_count() == 5);
    CHECK(g4.is_regular(2));
    CHECK(g4.is_connected());
    const RotationGraph g5 = build_gamma(5);
    CHECK(g5.vertex_count() == 14);
    CHECK(g5.edge_count() == 21);
    CHECK(g5.is_regular(3));
    const auto g = oracle::catalan_table(10);
    for (int n = 2; n <= 10; ++n) {
        const RotationGraph gn = build_gamma(n);
        REQUIRE(gn.vertex_count() == g[static_cast<std::size_t>(n)]);
        REQUIRE(gn.is_regular(static_cast<std::size_t>(n - 2)));
        REQUIRE(gn.is_connected());
        // neighbours listed in site order
        const auto trees = enumerate_trees(n);
        for (std::uint32_t v = 0; v < gn.vertex_count(); ++v) {
            const auto s = sites(trees[v]);
            REQUIRE(gn.adjacency[v].size() == s.size());
            for (std::size_t k = 0; k < s.size(); ++k) {
                REQUIRE(gn.adjacency[v][k] == rank(apply_move(trees[v], s[k])));
            }
        }
    }
    CHECK_THROWS_AS(build_gamma(kGammaCap + 1), CapExceeded);
}

TEST_CASE("rotation distance") {
    CHECK(rotation_distance(Tree::left_comb(5), Tree::left_comb(5)) == 0);
    CHECK(rotation_distance(Tree::left_comb(3), Tree::right_comb(3)) == 1);
    CHECK(rotation_distance(Tree::left_comb(4), Tree::right_comb(4)) == 2);
    const RotationGraph g6 = build_gamma(6);
    const auto trees = enumerate_trees(6);
    for (std::uint32_t a = 0; a < trees.size(); a += 5) {
        const auto dist = bfs_distances(g6, a);
        for (std::uint32_t b = 0; b < trees.size(); ++b) {
            REQUIRE(rotation_distance(trees[a], trees[b]) == dist[b]);
            REQUIRE(rotation_distance(trees[b], trees[a]) == dist[b]);
        }
    }
}

TEST_CASE("girth and short cycles") {
    const GirthReport four = girth_report(4);
    CHECK(four.girth == 5);
    CHECK(four.pentagons == 1);
    CHECK(four.quadrilaterals == 0);
    const GirthReport five = girth_report(5);
    CHECK(five.girth == 4);
    CHECK(five.quadrilaterals > 0);
    CHECK(five.pentagons > 0);
    CHECK(five.quadrilaterals == 3);
    CHECK(five.pentagons == 6);
    CHECK(girth_report(6).girth == 4);
    for (int n = 4; n <= 7; ++n) {
        const GirthReport r = girth_report(n);
        const auto traces = oracle::trace_cycle_counts(build_gamma(n).adjacency);
        REQUIRE(r.triangles == 0);
        REQUIRE(traces.c3 == 0);
        REQUIRE(r.quadrilaterals == traces.c4);
        REQUIRE(r.pentagons == traces.c5);
    }
    CHECK_THROWS(girth_report(3));
}

TEST_CASE("gamma dot export") {
    const std::string dot = to_dot(build_gamma(4));
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 5 + 5);
    CHECK(dot.find("\"((x1x2)(x3x4))\"") != std::string::npos);
}

TEST_CASE("admissibility examples") {
    const State plus = make_state("((x1x2)x3)", "++");
    CHECK(is_admissible(plus, MoveSite{1}));
    CHECK_FALSE(is_admissible(make_state("((x1x2)x3)", "+-"), MoveSite{1}));
    const State after = apply_admissible(plus, MoveSite{1});
    CHECK(after.tree == Tree::right_comb(3));
    CHECK(after.signs.str() == "--");
    CHECK(to_string(after.leaves()) == "JKJ");
    CHECK_THROWS_AS(apply_admissible(make_state("((x1x2)x3)", "+-"), MoveSite{1}), InvalidMove);
    CHECK_THROWS_AS(is_admissible(plus, MoveSite{2}), InvalidMove);
    CHECK_THROWS(State(Tree::left_comb(3), Signs::parse("+")));
}

TEST_CASE("equal signs iff the flip keeps a proper colouring, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            for (std::uint32_t bits = 0; bits < (1U << (n - 1)); ++bits) {
                const State st(t, Signs(n - 1, bits));
                const auto old_edges = oracle::propagate(t, Color::K, st.signs);
                const auto leaves = oracle::leaves_of(t, old_edges);
                for (const MoveSite s : sites(t)) {
                    const Rotation rot = rotate(t, s);
                    const auto pinned = oracle::pinned_colorings(rot.tree, leaves, Color::K);
                    REQUIRE(is_admissible(st, s) == !pinned.empty());
                    if (pinned.empty()) {
                        continue;
                    }
                    REQUIRE(pinned.size() == 1);
                    const State next = apply_admissible(st, s);
                    REQUIRE(next.tree == rot.tree);
                    REQUIRE(next.signs == oracle::read_signs(rot.tree, pinned[0]));
                    const int lower = s.vertex;
                    const int upper = t.internal_index(t.node(t.internal_node(s.vertex)).parent);
                    for (int k = 0; k < n - 1; ++k) {
                        const Sign old = st.signs[k];
                        const Sign now = next.signs[rot.vertex_map[static_cast<std::size_t>(k)]];
                        REQUIRE((now != old) == (k == lower || k == upper));
                    }
                    // reversibility
                    REQUIRE(apply_admissible(next, rot.inverse) == st);
                }
            }
        }
    }
}

TEST_CASE("state space agrees with direct dynamics and is symmetric") {
    for (int n = 2; n <= 6; ++n) {
        const StateSpace& space = state_space(n);
        REQUIRE(space.state_count() == tree_count(n) << (n - 1));
        for (StateSpace::Id v = 0; v < space.state_count(); ++v) {
            const State st = space.state(v);
            REQUIRE(space.id_of(st) == v);
            int degree = 0;
            space.for_each_neighbor(v, [&](MoveSite site, StateSpace::Id w) {
                ++degree;
                REQUIRE(space.state(w) == apply_admissible(st, site));
                bool back = false;
                space.for_each_neighbor(w, [&](MoveSite, StateSpace::Id u) { back = back || u == v; });
                REQUIRE(back);
            });
            REQUIRE(degree == admissible_degree(st));
        }
    }
    CHECK_THROWS_AS(state_space(kStateCap + 1), CapExceeded);
}

TEST_CASE("components do not depend on the thread count") {
    const StateSpace serial(7);
    const StateSpace parallel(7);
    CHECK(serial.components(1) == parallel.components(3));
}

TEST_CASE("random admissible walks keep leaves and root") {
    std::mt19937_64 rng(20261015);
    for (int n : {5, 8}) {
        const auto trees = enumerate_trees(n);
        for (int walk = 0; walk < 50; ++walk) {
            std::uniform_int_distribution<std::size_t> pick_tree(0, trees.size() - 1);
            std::uniform_int_distribution<std::uint32_t> pick_signs(0, (1U << (n - 1)) - 1);
            State st(trees[pick_tree(rng)], Signs(n - 1, pick_signs(rng)), kColors[walk % 3]);
            const LeafVector leaves = st.leaves();
            for (int step = 0; step < 40; ++step) {
                std::vector<MoveSite> options;
                for (const MoveSite s : sites(st.tree)) {
                    if (is_admissible(st, s)) {
                        options.push_back(s);
                    }
                }
                if (options.empty()) {
                    break;
                }
                st = apply_admissible(st, options[rng() % options.size()]);
                REQUIRE(st.leaves() == leaves);
                REQUIRE(st.root == kColors[walk % 3]);
            }
        }
    }
}

TEST_CASE("admissible path search") {
    const State start = make_state("((x1x2)x3)", "++");
    const auto empty = admissible_path(start, start.tree);
    REQUIRE(empty);
    CHECK(empty->length() == 0);
    const auto one = admissible_path(start, Tree::right_comb(3));
    REQUIRE(one);
    CHECK(one->length() == 1);
    CHECK(is_valid(*one));
    CHECK_FALSE(admissible_path(make_state("((x1x2)x3)", "+-"), Tree::right_comb(3)));

    const State other_root(Tree::left_comb(4), Signs::parse("+++"), Color::I);
    const auto path = admissible_path(other_root, Tree::right_comb(4));
    if (path) {
        CHECK(is_valid(*path));
        CHECK(path->start() == other_root);
        CHECK(path->finish().root == Color::I);
    }

    for (int n = 3; n <= 5; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            const State frozen(t, frozen_coloring(t).signs);
            for (const Tree& target : enumerate_trees(n)) {
                if (target != t) {
                    REQUIRE_FALSE(admissible_path(frozen, target));
                }
            }
        }
    }
}

TEST_CASE("path json") {
    const auto path = admissible_path(make_state("((x1x2)x3)", "++"), Tree::right_comb(3));
    REQUIRE(path);
    CHECK(to_json(*path).dump() ==
          R"j({"start":{"tree":"((x1x2)x3)","signs":"++","root":"K"},"moves":[1],)j"
          R"j("states":[{"tree":"((x1x2)x3)","signs":"++","root":"K"},{"tree":"(x1(x2x3))","signs":"--","root":"K"}]})j");
}

TEST_CASE("frozen colourings are isolated up to n = 10") {
    for (int n = 2; n <= 10; ++n) {
        const FrozenReport report = verify_frozen(n);
        REQUIRE(report.trees == tree_count(n));
        REQUIRE(report.trees_with_moves == 0);
    }
    for (int n = 2; n <= 8; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            REQUIRE(frozen_coloring(t).signs == depth_parity_signs(t));
        }
    }
}

TEST_CASE("frozen witness") {
    CHECK_FALSE(frozen_witness_search(3).has_value());
    CHECK_FALSE(frozen_witness_search(4).has_value());
    const auto w = frozen_witness_search(24);
    REQUIRE(w);
    CHECK(w->n == 5);
    CHECK(w->left != w->right);
    CHECK(rank(w->left) < rank(w->right));
    // first collision in rank order, cross-checked by a separate script
    CHECK(to_string(w->leaves) == "KJIIJ");
    CHECK(print_bracket(w->left) == "((x1((x2x3)x4))x5)");
    CHECK(print_bracket(w->right) == "((x1x2)(x3(x4x5)))");
    for (const Tree* t : {&w->left, &w->right}) {
        const State st(*t, frozen_coloring(*t).signs);
        CHECK(st.leaves() == w->leaves);
        CHECK(admissible_degree(st) == 0);
        CHECK(evaluate_klein_sharp(*t, w->leaves).value == Klein::K);
    }

    // independent scan: first colliding n, using oracle propagation
    int first = 0;
    for (int n = 2; n <= 6 && first == 0; ++n) {
        std::set<std::vector<Color>> seen;
        for (const Tree& t : enumerate_trees(n)) {
            const auto edges = oracle::propagate(t, Color::K, depth_parity_signs(t));
            if (!seen.insert(oracle::leaves_of(t, edges)).second) {
                first = n;
            }
        }
    }
    CHECK(first == 5);
    CHECK_THROWS_AS(frozen_witness_search(kWitnessCap + 1), CapExceeded);
}

TEST_CASE("left comb algorithm") {
    const AdmissiblePath p = comb_path(Tree::right_comb(4));
    REQUIRE(p.length() == 2);
    CHECK(print_bracket(p.states[1].tree) == "((x1x2)(x3x4))");
    CHECK(print_bracket(p.finish().tree) == "(((x1x2)x3)x4)");
    CHECK(comb_path(Tree::left_comb(5)).length() == 0);
    for (int n = 2; n <= 9; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            const AdmissiblePath path = comb_path(t);
            REQUIRE(path.start().tree == t);
            REQUIRE(path.finish().tree == Tree::left_comb(n));
            REQUIRE(is_valid(path));
            if (n <= 7) {
                REQUIRE(path_is_proper(path));
            }
        }
    }
}

TEST_CASE("mirror and block comb targets") {
    const AdmissiblePath m = mirror_comb_path(Tree::left_comb(4));
    CHECK(m.length() == 2);
    CHECK(m.finish().tree == Tree::right_comb(4));
    CHECK(is_valid(m));
    for (int n = 2; n <= 6; ++n) {
        CHECK(fan_tree(n, 0) == Tree::left_comb(n));
        CHECK(fan_tree(n, n) == Tree::right_comb(n));
    }
    CHECK(print_bracket(fan_tree(5, 2)) == "((x1x2)((x3x4)x5))");
    CHECK_THROWS(fan_tree(4, 5));
    CHECK_THROWS(block_comb_path(Tree::left_comb(4), -1));
    for (int n = 2; n <= 7; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            const AdmissiblePath right = mirror_comb_path(t);
            REQUIRE(right.finish().tree == Tree::right_comb(n));
            REQUIRE(is_valid(right));
            REQUIRE(block_comb_path(t, 0).moves == comb_path(t).moves);
            for (int k = 0; k <= n; ++k) {
                const AdmissiblePath block = block_comb_path(t, k);
                REQUIRE(block.start().tree == t);
                REQUIRE(block.finish().tree == fan_tree(n, k));
                REQUIRE(is_valid(block));
            }
        }
    }
}

TEST_CASE("conjecture sweep on small n") {
    const ConjectureReport three = verify_conjecture(3);
    CHECK(three.pairs == 4);
    CHECK(three.all_satisfied());
    const ConjectureReport five = verify_conjecture(5);
    CHECK(five.pairs == 196);
    CHECK(five.all_satisfied());
    CHECK(five.counterexamples.empty());
    CHECK(five.states == 14 * 16);
    CHECK(verify_conjecture(6).all_satisfied());
    CHECK_THROWS_AS(verify_conjecture(kStateCap + 1), CapExceeded);
}

TEST_CASE("find_admissible_path agrees with the component answer") {
    for (int n = 2; n <= 5; ++n) {
        const auto trees = enumerate_trees(n);
        for (const Tree& l : trees) {
            for (const Tree& r : trees) {
                const auto path = find_admissible_path(l, r);
                REQUIRE(path);
                REQUIRE(path->start().tree == l);
                REQUIRE(path->finish().tree == r);
                REQUIRE(is_valid(*path));
                REQUIRE(path->length() >= static_cast<std::size_t>(rotation_distance(l, r)));
            }
        }
    }
}

TEST_CASE("geodesics are admissible up to n = 5") {
    for (int n = 3; n <= 5; ++n) {
        const GeodesicReport report = geodesic_admissibility_report(n);
        CHECK(report.pairs == tree_count(n) * tree_count(n));
        CHECK(report.geodesic_pairs == report.pairs);
        CHECK(report.excess.empty());
    }
    const GeodesicReport six = geodesic_admissibility_report(6);
    CHECK(six.pairs == 42 * 42);
    CHECK(six.geodesic_pairs + six.unreachable_pairs + six.excess.size() == six.pairs);
    CHECK_THROWS_AS(geodesic_admissibility_report(kGeodesicCap + 1), CapExceeded);
}

TEST_CASE("factorization over shared diagonals") {
    const Tree t = parse_bracket("((x1x2)(x3(x4x5)))");
    const auto same = factorized_path(t, t);
    REQUIRE(same);
    CHECK(same->path.length() == 0);
    CHECK(same->shared.size() == 3);

    for (int n = 3; n <= 6; ++n) {
        const auto trees = enumerate_trees(n);
        for (const Tree& l : trees) {
            for (const Tree& r : trees) {
                const auto shared = shared_diagonals(l, r);
                if (shared.empty()) {
                    continue;
                }
                const auto regions = factor_regions(l, r);
                REQUIRE(regions.size() == shared.size() + 1);
                int leaf_sum = 0;
                for (const Region& region : regions) {
                    REQUIRE(region.left.leaf_count() < n);
                    REQUIRE(region.left.leaf_count() == region.right.leaf_count());
                    leaf_sum += region.left.leaf_count();
                }
                REQUIRE(leaf_sum == n + static_cast<int>(shared.size()));

                const auto full = find_admissible_path(l, r);
                const auto factored = factorized_path(l, r);
                if (full) {
                    REQUIRE(factored);
                }
                if (factored) {
                    const AdmissiblePath& p = factored->path;
                    REQUIRE(is_valid(p));
                    REQUIRE(p.start().tree == l);
                    REQUIRE(p.finish().tree == r);
                    for (std::size_t i = 0; i < p.moves.size(); ++i) {
                        const Diagonal d = site_diagonal(p.states[i].tree, p.moves[i]);
                        REQUIRE(std::find(shared.begin(), shared.end(), d) == shared.end());
                    }
                }
            }
        }
    }
}

TEST_CASE("state graph dot") {
    const std::string dot = state_graph_dot(state_space(4));
    std::size_t nodes = 0;
    for (std::size_t pos = 0; (pos = dot.find("[label=", pos)) != std::string::npos; ++pos) {
        ++nodes;
    }
    CHECK(nodes == 40);
}

TEST_CASE("engine-side brute-force checks") {
    for (int n = 2; n <= 6; ++n) {
        const AdmissibilityReport a = verify_admissibility_rule(n);
        REQUIRE(a.passed());
        REQUIRE(a.checks == tree_count(n) * (1U << (n - 1)) * static_cast<std::uint64_t>(n - 2));
    }
    CHECK(verify_admissibility_rule(3).admissible == 2 * 2);
    for (int n = 1; n <= 5; ++n) {
        const ColoringBijectionReport c = verify_coloring_bijection(n);
        REQUIRE(c.passed());
        REQUIRE(c.expected_per_tree == (3U << (n - 1)));
    }
    const WalkReport w = random_walk_check(8, 200, 30, 7);
    CHECK(w.violations == 0);
    CHECK(w.steps > 0);
    const WalkReport again = random_walk_check(8, 200, 30, 7);
    CHECK(again.steps == w.steps);
    CHECK(again.stuck == w.stuck);
    CHECK_THROWS_AS(verify_admissibility_rule(kAdmissibilityOracleCap + 1), CapExceeded);
    CHECK_THROWS_AS(verify_coloring_bijection(kColoringBruteForceCap + 1), CapExceeded);
}

TEST_CASE("isolated states are the two alternating sign vectors") {
    for (int n = 3; n <= 8; ++n) {
        const StateSpace& space = state_space(n);
        std::uint64_t isolated = 0;
        for (StateSpace::Id v = 0; v < space.state_count(); ++v) {
            int degree = 0;
            space.for_each_neighbor(v, [&](MoveSite, StateSpace::Id) { ++degree; });
            if (degree > 0) {
                continue;
            }
            ++isolated;
            const Tree& t = space.tree(space.rank_of(v));
            const Signs frozen = frozen_coloring(t).signs;
            const Signs complement(n - 1, ~frozen.value() & ((1U << (n - 1)) - 1));
            const std::uint32_t s = space.signs_of(v);
            REQUIRE((s == frozen.value() || s == complement.value()));
        }
        REQUIRE(isolated == 2 * tree_count(n));
        REQUIRE(verify_conjecture(n).isolated_states == isolated);
    }
}
