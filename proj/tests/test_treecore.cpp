#include <doctest.h>

#include <set>
#include <string>

#include "fct/catalan.hpp"
#include "fct/error.hpp"
#include "fct/tree.hpp"
#include "fct/triangulation.hpp"
#include "support/oracles.hpp"

using namespace fct;

TEST_CASE("parse and print brackets") {
    CHECK(parse_bracket("((x1x2)x3)") == Tree::left_comb(3));
    CHECK(parse_bracket("(x1(x2x3))") == Tree::right_comb(3));
    CHECK(parse_bracket(" ( x1 ( x2 x3 ) ) ") == Tree::right_comb(3));
    CHECK(print_bracket(Tree::left_comb(3)) == "((x1x2)x3)");
    CHECK(print_bracket(Tree::leaf()) == "x1");
    CHECK(print_bracket(Tree::right_comb(4)) == "(x1(x2(x3x4)))");
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_bracket("(x1x2x3)"), ParseError);
    CHECK_THROWS_AS(parse_bracket("((x1x2)x4)"), ParseError);
    CHECK_THROWS_AS(parse_bracket("((x2x1)x3)"), ParseError);
    CHECK_THROWS_AS(parse_bracket("((x1x1)x2)"), ParseError);
    CHECK_THROWS_AS(parse_bracket("(x1x2"), ParseError);
    CHECK_THROWS_AS(parse_bracket(""), ParseError);
    CHECK_THROWS_AS(parse_bracket("(x1x2))"), ParseError);
    CHECK_THROWS_AS(parse_bracket("x0"), ParseError);
    CHECK_THROWS_AS(parse_bracket("(x1y)"), ParseError);
    try {
        parse_bracket("(x1x2x3)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("print then parse is the identity on every tree up to n = 8") {
    for (int n = 1; n <= 8; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            REQUIRE(parse_bracket(print_bracket(t)) == t);
            REQUIRE(tree_from_json(to_json(t)) == t);
        }
    }
}

TEST_CASE("tree json is nested arrays") {
    CHECK(to_json(Tree::left_comb(3)).dump() == "[[1,2],3]");
    CHECK(to_json(Tree::leaf()).dump() == "1");
    // mirrored trees carry permuted labels
    CHECK_FALSE(tree_from_json(nlohmann::json::parse("[[1,3],2]")).is_canonical());
    CHECK_THROWS(tree_from_json(nlohmann::json::parse("[[1,1],2]")));
    CHECK_THROWS(tree_from_json(nlohmann::json::parse("[[1,4],2]")));
    CHECK_THROWS(tree_from_json(nlohmann::json::parse("[[1,2,3]]")));
}

TEST_CASE("mirror") {
    CHECK(print_bracket(mirror(parse_bracket("((x1x2)x3)"))) == "(x3(x2x1))");
    CHECK(mirror(Tree::leaf()) == Tree::leaf());
    for (int n = 1; n <= 6; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            REQUIRE(mirror(mirror(t)) == t);
        }
    }
}

TEST_CASE("catalan_g matches the convolution recurrence") {
    const auto g = oracle::catalan_table(30);
    for (int n = 1; n <= 30; ++n) {
        REQUIRE(catalan_g(n) == g[static_cast<std::size_t>(n)]);
    }
    CHECK(catalan_g(3) == 2);
    CHECK(catalan_g(5) == 14);
    CHECK(catalan_g(24) == BigInt("343059613650"));
    CHECK(catalan_g(23) == BigInt("91482563640"));
    // beyond 64 bits; value from comb(118, 59) / 60
    CHECK(catalan_g(60) == BigInt("405944995127576985730643443367112"));
}

TEST_CASE("smallest n with g(n) > 3^n is 24") {
    int first = 0;
    for (int n = 1; n <= 40 && first == 0; ++n) {
        if (catalan_g(n) > BigInt(oracle::pow3(n))) {
            first = n;
        }
    }
    CHECK(first == 24);
    CHECK(oracle::pow3(24) == 282429536481ULL);
}

TEST_CASE("enumeration, ranks and canonical order") {
    CHECK(enumerate_trees(1).size() == 1);
    CHECK(enumerate_trees(3).size() == 2);
    CHECK(enumerate_trees(4).size() == 5);
    const auto g = oracle::catalan_table(12);
    for (int n = 1; n <= 10; ++n) {
        const auto trees = enumerate_trees(n);
        REQUIRE(trees.size() == g[static_cast<std::size_t>(n)]);
        REQUIRE(tree_count(n) == g[static_cast<std::size_t>(n)]);
        for (std::size_t r = 0; r < trees.size(); ++r) {
            REQUIRE(rank(trees[r]) == r);
            REQUIRE(unrank(n, r) == trees[r]);
            REQUIRE(Tree::from_dyck(trees[r].dyck(), n) == trees[r]);
            if (r > 0) {
                REQUIRE(trees[r - 1].dyck() < trees[r].dyck());
            }
        }
    }
    CHECK(rank(Tree::left_comb(6)) == 0);
    CHECK(rank(Tree::right_comb(6)) == tree_count(6) - 1);
    CHECK_THROWS_AS(enumerate_trees(kEnumerationCap + 1), CapExceeded);
    CHECK_THROWS(unrank(4, 5));
}

TEST_CASE("sites and moves") {
    CHECK(sites(Tree::left_comb(3)).size() == 1);
    CHECK(sites(Tree::leaf()).empty());
    for (const Tree& t : enumerate_trees(5)) {
        CHECK(sites(t).size() == 3);
    }
    CHECK(apply_move(Tree::right_comb(3), sites(Tree::right_comb(3))[0]) == Tree::left_comb(3));
    CHECK(print_bracket(apply_move(Tree::left_comb(4), MoveSite{1})) == "((x1x2)(x3x4))");
    CHECK_THROWS_AS(apply_move(Tree::left_comb(4), MoveSite{0}), InvalidMove);
    CHECK_THROWS_AS(apply_move(Tree::left_comb(4), MoveSite{3}), InvalidMove);
}

TEST_CASE("moves are involutions with distinct neighbours") {
    for (int n = 2; n <= 6; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            std::set<std::uint64_t> neighbours;
            for (const MoveSite s : sites(t)) {
                const Rotation rot = rotate(t, s);
                REQUIRE(rot.tree.labels() == t.labels());
                REQUIRE(rot.tree != t);
                REQUIRE(apply_move(rot.tree, rot.inverse) == t);
                neighbours.insert(rank(rot.tree));
                // exactly one diagonal changes
                const auto a = to_triangulation(t).diagonals;
                const auto b = to_triangulation(rot.tree).diagonals;
                std::vector<Diagonal> common;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
                REQUIRE(common.size() + 1 == a.size());
            }
            REQUIRE(neighbours.size() == static_cast<std::size_t>(n - 2));
        }
    }
}

TEST_CASE("triangulation bijection commutes with moves") {
    const Triangulation q = to_triangulation(Tree::left_comb(3));
    CHECK(q.sides == 4);
    CHECK(q.diagonals.size() == 1);
    for (int n = 1; n <= 8; ++n) {
        std::set<std::vector<Diagonal>> seen;
        for (const Tree& t : enumerate_trees(n)) {
            const Triangulation tr = to_triangulation(t);
            REQUIRE(tr.diagonals.size() == static_cast<std::size_t>(std::max(n - 2, 0)));
            REQUIRE(from_triangulation(tr) == t);
            seen.insert(tr.diagonals);
            if (n <= 6) {
                for (const MoveSite s : sites(t)) {
                    const Diagonal d = site_diagonal(t, s);
                    REQUIRE(site_of(t, d) == s);
                    REQUIRE(to_triangulation(apply_move(t, s)) == flip(tr, d));
                }
            }
        }
        REQUIRE(seen.size() == tree_count(n));
    }
}

TEST_CASE("invalid triangulations are rejected") {
    CHECK_THROWS(from_triangulation(Triangulation{5, {{0, 2}}}));
    CHECK_THROWS(from_triangulation(Triangulation{5, {{0, 2}, {1, 3}}}));
    CHECK_THROWS(from_triangulation(Triangulation{5, {{0, 2}, {0, 2}}}));
    CHECK_THROWS(from_triangulation(Triangulation{5, {{0, 1}, {0, 2}}}));
    CHECK(crosses(Diagonal{0, 2}, Diagonal{1, 3}));
    CHECK_FALSE(crosses(Diagonal{0, 2}, Diagonal{0, 3}));
}

TEST_CASE("reroot is a cyclic symmetry") {
    for (int n = 2; n <= 7; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            REQUIRE(reroot(t, 0) == t);
            REQUIRE(reroot(t, n + 1) == t);
            REQUIRE(reroot(reroot(t, 2), -2) == t);
            REQUIRE(reroot(t, 1).is_canonical());
        }
    }
}
