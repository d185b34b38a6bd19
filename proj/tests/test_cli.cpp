#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "fct/tree.hpp"

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;

    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run fct_run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = fct::cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = 0; (pos = text.find(needle, pos)) != std::string::npos; pos += needle.size()) {
        ++n;
    }
    return n;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("fct_test_" + name);
}

}  // namespace

TEST_CASE("report envelope") {
    const Run r = fct_run({"enumerate", "3"});
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["tool"] == "fct");
    CHECK(j["command"] == "enumerate");
    CHECK(j["config"]["n"] == 3);
    CHECK(j["config"]["threads"] == 1);
    CHECK_FALSE(j.contains("timing"));
    CHECK(j["result"]["trees"] == nlohmann::json::array({"((x1x2)x3)", "(x1(x2x3))"}));
    CHECK(fct_run({"--timing", "enumerate", "3"}).json().contains("timing"));
}

TEST_CASE("enumerate") {
    CHECK(fct_run({"enumerate", "5", "--count"}).json()["result"]["count"] == 14);
    CHECK(fct_run({"enumerate", "24", "--count", "--format", "text"}).out == "343059613650\n");
    const Run capped = fct_run({"enumerate", "40"});
    CHECK(capped.code == 2);
    CHECK(capped.err.find("cap") != std::string::npos);
    CHECK(fct_run({"enumerate", "40", "--count"}).code == 2);
    CHECK(fct_run({"enumerate", "x"}).code == 2);
    // every emitted bracket re-parses
    for (const auto& t : fct_run({"enumerate", "6"}).json()["result"]["trees"]) {
        CHECK(fct::print_bracket(fct::parse_bracket(t.get<std::string>())) == t.get<std::string>());
    }
}

TEST_CASE("path") {
    const Run r = fct_run({"path", "(x1(x2x3))", "((x1x2)x3)"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["result"]["length"] == 1);
    CHECK(r.json()["result"]["signs"] == "++");
    const Run same = fct_run({"path", "((x1x2)x3)", "((x1x2)x3)"});
    CHECK(same.code == 0);
    CHECK(same.json()["result"]["length"] == 0);
    // frozen signs of the left comb on 3 leaves are +-
    const Run frozen = fct_run({"path", "((x1x2)x3)", "(x1(x2x3))", "--signs", "+-"});
    CHECK(frozen.code == 1);
    CHECK(frozen.json()["result"]["found"] == false);
    CHECK(fct_run({"path", "((x1x2)x3)", "(x1(x2(x3x4)))"}).code == 2);
    CHECK(fct_run({"path", "((x1x2)x3", "(x1(x2x3))"}).code == 2);
    CHECK(fct_run({"path", "((x1x2)x3)", "(x1(x2x3))", "--signs", "+"}).code == 2);
    const Run f = fct_run({"path", "((x1x2)(x3(x4x5)))", "((x1x2)((x3x4)x5))", "--factorized"});
    CHECK(f.code == 0);
    CHECK(f.json()["result"]["shared_diagonals"].size() == 2);
}

TEST_CASE("color, sharp, tie, comb") {
    const Run c = fct_run({"color", "((x1x2)x3)", "--signs", "++"});
    REQUIRE(c.code == 0);
    CHECK(c.json()["result"]["leaves"] == "JKJ");
    CHECK(c.json()["result"]["edges"]["v1"] == "I");
    CHECK(fct_run({"color", "((x1x2)x3)", "--frozen"}).json()["result"]["leaves"] == "KJJ");
    CHECK(fct_run({"color", "((x1x2)x3)", "--leaves", "IIJ"}).code == 1);
    CHECK(fct_run({"color", "((x1x2)x3)"}).code == 2);

    const Run s = fct_run({"sharp", "((x1x2)x3)", "(x1(x2x3))"});
    REQUIRE(s.code == 0);
    CHECK(s.json()["result"]["count"].get<int>() % 3 == 0);

    const Run t = fct_run({"tie", "((x1x2)x3)", "(x1(x2x3))", "--color", "--correspondence"});
    REQUIRE(t.code == 0);
    CHECK(t.json()["result"]["vertex_count"] == 4);
    CHECK(t.json()["result"]["correspondence"]["holds"] == true);
    CHECK(count(fct_run({"--format", "dot", "tie", "(x1x2)", "(x1x2)"}).out, " -- ") == 3);

    const Run comb = fct_run({"comb", "(x1(x2(x3x4)))"});
    CHECK(comb.code == 0);
    CHECK(comb.json()["result"]["length"] == 2);
    CHECK(fct_run({"comb", "(((x1x2)x3)x4)", "--target", "right"}).json()["result"]["length"] == 2);
    CHECK(fct_run({"comb", "(((x1x2)x3)x4)", "--target", "fan", "--apex", "2"}).code == 0);
    CHECK(fct_run({"comb", "(((x1x2)x3)x4)", "--target", "fan"}).code == 2);
}

TEST_CASE("verify kinds") {
    const Run colorings = fct_run({"verify", "colorings", "5"});
    CHECK(colorings.code == 0);
    CHECK(colorings.json()["result"]["expected_per_tree"] == 48);
    const Run sign = fct_run({"verify", "sign-theorem", "4"});
    CHECK(sign.code == 0);
    CHECK(sign.json()["result"]["violations"] == 0);
    const Run girth = fct_run({"verify", "girth", "4"});
    CHECK(girth.code == 0);
    CHECK(girth.json()["result"]["girth"] == 5);
    for (const char* kind : {"conjecture", "admissibility-oracle", "geodesics", "frozen"}) {
        CHECK(fct_run({"verify", kind, "4"}).code == 0);
    }
    const Run detail = fct_run({"verify", "conjecture", "4", "--detail"});
    CHECK(detail.json()["result"]["detail"].size() == 25);
    CHECK(fct_run({"verify", "nonsense", "4"}).code == 2);
    CHECK(fct_run({"verify", "conjecture", "11"}).code == 2);
    CHECK(fct_run({"verify", "colorings", "7"}).code == 2);
    CHECK(fct_run({"--threads", "0", "verify", "frozen", "4"}).code == 2);
}

TEST_CASE("verify reports are byte-identical across runs") {
    for (const char* kind : {"conjecture", "sign-theorem", "admissibility-oracle", "colorings", "girth", "geodesics",
                             "frozen"}) {
        const std::vector<std::string> args{"--seed", "11", "verify", kind, "5"};
        CHECK(fct_run(args).out == fct_run(args).out);
    }
    // thread count is echoed in config but must not change the result
    auto result = [](const char* threads) {
        return fct_run({"--threads", threads, "verify", "sign-theorem", "5"}).json()["result"];
    };
    CHECK(result("1") == result("3"));
}

TEST_CASE("export") {
    const auto gamma = temp_path("gamma4.dot");
    const Run g = fct_run({"export", "gamma", "4", "--out", gamma.string()});
    REQUIRE(g.code == 0);
    const std::string dot = slurp(gamma);
    CHECK(count(dot, " -- ") == 5);
    CHECK(count(dot, "[label=") == 5);

    const auto tied = temp_path("tied3.dot");
    REQUIRE(fct_run({"export", "tiedmap", "((x1x2)x3)", "(x1(x2x3))", "--out", tied.string()}).code == 0);
    CHECK(count(slurp(tied), " -- ") == 6);

    const auto states = temp_path("states4.dot");
    const Run s = fct_run({"export", "stategraph", "4", "--out", states.string()});
    REQUIRE(s.code == 0);
    CHECK(s.json()["result"]["nodes"] == 40);
    CHECK(count(slurp(states), "[label=") == 40);

    CHECK(fct_run({"export", "gamma", "4", "--out", "/nonexistent-dir/x.dot"}).code == 3);
    CHECK(fct_run({"export", "gamma", "4"}).code == 2);
    CHECK(fct_run({"export", "tiedmap", "((x1x2)x3)", "--out", tied.string()}).code == 2);
    for (const auto& p : {gamma, tied, states}) {
        std::filesystem::remove(p);
    }
}

TEST_CASE("report to file") {
    const auto path = temp_path("report.json");
    const Run r = fct_run({"--out", path.string(), "gamma", "5"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto j = nlohmann::json::parse(slurp(path));
    CHECK(j["result"]["vertices"] == 14);
    CHECK(j["result"]["edges"] == 21);
    std::filesystem::remove(path);
    CHECK(fct_run({"--out", "/nonexistent-dir/r.json", "gamma", "5"}).code == 3);
}

TEST_CASE("witness") {
    const Run none = fct_run({"witness", "3"});
    CHECK(none.code == 0);
    CHECK(none.json()["result"]["found"] == false);
    const Run found = fct_run({"witness", "24"});
    CHECK(found.code == 0);
    const auto r = found.json()["result"];
    CHECK(r["found"] == true);
    CHECK(r["left"] != r["right"]);
    CHECK(r["left_admissible_moves"] == 0);
    CHECK(r["right_admissible_moves"] == 0);
    CHECK(r["replay_confirms"] == true);
    CHECK(fct_run({"witness", "25"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(fct_run({}).code == 2);
    CHECK(fct_run({"bogus"}).code == 2);
    CHECK(fct_run({"--format", "xml", "enumerate", "3"}).code == 2);
    CHECK(fct_run({"--format", "dot", "enumerate", "3"}).code == 2);
    CHECK(fct_run({"--help"}).code == 0);
}
