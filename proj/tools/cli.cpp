#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fct/algebra.hpp"
#include "fct/catalan.hpp"
#include "fct/coloring.hpp"
#include "fct/comb.hpp"
#include "fct/dynamics.hpp"
#include "fct/error.hpp"
#include "fct/gamma.hpp"
#include "fct/state_space.hpp"
#include "fct/tied_map.hpp"
#include "fct/tree.hpp"
#include "fct/verify.hpp"

#ifndef FCT_VERSION
#define FCT_VERSION "0.0.0"
#endif

namespace fct::cli {
namespace {

using Json = nlohmann::ordered_json;

inline constexpr int kCountCap = kMaxLeaves;
inline constexpr int kStateGraphExportCap = 7;
inline constexpr std::uint64_t kOracleWalks = 1000;
inline constexpr int kOracleWalkSteps = 50;

struct Options {
    std::string format = "json";
    int threads = 1;
    std::uint64_t seed = 0;
    std::string out;
    bool timing = false;
};

// What a command hands back; rendering happens in one place.
struct Outcome {
    Json config = Json::object();
    Json result = Json::object();
    int code = kSuccess;
    std::optional<std::string> dot;
    std::optional<std::string> text;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string bracket(const Tree& tree) { return print_bracket(tree); }

Json coloring_json(const Coloring& c) {
    Json out;
    out["root"] = std::string(1, to_char(c.root));
    out["signs"] = c.signs.str();
    return out;
}

Json pair_json(const Tree& left, const Tree& right) {
    Json out;
    out["left"] = bracket(left);
    out["right"] = bracket(right);
    return out;
}

Color parse_root(const std::string& text) {
    if (text.size() != 1) {
        throw std::invalid_argument("root colour must be one of I, J, K");
    }
    return parse_color(text[0]);
}

void require_same_size(const Tree& left, const Tree& right) {
    if (left.leaf_count() != right.leaf_count()) {
        throw std::invalid_argument("trees have different leaf counts (" + std::to_string(left.leaf_count()) +
                                    " and " + std::to_string(right.leaf_count()) + ")");
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open " + path + " for writing");
    }
    file << content;
    file.flush();
    if (!file) {
        throw IoError("failed writing " + path);
    }
}

// Generic text rendering: scalars on one line, scalar arrays one item per
// line, anything nested as compact JSON.
std::string render_text(const Json& result) {
    std::ostringstream out;
    for (const auto& [key, value] : result.items()) {
        if (value.is_array() && std::all_of(value.begin(), value.end(), [](const Json& v) { return v.is_primitive(); })) {
            out << key << ":\n";
            for (const auto& item : value) {
                out << "  " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
            }
        } else if (value.is_string()) {
            out << key << ": " << value.get<std::string>() << "\n";
        } else {
            out << key << ": " << value.dump() << "\n";
        }
    }
    return out.str();
}

// ---- commands ---------------------------------------------------------------

Outcome cmd_enumerate(int n, bool count_only) {
    Outcome o;
    o.config["n"] = n;
    o.config["count_only"] = count_only;
    o.result["n"] = n;
    if (count_only) {
        if (n < 1) {
            throw std::invalid_argument("n must be at least 1");
        }
        if (n > kCountCap) {
            throw CapExceeded("enumerate --count", n, kCountCap);
        }
        o.result["count"] = catalan_g(n).convert_to<std::uint64_t>();
        o.text = std::to_string(o.result["count"].get<std::uint64_t>()) + "\n";
        return o;
    }
    const auto trees = enumerate_trees(n);
    o.result["count"] = trees.size();
    Json list = Json::array();
    std::string text;
    for (const Tree& t : trees) {
        list.push_back(bracket(t));
        text += bracket(t) + "\n";
    }
    o.result["trees"] = std::move(list);
    o.text = std::move(text);
    return o;
}

Outcome cmd_color(const std::string& tree_text, const std::optional<std::string>& signs_text,
                  const std::optional<std::string>& root_text, const std::optional<std::string>& leaves_text,
                  bool frozen) {
    Outcome o;
    o.config["tree"] = tree_text;
    const Tree tree = parse_bracket(tree_text);
    const int modes = (signs_text ? 1 : 0) + (leaves_text ? 1 : 0) + (frozen ? 1 : 0);
    if (modes != 1) {
        throw std::invalid_argument("give exactly one of --signs, --leaves, --frozen");
    }
    o.result["tree"] = bracket(tree);

    if (leaves_text) {
        o.config["leaves"] = *leaves_text;
        if (root_text) {
            o.config["root"] = *root_text;
        }
        const LeafVector leaves = parse_leaf_vector(*leaves_text);
        if (static_cast<int>(leaves.size()) != tree.leaf_count()) {
            throw std::invalid_argument("leaf vector length does not match the tree");
        }
        const std::optional<Color> root = root_text ? std::optional<Color>(parse_root(*root_text)) : std::nullopt;
        const auto found = colorings_matching(tree, leaves, root);
        o.result["leaves"] = to_string(leaves);
        Json list = Json::array();
        for (const Coloring& c : found) {
            list.push_back(coloring_json(c));
        }
        o.result["colorings"] = std::move(list);
        o.code = found.empty() ? kNegative : kSuccess;
        return o;
    }

    Coloring coloring;
    if (frozen) {
        o.config["frozen"] = true;
        coloring = frozen_coloring(tree);
    } else {
        o.config["signs"] = *signs_text;
        o.config["root"] = root_text.value_or("K");
        coloring.signs = Signs::parse(*signs_text);
        coloring.root = parse_root(root_text.value_or("K"));
        if (coloring.signs.size() != tree.internal_count()) {
            throw std::invalid_argument("expected " + std::to_string(tree.internal_count()) + " signs, got " +
                                        std::to_string(coloring.signs.size()));
        }
    }
    const auto edges = edge_colors(tree, coloring);
    o.result["coloring"] = coloring_json(coloring);
    o.result["leaves"] = to_string(leaf_vector(tree, coloring));
    // Edge above internal vertex k is "v<k>" (v0 is the root edge); leaf edges use the variable.
    Json named = Json::object();
    for (int id = 0; id < tree.node_count(); ++id) {
        const Node& node = tree.node(id);
        const std::string name =
            node.is_leaf() ? "x" + std::to_string(node.label) : "v" + std::to_string(tree.internal_index(id));
        named[name] = std::string(1, to_char(edges[static_cast<std::size_t>(id)]));
    }
    o.result["edges"] = std::move(named);
    o.result["proper"] = is_proper(tree, edges);
    const State state(tree, coloring.signs, coloring.root);
    Json admissible = Json::array();
    for (const MoveSite site : sites(tree)) {
        if (is_admissible(state, site)) {
            admissible.push_back(site.vertex);
        }
    }
    o.result["admissible_sites"] = std::move(admissible);
    return o;
}

Outcome cmd_sharp(const std::string& left_text, const std::string& right_text, std::optional<std::size_t> limit) {
    Outcome o;
    o.config["left"] = left_text;
    o.config["right"] = right_text;
    if (limit) {
        o.config["limit"] = *limit;
    }
    const Tree left = parse_bracket(left_text);
    const Tree right = parse_bracket(right_text);
    require_same_size(left, right);
    const auto solutions = sharp_solutions(left, right);
    o.result["left"] = bracket(left);
    o.result["right"] = bracket(right);
    o.result["count"] = solutions.size();
    Json list = Json::array();
    for (const LeafVector& x : solutions) {
        if (limit && list.size() >= *limit) {
            break;
        }
        list.push_back(to_string(x));
    }
    o.result["solutions"] = std::move(list);
    o.code = solutions.empty() ? kNegative : kSuccess;
    return o;
}

Outcome cmd_tie(const std::string& left_text, const std::string& right_text, bool color, bool correspondence) {
    Outcome o;
    o.config["left"] = left_text;
    o.config["right"] = right_text;
    o.config["color"] = color;
    o.config["correspondence"] = correspondence;
    const Tree left = parse_bracket(left_text);
    const Tree right = parse_bracket(right_text);
    require_same_size(left, right);
    const TiedMap map = tie(left, right);
    const CubicGraph graph = map.graph();
    o.result["left"] = bracket(left);
    o.result["right"] = bracket(right);
    o.result["vertex_count"] = map.vertex_count();
    o.result["edge_count"] = map.edges.size();
    o.result["faces"] = map.face_count();
    o.result["bridgeless"] = graph.is_bridgeless();
    o.result["map"] = to_json(map);
    std::optional<TaitColoring> first;
    if (color) {
        const auto found = tait_colorings(graph, 1);
        o.result["tait_colorable"] = !found.empty();
        if (!found.empty()) {
            first = found.front();
            Json edges = Json::array();
            for (const Color c : *first) {
                edges.push_back(std::string(1, to_char(c)));
            }
            o.result["tait_coloring"] = std::move(edges);
            o.result["leaf_restriction"] = to_string(leaf_restriction(map, *first));
        } else {
            o.code = kNegative;
        }
    }
    if (correspondence) {
        const CorrespondenceReport report = coloring_correspondence(left, right);
        Json c;
        c["tait_count"] = report.tait_count;
        c["solution_count"] = report.solution_count;
        c["restriction_well_defined"] = report.restriction_well_defined;
        c["surjective"] = report.surjective;
        c["predicted_count"] = report.predicted_count;
        c["holds"] = report.holds();
        Json witnesses = Json::array();
        for (const auto& [x, index] : report.witnesses) {
            Json w;
            w["solution"] = to_string(x);
            w["tait_coloring_index"] = index;
            witnesses.push_back(std::move(w));
        }
        c["witnesses"] = std::move(witnesses);
        o.result["correspondence"] = std::move(c);
        if (!report.holds()) {
            o.code = kNegative;
        }
    }
    o.dot = to_dot(map, first ? &*first : nullptr);
    return o;
}

Outcome cmd_path(const std::string& left_text, const std::string& right_text,
                 const std::optional<std::string>& signs_text, const std::optional<std::string>& root_text,
                 bool factorized) {
    Outcome o;
    o.config["left"] = left_text;
    o.config["right"] = right_text;
    if (signs_text) {
        o.config["signs"] = *signs_text;
    }
    if (root_text) {
        o.config["root"] = *root_text;
    }
    o.config["factorized"] = factorized;
    const Tree left = parse_bracket(left_text);
    const Tree right = parse_bracket(right_text);
    require_same_size(left, right);
    if (factorized && signs_text) {
        throw std::invalid_argument("--factorized chooses its own signs; drop --signs");
    }

    std::optional<AdmissiblePath> path;
    Json extra = Json::object();
    if (signs_text) {
        const Signs signs = Signs::parse(*signs_text);
        if (signs.size() != left.internal_count()) {
            throw std::invalid_argument("expected " + std::to_string(left.internal_count()) + " signs, got " +
                                        std::to_string(signs.size()));
        }
        path = admissible_path(State(left, signs, parse_root(root_text.value_or("K"))), right);
    } else if (factorized) {
        const auto f = factorized_path(left, right);
        Json shared = Json::array();
        for (const Diagonal& d : shared_diagonals(left, right)) {
            shared.push_back(Json::array({d.a, d.b}));
        }
        extra["shared_diagonals"] = std::move(shared);
        Json regions = Json::array();
        for (const Region& region : factor_regions(left, right)) {
            Json r;
            r["vertices"] = region.vertices;
            r["left"] = bracket(region.left);
            r["right"] = bracket(region.right);
            regions.push_back(std::move(r));
        }
        extra["regions"] = std::move(regions);
        if (f) {
            path = f->path;
        }
    } else {
        path = find_admissible_path(left, right);
    }

    o.result["left"] = bracket(left);
    o.result["right"] = bracket(right);
    o.result["found"] = path.has_value();
    o.result["rotation_distance"] = rotation_distance(left, right);
    if (path) {
        o.result["signs"] = path->start().signs.str();
        o.result["root"] = std::string(1, to_char(path->start().root));
        o.result["leaves"] = to_string(path->start().leaves());
        o.result["length"] = path->length();
        o.result["path"] = to_json(*path);
    } else {
        o.result["path"] = "none";
        o.code = kNegative;
    }
    for (auto& [key, value] : extra.items()) {
        o.result[key] = value;
    }
    return o;
}

Outcome cmd_comb(const std::string& tree_text, const std::string& target, std::optional<int> apex) {
    Outcome o;
    o.config["tree"] = tree_text;
    o.config["target"] = target;
    const Tree tree = parse_bracket(tree_text);
    AdmissiblePath path;
    Tree goal;
    if (target == "left") {
        path = comb_path(tree);
        goal = Tree::left_comb(tree.leaf_count());
    } else if (target == "right") {
        path = mirror_comb_path(tree);
        goal = Tree::right_comb(tree.leaf_count());
    } else {
        if (!apex) {
            throw std::invalid_argument("--target fan needs --apex");
        }
        o.config["apex"] = *apex;
        path = block_comb_path(tree, *apex);
        goal = fan_tree(tree.leaf_count(), *apex);
    }
    o.result["tree"] = bracket(tree);
    o.result["target"] = bracket(goal);
    o.result["length"] = path.length();
    o.result["valid"] = is_valid(path);
    o.result["reaches_target"] = path.finish().tree == goal;
    o.result["path"] = to_json(path);
    o.code = is_valid(path) && path.finish().tree == goal ? kSuccess : kNegative;
    return o;
}

// ---- verify -----------------------------------------------------------------

Json verify_conjecture_json(int n, int threads, bool detail, bool& passed) {
    const ConjectureReport report = verify_conjecture(n, threads);
    const StateSpace& space = state_space(n);
    Json r;
    r["trees"] = report.trees;
    r["states"] = report.states;
    r["components"] = report.components;
    r["isolated_states"] = report.isolated_states;
    r["pairs"] = report.pairs;
    r["satisfied"] = report.satisfied;
    Json counterexamples = Json::array();
    for (const TreePair& p : report.counterexamples) {
        counterexamples.push_back(pair_json(space.tree(p.left), space.tree(p.right)));
    }
    r["counterexamples"] = std::move(counterexamples);
    if (detail) {
        Json pairs = Json::array();
        for (std::uint64_t a = 0; a < report.trees; ++a) {
            for (std::uint64_t b = 0; b < report.trees; ++b) {
                Json item = pair_json(space.tree(a), space.tree(b));
                const auto path = find_admissible_path(space.tree(a), space.tree(b));
                item["satisfied"] = path.has_value();
                if (path) {
                    item["signs"] = path->start().signs.str();
                    item["moves"] = to_json(*path)["moves"];
                }
                pairs.push_back(std::move(item));
            }
        }
        r["detail"] = std::move(pairs);
    }
    passed = report.all_satisfied();
    return r;
}

Json verify_sign_theorem_json(int n, int threads, bool& passed) {
    const SignTheoremReport report = verify_sign_theorem(n, threads);
    Json r;
    r["checks"] = report.checks;
    r["both_sharp"] = report.both_sharp;
    r["violations"] = report.violations;
    Json examples = Json::array();
    for (const SignViolation& v : report.examples) {
        Json e = pair_json(unrank(n, v.left_rank), unrank(n, v.right_rank));
        e["leaves"] = to_string(v.leaves);
        examples.push_back(std::move(e));
    }
    r["examples"] = std::move(examples);
    passed = report.violations == 0;
    return r;
}

Json verify_admissibility_json(int n, std::uint64_t seed, bool& passed) {
    const AdmissibilityReport report = verify_admissibility_rule(n);
    const WalkReport walks = random_walk_check(n, kOracleWalks, kOracleWalkSteps, seed);
    Json r;
    r["checks"] = report.checks;
    r["admissible"] = report.admissible;
    r["rule_mismatches"] = report.rule_mismatches;
    r["sign_mismatches"] = report.sign_mismatches;
    Json examples = Json::array();
    for (const auto& m : report.examples) {
        Json e = to_json(m.state);
        e["site"] = m.site.vertex;
        examples.push_back(std::move(e));
    }
    r["examples"] = std::move(examples);
    Json w;
    w["seed"] = seed;
    w["walks"] = walks.walks;
    w["steps"] = walks.steps;
    w["stuck"] = walks.stuck;
    w["violations"] = walks.violations;
    r["random_walks"] = std::move(w);
    passed = report.passed() && walks.violations == 0;
    return r;
}

Json verify_colorings_json(int n, bool& passed) {
    const ColoringBijectionReport report = verify_coloring_bijection(n);
    Json r;
    r["trees"] = report.trees;
    r["expected_per_tree"] = report.expected_per_tree;
    r["mismatched_trees"] = report.mismatched_trees;
    Json mismatches = Json::array();
    for (const std::uint64_t rank : report.mismatches) {
        mismatches.push_back(bracket(unrank(n, rank)));
    }
    r["mismatches"] = std::move(mismatches);
    passed = report.passed();
    return r;
}

Json verify_girth_json(int n, bool& passed) {
    const GirthReport report = girth_report(n);
    Json r;
    r["girth"] = report.girth;
    r["triangles"] = report.triangles;
    r["quadrilaterals"] = report.quadrilaterals;
    r["pentagons"] = report.pentagons;
    // Gamma_4 is a pentagon; from n = 5 on both 4- and 5-cycles occur.
    if (n == 4) {
        passed = report.triangles == 0 && report.girth == 5 && report.pentagons == 1 && report.quadrilaterals == 0;
    } else {
        passed = report.triangles == 0 && report.girth == 4 && report.quadrilaterals > 0 && report.pentagons > 0;
    }
    return r;
}

Json verify_geodesics_json(int n, bool& passed) {
    const GeodesicReport report = geodesic_admissibility_report(n);
    const StateSpace& space = state_space(n);
    Json r;
    r["exploratory"] = n > 5;
    r["pairs"] = report.pairs;
    r["geodesic_pairs"] = report.geodesic_pairs;
    r["unreachable_pairs"] = report.unreachable_pairs;
    Json excess = Json::array();
    for (const auto& e : report.excess) {
        Json item = pair_json(space.tree(e.pair.left), space.tree(e.pair.right));
        item["rotation_distance"] = e.rotation_distance;
        item["admissible_distance"] = e.admissible_distance;
        excess.push_back(std::move(item));
    }
    r["excess"] = std::move(excess);
    passed = n > 5 || report.geodesic_pairs == report.pairs;
    return r;
}

Json verify_frozen_json(int n, bool& passed) {
    const FrozenReport report = verify_frozen(n);
    Json r;
    r["trees"] = report.trees;
    r["trees_with_moves"] = report.trees_with_moves;
    passed = report.trees_with_moves == 0;
    return r;
}

const std::vector<std::string> kVerifyKinds{"conjecture", "sign-theorem", "admissibility-oracle", "colorings",
                                            "girth",      "geodesics",    "frozen"};

Outcome cmd_verify(const std::string& kind, int n, const Options& options, bool detail) {
    Outcome o;
    o.config["kind"] = kind;
    o.config["n"] = n;
    if (kind == "conjecture") {
        o.config["detail"] = detail;
    }
    bool passed = false;
    Json body;
    if (kind == "conjecture") {
        body = verify_conjecture_json(n, options.threads, detail, passed);
    } else if (kind == "sign-theorem") {
        body = verify_sign_theorem_json(n, options.threads, passed);
    } else if (kind == "admissibility-oracle") {
        body = verify_admissibility_json(n, options.seed, passed);
    } else if (kind == "colorings") {
        body = verify_colorings_json(n, passed);
    } else if (kind == "girth") {
        body = verify_girth_json(n, passed);
    } else if (kind == "geodesics") {
        body = verify_geodesics_json(n, passed);
    } else {
        body = verify_frozen_json(n, passed);
    }
    o.result["kind"] = kind;
    o.result["n"] = n;
    o.result["passed"] = passed;
    for (auto& [key, value] : body.items()) {
        o.result[key] = value;
    }
    o.code = passed ? kSuccess : kNegative;
    return o;
}

// ---- export / witness / gamma ----------------------------------------------

std::size_t count_dot_edges(const std::string& dot) {
    std::size_t count = 0;
    for (std::size_t pos = 0; (pos = dot.find(" -- ", pos)) != std::string::npos; pos += 4) {
        ++count;
    }
    return count;
}

Outcome cmd_export(const std::string& what, const std::vector<std::string>& args, const std::string& path,
                   bool color) {
    Outcome o;
    o.config["what"] = what;
    o.config["args"] = args;
    o.config["dot_path"] = path;
    if (path.empty()) {
        throw std::invalid_argument("export needs --out <file.dot>");
    }
    auto need = [&](std::size_t count) {
        if (args.size() != count) {
            throw std::invalid_argument("export " + what + " takes " + std::to_string(count) + " argument(s)");
        }
    };
    auto parse_n = [](const std::string& text) {
        std::size_t used = 0;
        const int n = std::stoi(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument("not an integer: " + text);
        }
        return n;
    };
    std::string dot;
    std::size_t nodes = 0;
    if (what == "gamma") {
        need(1);
        const RotationGraph g = build_gamma(parse_n(args[0]));
        dot = to_dot(g);
        nodes = g.vertex_count();
    } else if (what == "stategraph") {
        need(1);
        const int n = parse_n(args[0]);
        if (n > kStateGraphExportCap) {
            throw CapExceeded("export stategraph", n, kStateGraphExportCap);
        }
        const StateSpace& space = state_space(n);
        dot = state_graph_dot(space);
        nodes = space.state_count();
    } else {
        need(2);
        const Tree left = parse_bracket(args[0]);
        const Tree right = parse_bracket(args[1]);
        require_same_size(left, right);
        const TiedMap map = tie(left, right);
        std::optional<TaitColoring> first;
        if (color) {
            const auto found = tait_colorings(map.graph(), 1);
            if (!found.empty()) {
                first = found.front();
            }
        }
        dot = to_dot(map, first ? &*first : nullptr);
        nodes = static_cast<std::size_t>(map.vertex_count());
    }
    write_file(path, dot);
    o.result["what"] = what;
    o.result["path"] = path;
    o.result["nodes"] = nodes;
    o.result["edges"] = count_dot_edges(dot);
    return o;
}

Outcome cmd_witness(int max_n) {
    Outcome o;
    o.config["max_n"] = max_n;
    const auto w = frozen_witness_search(max_n);
    o.result["max_n"] = max_n;
    o.result["found"] = w.has_value();
    if (w) {
        o.result["n"] = w->n;
        o.result["left"] = bracket(w->left);
        o.result["right"] = bracket(w->right);
        o.result["leaves"] = to_string(w->leaves);
        const State l(w->left, frozen_coloring(w->left).signs);
        const State r(w->right, frozen_coloring(w->right).signs);
        o.result["left_signs"] = l.signs.str();
        o.result["right_signs"] = r.signs.str();
        o.result["left_admissible_moves"] = admissible_degree(l);
        o.result["right_admissible_moves"] = admissible_degree(r);
        const SignedVec lv = evaluate_cross(w->left, w->leaves);
        const SignedVec rv = evaluate_cross(w->right, w->leaves);
        o.result["left_value"] = to_string(lv);
        o.result["right_value"] = to_string(rv);
        o.result["sharp"] = !lv.is_zero() && lv == rv;
        o.result["replay_confirms"] = l.leaves() == w->leaves && r.leaves() == w->leaves &&
                                      admissible_degree(l) == 0 && admissible_degree(r) == 0;
    }
    return o;
}

Outcome cmd_gamma(int n) {
    Outcome o;
    o.config["n"] = n;
    const RotationGraph g = build_gamma(n);
    o.result["n"] = n;
    o.result["vertices"] = g.vertex_count();
    o.result["edges"] = g.edge_count();
    o.result["degree"] = std::max(n - 2, 0);
    o.result["regular"] = g.is_regular(static_cast<std::size_t>(std::max(n - 2, 0)));
    o.result["connected"] = g.is_connected();
    int diameter = 0;
    if (g.vertex_count() <= 5000) {
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            for (const int d : bfs_distances(g, v)) {
                diameter = std::max(diameter, d);
            }
        }
        o.result["diameter"] = diameter;
    }
    if (n >= 4 && n <= kGirthCap) {
        const GirthReport r = girth_report(n);
        Json girth;
        girth["girth"] = r.girth;
        girth["triangles"] = r.triangles;
        girth["quadrilaterals"] = r.quadrilaterals;
        girth["pentagons"] = r.pentagons;
        o.result["cycles"] = std::move(girth);
    }
    o.dot = to_dot(g);
    return o;
}

// ---- driver -----------------------------------------------------------------

std::string render(const std::string& command, const Options& options, const Outcome& outcome,
                   std::optional<double> seconds) {
    if (options.format == "dot") {
        return *outcome.dot;
    }
    if (options.format == "text") {
        return outcome.text ? *outcome.text : render_text(outcome.result);
    }
    Json report;
    report["tool"] = "fct";
    report["version"] = FCT_VERSION;
    report["command"] = command;
    Json config;
    config["format"] = options.format;
    config["threads"] = options.threads;
    config["seed"] = options.seed;
    for (auto& [key, value] : outcome.config.items()) {
        config[key] = value;
    }
    report["config"] = std::move(config);
    if (seconds) {
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << *seconds;
        report["timing"] = {{"seconds", std::stod(s.str())}};
    }
    report["result"] = outcome.result;
    return report.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bracketed products, tree rotations and edge 3-colourings", "fct"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", FCT_VERSION);

    Options options;
    app.add_option("--format", options.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();
    app.add_option("--threads", options.threads, "Worker threads for sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", options.seed, "Seed for randomized checks")->capture_default_str();
    app.add_option("--out", options.out, "Write the report here (export: the DOT file)");
    app.add_flag("--timing", options.timing, "Include wall-clock timing in the report");

    std::function<Outcome()> action;
    std::string command;
    bool supports_dot = false;

    int n = 0;
    bool count_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "List all trees with n leaves, or count them");
    enumerate->add_option("n", n, "Leaf count")->required();
    enumerate->add_flag("--count", count_only, "Only print g(n)");
    enumerate->callback([&] { action = [&] { return cmd_enumerate(n, count_only); }; });

    std::string tree_text;
    std::optional<std::string> signs_text;
    std::optional<std::string> root_text;
    std::optional<std::string> leaves_text;
    bool frozen = false;
    auto* color = app.add_subcommand("color", "Edge colouring of a tree from signs, leaves or the frozen rule");
    color->add_option("tree", tree_text, "Bracket expression")->required();
    color->add_option("--signs", signs_text, "Sign per internal vertex in preorder, e.g. +-+");
    color->add_option("--root", root_text, "Root edge colour (I, J or K)");
    color->add_option("--leaves", leaves_text, "Leaf colours, e.g. JKJ; lists matching colourings");
    color->add_flag("--frozen", frozen, "Use the alternating-sign colouring");
    color->callback([&] { action = [&] { return cmd_color(tree_text, signs_text, root_text, leaves_text, frozen); }; });

    std::string left_text;
    std::string right_text;
    std::optional<std::size_t> limit;
    auto* sharp = app.add_subcommand("sharp", "Sharp solutions of L = R");
    sharp->add_option("left", left_text)->required();
    sharp->add_option("right", right_text)->required();
    sharp->add_option("--limit", limit, "Print at most this many solutions");
    sharp->callback([&] { action = [&] { return cmd_sharp(left_text, right_text, limit); }; });

    bool tie_color = false;
    bool correspondence = false;
    auto* tie_cmd = app.add_subcommand("tie", "Tie two trees into a cubic map");
    tie_cmd->add_option("left", left_text)->required();
    tie_cmd->add_option("right", right_text)->required();
    tie_cmd->add_flag("--color", tie_color, "Find one Tait colouring");
    tie_cmd->add_flag("--correspondence", correspondence, "Check Tait colourings against sharp solutions");
    tie_cmd->callback([&] {
        supports_dot = true;
        action = [&] { return cmd_tie(left_text, right_text, tie_color, correspondence); };
    });

    bool factorized = false;
    auto* path = app.add_subcommand("path", "Admissible path from L to R");
    path->add_option("left", left_text)->required();
    path->add_option("right", right_text)->required();
    path->add_option("--signs", signs_text, "Start signs on L (default: search all)");
    path->add_option("--root", root_text, "Root colour with --signs (default K)");
    path->add_flag("--factorized", factorized, "Split along shared diagonals first");
    path->callback([&] {
        action = [&] { return cmd_path(left_text, right_text, signs_text, root_text, factorized); };
    });

    std::string target = "left";
    std::optional<int> apex;
    auto* comb = app.add_subcommand("comb", "Constructive path to a comb or fan");
    comb->add_option("tree", tree_text)->required();
    comb->add_option("--target", target, "left, right or fan")
        ->check(CLI::IsMember({"left", "right", "fan"}))
        ->capture_default_str();
    comb->add_option("--apex", apex, "Polygon vertex 0..n shared by all diagonals (fan target)");
    comb->callback([&] { action = [&] { return cmd_comb(tree_text, target, apex); }; });

    std::string kind;
    bool detail = false;
    auto* verify = app.add_subcommand("verify", "Exhaustive checks; exit 1 on any failure");
    verify->add_option("kind", kind)->required()->check(CLI::IsMember(kVerifyKinds));
    verify->add_option("n", n)->required();
    verify->add_flag("--detail", detail, "conjecture: per-pair witness");
    verify->callback([&] { action = [&] { return cmd_verify(kind, n, options, detail); }; });

    std::string what;
    std::vector<std::string> export_args;
    bool export_color = false;
    auto* exp = app.add_subcommand("export", "Write a DOT file");
    exp->add_option("what", what)->required()->check(CLI::IsMember({"gamma", "stategraph", "tiedmap"}));
    exp->add_option("args", export_args, "n, or two trees for tiedmap");
    exp->add_flag("--color", export_color, "tiedmap: colour edges with one Tait colouring");
    exp->callback([&] { action = [&] { return cmd_export(what, export_args, options.out, export_color); }; });

    int max_n = 0;
    auto* witness = app.add_subcommand("witness", "Two trees with equal frozen leaf colours");
    witness->add_option("max_n", max_n)->required();
    witness->callback([&] { action = [&] { return cmd_witness(max_n); }; });

    auto* gamma = app.add_subcommand("gamma", "Rotation graph summary");
    gamma->add_option("n", n)->required();
    gamma->callback([&] {
        supports_dot = true;
        action = [&] { return cmd_gamma(n); };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }
    command = app.get_subcommands().front()->get_name();
    if (options.format == "dot" && !supports_dot) {
        err << "error: --format dot is not available for '" << command << "'\n";
        return kUsage;
    }

    try {
        const auto started = std::chrono::steady_clock::now();
        const Outcome outcome = action();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
        // export uses --out for the DOT file; its report always goes to stdout
        const bool to_file = !options.out.empty() && command != "export";
        const std::string text =
            render(command, options, outcome, options.timing ? std::optional<double>(elapsed.count()) : std::nullopt);
        if (to_file) {
            write_file(options.out, text);
        } else {
            out << text;
        }
        return outcome.code;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace fct::cli
