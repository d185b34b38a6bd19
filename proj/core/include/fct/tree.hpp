#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace fct {

/// Largest leaf count a Tree can hold; the balanced-parenthesis code and the
/// packed sign vectors both need 2(n-1) and n-1 bits respectively.
inline constexpr int kMaxLeaves = 32;

struct Node {
    int left = -1;
    int right = -1;
    int parent = -1;
    int label = 0;  // leaves only: the variable index i of x_i
    int first = 0;  // leftmost leaf position covered (1-based)
    int last = 0;   // rightmost leaf position covered

    bool is_leaf() const noexcept { return left < 0; }

    friend bool operator==(const Node&, const Node&) = default;
};

/// An internal edge (u, v) where v is an internal, non-root vertex. Keyed by
/// the preorder index of v among the internal vertices, so a tree with n
/// leaves has sites 1..n-2.
struct MoveSite {
    int vertex = 0;

    friend auto operator<=>(const MoveSite&, const MoveSite&) = default;
};

/// Full binary tree over ordered leaves; the tree of a bracketed product.
///
/// Nodes are stored in preorder, so the root is node 0 and two trees are
/// equal iff their node arrays are equal. Internal vertices additionally get a
/// dense preorder index 0..n-2 which is what sign vectors and move sites use.
class Tree {
public:
    /// The single leaf x1.
    Tree();

    static Tree leaf(int label = 1);
    static Tree join(const Tree& left, const Tree& right);
    static Tree left_comb(int leaves);
    static Tree right_comb(int leaves);

    /// Builds a tree from child links over arbitrary node ids. `old_to_new`,
    /// when given, receives the preorder id assigned to each input id.
    static Tree from_links(int root, std::span<const int> left, std::span<const int> right,
                           std::span<const int> labels, std::vector<int>* old_to_new = nullptr);

    /// Inverse of dyck(): word has 2(leaves-1) significant bits, first symbol
    /// in the most significant position, '(' = 0 and ')' = 1.
    static Tree from_dyck(std::uint64_t word, int leaves);

    int leaf_count() const noexcept { return (node_count() + 1) / 2; }
    int internal_count() const noexcept { return static_cast<int>(internal_.size()); }
    int node_count() const noexcept { return static_cast<int>(nodes_.size()); }

    const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
    std::span<const Node> nodes() const noexcept { return nodes_; }

    /// Node ids of internal vertices in preorder.
    std::span<const int> internal_nodes() const noexcept { return internal_; }
    int internal_node(int index) const { return internal_.at(static_cast<std::size_t>(index)); }
    /// Preorder index among internal vertices, or -1 for a leaf.
    int internal_index(int node_id) const {
        return internal_index_.at(static_cast<std::size_t>(node_id));
    }

    /// Node ids of the leaves, left to right.
    std::vector<int> leaf_nodes() const;
    /// Leaf labels read left to right.
    std::vector<int> labels() const;
    /// True when the labels read 1..n left to right.
    bool is_canonical() const;

    /// Balanced-parenthesis code of the shape: enc(leaf) = "",
    /// enc((A B)) = "(" enc(A) ")" enc(B). Labels are ignored.
    std::uint64_t dyck() const;

    friend bool operator==(const Tree&, const Tree&) = default;

private:
    explicit Tree(std::vector<Node> nodes);
    void index();

    std::vector<Node> nodes_;
    std::vector<int> internal_;
    std::vector<int> internal_index_;
};

/// Parses "x<k>" leaves and "(A B)" products. Whitespace is ignored. Variables
/// must read x1, x2, ..., xn left to right. Throws ParseError.
Tree parse_bracket(std::string_view text);

/// Inverse of parse_bracket; a single leaf prints as "x1".
std::string print_bracket(const Tree& tree);

/// Swaps children at every internal vertex, keeping variable labels, so
/// [(xy)z]* = z(yx).
Tree mirror(const Tree& tree);

/// All n-2 move sites in ascending preorder order.
std::vector<MoveSite> sites(const Tree& tree);

/// Result of one transplantation. The upper participant keeps the leaf range
/// of the old upper vertex; the lower participant is the new inner vertex.
struct Rotation {
    Tree tree;
    MoveSite inverse;             // the site that undoes this move
    std::vector<int> vertex_map;  // old internal index -> new internal index
    int upper = 0;                // new internal index of the upper participant
    int lower = 0;                // new internal index of the lower participant
};

/// (A(BC)) -> ((AB)C) when the site vertex is a right child, the reverse when
/// it is a left child. Throws InvalidMove for a site outside 1..n-2.
Rotation rotate(const Tree& tree, MoveSite site);

Tree apply_move(const Tree& tree, MoveSite site);

/// Nested-array encoding, e.g. [[1,2],3].
nlohmann::json to_json(const Tree& tree);
Tree tree_from_json(const nlohmann::json& value);

}  // namespace fct
