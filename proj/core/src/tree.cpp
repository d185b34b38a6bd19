#include "fct/tree.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

#include "fct/error.hpp"

namespace fct {

namespace {

void check_leaf_count(int leaves) {
    if (leaves < 1) {
        throw std::invalid_argument("tree needs at least one leaf");
    }
}

// Appends the subtree rooted at `id` in preorder. Returns the new id.
int emit_preorder(int id, std::span<const int> left, std::span<const int> right,
                  std::span<const int> labels, std::vector<Node>& out, std::vector<int>* old_to_new) {
    const int self = static_cast<int>(out.size());
    out.emplace_back();
    if (old_to_new != nullptr) {
        (*old_to_new)[static_cast<std::size_t>(id)] = self;
    }
    const auto i = static_cast<std::size_t>(id);
    if (left[i] < 0) {
        out[static_cast<std::size_t>(self)].label = labels[i];
        return self;
    }
    const int l = emit_preorder(left[i], left, right, labels, out, old_to_new);
    const int r = emit_preorder(right[i], left, right, labels, out, old_to_new);
    out[static_cast<std::size_t>(self)].left = l;
    out[static_cast<std::size_t>(self)].right = r;
    return self;
}

}  // namespace

Tree::Tree() : Tree(std::vector<Node>{Node{.label = 1}}) {}

Tree::Tree(std::vector<Node> nodes) : nodes_(std::move(nodes)) { index(); }

void Tree::index() {
    internal_.clear();
    internal_index_.assign(nodes_.size(), -1);
    int position = 0;
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
        Node& node = nodes_[id];
        if (!node.is_leaf()) {
            internal_index_[id] = static_cast<int>(internal_.size());
            internal_.push_back(static_cast<int>(id));
            nodes_[static_cast<std::size_t>(node.left)].parent = static_cast<int>(id);
            nodes_[static_cast<std::size_t>(node.right)].parent = static_cast<int>(id);
        } else {
            ++position;
            node.first = node.last = position;
        }
    }
    // Children follow their parent in preorder, so a reverse sweep sees both
    // children first.
    for (std::size_t k = nodes_.size(); k-- > 0;) {
        Node& node = nodes_[k];
        if (!node.is_leaf()) {
            node.first = nodes_[static_cast<std::size_t>(node.left)].first;
            node.last = nodes_[static_cast<std::size_t>(node.right)].last;
        }
    }
    nodes_.front().parent = -1;
}

Tree Tree::leaf(int label) {
    if (label < 1) {
        throw std::invalid_argument("leaf label must be positive");
    }
    return Tree(std::vector<Node>{Node{.label = label}});
}

Tree Tree::join(const Tree& left, const Tree& right) {
    std::vector<Node> nodes;
    nodes.reserve(left.nodes_.size() + right.nodes_.size() + 1);
    const int left_offset = 1;
    const int right_offset = 1 + left.node_count();
    nodes.push_back(Node{.left = left_offset, .right = right_offset});
    for (const auto& [source, offset] : {std::pair{&left, left_offset}, std::pair{&right, right_offset}}) {
        for (Node node : source->nodes_) {
            if (!node.is_leaf()) {
                node.left += offset;
                node.right += offset;
            }
            nodes.push_back(node);
        }
    }
    return Tree(std::move(nodes));
}

Tree Tree::left_comb(int leaves) {
    check_leaf_count(leaves);
    Tree tree = leaf(1);
    for (int i = 2; i <= leaves; ++i) {
        tree = join(tree, leaf(i));
    }
    return tree;
}

Tree Tree::right_comb(int leaves) {
    check_leaf_count(leaves);
    Tree tree = leaf(leaves);
    for (int i = leaves - 1; i >= 1; --i) {
        tree = join(leaf(i), tree);
    }
    return tree;
}

Tree Tree::from_links(int root, std::span<const int> left, std::span<const int> right,
                      std::span<const int> labels, std::vector<int>* old_to_new) {
    if (left.size() != right.size() || left.size() != labels.size()) {
        throw std::invalid_argument("from_links: link arrays differ in length");
    }
    if (old_to_new != nullptr) {
        old_to_new->assign(left.size(), -1);
    }
    std::vector<Node> nodes;
    nodes.reserve(left.size());
    emit_preorder(root, left, right, labels, nodes, old_to_new);
    return Tree(std::move(nodes));
}

Tree Tree::from_dyck(std::uint64_t word, int leaves) {
    check_leaf_count(leaves);
    if (leaves > kMaxLeaves) {
        throw CapExceeded("from_dyck", leaves, kMaxLeaves);
    }
    const int length = 2 * (leaves - 1);
    // T := eps | '(' T ')' T
    std::vector<int> left;
    std::vector<int> right;
    std::vector<int> labels;
    auto make = [&](int l, int r) {
        left.push_back(l);
        right.push_back(r);
        labels.push_back(0);
        return static_cast<int>(left.size()) - 1;
    };
    int pos = 0;
    auto symbol = [&](int p) { return (word >> (length - 1 - p)) & 1U; };
    // Recursive descent; depth is bounded by kMaxLeaves.
    auto parse = [&](auto&& self) -> int {
        if (pos < length && symbol(pos) == 0) {
            ++pos;
            const int l = self(self);
            if (pos >= length || symbol(pos) != 1) {
                throw std::invalid_argument("from_dyck: unbalanced word");
            }
            ++pos;
            const int r = self(self);
            return make(l, r);
        }
        return make(-1, -1);
    };
    const int root = parse(parse);
    if (pos != length) {
        throw std::invalid_argument("from_dyck: trailing symbols");
    }
    Tree tree = from_links(root, left, right, labels);
    int next = 1;
    for (Node& node : tree.nodes_) {
        if (node.is_leaf()) {
            node.label = next++;
        }
    }
    return tree;
}

std::vector<int> Tree::leaf_nodes() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(leaf_count()));
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
        if (nodes_[id].is_leaf()) {
            out.push_back(static_cast<int>(id));
        }
    }
    return out;
}

std::vector<int> Tree::labels() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(leaf_count()));
    for (const Node& node : nodes_) {
        if (node.is_leaf()) {
            out.push_back(node.label);
        }
    }
    return out;
}

bool Tree::is_canonical() const {
    int expected = 1;
    for (const Node& node : nodes_) {
        if (node.is_leaf() && node.label != expected++) {
            return false;
        }
    }
    return true;
}

std::uint64_t Tree::dyck() const {
    if (leaf_count() > kMaxLeaves) {
        throw CapExceeded("dyck", leaf_count(), kMaxLeaves);
    }
    std::uint64_t word = 0;
    auto encode = [&](auto&& self, int id) -> void {
        const Node& node = nodes_[static_cast<std::size_t>(id)];
        if (node.is_leaf()) {
            return;
        }
        word <<= 1;  // '('
        self(self, node.left);
        word = (word << 1) | 1U;  // ')'
        self(self, node.right);
    };
    encode(encode, 0);
    return word;
}

Tree parse_bracket(std::string_view text) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) {
            ++pos;
        }
    };
    int expected_label = 1;
    // Explicit stack: each frame is an open "(" collecting up to two operands.
    struct Frame {
        std::size_t open;
        std::vector<Tree> operands;
    };
    std::vector<Frame> stack;
    std::optional<Tree> result;

    auto push_operand = [&](Tree tree, std::size_t at) {
        if (stack.empty()) {
            if (result) {
                throw ParseError("unexpected operand after complete expression", at);
            }
            result = std::move(tree);
            return;
        }
        auto& operands = stack.back().operands;
        if (operands.size() == 2) {
            throw ParseError("a product takes exactly two factors", at);
        }
        operands.push_back(std::move(tree));
    };

    skip();
    if (pos == text.size()) {
        throw ParseError("empty expression", pos);
    }
    while (true) {
        skip();
        if (pos == text.size()) {
            break;
        }
        const std::size_t at = pos;
        const char c = text[pos];
        if (c == '(') {
            if (result) {
                throw ParseError("unexpected '(' after complete expression", at);
            }
            stack.push_back(Frame{at, {}});
            ++pos;
        } else if (c == ')') {
            if (stack.empty()) {
                throw ParseError("unmatched ')'", at);
            }
            Frame frame = std::move(stack.back());
            stack.pop_back();
            if (frame.operands.size() != 2) {
                throw ParseError("a product takes exactly two factors", at);
            }
            ++pos;
            push_operand(Tree::join(frame.operands[0], frame.operands[1]), at);
        } else if (c == 'x') {
            ++pos;
            const std::size_t digits = pos;
            long value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
                value = value * 10 + (text[pos] - '0');
                if (value > 1'000'000) {
                    throw ParseError("variable index too large", digits);
                }
                ++pos;
            }
            if (pos == digits) {
                throw ParseError("expected digits after 'x'", digits);
            }
            if (value != expected_label) {
                throw ParseError("expected variable x" + std::to_string(expected_label) + " but found x" +
                                     std::to_string(value),
                                 at);
            }
            ++expected_label;
            if (expected_label - 1 > kMaxLeaves) {
                throw ParseError("more than " + std::to_string(kMaxLeaves) + " variables", at);
            }
            push_operand(Tree::leaf(static_cast<int>(value)), at);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", at);
        }
    }
    if (!stack.empty()) {
        throw ParseError("unclosed '('", stack.back().open);
    }
    if (!result) {
        throw ParseError("empty expression", pos);
    }
    return *std::move(result);
}

std::string print_bracket(const Tree& tree) {
    std::string out;
    auto emit = [&](auto&& self, int id) -> void {
        const Node& node = tree.node(id);
        if (node.is_leaf()) {
            out += 'x';
            out += std::to_string(node.label);
            return;
        }
        out += '(';
        self(self, node.left);
        self(self, node.right);
        out += ')';
    };
    emit(emit, 0);
    return out;
}

Tree mirror(const Tree& tree) {
    const auto nodes = tree.nodes();
    std::vector<int> left(nodes.size());
    std::vector<int> right(nodes.size());
    std::vector<int> labels(nodes.size());
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        left[id] = nodes[id].right;
        right[id] = nodes[id].left;
        labels[id] = nodes[id].label;
    }
    return Tree::from_links(0, left, right, labels);
}

std::vector<MoveSite> sites(const Tree& tree) {
    std::vector<MoveSite> out;
    for (int v = 1; v < tree.internal_count(); ++v) {
        out.push_back(MoveSite{v});
    }
    return out;
}

Rotation rotate(const Tree& tree, MoveSite site) {
    if (site.vertex < 1 || site.vertex >= tree.internal_count()) {
        throw InvalidMove("move site " + std::to_string(site.vertex) + " is not an internal edge");
    }
    const auto nodes = tree.nodes();
    std::vector<int> left(nodes.size());
    std::vector<int> right(nodes.size());
    std::vector<int> labels(nodes.size());
    for (std::size_t id = 0; id < nodes.size(); ++id) {
        left[id] = nodes[id].left;
        right[id] = nodes[id].right;
        labels[id] = nodes[id].label;
    }
    const int v = tree.internal_node(site.vertex);
    const int u = nodes[static_cast<std::size_t>(v)].parent;
    const auto ui = static_cast<std::size_t>(u);
    const auto vi = static_cast<std::size_t>(v);
    if (right[ui] == v) {
        // u(A, v(B, C)) -> u(v(A, B), C)
        const int a = left[ui];
        const int b = left[vi];
        const int c = right[vi];
        left[ui] = v;
        right[ui] = c;
        left[vi] = a;
        right[vi] = b;
    } else {
        // u(v(A, B), C) -> u(A, v(B, C))
        const int a = left[vi];
        const int b = right[vi];
        const int c = right[ui];
        left[ui] = a;
        right[ui] = v;
        left[vi] = b;
        right[vi] = c;
    }
    std::vector<int> old_to_new;
    Rotation result{Tree::from_links(0, left, right, labels, &old_to_new), {}, {}, 0, 0};
    result.vertex_map.resize(static_cast<std::size_t>(tree.internal_count()));
    for (int k = 0; k < tree.internal_count(); ++k) {
        const int moved = old_to_new[static_cast<std::size_t>(tree.internal_node(k))];
        result.vertex_map[static_cast<std::size_t>(k)] = result.tree.internal_index(moved);
    }
    result.upper = result.tree.internal_index(old_to_new[ui]);
    result.lower = result.tree.internal_index(old_to_new[vi]);
    result.inverse = MoveSite{result.lower};
    return result;
}

Tree apply_move(const Tree& tree, MoveSite site) { return rotate(tree, site).tree; }

nlohmann::json to_json(const Tree& tree) {
    auto encode = [&](auto&& self, int id) -> nlohmann::json {
        const Node& node = tree.node(id);
        if (node.is_leaf()) {
            return node.label;
        }
        return nlohmann::json::array({self(self, node.left), self(self, node.right)});
    };
    return encode(encode, 0);
}

Tree tree_from_json(const nlohmann::json& value) {
    std::vector<bool> seen;
    auto decode = [&](auto&& self, const nlohmann::json& item, int depth) -> Tree {
        if (depth > kMaxLeaves) {
            throw std::invalid_argument("tree JSON nested too deeply");
        }
        if (item.is_number_integer()) {
            const auto label = item.get<long>();
            if (label < 1 || label > kMaxLeaves) {
                throw std::invalid_argument("tree JSON leaf label out of range");
            }
            if (seen.size() <= static_cast<std::size_t>(label)) {
                seen.resize(static_cast<std::size_t>(label) + 1, false);
            }
            if (seen[static_cast<std::size_t>(label)]) {
                throw std::invalid_argument("tree JSON repeats leaf label " + std::to_string(label));
            }
            seen[static_cast<std::size_t>(label)] = true;
            return Tree::leaf(static_cast<int>(label));
        }
        if (!item.is_array() || item.size() != 2) {
            throw std::invalid_argument("tree JSON: expected a leaf index or a pair");
        }
        Tree l = self(self, item[0], depth + 1);
        Tree r = self(self, item[1], depth + 1);
        return Tree::join(l, r);
    };
    Tree tree = decode(decode, value, 0);
    if (seen.size() != static_cast<std::size_t>(tree.leaf_count()) + 1) {
        throw std::invalid_argument("tree JSON labels are not 1..n");
    }
    return tree;
}

}  // namespace fct
