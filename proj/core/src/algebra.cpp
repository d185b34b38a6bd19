#include "fct/algebra.hpp"

#include <stdexcept>

#include "fct/error.hpp"

namespace fct {

char to_char(Klein k) noexcept { return "EIJK"[static_cast<int>(k)]; }

char to_char(Color c) noexcept { return to_char(to_klein(c)); }

char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }

std::string to_string(SignedVec v) {
    if (v.is_zero()) {
        return "0";
    }
    std::string out(1, v.sign > 0 ? '+' : '-');
    out += static_cast<char>(to_char(v.axis) - 'A' + 'a');
    return out;
}

std::string to_string(std::span<const Color> leaves) {
    std::string out;
    out.reserve(leaves.size());
    for (Color c : leaves) {
        out += to_char(c);
    }
    return out;
}

Color parse_color(char c) {
    switch (c) {
        case 'I':
        case 'i':
            return Color::I;
        case 'J':
        case 'j':
            return Color::J;
        case 'K':
        case 'k':
            return Color::K;
        default:
            throw std::invalid_argument(std::string("not a colour: '") + c + "'");
    }
}

LeafVector parse_leaf_vector(std::string_view text) {
    LeafVector out;
    out.reserve(text.size());
    for (char c : text) {
        out.push_back(parse_color(c));
    }
    return out;
}

Signs::Signs(int size, std::uint32_t value) : size_(size), value_(value) {
    if (size < 0 || size > 31) {
        throw std::invalid_argument("sign vector length must be in 0..31");
    }
    if (size < 32 && (static_cast<std::uint64_t>(value) >> size) != 0) {
        throw std::invalid_argument("sign value has bits beyond the vector length");
    }
}

Signs Signs::all(int size, Sign sign) {
    Signs out(size);
    if (sign == Sign::Minus) {
        out.value_ = static_cast<std::uint32_t>((std::uint64_t{1} << size) - 1);
    }
    return out;
}

Signs Signs::parse(std::string_view text) {
    Signs out(static_cast<int>(text.size()));
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '-') {
            out.set(static_cast<int>(i), Sign::Minus);
        } else if (text[i] != '+') {
            throw std::invalid_argument(std::string("not a sign: '") + text[i] + "'");
        }
    }
    return out;
}

std::string Signs::str() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int i = 0; i < size_; ++i) {
        out += to_char((*this)[i]);
    }
    return out;
}

namespace {

void check_leaves(const Tree& tree, std::span<const Color> leaves) {
    if (static_cast<int>(leaves.size()) != tree.leaf_count()) {
        throw std::invalid_argument("leaf vector has " + std::to_string(leaves.size()) + " entries, tree has " +
                                    std::to_string(tree.leaf_count()) + " leaves");
    }
}

}  // namespace

SignedVec evaluate_cross(const Tree& tree, std::span<const Color> leaves) {
    check_leaves(tree, leaves);
    const auto nodes = tree.nodes();
    std::vector<SignedVec> value(nodes.size());
    for (std::size_t k = nodes.size(); k-- > 0;) {
        const Node& node = nodes[k];
        value[k] = node.is_leaf()
                       ? SignedVec::basis(leaves[static_cast<std::size_t>(node.label - 1)])
                       : cross_mul(value[static_cast<std::size_t>(node.left)], value[static_cast<std::size_t>(node.right)]);
    }
    return value.front();
}

KleinEvaluation evaluate_klein_sharp(const Tree& tree, std::span<const Color> leaves) {
    check_leaves(tree, leaves);
    const auto nodes = tree.nodes();
    std::vector<Klein> value(nodes.size());
    bool sharp = true;
    for (std::size_t k = nodes.size(); k-- > 0;) {
        const Node& node = nodes[k];
        if (node.is_leaf()) {
            value[k] = to_klein(leaves[static_cast<std::size_t>(node.label - 1)]);
        } else {
            value[k] = klein_mul(value[static_cast<std::size_t>(node.left)], value[static_cast<std::size_t>(node.right)]);
            sharp = sharp && value[k] != Klein::E;
        }
    }
    return {value.front(), sharp};
}

std::uint64_t power_of_three(int n) {
    if (n < 0 || n > 40) {
        throw std::out_of_range("power_of_three: exponent out of range");
    }
    std::uint64_t out = 1;
    for (int i = 0; i < n; ++i) {
        out *= 3;
    }
    return out;
}

LeafVector leaf_vector_at(int n, std::uint64_t code) {
    LeafVector out(static_cast<std::size_t>(n));
    for (int i = n; i-- > 0;) {
        out[static_cast<std::size_t>(i)] = static_cast<Color>(code % 3 + 1);
        code /= 3;
    }
    return out;
}

}  // namespace fct
