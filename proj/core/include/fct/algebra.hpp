#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fct/tree.hpp"

namespace fct {

/// Klein four-group {E, I, J, K}. The encoding makes the group law XOR.
enum class Klein : std::uint8_t { E = 0, I = 1, J = 2, K = 3 };

/// Edge colour / cross-product axis; Klein without the identity.
enum class Color : std::uint8_t { I = 1, J = 2, K = 3 };

inline constexpr Color kColors[] = {Color::I, Color::J, Color::K};

enum class Sign : std::uint8_t { Plus = 0, Minus = 1 };

constexpr Klein klein_mul(Klein a, Klein b) noexcept {
    return static_cast<Klein>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr Klein to_klein(Color c) noexcept { return static_cast<Klein>(c); }

/// Projection onto {I, J, K}; empty for E.
constexpr std::optional<Color> to_color(Klein k) noexcept {
    if (k == Klein::E) {
        return std::nullopt;
    }
    return static_cast<Color>(k);
}

/// Cyclic successor I -> J -> K -> I.
constexpr Color next(Color c) noexcept {
    return static_cast<Color>(static_cast<std::uint8_t>(c) % 3 + 1);
}

constexpr Sign opposite(Sign s) noexcept { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

/// Sign of a vertex whose left, right and parent edges carry the given
/// colours: Plus iff the triple is a cyclic rotation of (I, J, K). Empty when
/// the three colours are not distinct.
constexpr std::optional<Sign> vertex_sign(Color left, Color right, Color parent) noexcept {
    if (left == right || right == parent || left == parent) {
        return std::nullopt;
    }
    return next(left) == right ? Sign::Plus : Sign::Minus;
}

/// The two child colours of a vertex with the given parent colour and sign.
struct ChildColors {
    Color left;
    Color right;
};

constexpr ChildColors child_colors(Color parent, Sign sign) noexcept {
    const Color a = next(parent);
    const Color b = next(a);
    return sign == Sign::Plus ? ChildColors{a, b} : ChildColors{b, a};
}

/// Zero, or a signed basis vector +-i, +-j, +-k.
struct SignedVec {
    int sign = 0;  // -1, 0, +1
    Color axis = Color::I;

    static constexpr SignedVec zero() noexcept { return {}; }
    static constexpr SignedVec basis(Color axis, int sign = 1) noexcept { return {sign, axis}; }
    constexpr bool is_zero() const noexcept { return sign == 0; }

    friend constexpr bool operator==(SignedVec x, SignedVec y) noexcept {
        return x.sign == y.sign && (x.sign == 0 || x.axis == y.axis);
    }
};

/// Cross product restricted to signed basis vectors: ii = 0, ij = k, ji = -k
/// and cyclic permutations.
constexpr SignedVec cross_mul(SignedVec u, SignedVec v) noexcept {
    if (u.is_zero() || v.is_zero() || u.axis == v.axis) {
        return SignedVec::zero();
    }
    const Color third = static_cast<Color>(static_cast<std::uint8_t>(u.axis) ^ static_cast<std::uint8_t>(v.axis));
    const int orientation = next(u.axis) == v.axis ? 1 : -1;
    return SignedVec{u.sign * v.sign * orientation, third};
}

/// Colours of x_1..x_n, indexed by variable label - 1.
using LeafVector = std::vector<Color>;

char to_char(Klein k) noexcept;
char to_char(Color c) noexcept;
char to_char(Sign s) noexcept;
std::string to_string(SignedVec v);
std::string to_string(std::span<const Color> leaves);

Color parse_color(char c);
LeafVector parse_leaf_vector(std::string_view text);

/// Signs of the internal vertices of one tree, packed in a 32-bit word.
/// Vertex 0 (the root) is the most significant of the `size` bits and
/// Minus = 1, so numeric order equals lexicographic order of the "+-" string
/// with '+' < '-'.
class Signs {
public:
    Signs() = default;
    explicit Signs(int size, std::uint32_t value = 0);

    static Signs all(int size, Sign sign);
    static Signs parse(std::string_view text);

    int size() const noexcept { return size_; }
    std::uint32_t value() const noexcept { return value_; }

    Sign operator[](int vertex) const noexcept {
        return ((value_ >> bit(vertex)) & 1U) != 0 ? Sign::Minus : Sign::Plus;
    }
    void set(int vertex, Sign sign) noexcept {
        const std::uint32_t mask = 1U << bit(vertex);
        value_ = sign == Sign::Minus ? (value_ | mask) : (value_ & ~mask);
    }
    void flip(int vertex) noexcept { value_ ^= 1U << bit(vertex); }

    std::string str() const;

    friend bool operator==(const Signs&, const Signs&) = default;
    friend auto operator<=>(const Signs&, const Signs&) = default;

private:
    int bit(int vertex) const noexcept { return size_ - 1 - vertex; }

    int size_ = 0;
    std::uint32_t value_ = 0;
};

/// Bottom-up cross-product fold along the brackets. Zero iff the assignment
/// is not sharp for this tree.
SignedVec evaluate_cross(const Tree& tree, std::span<const Color> leaves);

struct KleinEvaluation {
    Klein value = Klein::E;
    bool sharp = false;  // no intermediate or final product equals E
};

KleinEvaluation evaluate_klein_sharp(const Tree& tree, std::span<const Color> leaves);

/// Leaf vector k at index `code` in base-3 order (x_1 most significant,
/// I < J < K).
LeafVector leaf_vector_at(int n, std::uint64_t code);
std::uint64_t power_of_three(int n);

}  // namespace fct
