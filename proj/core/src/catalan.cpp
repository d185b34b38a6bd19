#include "fct/catalan.hpp"

#include <array>
#include <stdexcept>

#include "fct/error.hpp"

namespace fct {

namespace {

constexpr int kMaxWord = 2 * (kMaxLeaves - 1);

// completions[len][h]: words of length len that take balance h back to 0
// without dipping below 0.
struct CompletionTable {
    std::array<std::array<std::uint64_t, kMaxWord + 2>, kMaxWord + 1> count{};

    constexpr CompletionTable() {
        count[0][0] = 1;
        for (int len = 1; len <= kMaxWord; ++len) {
            for (int h = 0; h <= kMaxWord; ++h) {
                std::uint64_t total = count[len - 1][h + 1];
                if (h > 0) {
                    total += count[len - 1][h - 1];
                }
                count[len][h] = total;
            }
        }
    }
};

const CompletionTable& completions() {
    static const CompletionTable table;
    return table;
}

BigInt factorial(int k) {
    BigInt out = 1;
    for (int i = 2; i <= k; ++i) {
        out *= i;
    }
    return out;
}

}  // namespace

BigInt catalan_g(int n) {
    if (n < 1) {
        throw std::invalid_argument("catalan_g: n must be at least 1");
    }
    return factorial(2 * n - 2) / (factorial(n - 1) * factorial(n));
}

std::uint64_t tree_count(int n) {
    if (n < 1) {
        throw std::invalid_argument("tree_count: n must be at least 1");
    }
    if (n > kMaxLeaves) {
        throw CapExceeded("tree_count", n, kMaxLeaves);
    }
    return completions().count[static_cast<std::size_t>(2 * (n - 1))][0];
}

std::uint64_t rank(const Tree& tree) {
    const int length = 2 * (tree.leaf_count() - 1);
    const std::uint64_t word = tree.dyck();
    const auto& table = completions().count;
    std::uint64_t r = 0;
    int balance = 0;
    for (int p = 0; p < length; ++p) {
        const bool close = ((word >> (length - 1 - p)) & 1U) != 0;
        const int remaining = length - p - 1;
        if (close) {
            r += table[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(balance + 1)];
            --balance;
        } else {
            ++balance;
        }
    }
    return r;
}

Tree unrank(int leaves, std::uint64_t r) {
    if (r >= tree_count(leaves)) {
        throw std::out_of_range("unrank: rank " + std::to_string(r) + " out of range");
    }
    const int length = 2 * (leaves - 1);
    const auto& table = completions().count;
    std::uint64_t word = 0;
    int balance = 0;
    for (int p = 0; p < length; ++p) {
        const int remaining = length - p - 1;
        const std::uint64_t with_open =
            table[static_cast<std::size_t>(remaining)][static_cast<std::size_t>(balance + 1)];
        word <<= 1;
        if (r < with_open) {
            ++balance;
        } else {
            r -= with_open;
            word |= 1U;
            --balance;
        }
    }
    return Tree::from_dyck(word, leaves);
}

std::vector<Tree> enumerate_trees(int n) {
    if (n < 1) {
        throw std::invalid_argument("enumerate_trees: n must be at least 1");
    }
    if (n > kEnumerationCap) {
        throw CapExceeded("enumerate_trees", n, kEnumerationCap);
    }
    const std::uint64_t count = tree_count(n);
    std::vector<Tree> out;
    out.reserve(count);
    for (std::uint64_t r = 0; r < count; ++r) {
        out.push_back(unrank(n, r));
    }
    return out;
}

}  // namespace fct
