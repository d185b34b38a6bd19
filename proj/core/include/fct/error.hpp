#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fct {

/// Malformed bracket expression. `position()` is the byte offset of the
/// offending character in the input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A size argument is above the desk-scale limit of the requested operation.
class CapExceeded : public std::out_of_range {
public:
    CapExceeded(const std::string& operation, int requested, int cap)
        : std::out_of_range(operation + ": n=" + std::to_string(requested) +
                            " exceeds cap " + std::to_string(cap)),
          requested_(requested),
          cap_(cap) {}

    int requested() const noexcept { return requested_; }
    int cap() const noexcept { return cap_; }

private:
    int requested_;
    int cap_;
};

/// A move site that does not name an internal edge of the tree, or a
/// transplantation that is not admissible for the given state.
class InvalidMove : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace fct
