#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace msdecomp {

// A precondition of an operation was violated by its arguments.
class ContractError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A 64-bit value sum or cardinality product would wrap around.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Input refused because it exceeds a configured size bound.
class LimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

// Malformed multiset / polynomial / structure text.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace msdecomp
