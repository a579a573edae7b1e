#pragma once

#include <cstdint>
#include <string>

#include "msdecomp/errors.hpp"

namespace msdecomp::detail {

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError(std::string(what) + ": 64-bit overflow");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError(std::string(what) + ": 64-bit overflow");
    return r;
}

} // namespace msdecomp::detail
