#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace msdecomp {

// Seeded 64-bit generator with platform-independent bounded draws.
// std::uniform_int_distribution is implementation-defined, so bounded draws
// are done by rejection sampling on the raw mt19937_64 stream instead.
class Rng {
public:
    static constexpr std::string_view name = "mt19937_64";

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform on [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    // Uniform on [lo, hi], inclusive on both ends.
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi);

private:
    std::mt19937_64 engine_;
};

// Independent stream seed for (seed, stream) via splitmix64 mixing.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

} // namespace msdecomp
