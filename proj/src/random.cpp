#include "msdecomp/random.hpp"

#include <limits>

#include "msdecomp/errors.hpp"

namespace msdecomp {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw ContractError("Rng::below: bound must be positive");
    // Smallest raw value accepted; (2^64 - bound) mod bound rejected from the bottom.
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

std::uint64_t Rng::between(std::uint64_t lo, std::uint64_t hi) {
    if (lo > hi) throw ContractError("Rng::between: empty interval");
    if (lo == 0 && hi == std::numeric_limits<std::uint64_t>::max()) return engine_();
    return lo + below(hi - lo + 1);
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ (stream * 0xD6E8FEB86659FD93ULL + 1));
}

} // namespace msdecomp
