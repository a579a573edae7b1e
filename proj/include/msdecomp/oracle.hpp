#pragma once

// Exhaustive ground truth for small multisets. Slow on purpose: every
// factor pair is found by enumerating sub-multisets on both sides and
// checking the Minkowski sum directly, with no use of the placement score.

#include <cstdint>
#include <utility>
#include <vector>

#include "msdecomp/multiset.hpp"
#include "msdecomp/search.hpp"

namespace msdecomp {

inline constexpr std::uint64_t kDefaultOracleLimit = 16;

struct FactorPair {
    Multiset a;  // |a| ≤ |b|; when equal, a ≤ b lexicographically
    Multiset b;

    friend bool operator==(const FactorPair&, const FactorPair&) = default;
};

// All distinct unordered pairs (A, B), both ≠ ⦃0⦄, with A ⊕ B = M, sorted
// lexicographically by A then B. Requires 0 ∈ M and |M| ≤ limit.
std::vector<FactorPair> brute_force_factor_pairs(const Multiset& m, std::uint64_t limit = kDefaultOracleLimit);

bool brute_force_is_reducible(const Multiset& m, std::uint64_t limit = kDefaultOracleLimit);

// decompose() backed by the oracle instead of the search: the first pair
// found, or Irreducible(ExhaustedOracle). Shifts are handled as in decompose().
DecompositionResult decompose_exhaustive(const Multiset& m, std::uint64_t limit = kDefaultOracleLimit);

} // namespace msdecomp
