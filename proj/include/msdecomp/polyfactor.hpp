#pragma once

// Factoring in ℕ[x] through multiset decomposition of Multiset(p).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "msdecomp/polynomial.hpp"
#include "msdecomp/search.hpp"

namespace msdecomp {

// Multiset(p) has p(1) elements, which can be exponentially larger than p.
inline constexpr std::uint64_t kDefaultPolyCardinalityLimit = 1'000'000;

struct PolyFactOptions {
    SearchConfig search;
    std::uint64_t max_cardinality = kDefaultPolyCardinalityLimit;
};

enum class PolyIrreducibility {
    Proven,     // unit, prime cardinality, or the monomial x
    Heuristic,  // the search ran out of iterations
};

struct PolyFactorization {
    // Non-trivial split p = first · second, when one was found.
    std::optional<std::pair<SparsePolynomial, SparsePolynomial>> factors;
    // Set when `factors` is absent.
    PolyIrreducibility irreducibility = PolyIrreducibility::Heuristic;
};

// One binary split. A factor x^c (c ≥ 1) is split off first when p has no
// constant term; x^c alone splits as x · x^(c-1).
PolyFactorization n_poly_fact(const SparsePolynomial& p, const PolyFactOptions& options = {});

struct CompleteFactorization {
    // Sorted by degree, then lexicographically by terms.
    std::vector<SparsePolynomial> factors;
    // False when any leaf was only heuristically irreducible.
    bool proven = true;
};

// Splits recursively until every factor is (heuristically) irreducible.
CompleteFactorization factor_completely(const SparsePolynomial& p, const PolyFactOptions& options = {});

// Canonical factor order.
bool factor_less(const SparsePolynomial& a, const SparsePolynomial& b);

} // namespace msdecomp
