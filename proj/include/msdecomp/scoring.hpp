#pragma once

/**
 * Greedy placement score of a candidate factor.
 *
 * Conceptually the target M of cardinality n is laid out as an (n/m)×m
 * matrix whose first row is the candidate S (sorted ascending) and whose
 * k-th row is b_k + S. Rows are filled greedily: b_k is the minimum of the
 * elements of M not yet placed, and every cell b_k + s must be found among
 * them. The score is the number of cells placed before the first miss.
 * When all n cells are placed, the multipliers b_1 = 0, b_2, ... are exactly
 * the cofactor B with S ⊕ B = M.
 *
 * The matrix is never materialized; placement works on a copy of M's
 * multiplicities.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "msdecomp/multiset.hpp"

namespace msdecomp {

// A sub-multiset S of a target M with 0 ∈ S, |S| ≥ 2, |S| dividing |M|.
class CandidateSolution {
public:
    // Throws ContractError naming the violated precondition.
    static CandidateSolution make(const Multiset& target, Multiset elements);

    const Multiset& elements() const noexcept { return elements_; }
    std::uint64_t cardinality() const noexcept { return elements_.cardinality(); }

    friend bool operator==(const CandidateSolution&, const CandidateSolution&) = default;

private:
    explicit CandidateSolution(Multiset elements) : elements_(std::move(elements)) {}

    Multiset elements_;
};

// The first violated candidate precondition, if any.
std::optional<std::string> candidate_violation(const Multiset& target, const Multiset& elements);

struct PlacementOutcome {
    std::uint64_t score = 0;
    // Row multipliers in placement order, starting with 0 for the first row.
    std::vector<std::uint64_t> multipliers;
    // Present iff score == |M|.
    std::optional<Multiset> quotient;
};

PlacementOutcome score(const Multiset& target, const CandidateSolution& candidate);

// B with candidate ⊕ B = target, if the placement completes.
std::optional<Multiset> quotient(const Multiset& target, const Multiset& candidate);

// Placement engine bound to one target, reused across many candidates.
class Placement {
public:
    explicit Placement(const Multiset& target);

    const Multiset& target() const noexcept { return target_; }

    // `sorted` must be a valid candidate, as ascending occurrences.
    std::uint64_t score(std::span<const std::uint64_t> sorted);
    PlacementOutcome outcome(std::span<const std::uint64_t> sorted);

private:
    std::uint64_t run(std::span<const std::uint64_t> sorted, std::vector<std::uint64_t>* multipliers);

    Multiset target_;
    std::vector<std::uint64_t> values_;
    std::vector<std::uint64_t> counts_;
    std::vector<std::uint64_t> remaining_;
};

} // namespace msdecomp
