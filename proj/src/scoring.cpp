#include "msdecomp/scoring.hpp"

#include <algorithm>
#include <limits>

#include "msdecomp/errors.hpp"

namespace msdecomp {

std::optional<std::string> candidate_violation(const Multiset& target, const Multiset& elements) {
    if (target.empty()) return "target multiset is empty";
    if (elements.empty()) return "candidate is empty";
    if (!elements.contains_value(0)) return "candidate must contain 0";
    if (elements.cardinality() < 2) return "candidate cardinality must be at least 2";
    if (target.cardinality() % elements.cardinality() != 0)
        return "candidate cardinality " + std::to_string(elements.cardinality()) + " does not divide target cardinality " +
               std::to_string(target.cardinality());
    if (!contains(elements, target)) return "candidate is not contained in the target";
    return std::nullopt;
}

CandidateSolution CandidateSolution::make(const Multiset& target, Multiset elements) {
    if (auto why = candidate_violation(target, elements)) throw ContractError("invalid candidate: " + *why);
    return CandidateSolution(std::move(elements));
}

Placement::Placement(const Multiset& target) : target_(target) {
    values_.reserve(target.distinct());
    counts_.reserve(target.distinct());
    for (const Entry& e : target.entries()) {
        values_.push_back(e.value);
        counts_.push_back(e.count);
    }
}

std::uint64_t Placement::run(std::span<const std::uint64_t> sorted, std::vector<std::uint64_t>* multipliers) {
    remaining_ = counts_;
    const std::uint64_t n = target_.cardinality();
    const std::uint64_t top = values_.empty() ? 0 : values_.back();
    const auto begin = values_.begin();
    const auto end = values_.end();

    // First row: the candidate itself.
    auto at = begin;
    for (std::uint64_t s : sorted) {
        at = std::lower_bound(at, end, s);
        if (at == end || *at != s || remaining_[at - begin] == 0)
            throw ContractError("placement: candidate is not contained in the target");
        --remaining_[at - begin];
    }
    std::uint64_t placed = sorted.size();
    if (multipliers) multipliers->assign(1, 0);

    std::size_t cursor = 0;
    while (placed < n) {
        while (remaining_[cursor] == 0) ++cursor;
        const std::uint64_t base = values_[cursor];
        if (multipliers) multipliers->push_back(base);
        at = begin + static_cast<std::ptrdiff_t>(cursor);
        for (std::uint64_t s : sorted) {
            if (s > top - base) return placed;
            const std::uint64_t want = base + s;
            at = std::lower_bound(at, end, want);
            if (at == end || *at != want || remaining_[at - begin] == 0) return placed;
            --remaining_[at - begin];
            ++placed;
        }
    }
    return placed;
}

std::uint64_t Placement::score(std::span<const std::uint64_t> sorted) { return run(sorted, nullptr); }

PlacementOutcome Placement::outcome(std::span<const std::uint64_t> sorted) {
    PlacementOutcome out;
    out.score = run(sorted, &out.multipliers);
    if (out.score == target_.cardinality()) out.quotient = Multiset::from_elements(out.multipliers);
    return out;
}

PlacementOutcome score(const Multiset& target, const CandidateSolution& candidate) {
    if (auto why = candidate_violation(target, candidate.elements()))
        throw ContractError("invalid candidate: " + *why);
    Placement placement(target);
    const auto sorted = candidate.elements().elements();
    return placement.outcome(sorted);
}

std::optional<Multiset> quotient(const Multiset& target, const Multiset& candidate) {
    return score(target, CandidateSolution::make(target, candidate)).quotient;
}

} // namespace msdecomp
