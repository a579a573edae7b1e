#pragma once

/**
 * Iterated local search for Minkowski decompositions M = A ⊕ B.
 *
 * For a fixed factor cardinality m the search walks over candidate
 * solutions (sub-multisets of M of cardinality m containing 0). Each
 * iteration runs a first-improvement hill climb under the placement score
 * until no single-element replacement helps; if the local optimum is not a
 * solution, the next start is resampled from the optimum's first row and
 * the multipliers of the rows it did manage to place.
 *
 * decompose() drives the search over all divisors f of |M| with
 * 2 ≤ f ≤ ⌊√|M|⌋, after shifting M so that it contains 0.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "msdecomp/multiset.hpp"
#include "msdecomp/random.hpp"
#include "msdecomp/scoring.hpp"

namespace msdecomp {

// Largest multiset the search will expand into explicit occurrences.
inline constexpr std::uint64_t kMaxSearchCardinality = std::uint64_t{1} << 26;

struct SearchConfig {
    std::uint64_t max_iterations = 100;
    std::uint64_t seed = 0;
    // Ascending neighbor enumeration when true; seeded shuffles otherwise.
    bool deterministic_neighbor_order = true;
};

struct SearchSuccess {
    Multiset a;  // the candidate, |a| = m
    Multiset b;  // its quotient
    std::uint64_t iterations = 0;
};

// Uniform over the occurrence choices: the mandatory 0 plus m-1 occurrences
// drawn without replacement from the rest of M.
CandidateSolution initial_solution(const Multiset& target, std::uint64_t m, Rng& rng);

// First strictly improving single-element replacement, or `s` itself.
// Passing an Rng shuffles the enumeration order.
CandidateSolution neighbor_search(const Multiset& target, const CandidateSolution& s, Rng* shuffle = nullptr);

// Hill climbs with neighbor_search until a fixpoint.
CandidateSolution find_local_opt(const Multiset& target, const CandidateSolution& s, Rng* shuffle = nullptr);

// The candidate's first row together with the placed row multipliers after
// the leading 0. Always contained in the target.
Multiset restart_pool(const Multiset& target, const CandidateSolution& s);

// Number of identical redraws tolerated before falling back to a fresh
// initial_solution.
inline constexpr int kRestartRedraws = 5;

CandidateSolution new_initial_solution(const Multiset& target, const CandidateSolution& s, Rng& rng);

// One iteration is one find_local_opt call.
std::optional<SearchSuccess> iterated_search(const Multiset& target, std::uint64_t m, const SearchConfig& config,
                                             const std::optional<CandidateSolution>& initial = std::nullopt);

// Divisors f of n with 2 ≤ f ≤ ⌊√n⌋, ascending.
std::vector<std::uint64_t> candidate_divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);

struct Found {
    Multiset a;
    Multiset b;
    std::uint64_t divisor = 0;
    std::uint64_t iterations = 0;        // at the successful divisor
    std::uint64_t total_iterations = 0;  // across all divisors tried
};

enum class IrreducibilityProof { UnitCardinality, PrimeCardinality, ExhaustedOracle };

struct Irreducible {
    IrreducibilityProof proof = IrreducibilityProof::PrimeCardinality;
};

// Every tried divisor ran out of iterations. Heuristic, not a proof.
struct ProbablyIrreducible {
    std::vector<std::uint64_t> divisors;
    std::uint64_t iterations_per_divisor = 0;
    std::uint64_t total_iterations = 0;
};

using CoreOutcome = std::variant<Found, Irreducible, ProbablyIrreducible>;

// min(M) > 0: M = ⦃offset⦄ ⊕ core. offset ≥ 2 is itself further divisible
// into unit shifts at the polynomial level (x^c = x · x^(c-1)).
struct TrivialShift {
    std::uint64_t offset = 0;
    Multiset core;
    CoreOutcome core_outcome;
    bool offset_divisible = false;
};

struct DecompositionResult {
    std::variant<Found, Irreducible, ProbablyIrreducible, TrivialShift> outcome;

    // Found, or a shift whose core was found.
    const Found* found() const;
    // The core outcome, unwrapping a shift.
    CoreOutcome core() const;
    bool is_shift() const { return std::holds_alternative<TrivialShift>(outcome); }
};

struct DecomposeOptions {
    // Pins the factor cardinality instead of enumerating divisors.
    std::optional<std::uint64_t> cardinality;
    // Starting candidate, relative to the 0-normalized core. Requires cardinality.
    std::optional<Multiset> initial;
};

DecompositionResult decompose(const Multiset& m, const SearchConfig& config, const DecomposeOptions& options = {});

std::string to_string(IrreducibilityProof proof);

} // namespace msdecomp
