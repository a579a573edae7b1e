#include "msdecomp/search.hpp"

#include <algorithm>
#include <numeric>

#include "msdecomp/errors.hpp"

namespace msdecomp {

namespace {

using Flat = std::vector<std::uint64_t>;

template <typename T>
void shuffle(std::vector<T>& items, Rng& rng) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

// k items drawn without replacement from `pool` (reordered in place).
Flat sample(Flat& pool, std::size_t k, Rng& rng) {
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    return Flat(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
}

void check_search_input(const Multiset& target, std::uint64_t m) {
    if (target.empty()) throw ContractError("search: target is empty");
    if (!target.contains_value(0)) throw ContractError("search: target must contain 0");
    if (target.cardinality() > kMaxSearchCardinality)
        throw LimitError("search: target cardinality " + std::to_string(target.cardinality()) + " exceeds " +
                         std::to_string(kMaxSearchCardinality));
    if (m < 2) throw ContractError("search: factor cardinality must be at least 2");
    if (m > target.cardinality()) throw ContractError("search: factor cardinality exceeds target cardinality");
    if (target.cardinality() % m != 0)
        throw ContractError("search: factor cardinality " + std::to_string(m) + " does not divide " +
                            std::to_string(target.cardinality()));
}

CandidateSolution to_candidate(const Multiset& target, const Flat& sorted) {
    return CandidateSolution::make(target, Multiset::from_elements(sorted));
}

// State of one hill climb over a fixed target.
class Climber {
public:
    Climber(Placement& placement, Rng* shuffle) : placement_(placement), shuffle_(shuffle) {
        for (const Entry& e : placement.target().entries()) values_.push_back(e);
    }

    // Replaces `cand` by its first improving neighbor. Returns false at a fixpoint.
    bool improve(Flat& cand, std::uint64_t& current) {
        std::vector<Entry> positions;
        for (std::uint64_t v : cand) {
            if (!positions.empty() && positions.back().value == v) {
                ++positions.back().count;
            } else {
                positions.push_back({v, 1});
            }
        }
        // One 0 is protected.
        if (positions.front().count == 1) positions.erase(positions.begin());

        std::vector<Entry> replacements = values_;
        if (shuffle_) {
            shuffle(positions, *shuffle_);
            shuffle(replacements, *shuffle_);
        }

        Flat neighbor;
        for (const Entry& pos : positions) {
            for (const Entry& rep : replacements) {
                if (rep.value == pos.value) continue;
                const auto [lo, hi] = std::equal_range(cand.begin(), cand.end(), rep.value);
                if (static_cast<std::uint64_t>(hi - lo) >= rep.count) continue;
                neighbor = cand;
                neighbor.erase(std::lower_bound(neighbor.begin(), neighbor.end(), pos.value));
                neighbor.insert(std::upper_bound(neighbor.begin(), neighbor.end(), rep.value), rep.value);
                const std::uint64_t s = placement_.score(neighbor);
                if (s > current) {
                    cand = std::move(neighbor);
                    current = s;
                    return true;
                }
            }
        }
        return false;
    }

    void climb(Flat& cand, std::uint64_t& current) {
        while (current < placement_.target().cardinality() && improve(cand, current)) {
        }
    }

private:
    Placement& placement_;
    Rng* shuffle_;
    std::vector<Entry> values_;
};

Flat initial_flat(const Multiset& target, std::uint64_t m, Rng& rng) {
    Flat rest = target.elements();
    rest.erase(rest.begin());  // the mandatory 0
    Flat cand = sample(rest, m - 1, rng);
    cand.push_back(0);
    std::sort(cand.begin(), cand.end());
    return cand;
}

Flat restart_flat(Placement& placement, const Flat& current, Rng& rng) {
    const Multiset& target = placement.target();
    const std::size_t m = current.size();
    const PlacementOutcome placed = placement.outcome(current);

    Flat pool = current;
    pool.insert(pool.end(), placed.multipliers.begin() + 1, placed.multipliers.end());
    std::sort(pool.begin(), pool.end());
    const Multiset full = Multiset::from_elements(pool);
    pool.erase(pool.begin());  // share the leading 0

    if (pool.size() < m) {
        // Degenerate pool: pad with occurrences of M not already in it.
        Flat extra = difference(target, full).elements();
        const std::size_t want = std::min(m - pool.size(), extra.size());
        Flat padding = sample(extra, want, rng);
        pool.insert(pool.end(), padding.begin(), padding.end());
    }
    if (pool.size() + 1 < m) return initial_flat(target, m, rng);

    for (int attempt = 0; attempt < kRestartRedraws; ++attempt) {
        Flat draw = sample(pool, m - 1, rng);
        draw.push_back(0);
        std::sort(draw.begin(), draw.end());
        if (draw != current) return draw;
    }
    return initial_flat(target, m, rng);
}

} // namespace

CandidateSolution initial_solution(const Multiset& target, std::uint64_t m, Rng& rng) {
    check_search_input(target, m);
    return to_candidate(target, initial_flat(target, m, rng));
}

CandidateSolution neighbor_search(const Multiset& target, const CandidateSolution& s, Rng* shuffle) {
    if (auto why = candidate_violation(target, s.elements())) throw ContractError("invalid candidate: " + *why);
    Placement placement(target);
    Flat cand = s.elements().elements();
    std::uint64_t current = placement.score(cand);
    Climber climber(placement, shuffle);
    if (!climber.improve(cand, current)) return s;
    return to_candidate(target, cand);
}

CandidateSolution find_local_opt(const Multiset& target, const CandidateSolution& s, Rng* shuffle) {
    if (auto why = candidate_violation(target, s.elements())) throw ContractError("invalid candidate: " + *why);
    Placement placement(target);
    Flat cand = s.elements().elements();
    std::uint64_t current = placement.score(cand);
    Climber(placement, shuffle).climb(cand, current);
    return to_candidate(target, cand);
}

Multiset restart_pool(const Multiset& target, const CandidateSolution& s) {
    const PlacementOutcome placed = score(target, s);
    Flat pool = s.elements().elements();
    pool.insert(pool.end(), placed.multipliers.begin() + 1, placed.multipliers.end());
    return Multiset::from_elements(pool);
}

CandidateSolution new_initial_solution(const Multiset& target, const CandidateSolution& s, Rng& rng) {
    if (auto why = candidate_violation(target, s.elements())) throw ContractError("invalid candidate: " + *why);
    Placement placement(target);
    return to_candidate(target, restart_flat(placement, s.elements().elements(), rng));
}

std::optional<SearchSuccess> iterated_search(const Multiset& target, std::uint64_t m, const SearchConfig& config,
                                             const std::optional<CandidateSolution>& initial) {
    check_search_input(target, m);
    if (config.max_iterations < 1) throw ContractError("search: max_iterations must be at least 1");
    if (initial && initial->cardinality() != m)
        throw ContractError("search: initial candidate cardinality differs from the requested factor cardinality");
    if (initial) {
        if (auto why = candidate_violation(target, initial->elements()))
            throw ContractError("invalid candidate: " + *why);
    }

    Rng rng(config.seed);
    Rng* shuffle = config.deterministic_neighbor_order ? nullptr : &rng;
    Placement placement(target);
    Climber climber(placement, shuffle);
    const std::uint64_t n = target.cardinality();

    Flat cand = initial ? initial->elements().elements() : initial_flat(target, m, rng);
    // Score of the local optimum the current start was resampled from.
    std::optional<std::uint64_t> parent;
    for (std::uint64_t iteration = 1; iteration <= config.max_iterations; ++iteration) {
        std::uint64_t current = placement.score(cand);
        climber.climb(cand, current);
        if (current == n) {
            PlacementOutcome done = placement.outcome(cand);
            return SearchSuccess{Multiset::from_elements(cand), std::move(*done.quotient), iteration};
        }
        if (iteration == config.max_iterations) break;
        if (parent && current <= *parent) {
            // The pool restart made no progress: diversify.
            cand = initial_flat(target, m, rng);
            parent.reset();
        } else {
            parent = current;
            cand = restart_flat(placement, cand, rng);
        }
    }
    return std::nullopt;
}

std::vector<std::uint64_t> candidate_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f <= n / f; ++f) {
        if (n % f == 0) out.push_back(f);
    }
    return out;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t f = 2; f <= n / f; ++f) {
        if (n % f == 0) return false;
    }
    return true;
}

const Found* DecompositionResult::found() const {
    if (const auto* f = std::get_if<Found>(&outcome)) return f;
    if (const auto* s = std::get_if<TrivialShift>(&outcome)) return std::get_if<Found>(&s->core_outcome);
    return nullptr;
}

CoreOutcome DecompositionResult::core() const {
    return std::visit(
        [](const auto& o) -> CoreOutcome {
            if constexpr (std::is_same_v<std::decay_t<decltype(o)>, TrivialShift>) {
                return o.core_outcome;
            } else {
                return o;
            }
        },
        outcome);
}

namespace {

CoreOutcome decompose_core(const Multiset& core, const SearchConfig& config, const DecomposeOptions& options) {
    const std::uint64_t n = core.cardinality();
    if (options.initial && !options.cardinality)
        throw ContractError("decompose: an initial candidate requires a pinned cardinality");

    std::vector<std::uint64_t> divisors;
    if (options.cardinality) {
        const std::uint64_t m = *options.cardinality;
        if (m < 2 || m >= n || n % m != 0)
            throw ContractError("decompose: cardinality " + std::to_string(m) +
                                " is not a non-trivial divisor of " + std::to_string(n));
        divisors.push_back(m);
    } else {
        if (n == 1) return Irreducible{IrreducibilityProof::UnitCardinality};
        if (is_prime(n)) return Irreducible{IrreducibilityProof::PrimeCardinality};
        divisors = candidate_divisors(n);
    }

    std::optional<CandidateSolution> initial;
    if (options.initial) initial = CandidateSolution::make(core, *options.initial);

    std::uint64_t total = 0;
    for (std::uint64_t m : divisors) {
        SearchConfig local = config;
        local.seed = derive_seed(config.seed, m);
        if (auto hit = iterated_search(core, m, local, initial)) {
            total += hit->iterations;
            return Found{std::move(hit->a), std::move(hit->b), m, hit->iterations, total};
        }
        total += config.max_iterations;
    }
    return ProbablyIrreducible{divisors, config.max_iterations, total};
}

} // namespace

DecompositionResult decompose(const Multiset& m, const SearchConfig& config, const DecomposeOptions& options) {
    if (m.empty()) throw ContractError("decompose: multiset is empty");
    Normalized norm = normalize(m);
    CoreOutcome core = decompose_core(norm.core, config, options);
    if (norm.offset == 0) {
        return std::visit([](auto&& o) { return DecompositionResult{std::move(o)}; }, std::move(core));
    }
    const bool divisible = norm.offset >= 2;
    return DecompositionResult{TrivialShift{norm.offset, std::move(norm.core), std::move(core), divisible}};
}

std::string to_string(IrreducibilityProof proof) {
    switch (proof) {
        case IrreducibilityProof::UnitCardinality: return "unit-cardinality";
        case IrreducibilityProof::PrimeCardinality: return "prime-cardinality";
        case IrreducibilityProof::ExhaustedOracle: return "exhausted-oracle";
    }
    return "unknown";
}

} // namespace msdecomp
