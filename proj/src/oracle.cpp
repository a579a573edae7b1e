#include "msdecomp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "msdecomp/errors.hpp"

namespace msdecomp {

namespace {

// Every distinct sub-multiset of `m` with k occurrences that contains 0,
// built from index combinations over the occurrence list with 0 pinned.
std::set<Multiset> zero_subsets(const Multiset& m, std::uint64_t k) {
    std::vector<std::uint64_t> rest = m.elements();
    rest.erase(rest.begin());
    std::set<Multiset> out;
    std::vector<std::uint64_t> pick{0};
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (pick.size() == k) {
            out.insert(Multiset::from_elements(pick));
            return;
        }
        for (std::size_t i = from; i < rest.size(); ++i) {
            pick.push_back(rest[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

std::vector<FactorPair> brute_force_factor_pairs(const Multiset& m, std::uint64_t limit) {
    if (m.empty() || !m.contains_value(0)) throw ContractError("oracle: multiset must contain 0");
    if (m.cardinality() > limit)
        throw LimitError("oracle: cardinality " + std::to_string(m.cardinality()) + " exceeds limit " +
                         std::to_string(limit));
    const std::uint64_t n = m.cardinality();
    std::set<std::pair<Multiset, Multiset>> pairs;
    for (std::uint64_t k = 2; k <= n / k; ++k) {
        if (n % k != 0) continue;
        const auto left = zero_subsets(m, k);
        const auto right = zero_subsets(m, n / k);
        for (const Multiset& a : left) {
            for (const Multiset& b : right) {
                if (minkowski_sum(a, b) != m) continue;
                if (a.cardinality() == b.cardinality() && b < a) {
                    pairs.emplace(b, a);
                } else {
                    pairs.emplace(a, b);
                }
            }
        }
    }
    std::vector<FactorPair> out;
    for (const auto& [a, b] : pairs) out.push_back({a, b});
    return out;
}

bool brute_force_is_reducible(const Multiset& m, std::uint64_t limit) {
    return !brute_force_factor_pairs(m, limit).empty();
}

DecompositionResult decompose_exhaustive(const Multiset& m, std::uint64_t limit) {
    if (m.empty()) throw ContractError("decompose: multiset is empty");
    Normalized norm = normalize(m);
    CoreOutcome core;
    if (norm.core.cardinality() == 1) {
        core = Irreducible{IrreducibilityProof::UnitCardinality};
    } else {
        const auto pairs = brute_force_factor_pairs(norm.core, limit);
        if (pairs.empty()) {
            core = Irreducible{IrreducibilityProof::ExhaustedOracle};
        } else {
            const FactorPair& p = pairs.front();
            core = Found{p.a, p.b, p.a.cardinality(), 0, 0};
        }
    }
    if (norm.offset == 0) {
        return std::visit([](auto&& o) { return DecompositionResult{std::move(o)}; }, std::move(core));
    }
    return DecompositionResult{TrivialShift{norm.offset, std::move(norm.core), std::move(core), norm.offset >= 2}};
}

} // namespace msdecomp
