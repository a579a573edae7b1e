#pragma once

// Test-only reference implementations. These deliberately share no code
// with the library paths they check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "msdecomp/multiset.hpp"
#include "msdecomp/random.hpp"

namespace testing_support {

using Values = std::vector<std::uint64_t>;

// Fills the placement matrix cell by cell on a std::multiset.
inline std::uint64_t reference_score(const Values& target, Values cand) {
    std::multiset<std::uint64_t> rest(target.begin(), target.end());
    std::sort(cand.begin(), cand.end());
    std::uint64_t placed = 0;
    for (std::uint64_t s : cand) {
        rest.erase(rest.find(s));
        ++placed;
    }
    while (!rest.empty()) {
        const std::uint64_t base = *rest.begin();
        for (std::uint64_t s : cand) {
            auto it = rest.find(base + s);
            if (it == rest.end()) return placed;
            rest.erase(it);
            ++placed;
        }
    }
    return placed;
}

inline std::size_t count_of(const Values& v, std::uint64_t x) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), x));
}

// Every neighbor in the documented order: candidate values ascending (one 0
// protected), replacement values of the target ascending.
inline std::vector<Values> documented_neighbors(const Values& target, Values cand) {
    std::sort(cand.begin(), cand.end());
    std::set<std::uint64_t> positions(cand.begin(), cand.end());
    std::set<std::uint64_t> replacements(target.begin(), target.end());
    std::vector<Values> out;
    for (std::uint64_t v : positions) {
        if (v == 0 && count_of(cand, 0) == 1) continue;
        for (std::uint64_t w : replacements) {
            if (w == v) continue;
            if (count_of(cand, w) + 1 > count_of(target, w)) continue;
            Values n = cand;
            n.erase(std::find(n.begin(), n.end(), v));
            n.push_back(w);
            std::sort(n.begin(), n.end());
            out.push_back(n);
        }
    }
    return out;
}

inline std::optional<Values> first_improving_neighbor(const Values& target, const Values& cand) {
    const std::uint64_t current = reference_score(target, cand);
    for (const Values& n : documented_neighbors(target, cand)) {
        if (reference_score(target, n) > current) return n;
    }
    return std::nullopt;
}

// Schoolbook product on dense coefficient vectors (index = exponent).
inline Values dense_multiply(const Values& p, const Values& q) {
    if (p.empty() || q.empty()) return {};
    Values out(p.size() + q.size() - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

// Random multiset with `size` occurrences on [0, range], optionally forcing a 0.
inline msdecomp::Multiset random_multiset(msdecomp::Rng& rng, std::uint64_t size, std::uint64_t range,
                                          bool with_zero) {
    Values v(size);
    for (auto& x : v) x = rng.between(0, range);
    if (with_zero) v.front() = 0;
    return msdecomp::Multiset::from_elements(v);
}

inline const msdecomp::Multiset& m16() {
    static const msdecomp::Multiset m{0, 1, 2, 2, 3, 3, 3, 3, 5, 5, 5, 5, 6, 7, 9, 9};
    return m;
}

inline const msdecomp::Multiset& m25() {
    static const msdecomp::Multiset m{0,    1249, 1705, 2250, 2267, 2954, 3499, 3516, 4270,
                                      4324, 4390, 4852, 5639, 5975, 6029, 6520, 6537, 6557,
                                      6574, 6591, 7102, 7119, 8660, 8714, 9242};
    return m;
}

} // namespace testing_support
