#pragma once

/**
 * Run-length encoded multisets of non-negative integers and the Minkowski
 * sum algebra over them.
 *
 * A multiset is stored as (value, multiplicity) entries sorted by strictly
 * increasing value, every multiplicity at least one. All values are 64-bit
 * unsigned; operations that would overflow throw OverflowError instead of
 * wrapping.
 */

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace msdecomp {

struct Entry {
    std::uint64_t value = 0;
    std::uint64_t count = 0;

    friend bool operator==(const Entry&, const Entry&) = default;
};

class Multiset {
public:
    // The empty multiset. Only produced by difference(); every constructor
    // below rejects empty input.
    Multiset() = default;

    Multiset(std::initializer_list<std::uint64_t> values);

    // Run-length encodes an arbitrary (unsorted, repeating) list of values.
    static Multiset from_elements(std::span<const std::uint64_t> values);

    // Accepts entries in any order; equal values are merged. Zero counts are
    // dropped. Throws ContractError if nothing remains.
    static Multiset from_entries(std::vector<Entry> entries);

    std::span<const Entry> entries() const noexcept { return entries_; }
    std::size_t distinct() const noexcept { return entries_.size(); }
    std::uint64_t cardinality() const noexcept { return cardinality_; }
    bool empty() const noexcept { return entries_.empty(); }

    std::uint64_t min() const;
    std::uint64_t max() const;

    // μ(x, M): occurrences of x, possibly zero.
    std::uint64_t multiplicity(std::uint64_t value) const noexcept;
    bool contains_value(std::uint64_t value) const noexcept { return multiplicity(value) > 0; }

    // True when every multiplicity is one.
    bool is_set() const noexcept;

    // Expanded, sorted list of all occurrences.
    std::vector<std::uint64_t> elements() const;

    friend bool operator==(const Multiset& a, const Multiset& b) { return a.entries_ == b.entries_; }

    // Lexicographic order on the expanded element lists.
    friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b);

private:
    explicit Multiset(std::vector<Entry> canonical);

    std::vector<Entry> entries_;
    std::uint64_t cardinality_ = 0;
};

// A ⊕ B with multiplicities; |A ⊕ B| = |A|·|B|.
Multiset minkowski_sum(const Multiset& a, const Multiset& b);

// Set version of the sum: operands must be sets, the result is collapsed to a set.
Multiset minkowski_set_sum(const Multiset& a, const Multiset& b);

// A ⊆ B: μ(x,A) ≤ μ(x,B) for every x.
bool contains(const Multiset& a, const Multiset& b);

// A \ B keeping max(μ(x,A) − μ(x,B), 0) copies of each x.
Multiset difference(const Multiset& a, const Multiset& b);

// Multiset union adding multiplicities (A ⊎ B).
Multiset sum_union(const Multiset& a, const Multiset& b);

struct Normalized {
    std::uint64_t offset = 0;
    Multiset core;
};

// Splits M as ⦃min M⦄ ⊕ core with 0 ∈ core.
Normalized normalize(const Multiset& m);

// Shifts every value by `offset`.
Multiset shift(const Multiset& m, std::uint64_t offset);

// Text format: comma/whitespace separated integers "0,1,2,2" or pair form
// "(0:1),(2:2)". The two forms may not be mixed.
Multiset parse_multiset(std::string_view text);

enum class MultisetStyle { Flat, Pairs };
std::string format_multiset(const Multiset& m, MultisetStyle style = MultisetStyle::Flat);

} // namespace msdecomp
