#include "msdecomp/multiset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "msdecomp/errors.hpp"
#include "overflow.hpp"

namespace msdecomp {

namespace {

// Sorts, merges equal values and drops zero counts.
std::vector<Entry> canonicalize(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.value < b.value; });
    std::vector<Entry> out;
    out.reserve(entries.size());
    for (const Entry& e : entries) {
        if (e.count == 0) continue;
        if (!out.empty() && out.back().value == e.value) {
            out.back().count = detail::checked_add(out.back().count, e.count, "multiplicity");
        } else {
            out.push_back(e);
        }
    }
    return out;
}

} // namespace

Multiset::Multiset(std::vector<Entry> canonical) : entries_(std::move(canonical)) {
    for (const Entry& e : entries_) cardinality_ = detail::checked_add(cardinality_, e.count, "cardinality");
}

Multiset::Multiset(std::initializer_list<std::uint64_t> values)
    : Multiset(from_elements(std::span<const std::uint64_t>(values.begin(), values.size()))) {}

Multiset Multiset::from_elements(std::span<const std::uint64_t> values) {
    if (values.empty()) throw ContractError("multiset: cannot construct from an empty list");
    std::vector<std::uint64_t> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Entry> entries;
    for (std::uint64_t v : sorted) {
        if (!entries.empty() && entries.back().value == v) {
            ++entries.back().count;
        } else {
            entries.push_back({v, 1});
        }
    }
    return Multiset(std::move(entries));
}

Multiset Multiset::from_entries(std::vector<Entry> entries) {
    auto canonical = canonicalize(std::move(entries));
    if (canonical.empty()) throw ContractError("multiset: cannot construct from an empty entry list");
    return Multiset(std::move(canonical));
}

std::uint64_t Multiset::min() const {
    if (empty()) throw ContractError("multiset: min of empty multiset");
    return entries_.front().value;
}

std::uint64_t Multiset::max() const {
    if (empty()) throw ContractError("multiset: max of empty multiset");
    return entries_.back().value;
}

std::uint64_t Multiset::multiplicity(std::uint64_t value) const noexcept {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), value,
                               [](const Entry& e, std::uint64_t v) { return e.value < v; });
    return (it != entries_.end() && it->value == value) ? it->count : 0;
}

bool Multiset::is_set() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.count == 1; });
}

std::vector<std::uint64_t> Multiset::elements() const {
    std::vector<std::uint64_t> out;
    out.reserve(cardinality_);
    for (const Entry& e : entries_) out.insert(out.end(), e.count, e.value);
    return out;
}

std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
    // Walk both run-length encodings without expanding them.
    std::size_t i = 0, j = 0;
    std::uint64_t left_a = 0, left_b = 0;
    while (true) {
        if (left_a == 0 && i < a.entries_.size()) left_a = a.entries_[i].count;
        if (left_b == 0 && j < b.entries_.size()) left_b = b.entries_[j].count;
        const bool end_a = left_a == 0;
        const bool end_b = left_b == 0;
        if (end_a || end_b) return end_b <=> end_a;
        const std::uint64_t va = a.entries_[i].value;
        const std::uint64_t vb = b.entries_[j].value;
        if (va != vb) return va <=> vb;
        const std::uint64_t step = std::min(left_a, left_b);
        left_a -= step;
        left_b -= step;
        if (left_a == 0) ++i;
        if (left_b == 0) ++j;
    }
}

Multiset minkowski_sum(const Multiset& a, const Multiset& b) {
    if (a.empty() || b.empty()) return {};
    detail::checked_mul(a.cardinality(), b.cardinality(), "minkowski sum cardinality");
    std::vector<Entry> pairs;
    pairs.reserve(a.distinct() * b.distinct());
    for (const Entry& x : a.entries()) {
        for (const Entry& y : b.entries()) {
            pairs.push_back({detail::checked_add(x.value, y.value, "minkowski sum value"),
                             detail::checked_mul(x.count, y.count, "minkowski sum multiplicity")});
        }
    }
    return Multiset::from_entries(std::move(pairs));
}

Multiset minkowski_set_sum(const Multiset& a, const Multiset& b) {
    if (!a.is_set() || !b.is_set()) throw ContractError("minkowski_set_sum: operands must have all multiplicities 1");
    Multiset sum = minkowski_sum(a, b);
    std::vector<Entry> collapsed(sum.entries().begin(), sum.entries().end());
    for (Entry& e : collapsed) e.count = 1;
    return Multiset::from_entries(std::move(collapsed));
}

bool contains(const Multiset& a, const Multiset& b) {
    auto bi = b.entries().begin();
    const auto be = b.entries().end();
    for (const Entry& e : a.entries()) {
        while (bi != be && bi->value < e.value) ++bi;
        if (bi == be || bi->value != e.value || bi->count < e.count) return false;
    }
    return true;
}

Multiset difference(const Multiset& a, const Multiset& b) {
    std::vector<Entry> out;
    auto bi = b.entries().begin();
    const auto be = b.entries().end();
    for (const Entry& e : a.entries()) {
        while (bi != be && bi->value < e.value) ++bi;
        const std::uint64_t removed = (bi != be && bi->value == e.value) ? bi->count : 0;
        if (e.count > removed) out.push_back({e.value, e.count - removed});
    }
    if (out.empty()) return {};
    return Multiset::from_entries(std::move(out));
}

Multiset sum_union(const Multiset& a, const Multiset& b) {
    std::vector<Entry> all(a.entries().begin(), a.entries().end());
    all.insert(all.end(), b.entries().begin(), b.entries().end());
    if (all.empty()) return {};
    return Multiset::from_entries(std::move(all));
}

Normalized normalize(const Multiset& m) {
    const std::uint64_t offset = m.min();
    std::vector<Entry> core(m.entries().begin(), m.entries().end());
    for (Entry& e : core) e.value -= offset;
    return {offset, Multiset::from_entries(std::move(core))};
}

Multiset shift(const Multiset& m, std::uint64_t offset) {
    std::vector<Entry> out(m.entries().begin(), m.entries().end());
    for (Entry& e : out) e.value = detail::checked_add(e.value, offset, "shift");
    if (out.empty()) return {};
    return Multiset::from_entries(std::move(out));
}

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    void expect(char c) {
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    std::uint64_t number() {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '-')
            throw ParseError("negative values are not allowed", pos_);
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec == std::errc::result_out_of_range) throw ParseError("integer exceeds 64 bits", pos_);
        if (ec != std::errc()) throw ParseError("expected a non-negative integer", pos_);
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }
    std::size_t position() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Multiset parse_multiset(std::string_view text) {
    Scanner in(text);
    if (in.at_end()) throw ParseError("empty multiset", 0);
    if (in.peek() == '(') {
        std::vector<Entry> entries;
        while (true) {
            in.expect('(');
            const std::uint64_t value = in.number();
            in.expect(':');
            const std::size_t at = in.position();
            const std::uint64_t count = in.number();
            if (count == 0) throw ParseError("multiplicity must be positive", at);
            in.expect(')');
            entries.push_back({value, count});
            if (in.at_end()) break;
            in.accept(',');
        }
        return Multiset::from_entries(std::move(entries));
    }
    std::vector<std::uint64_t> values;
    while (true) {
        values.push_back(in.number());
        if (in.at_end()) break;
        in.accept(',');
    }
    return Multiset::from_elements(values);
}

std::string format_multiset(const Multiset& m, MultisetStyle style) {
    std::ostringstream out;
    bool first = true;
    for (const Entry& e : m.entries()) {
        if (style == MultisetStyle::Pairs) {
            out << (first ? "" : ",") << '(' << e.value << ':' << e.count << ')';
            first = false;
            continue;
        }
        for (std::uint64_t k = 0; k < e.count; ++k) {
            out << (first ? "" : ",") << e.value;
            first = false;
        }
    }
    return out.str();
}

} // namespace msdecomp
