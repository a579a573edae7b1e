#include "msdecomp/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "msdecomp/errors.hpp"
#include "overflow.hpp"

namespace msdecomp {

SparsePolynomial SparsePolynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    SparsePolynomial p;
    for (const Term& t : terms) {
        if (t.coefficient == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().exponent == t.exponent) {
            p.terms_.back().coefficient = detail::checked_add(p.terms_.back().coefficient, t.coefficient, "coefficient");
        } else {
            p.terms_.push_back(t);
        }
    }
    return p;
}

std::uint64_t SparsePolynomial::degree() const {
    if (is_zero()) throw ContractError("degree of the zero polynomial");
    return terms_.back().exponent;
}

std::uint64_t SparsePolynomial::lowest_exponent() const {
    if (is_zero()) throw ContractError("lowest exponent of the zero polynomial");
    return terms_.front().exponent;
}

std::uint64_t SparsePolynomial::coefficient_sum() const {
    std::uint64_t sum = 0;
    for (const Term& t : terms_) sum = detail::checked_add(sum, t.coefficient, "coefficient sum");
    return sum;
}

SparsePolynomial to_polynomial(const Multiset& m) {
    std::vector<Term> terms;
    terms.reserve(m.distinct());
    for (const Entry& e : m.entries()) terms.push_back({e.value, e.count});
    return SparsePolynomial::from_terms(std::move(terms));
}

Multiset from_polynomial(const SparsePolynomial& p) {
    if (p.is_zero()) return {};
    std::vector<Entry> entries;
    entries.reserve(p.terms().size());
    for (const Term& t : p.terms()) entries.push_back({t.exponent, t.coefficient});
    return Multiset::from_entries(std::move(entries));
}

SparsePolynomial multiply(const SparsePolynomial& p, const SparsePolynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    return to_polynomial(minkowski_sum(from_polynomial(p), from_polynomial(q)));
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    SparsePolynomial parse() {
        std::vector<Term> terms;
        if (at_end()) throw ParseError("empty polynomial", pos_);
        terms.push_back(term());
        while (!at_end()) {
            if (peek() == '-') throw ParseError("negative coefficient: not in ℕ[x]", pos_);
            if (peek() != '+') throw ParseError(std::string("unexpected '") + peek() + "'", pos_);
            ++pos_;
            terms.push_back(term());
        }
        return SparsePolynomial::from_terms(std::move(terms));
    }

private:
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
    bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::uint64_t number() {
        skip_space();
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec == std::errc::result_out_of_range) throw ParseError("integer exceeds 64 bits", pos_);
        if (ec != std::errc()) throw ParseError("expected an integer", pos_);
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    Term term() {
        if (peek() == '-') throw ParseError("negative coefficient: not in ℕ[x]", pos_);
        Term t{0, 1};
        bool any = false;
        if (digit_next()) {
            t.coefficient = number();
            any = true;
        }
        if (peek() == '*' && any) ++pos_;
        if (peek() == 'x' || peek() == 'X') {
            ++pos_;
            t.exponent = 1;
            any = true;
            if (peek() == '^') {
                ++pos_;
                if (peek() == '-') throw ParseError("negative exponent", pos_);
                if (!digit_next()) throw ParseError("expected exponent after '^'", pos_);
                t.exponent = number();
            }
        }
        if (!any) throw ParseError("expected a term", pos_);
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

SparsePolynomial parse_polynomial(std::string_view text) { return PolyParser(text).parse(); }

std::string format_polynomial(const SparsePolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : p.terms()) {
        if (!first) out << " + ";
        first = false;
        if (t.exponent == 0) {
            out << t.coefficient;
            continue;
        }
        if (t.coefficient != 1) out << t.coefficient;
        out << 'x';
        if (t.exponent != 1) out << '^' << t.exponent;
    }
    return out.str();
}

std::string format_factors(std::span<const SparsePolynomial> factors) {
    std::string out;
    for (const auto& f : factors) out += "(" + format_polynomial(f) + ")";
    return out;
}

} // namespace msdecomp
