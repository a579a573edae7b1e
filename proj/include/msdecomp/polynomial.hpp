#pragma once

// Sparse polynomials in ℕ[x] and their correspondence with multisets:
// the term c·x^e is the value e repeated c times.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "msdecomp/multiset.hpp"

namespace msdecomp {

struct Term {
    std::uint64_t exponent = 0;
    std::uint64_t coefficient = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

class SparsePolynomial {
public:
    // The zero polynomial.
    SparsePolynomial() = default;

    // Terms may come in any order; like terms are merged and zero
    // coefficients dropped.
    static SparsePolynomial from_terms(std::vector<Term> terms);

    std::span<const Term> terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::uint64_t degree() const;
    std::uint64_t lowest_exponent() const;
    bool is_constant() const noexcept { return terms_.size() == 1 && terms_.front().exponent == 0; }

    // p(1): the sum of coefficients, i.e. the cardinality of the multiset image.
    std::uint64_t coefficient_sum() const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

private:
    std::vector<Term> terms_;
};

SparsePolynomial to_polynomial(const Multiset& m);
Multiset from_polynomial(const SparsePolynomial& p);

// p·q, computed through the Minkowski sum of the multiset images.
SparsePolynomial multiply(const SparsePolynomial& p, const SparsePolynomial& q);

// Grammar: term ("+" term)*, term := [coef]["x"["^" exp]]. Whitespace ignored.
SparsePolynomial parse_polynomial(std::string_view text);

// Ascending exponents, e.g. "1 + x + 3x^2".
std::string format_polynomial(const SparsePolynomial& p);

// "(1 + x)(1 + x^2 + x^4)".
std::string format_factors(std::span<const SparsePolynomial> factors);

} // namespace msdecomp
