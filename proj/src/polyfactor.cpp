#include "msdecomp/polyfactor.hpp"

#include <algorithm>

#include "msdecomp/errors.hpp"

namespace msdecomp {

namespace {

SparsePolynomial monomial(std::uint64_t exponent) { return SparsePolynomial::from_terms({{exponent, 1}}); }

SparsePolynomial divide_by_x_power(const SparsePolynomial& p, std::uint64_t c) {
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    for (Term& t : terms) t.exponent -= c;
    return SparsePolynomial::from_terms(std::move(terms));
}

} // namespace

PolyFactorization n_poly_fact(const SparsePolynomial& p, const PolyFactOptions& options) {
    if (p.is_zero()) throw ContractError("factor: the zero polynomial has no factorization");
    const std::uint64_t cardinality = p.coefficient_sum();
    if (cardinality > options.max_cardinality)
        throw LimitError("factor: Multiset(p) would have " + std::to_string(cardinality) +
                         " elements, above the limit of " + std::to_string(options.max_cardinality));

    PolyFactorization out;
    const std::uint64_t shift = p.lowest_exponent();
    if (shift > 0) {
        const SparsePolynomial core = divide_by_x_power(p, shift);
        if (core == monomial(0)) {
            if (shift == 1) {
                out.irreducibility = PolyIrreducibility::Proven;
            } else {
                out.factors.emplace(monomial(1), monomial(shift - 1));
            }
        } else {
            out.factors.emplace(monomial(shift), core);
        }
        return out;
    }

    const DecompositionResult result = decompose(from_polynomial(p), options.search);
    if (const Found* f = result.found()) {
        out.factors.emplace(to_polynomial(f->a), to_polynomial(f->b));
    } else if (std::holds_alternative<Irreducible>(result.core())) {
        out.irreducibility = PolyIrreducibility::Proven;
    }
    return out;
}

bool factor_less(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
                                        [](const Term& x, const Term& y) {
                                            if (x.exponent != y.exponent) return x.exponent < y.exponent;
                                            return x.coefficient < y.coefficient;
                                        });
}

CompleteFactorization factor_completely(const SparsePolynomial& p, const PolyFactOptions& options) {
    CompleteFactorization out;
    std::vector<SparsePolynomial> pending{p};
    while (!pending.empty()) {
        SparsePolynomial next = std::move(pending.back());
        pending.pop_back();
        PolyFactorization split = n_poly_fact(next, options);
        if (split.factors) {
            pending.push_back(std::move(split.factors->first));
            pending.push_back(std::move(split.factors->second));
        } else {
            out.proven = out.proven && split.irreducibility == PolyIrreducibility::Proven;
            out.factors.push_back(std::move(next));
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), factor_less);
    return out;
}

} // namespace msdecomp
