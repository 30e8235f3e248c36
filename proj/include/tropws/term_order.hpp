#pragma once
#include "tropws/polynomial.hpp"

namespace tropws {

enum class OrderKind { Lex, Grevlex, Weighted, Matrix };

// Integer-matrix term order. compare(a,b) walks the rows and decides by
// the first nonzero value of row·(a-b); rows must span R^n so that the
// order is total. The leading term of a polynomial is the largest
// monomial under the order.
class TermOrder {
public:
    static TermOrder lex(size_t n);
    static TermOrder grevlex(size_t n);
    // Min-convention mapping lives here and nowhere else: initial forms
    // collect terms of *minimal* w-weight while term orders select
    // *maximal* monomials, so the weight row enters negated. Leading
    // terms under the result are terms of initial_form(w, .), with ties
    // broken by `base`.
    static TermOrder weighted(const WeightVector& w, const TermOrder& base);
    // Raw matrix order (rows are applied top-down).
    static TermOrder matrix(size_t n, std::vector<std::vector<Int>> rows);

    size_t n() const { return n_; }
    OrderKind kind() const { return kind_; }
    const std::vector<std::vector<Int>>& rows() const { return rows_; }

    int compare(const Monomial& a, const Monomial& b) const; // -1, 0, +1
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    // Canonical reduced matrix: successive rows reduced modulo the span
    // of earlier ones and scaled primitive. Equivalent orders (same
    // comparison function) share a canonical matrix, which keys the
    // Groebner basis cache.
    const std::vector<std::vector<Int>>& canonical_rows() const { return canon_; }
    const std::string& key() const { return key_; }
    bool equivalent(const TermOrder& o) const { return key_ == o.key_; }

private:
    TermOrder(OrderKind kind, size_t n, std::vector<std::vector<Int>> rows);
    OrderKind kind_;
    size_t n_;
    std::vector<std::vector<Int>> rows_;
    std::vector<std::vector<Int>> canon_;
    std::string key_;
};

// Spec name for the weighted-refinement constructor.
inline TermOrder weight_refined_order(const WeightVector& w, const TermOrder& base) {
    return TermOrder::weighted(w, base);
}

// -1 / 0 / +1, spec-level monomial comparison.
int compare_monomials(const TermOrder& order, const Monomial& a, const Monomial& b);

} // namespace tropws
