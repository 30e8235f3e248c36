#pragma once
#include <optional>
#include <utility>
#include "tropws/error.hpp"
#include "tropws/ring.hpp"

namespace tropws {

using WeightVector = std::vector<Rat>;

struct Term {
    Monomial m;
    Rat c;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are stored in canonical grevlex-descending order with no zero
// coefficients. Values are immutable after construction; every
// operation returns a fresh polynomial.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, std::vector<Term> terms); // collects + sorts

    static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr ring, const Rat& c);
    static Polynomial monomial(RingPtr ring, Monomial m, Rat c = 1);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_homogeneous() const;
    int degree() const; // total degree; -1 for the zero polynomial

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rat& c) const;
    Polynomial mul_term(const Monomial& m, const Rat& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Scale so the canonical leading coefficient is 1.
    Polynomial monic_canonical() const;
    // Scale to coprime integer coefficients with positive canonical lead.
    Polynomial clear_denominators() const;

    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
    void normalize();
};

// Grammar (whitespace insignificant):
//   polynomial = ["+"|"-"] term (("+"|"-") term)*
//   term       = rational | [rational "*"] factor ("*" factor)*
//   factor     = var ["^" nat]
//   rational   = int ["/" posint]
// Throws parse_error with position, or on unknown variable names.
Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

// Sum of the terms of f of minimal w-weight (min convention).
Polynomial initial_form(const WeightVector& w, const Polynomial& f);

void check_same_ring(const Polynomial& a, const Polynomial& b);

} // namespace tropws
