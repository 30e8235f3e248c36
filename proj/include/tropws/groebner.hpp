#pragma once
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include "tropws/term_order.hpp"

namespace tropws {

// Reduced Groebner basis: monic elements sorted descending by their
// marked leading monomials. No term of any element is divisible by
// another element's lead, and the leads are pairwise non-divisible.
class GroebnerBasis {
public:
    GroebnerBasis(TermOrder order, std::vector<Polynomial> elems);

    const TermOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elems_; }
    const std::vector<Monomial>& leads() const { return leads_; }
    const RingPtr& ring() const { return elems_.front().ring(); }
    size_t size() const { return elems_.size(); }
    int degree() const; // max total degree over the elements

private:
    TermOrder order_;
    std::vector<Polynomial> elems_;
    std::vector<Monomial> leads_;
};

// Homogeneous ideal given by generators, with a synchronized cache of
// reduced bases keyed by the canonical order matrix. Copies share the
// cache.
class Ideal {
public:
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return ring_; }
    size_t n() const { return ring_->n(); }
    const std::vector<Polynomial>& generators() const { return gens_; }
    std::shared_ptr<const GroebnerBasis> reduced_basis(const TermOrder& order) const;

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, std::shared_ptr<const GroebnerBasis>> map;
    };
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

// Unique remainder of f modulo G (full tail reduction).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
// Same, recording f = sum cof[i] * G[i] + remainder.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G,
                       std::vector<Polynomial>& cof);

// Buchberger with normal pair selection and the two standard pruning
// criteria, followed by full inter-reduction. Generators must be
// homogeneous (this is what guarantees the division steps terminate for
// matrix orders with negative entries).
GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                         const TermOrder& order);

bool ideal_member(const Ideal& I, const Polynomial& f);
bool equal_ideals(const Ideal& A, const Ideal& B);
bool is_unit_ideal(const Ideal& I);

// in_w(I), presented by the initial forms of a reduced basis for the
// w-refined grevlex order.
Ideal initial_ideal(const WeightVector& w, const Ideal& I);

struct Saturation {
    Ideal ideal; // J : (x_1...x_n)^infinity
    long alpha;  // least k with J : (x_1...x_n)^k equal to the saturation
};
Saturation saturate_torus(const Ideal& J);

// Minimal-degree monomial of J found by degree-by-degree normal-form
// search (lexicographically largest first within a degree), or nothing
// when the saturation is proper. Aborts loudly if the cap is exhausted
// even though the saturation says a monomial exists.
std::optional<Monomial> contains_monomial(const Ideal& J, long degree_cap);
long default_monomial_cap(const Ideal& J); // alpha * n, at least 1

int krull_dimension(const Ideal& I); // dim R/I via independent variable sets
int minimal_degree(const Ideal& I);  // max degree in a minimal generating set

// grevlex with the given variable moved to the revlex-smallest slot.
TermOrder grevlex_with_last(size_t n, size_t last_var);

std::vector<Monomial> monomials_of_degree(size_t n, int degree); // lex descending

} // namespace tropws
