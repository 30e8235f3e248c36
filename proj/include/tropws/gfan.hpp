#pragma once
#include "tropws/cone.hpp"
#include "tropws/groebner.hpp"

namespace tropws {

// Closed cone of weights for which the marked leading term of every
// basis element is among the w-minimal terms: one inequality
// (trailing - leading) per term pair, canonicalized.
Cone groebner_cone(const Ideal& I, const GroebnerBasis& G);

// Reduced basis of the maximal cone adjacent across the given facet:
// initial forms at a facet-interior weight, re-marked by an order that
// points across the facet, lifted to the ideal and inter-reduced.
std::shared_ptr<const GroebnerBasis> flip_facet(const Ideal& I, const GroebnerBasis& G,
                                                const std::vector<Int>& facet_normal);

struct GroebnerFan {
    Fan fan;
    // reduced bases aligned with fan.maximal
    std::vector<std::shared_ptr<const GroebnerBasis>> bases;
};

// Breadth-first facet-flip traversal, starting from the grevlex basis.
// `max_cones` is a budget on maximal cones; exceeding it is an error
// (the fan is finite but can be large).
GroebnerFan groebner_fan(const Ideal& I);
GroebnerFan groebner_fan(const Ideal& I, const TermOrder& start,
                         size_t max_cones = SIZE_MAX);

struct UniversalBasis {
    std::vector<Polynomial> elements; // canonically monic, deduplicated
    int degree;
};

UniversalBasis universal_groebner_basis(const Ideal& I);
UniversalBasis universal_basis_from_fan(const GroebnerFan& gf);

} // namespace tropws
