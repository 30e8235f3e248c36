#pragma once
#include <string>
#include "tropws/linalg.hpp"
#include "tropws/lp.hpp"

namespace tropws {

// Rational polyhedral cone in canonical H-representation: equations as
// a primitive RREF basis, inequalities reduced modulo the equations,
// primitive, irredundant (facet-defining) and sorted. Two cones are
// equal iff their keys are equal.
struct Cone {
    size_t n = 0;
    IMat ineqs;
    IMat eqs;
    int dim = 0;
    int lineality_dim = 0;

    std::string key() const;
    bool contains(const std::vector<Rat>& w) const;
    bool is_full_space() const { return ineqs.empty() && eqs.empty(); }
};

Cone make_cone(size_t n, IMat ineqs, IMat eqs);
Cone intersect(const Cone& a, const Cone& b);

// The face obtained by turning one facet inequality into an equation.
Cone cone_face(const Cone& c, size_t ineq_index);

// Every proper face, deduplicated, down to the lineality space.
std::vector<Cone> all_proper_faces(const Cone& c);

// A rational point satisfying all equations and strictly satisfying
// every facet inequality.
std::vector<Rat> relative_interior_point(const Cone& c);

// Polyhedral fan: all cones (closed under faces), sorted by (dim, key).
struct Fan {
    size_t n = 0;
    std::vector<Cone> cones;
    std::vector<size_t> maximal; // indices into cones

    std::vector<long> f_vector() const; // cone counts by dimension, 0..n
    int top_dim() const;                // -1 when empty
    bool supports(const std::vector<Rat>& w) const;
    bool empty() const { return cones.empty(); }
};

// Build the fan generated by the given cones: prune cones contained in
// others, then close under faces.
Fan assemble_fan(size_t n, std::vector<Cone> generators);

} // namespace tropws
