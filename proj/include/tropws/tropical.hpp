#pragma once
#include <optional>
#include "tropws/bounds.hpp"
#include "tropws/gfan.hpp"
#include "tropws/polytope.hpp"

namespace tropws {

enum class ComplexSource { Hypersurface, Prevariety, Variety };

// Polyhedral support of a tropical object, as a fan whose every cone
// contains the all-ones line.
struct TropicalComplex {
    Fan fan;
    ComplexSource source = ComplexSource::Hypersurface;

    bool empty() const { return fan.empty(); }
    int dim() const { return fan.top_dim(); } // -1 when empty
};

// Cone counts by ambient dimension 0..n.
std::vector<long> complex_f_vector(const TropicalComplex& T);

// Points w where the minimum of <w, a> over the monomials of f is
// attained at least twice: the codimension >= 1 skeleton of the Newton
// polytope's normal fan.
TropicalComplex tropical_hypersurface(const Polynomial& f);
bool weight_in_tropical_hypersurface(const Polynomial& f, const WeightVector& w);

// Common refinement of the member hypersurfaces.
TropicalComplex tropical_prevariety(const std::vector<Polynomial>& polys);

// Subfan of the Groebner fan on the cones whose relative-interior
// initial ideal is monomial-free.
TropicalComplex tropical_variety(const Ideal& I);
TropicalComplex tropical_variety(const Ideal& I, const GroebnerFan& gf);
bool weight_in_tropical_variety(const Ideal& I, const WeightVector& w);

// Max saturation exponent over the initial ideals of all Groebner cones
// (the alpha entering the witness degree bound alpha * n).
long fan_saturation_exponent(const Ideal& I, const GroebnerFan& gf);

struct TropicalBasisCheck {
    bool is_basis = false;
    // a weight in the prevariety of T but not in trop(I)
    std::optional<WeightVector> counterexample;
};

// Support equality of the prevariety of T against trop(I), tested on
// relative interior points of the common refinement with the Groebner
// fan. T must be a subset of I and generate it; both violations are
// errors, not `false`.
TropicalBasisCheck is_tropical_basis(const Ideal& I, const std::vector<Polynomial>& T);

// f in I whose w-initial form is a monomial, built by lifting a
// minimal-degree monomial of in_w(I) through recorded division
// cofactors. Errors when w lies in trop(I).
Polynomial find_witness(const Ideal& I, const WeightVector& w);

struct TropicalBasisResult {
    std::vector<Polynomial> basis; // canonically monic
    int degree = 0;                // max degree over the basis
    int universal_degree = 0;      // deg of the universal basis it started from
    long alpha = 0;                // fan saturation exponent
    int ideal_degree = 0;          // d
    int krull = 0;                 // r
    Rat chain_max;                 // max(deg U, alpha n)
    Rat chain_n_degu;              // n deg U
    std::optional<Rat> chain_eq3;  // closed-form bound; absent when r = 0
    size_t witnesses_added = 0;
};

// Universal basis plus witnesses at every Groebner cone whose relative
// interior still lies in the prevariety of the working set, iterated
// until the support check passes.
TropicalBasisResult compute_tropical_basis(const Ideal& I);

} // namespace tropws
