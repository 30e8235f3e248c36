#pragma once
#include <string>
#include <utility>
#include <vector>
#include "tropws/numeric.hpp"

namespace tropws {

// Labeled inequality chain over exact values. Values are rationals
// because the degree-bound base (d^(n-r)+d)/2 is kept unrounded.
struct BoundReport {
    std::vector<std::pair<std::string, long>> inputs;
    std::vector<std::pair<std::string, Rat>> chain;
    bool consistent = true; // monotonicity of the chain is only claimed when set
    std::string note;
};

// 2*((d^(n-r)+d)/2)^(2^(r-1)), exact rational.
Rat eq2_mayr_ritscher(long d, long n, long r);

// [max(deg_u, alpha*n), n*deg_u, 2n*((d^(n-r)+d)/2)^(2^(r-1))]
BoundReport eq3_tropical_basis_bound(long deg_u, long alpha, long n, long d, long r);

// C(e+n-1, n-1): reduced bases of degree e have at most this many elements.
Int gb_cardinality_bound(long e, long n);

// f-vector of the unimodular triangulation of d*Delta_{n-1}.
Int eq4_unimodular_fvector(long d, long n, long j);

// dual bound on hypersurface cell counts.
Int eq5_hypersurface_bound(long d, long n, long j);

// s polynomials of degree at most d: the hypersurface bound at degree s*d.
Int prop_variety_fvector_bound(long s, long d, long n, long j);

// vertex-count bound for lattice polytopes in sd*Delta_{n-1}.
Int lambda0_vertex_bound(long sd, long n);

struct PlueckerBound {
    long n; // C(N,D) Pluecker coordinates
    long r; // (N-D)*D + 1
    Int bound;
};
PlueckerBound pluecker_degree_bound(long D, long N);

} // namespace tropws
