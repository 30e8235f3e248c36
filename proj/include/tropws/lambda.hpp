#pragma once
#include "tropws/polytope.hpp"

namespace tropws {

struct LambdaResult {
    int d = 0, n = 0;
    std::vector<long> values;                   // lambda_j for j = 0..n-2
    bool exact = false;
    std::vector<std::vector<LPoint>> witnesses; // vertex set attaining each value
    unsigned long long nodes = 0;               // hull evaluations spent
    unsigned long long subsets_total = 0;       // size of the canonical search space
    unsigned long long subsets_visited = 0;
};

// Maximize every f_j independently over lattice polytopes inside
// d*Delta_{n-1}. Subsets of the lattice points are enumerated by
// decreasing cardinality, up to coordinate-permutation symmetry, with
// hulls deduplicated through their vertex sets. When the budget (a node
// ceiling on hull evaluations) does not cover the exhaustive sweep, the
// result downgrades to certified lower bounds found by seeded local
// search; witnesses are always replayable vertex sets.
LambdaResult lambda_enumerate(int d, int n,
                              unsigned long long budget = 50'000'000ULL,
                              int threads = 0); // 0 = TROPWS_THREADS or 1

} // namespace tropws
