#pragma once
#include <array>
#include <cstdint>
#include "tropws/polynomial.hpp"

namespace tropws {

using LPoint = std::vector<long long>; // lattice point

// Subset of up to 256 point indices.
struct PMask {
    std::array<uint64_t, 4> w{};

    void set(size_t i) { w[i >> 6] |= (uint64_t(1) << (i & 63)); }
    bool test(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    size_t count() const;
    bool none() const { return !(w[0] | w[1] | w[2] | w[3]); }
    PMask operator&(const PMask& o) const;
    bool operator==(const PMask& o) const { return w == o.w; }
    bool operator<(const PMask& o) const { return w < o.w; }
    bool subset_of(const PMask& o) const;
};

// Lattice polytope over a deduplicated generating point set, with the
// full face lattice computed in exact integer arithmetic. Faces are
// stored as masks over the point indices (every point incident to the
// face, vertices or not).
class Polytope {
public:
    static Polytope hull(std::vector<LPoint> points);

    const std::vector<LPoint>& points() const { return pts_; }
    size_t ambient_dim() const { return pts_.front().size(); }
    int dim() const { return dim_; }

    const std::vector<size_t>& vertex_indices() const { return vertex_idx_; }
    std::vector<LPoint> vertices() const;

    // proper nonempty faces grouped by dimension: faces(j) for j = 0..dim-1
    const std::vector<std::vector<PMask>>& faces_by_dim() const { return faces_; }
    std::vector<long> f_vector() const; // (f_0, ..., f_{dim-1})
    PMask all_points_mask() const;

    bool operator==(const Polytope& o) const; // same vertex set

private:
    std::vector<LPoint> pts_;
    int dim_ = 0;
    std::vector<size_t> vertex_idx_;
    std::vector<std::vector<PMask>> faces_;
};

Polytope newton_polytope(const Polynomial& f);
Polytope minkowski_sum(const Polytope& P, const Polytope& Q);

// Lattice points of d * Delta_{n-1}: all nonnegative integer vectors of
// length n summing to d, lexicographically descending.
std::vector<LPoint> dilated_simplex_points(int d, int n);

// Alternating sum of proper face counts equals 1 - (-1)^dim.
bool euler_relation_holds(const Polytope& P);

} // namespace tropws
