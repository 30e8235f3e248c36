#pragma once
#include <random>
#include "tropws/groebner.hpp"

// Shared helpers for the test suites: deterministic random generators
// and small independent oracles.
namespace tw_test {

using namespace tropws;

inline Polynomial random_poly(std::mt19937& rng, const RingPtr& ring, int degree,
                              bool homogeneous = true, double keep = 0.5) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::vector<Term> terms;
    auto monos = monomials_of_degree(ring->n(), degree);
    for (const Monomial& m : monos) {
        if (coin(rng) > keep) continue;
        int c = coeff(rng);
        if (c == 0) c = 1;
        terms.push_back({m, Rat(c)});
    }
    if (!homogeneous && degree > 1) {
        for (const Monomial& m : monomials_of_degree(ring->n(), degree - 1))
            if (coin(rng) < keep / 2) terms.push_back({m, Rat(coeff(rng))});
    }
    if (terms.empty()) terms.push_back({monos.front(), Rat(1)});
    return Polynomial(ring, std::move(terms));
}

inline WeightVector random_weight(std::mt19937& rng, size_t n, int span = 9) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 4);
    WeightVector w(n);
    for (size_t i = 0; i < n; ++i) {
        w[i] = Rat(num(rng), den(rng));
        w[i].canonicalize();
    }
    return w;
}

// Fixture: the six generators of the degree-3 ideal in C[x,y,z] whose
// tropical variety is empty.
inline Ideal ex31_ideal() {
    auto R = make_ring("x,y,z");
    std::vector<std::string> gens = {
        "x^2*y + x*y^2",       "x^2*z + x*z^2",       "y^2*z + y*z^2",
        "x^3 + x^2*y + x^2*z", "x*y^2 + y^3 + y^2*z", "x*z^2 + y*z^2 + z^3",
    };
    std::vector<Polynomial> ps;
    for (const auto& s : gens) ps.push_back(parse_polynomial(s, R));
    return Ideal(R, std::move(ps));
}

// The ten extra degree-3 elements completing a universal basis for it.
inline std::vector<Polynomial> ex31_universal_extras(const RingPtr& R) {
    std::vector<std::string> strs = {
        "x^3 - x*y^2 - x*z^2", "x^2*y - y^3 + y*z^2", "x^2*z + y^2*z - z^3",
        "x^3 - x*y^2 + x^2*z", "x*y^2 + y^3 - y*z^2", "x*z^2 - y^2*z + z^3",
        "x^3 + x^2*y - x*z^2", "x^2*y - y^3 - y^2*z", "x^2*z - y*z^2 - z^3",
        "x^3 + y^3 + z^3",
    };
    std::vector<Polynomial> ps;
    for (const auto& s : strs) ps.push_back(parse_polynomial(s, R));
    return ps;
}

// Fixture: x^5, x^4 + x^2 y^2 + y^4, y^5 in C[x,y].
inline Ideal ex32_ideal() {
    auto R = make_ring("x,y");
    std::vector<Polynomial> ps = {
        parse_polynomial("x^5", R),
        parse_polynomial("x^4 + x^2*y^2 + y^4", R),
        parse_polynomial("y^5", R),
    };
    return Ideal(R, std::move(ps));
}

// Fixture: the hypersimplex quadric xy - zw + uv.
inline Ideal delta24_ideal() {
    auto R = make_ring("x,y,z,w,u,v");
    return Ideal(R, {parse_polynomial("x*y - z*w + u*v", R)});
}

// Pascal-triangle binomial, independent of the library's gmp route.
inline long pascal(int m, int k) {
    if (k == 0) return 1;
    if (m < 0 || k < 0 || k > m) return 0;
    std::vector<std::vector<long>> row(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        row[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            row[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                row[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                row[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
    }
    return row[static_cast<size_t>(m)][static_cast<size_t>(k)];
}

} // namespace tw_test
