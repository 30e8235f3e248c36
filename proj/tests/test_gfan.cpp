#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include "test_util.hpp"
#include "tropws/gfan.hpp"

using namespace tropws;
using namespace tw_test;

TEST_CASE("groebner cone of a binary quadric") {
    auto R = make_ring("x,y");
    Ideal I(R, {parse_polynomial("x^2 + x*y + y^2", R)});
    // leading term x^2 under the order refining weight (0,1)
    auto G = I.reduced_basis(weight_refined_order(WeightVector{0, 1}, TermOrder::grevlex(2)));
    REQUIRE(G->leads().front() == Monomial{2, 0});
    Cone c = groebner_cone(I, *G);
    // w1 <= w2, i.e. one inequality (-1, 1)
    REQUIRE(c.ineqs.size() == 1);
    CHECK(c.ineqs.front() == std::vector<Int>{-1, 1});
    CHECK(c.dim == 2);
    CHECK(c.lineality_dim == 1);
}

TEST_CASE("groebner cone of a monomial ideal is everything") {
    auto R = make_ring("x,y,z");
    Ideal I(R, {parse_polynomial("x*y", R)});
    Cone c = groebner_cone(I, *I.reduced_basis(TermOrder::grevlex(3)));
    CHECK(c.is_full_space());
    CHECK(c.dim == 3);
    CHECK(c.lineality_dim == 3);
}

TEST_CASE("groebner cone dual to a Newton triangle vertex") {
    Ideal I = delta24_ideal();
    // generic weight making xy the unique minimal term
    auto G = I.reduced_basis(
        weight_refined_order(WeightVector{-1, -1, 0, 0, 0, 0}, TermOrder::grevlex(6)));
    REQUIRE(G->leads().front() == Monomial{1, 1, 0, 0, 0, 0});
    Cone c = groebner_cone(I, *G);
    CHECK(c.dim == 6);
    CHECK(c.lineality_dim == 4);
    CHECK(c.ineqs.size() == 2);
}

TEST_CASE("relative interior points satisfy their contracts") {
    SUBCASE("halfplane w1 <= w2") {
        Cone c = make_cone(2, {{Int(-1), Int(1)}}, {});
        auto w = relative_interior_point(c);
        CHECK(w[0] < w[1]);
    }
    SUBCASE("full space") {
        Cone c = make_cone(3, {}, {});
        auto w = relative_interior_point(c);
        CHECK(w == std::vector<Rat>(3, Rat(0)));
    }
    SUBCASE("diagonal line") {
        Cone c = make_cone(2, {}, {{Int(1), Int(-1)}});
        auto w = relative_interior_point(c);
        CHECK(w[0] == w[1]);
    }
}

TEST_CASE("facet flip on a principal two-cone fan") {
    auto R = make_ring("x,y");
    Ideal I(R, {parse_polynomial("x^2 + x*y + y^2", R)});
    auto G = I.reduced_basis(weight_refined_order(WeightVector{0, 1}, TermOrder::grevlex(2)));
    Cone c = groebner_cone(I, *G);
    REQUIRE(c.ineqs.size() == 1);
    auto G2 = flip_facet(I, *G, c.ineqs.front());
    REQUIRE(G2->size() == 1);
    CHECK(G2->leads().front() == Monomial{0, 2}); // lead jumps to y^2
    CHECK(G2->elements().front().monic_canonical() ==
          I.generators().front().monic_canonical());
    CHECK_THROWS_AS(flip_facet(I, *G, std::vector<Int>{Int(5), Int(7)}), domain_error);
}

TEST_CASE("facet flip across the balanced wall of the quintic fixture") {
    Ideal I = ex32_ideal();
    auto R = I.ring();
    // the wall w1 = w2 separates the two S-polynomial regimes
    auto G = I.reduced_basis(weight_refined_order(WeightVector{0, 1}, TermOrder::grevlex(2)));
    Cone c = groebner_cone(I, *G);
    Polynomial s1 = parse_polynomial("x^3*y^2 + x*y^4", R);
    Polynomial s2 = parse_polynomial("x^4*y + x^2*y^3", R);
    auto has = [&](const GroebnerBasis& B, const Polynomial& p) {
        return std::any_of(B.elements().begin(), B.elements().end(), [&](const Polynomial& q) {
            return q.monic_canonical() == p.monic_canonical();
        });
    };
    bool before = has(*G, s1) || has(*G, s2);
    CHECK(before);
    // flip across the wall whose normal is (-1, 1) or (1, -1)
    for (const auto& nu : c.ineqs) {
        auto G2 = flip_facet(I, *G, nu);
        CHECK((has(*G2, s1) || has(*G2, s2)));
    }
}

TEST_CASE("groebner fan of the hypersimplex quadric") {
    Ideal I = delta24_ideal();
    GroebnerFan gf = groebner_fan(I);
    CHECK(gf.fan.maximal.size() == 3);
    auto f = gf.fan.f_vector();
    CHECK(f[6] == 3); // vertices of the Newton triangle
    CHECK(f[5] == 3); // edges
    CHECK(f[4] == 1); // the lineality space
    for (size_t mi : gf.fan.maximal) CHECK(gf.fan.cones[mi].lineality_dim == 4);
}

TEST_CASE("groebner fan of a binomial-like generator") {
    auto R = make_ring("x,y");
    Ideal I(R, {parse_polynomial("x + y", R)});
    GroebnerFan gf = groebner_fan(I);
    CHECK(gf.fan.maximal.size() == 2);
    // separated by the diagonal
    Cone wall = make_cone(2, {}, {{Int(1), Int(-1)}});
    bool found = false;
    for (const Cone& c : gf.fan.cones)
        if (c.key() == wall.key()) found = true;
    CHECK(found);
}

TEST_CASE("universal bases") {
    SUBCASE("principal ideal") {
        Ideal I = delta24_ideal();
        UniversalBasis u = universal_groebner_basis(I);
        REQUIRE(u.elements.size() == 1);
        CHECK(u.degree == 2);
        CHECK(u.elements.front() == I.generators().front().monic_canonical());
    }
    SUBCASE("monomial ideal: order independent") {
        auto R = make_ring("x,y");
        Ideal I(R, {parse_polynomial("x^2", R), parse_polynomial("x*y", R)});
        UniversalBasis u = universal_groebner_basis(I);
        CHECK(u.elements.size() == 2);
        CHECK(u.degree == 2);
    }
    SUBCASE("empty-tropical fixture stays within the sixteen") {
        Ideal I = ex31_ideal();
        auto R = I.ring();
        GroebnerFan gf = groebner_fan(I);
        std::set<std::string> allowed;
        for (const Polynomial& p : I.generators())
            allowed.insert(p.monic_canonical().to_string());
        for (const Polynomial& p : ex31_universal_extras(R))
            allowed.insert(p.monic_canonical().to_string());
        UniversalBasis u = universal_basis_from_fan(gf);
        CHECK(u.degree == 3);
        for (const Polynomial& p : u.elements) CHECK(allowed.count(p.to_string()) == 1);
    }
}

TEST_CASE("property: fan covering and distinct initial ideals") {
    Ideal I = ex32_ideal();
    GroebnerFan gf = groebner_fan(I);
    std::mt19937 rng(99);
    for (int t = 0; t < 200; ++t) {
        WeightVector w = random_weight(rng, 2);
        CHECK(gf.fan.supports(w));
    }
    std::set<std::string> lead_ideals;
    for (size_t k = 0; k < gf.fan.maximal.size(); ++k) {
        std::vector<std::string> leads;
        for (const Monomial& m : gf.bases[k]->leads()) {
            std::string s;
            for (int e : m) s += std::to_string(e) + ",";
            leads.push_back(s);
        }
        std::sort(leads.begin(), leads.end());
        std::string key;
        for (auto& s : leads) key += s + ";";
        lead_ideals.insert(key);
    }
    CHECK(lead_ideals.size() == gf.fan.maximal.size());
}

TEST_CASE("property: interior initial ideal equals the lead-term ideal") {
    Ideal I = ex32_ideal();
    GroebnerFan gf = groebner_fan(I);
    for (size_t k = 0; k < gf.fan.maximal.size(); ++k) {
        const Cone& c = gf.fan.cones[gf.fan.maximal[k]];
        WeightVector w = relative_interior_point(c);
        Ideal J = initial_ideal(w, I);
        std::vector<Polynomial> leads;
        for (const Monomial& m : gf.bases[k]->leads())
            leads.push_back(Polynomial::monomial(I.ring(), m));
        CHECK(equal_ideals(J, Ideal(I.ring(), leads)));
    }
}

TEST_CASE("property: traversal from lex reaches the same fan") {
    for (const Ideal& I : {ex32_ideal(), delta24_ideal()}) {
        GroebnerFan a = groebner_fan(I);
        GroebnerFan b = groebner_fan(I, TermOrder::lex(I.n()));
        REQUIRE(a.fan.cones.size() == b.fan.cones.size());
        for (size_t i = 0; i < a.fan.cones.size(); ++i)
            CHECK(a.fan.cones[i].key() == b.fan.cones[i].key());
    }
}

TEST_CASE("property: saturation exponent within the universal degree") {
    std::vector<Ideal> fixtures;
    fixtures.push_back(delta24_ideal());
    {
        auto R = make_ring("x,y,z");
        fixtures.push_back(Ideal(R, {parse_polynomial("x^2*y", R)}));
        fixtures.push_back(Ideal(R, {parse_polynomial("x*y - z^2", R)}));
        fixtures.push_back(Ideal(R, {parse_polynomial("x^2*y - x*z^2", R)}));
    }
    for (const Ideal& J : fixtures) {
        UniversalBasis u = universal_groebner_basis(J);
        CHECK(saturate_torus(J).alpha <= u.degree);
    }
}

TEST_CASE("property: universal basis reduces to a basis in every cone") {
    for (const Ideal& I : {ex32_ideal(), delta24_ideal()}) {
        GroebnerFan gf = groebner_fan(I);
        UniversalBasis u = universal_basis_from_fan(gf);
        for (size_t k = 0; k < gf.fan.maximal.size(); ++k) {
            const TermOrder& ord = gf.bases[k]->order();
            GroebnerBasis marked = buchberger(I.ring(), u.elements, ord);
            // Buchberger on a universal set must re-derive the reduced basis
            CHECK(marked.elements() == gf.bases[k]->elements());
        }
    }
}
