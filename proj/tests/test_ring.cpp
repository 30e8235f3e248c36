#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace tropws;
using namespace tw_test;

TEST_CASE("parse: collected terms and degrees") {
    auto R = make_ring("x,y");
    Polynomial p = parse_polynomial("x^2*y + x*y^2", R);
    CHECK(p.size() == 2);
    for (const Term& t : p.terms()) CHECK(total_degree(t.m) == 3);
    CHECK(p.is_homogeneous());
}

TEST_CASE("parse: cancellation yields the zero polynomial") {
    auto R = make_ring("x");
    Polynomial p = parse_polynomial("x - x", R);
    CHECK(p.is_zero());
}

TEST_CASE("parse: rational and negative coefficients") {
    auto R = make_ring("x,y,z");
    Polynomial p = parse_polynomial("3/2*x*y - z^2", R);
    REQUIRE(p.size() == 2);
    bool saw_xy = false, saw_z2 = false;
    for (const Term& t : p.terms()) {
        if (t.m == Monomial{1, 1, 0}) { CHECK(t.c == Rat(3, 2)); saw_xy = true; }
        if (t.m == Monomial{0, 0, 2}) { CHECK(t.c == Rat(-1)); saw_z2 = true; }
    }
    CHECK(saw_xy);
    CHECK(saw_z2);
}

TEST_CASE("parse: errors carry positions and unknown names are rejected") {
    auto R = make_ring("x,y");
    CHECK_THROWS_AS(parse_polynomial("x + q", R), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x + ", R), parse_error);
    CHECK_THROWS_AS(parse_polynomial("x ^ -2", R), parse_error);
    try {
        parse_polynomial("x * * y", R);
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.pos >= 4);
    }
}

TEST_CASE("initial form: minimal-weight terms survive") {
    auto R6 = make_ring("x,y,z,w,u,v");
    Polynomial f = parse_polynomial("x*y - z*w + u*v", R6);
    WeightVector w{1, 0, 0, 0, 0, 0};
    Polynomial in = initial_form(w, f);
    CHECK(in == parse_polynomial("-z*w + u*v", R6));

    SUBCASE("zero weight keeps everything") {
        WeightVector z(6, Rat(0));
        CHECK(initial_form(z, f) == f);
    }
}

TEST_CASE("initial form: unique minimum") {
    auto R = make_ring("x,y,z");
    Polynomial f = parse_polynomial("x^3 + y^3 + z^3", R);
    WeightVector w{0, 1, 1};
    CHECK(initial_form(w, f) == parse_polynomial("x^3", R));
    CHECK_THROWS_AS(initial_form(w, Polynomial::zero(R)), domain_error);
}

TEST_CASE("weight refinement: zero weight is the base order") {
    TermOrder base = TermOrder::grevlex(3);
    TermOrder ord = weight_refined_order(WeightVector(3, Rat(0)), base);
    CHECK(ord.equivalent(base));
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        auto ms = monomials_of_degree(3, 4);
        const Monomial& a = ms[rng() % ms.size()];
        const Monomial& b = ms[rng() % ms.size()];
        CHECK(ord.compare(a, b) == base.compare(a, b));
    }
}

TEST_CASE("weight refinement picks the w-minimal term") {
    auto R = make_ring("x,y");
    TermOrder ord = weight_refined_order(WeightVector{0, 1}, TermOrder::lex(2));
    Polynomial f = parse_polynomial("x^2 + x*y + y^2", R);
    const Monomial* lead = nullptr;
    for (const Term& t : f.terms())
        if (!lead || ord.greater(t.m, *lead)) lead = &t.m;
    CHECK(*lead == Monomial{2, 0});
}

TEST_CASE("constant weight on homogeneous input defers to the base") {
    auto R = make_ring("x,y,z");
    TermOrder base = TermOrder::grevlex(3);
    TermOrder ord = weight_refined_order(WeightVector{1, 1, 1}, base);
    std::mt19937 rng(11);
    for (int t = 0; t < 20; ++t) {
        Polynomial f = random_poly(rng, R, 3);
        const Monomial *l1 = nullptr, *l2 = nullptr;
        for (const Term& tm : f.terms()) {
            if (!l1 || ord.greater(tm.m, *l1)) l1 = &tm.m;
            if (!l2 || base.greater(tm.m, *l2)) l2 = &tm.m;
        }
        CHECK(*l1 == *l2);
    }
}

TEST_CASE("compare_monomials spot checks") {
    TermOrder grev2 = TermOrder::grevlex(2);
    CHECK(compare_monomials(grev2, Monomial{2, 1}, Monomial{1, 2}) > 0);
    CHECK(compare_monomials(grev2, Monomial{2, 1}, Monomial{2, 1}) == 0);
    TermOrder lex3 = TermOrder::lex(3);
    CHECK(compare_monomials(lex3, Monomial{1, 0, 1}, Monomial{0, 2, 0}) > 0);
    CHECK_THROWS_AS(compare_monomials(lex3, Monomial{1, 0}, Monomial{0, 2, 0}), domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
    auto R = make_ring("x,y,z");
    std::mt19937 rng(23);
    for (int t = 0; t < 25; ++t) {
        Polynomial f = random_poly(rng, R, 2);
        Polynomial g = random_poly(rng, R, 3);
        Polynomial h = random_poly(rng, R, 2);
        CHECK(f + g == g + f);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == Polynomial::zero(R));
        CHECK(f * Polynomial::constant(R, 1) == f);
    }
}

TEST_CASE("property: all-ones lineality of initial forms") {
    auto R = make_ring("x,y,z");
    std::mt19937 rng(31);
    for (int t = 0; t < 30; ++t) {
        Polynomial f = random_poly(rng, R, 3);
        WeightVector w = random_weight(rng, 3);
        Rat c(rng() % 7, 1 + rng() % 3);
        c.canonicalize();
        WeightVector shifted = w;
        for (Rat& x : shifted) x += c;
        CHECK(initial_form(w, f) == initial_form(shifted, f));
    }
}

TEST_CASE("property: initial forms are multiplicative") {
    auto R = make_ring("x,y,z");
    std::mt19937 rng(37);
    for (int t = 0; t < 30; ++t) {
        Polynomial f = random_poly(rng, R, 2);
        Polynomial g = random_poly(rng, R, 3);
        WeightVector w = random_weight(rng, 3);
        CHECK(initial_form(w, f * g) == initial_form(w, f) * initial_form(w, g));
    }
}

TEST_CASE("property: refined leading term lies in the initial form") {
    auto R = make_ring("x,y,z");
    std::mt19937 rng(41);
    TermOrder base = TermOrder::grevlex(3);
    for (int t = 0; t < 30; ++t) {
        Polynomial f = random_poly(rng, R, 3);
        WeightVector w = random_weight(rng, 3);
        TermOrder ord = weight_refined_order(w, base);
        const Monomial* lead = nullptr;
        for (const Term& tm : f.terms())
            if (!lead || ord.greater(tm.m, *lead)) lead = &tm.m;
        Polynomial in = initial_form(w, f);
        bool found = false;
        for (const Term& tm : in.terms())
            if (tm.m == *lead) found = true;
        CHECK(found);
    }
}

TEST_CASE("property: parse/serialize round trip") {
    auto R = make_ring("x,y,z");
    std::mt19937 rng(43);
    for (int t = 0; t < 40; ++t) {
        Polynomial f = random_poly(rng, R, 1 + static_cast<int>(rng() % 4));
        Polynomial back = parse_polynomial(f.to_string(), R);
        CHECK(back == f);
    }
    CHECK(parse_polynomial("0", R).is_zero());
    CHECK(Polynomial::zero(R).to_string() == "0");
}

TEST_CASE("normalization helpers") {
    auto R = make_ring("x,y");
    Polynomial f = parse_polynomial("2/3*x^2 - 4*x*y", R);
    Polynomial m = f.monic_canonical();
    CHECK(m.terms().front().c == Rat(1));
    Polynomial c = f.clear_denominators();
    CHECK(c == parse_polynomial("x^2 - 6*x*y", R));
}
