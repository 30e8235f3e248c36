#include "tropws/gfan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tropws {

Cone groebner_cone(const Ideal& I, const GroebnerBasis& G) {
    size_t n = I.n();
    IMat ineqs;
    for (size_t k = 0; k < G.size(); ++k) {
        const Monomial& lead = G.leads()[k];
        for (const Term& t : G.elements()[k].terms()) {
            if (t.m == lead) continue;
            std::vector<Int> row(n);
            for (size_t i = 0; i < n; ++i) row[i] = t.m[i] - lead[i];
            ineqs.push_back(primitive_int(row));
        }
    }
    return make_cone(n, std::move(ineqs), {});
}

std::shared_ptr<const GroebnerBasis> flip_facet(const Ideal& I, const GroebnerBasis& G,
                                                const std::vector<Int>& facet_normal) {
    Cone c = groebner_cone(I, G);
    size_t idx = c.ineqs.size();
    for (size_t i = 0; i < c.ineqs.size(); ++i)
        if (c.ineqs[i] == facet_normal) { idx = i; break; }
    if (idx == c.ineqs.size())
        throw domain_error("vector is not a facet normal of the Groebner cone");

    Cone facet = cone_face(c, idx);
    std::vector<Rat> w0 = relative_interior_point(facet);

    std::vector<Polynomial> inits;
    inits.reserve(G.size());
    for (const Polynomial& g : G.elements()) inits.push_back(initial_form(w0, g));

    // order rows: w0-minimal first, then towards the other side of the
    // facet, then grevlex
    std::vector<std::vector<Int>> rows;
    std::vector<Int> first = primitive(w0);
    bool zero = true;
    for (Int& x : first) {
        if (x != 0) zero = false;
        x = -x;
    }
    if (!zero) rows.push_back(std::move(first));
    rows.push_back(facet_normal);
    TermOrder grev = TermOrder::grevlex(I.n());
    for (const auto& r : grev.rows()) rows.push_back(r);
    TermOrder target = TermOrder::matrix(I.n(), std::move(rows));

    GroebnerBasis H = buchberger(I.ring(), inits, target);

    std::vector<Polynomial> lifted;
    for (const Polynomial& h : H.elements()) {
        Polynomial f = h - normal_form(h, G);
        if (!f.is_zero()) lifted.push_back(std::move(f));
    }
    // the lifted set is a basis of I adapted to the target order; running
    // Buchberger over it together with the old basis certifies that and
    // inter-reduces
    for (const Polynomial& g : G.elements()) lifted.push_back(g);
    return std::make_shared<const GroebnerBasis>(buchberger(I.ring(), lifted, target));
}

GroebnerFan groebner_fan(const Ideal& I) { return groebner_fan(I, TermOrder::grevlex(I.n())); }

GroebnerFan groebner_fan(const Ideal& I, const TermOrder& start, size_t max_cones) {
    auto G0 = I.reduced_basis(start);
    Cone c0 = groebner_cone(I, *G0);

    std::map<std::string, std::pair<Cone, std::shared_ptr<const GroebnerBasis>>> visited;
    std::deque<std::string> queue;
    visited.emplace(c0.key(), std::make_pair(c0, G0));
    queue.push_back(c0.key());

    while (!queue.empty()) {
        auto [cone, basis] = visited.at(queue.front());
        queue.pop_front();
        for (const auto& nu : cone.ineqs) {
            auto flipped = flip_facet(I, *basis, nu);
            Cone c = groebner_cone(I, *flipped);
            if (c.key() == cone.key())
                throw internal_error("facet flip returned the same cone");
            if (!visited.count(c.key())) {
                if (visited.size() >= max_cones)
                    throw domain_error("Groebner fan traversal exceeded the cone budget");
                visited.emplace(c.key(), std::make_pair(c, flipped));
                queue.push_back(c.key());
            }
        }
    }

    std::vector<Cone> maximal;
    maximal.reserve(visited.size());
    for (auto& [k, v] : visited) maximal.push_back(v.first);

    GroebnerFan gf;
    gf.fan = assemble_fan(I.n(), std::move(maximal));
    gf.bases.reserve(gf.fan.maximal.size());
    for (size_t mi : gf.fan.maximal)
        gf.bases.push_back(visited.at(gf.fan.cones[mi].key()).second);
    return gf;
}

UniversalBasis universal_basis_from_fan(const GroebnerFan& gf) {
    std::map<std::string, Polynomial> seen;
    for (const auto& basis : gf.bases)
        for (const Polynomial& g : basis->elements()) {
            Polynomial c = g.monic_canonical();
            seen.emplace(c.to_string(), c);
        }
    UniversalBasis u;
    u.degree = 0;
    for (auto& [k, p] : seen) {
        u.degree = std::max(u.degree, p.degree());
        u.elements.push_back(std::move(p));
    }
    return u;
}

UniversalBasis universal_groebner_basis(const Ideal& I) {
    return universal_basis_from_fan(groebner_fan(I));
}

} // namespace tropws
