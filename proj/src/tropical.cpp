#include "tropws/tropical.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropws {

namespace {

std::vector<Int> point_diff(const LPoint& a, const LPoint& b) {
    std::vector<Int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Int(static_cast<long>(a[i] - b[i]));
    return r;
}

// normal cone of a face given by its incident points, against all points
Cone normal_cone(size_t n, const std::vector<LPoint>& all, const PMask& face) {
    IMat eqs, ineqs;
    size_t base = all.size();
    for (size_t i = 0; i < all.size(); ++i)
        if (face.test(i)) { base = i; break; }
    for (size_t i = 0; i < all.size(); ++i) {
        if (i == base) continue;
        auto row = point_diff(all[i], all[base]);
        if (face.test(i)) eqs.push_back(std::move(row));
        else ineqs.push_back(std::move(row));
    }
    return make_cone(n, std::move(ineqs), std::move(eqs));
}

struct ConeAnalysis {
    bool monomial_free;
    long alpha;
};

ConeAnalysis analyze_cone(const Ideal& I, const Cone& c) {
    WeightVector w = relative_interior_point(c);
    Ideal J = initial_ideal(w, I);
    Saturation s = saturate_torus(J);
    return ConeAnalysis{!is_unit_ideal(s.ideal), s.alpha};
}

std::vector<Cone> refine_maximal(const std::vector<Cone>& a, const std::vector<Cone>& b) {
    std::map<std::string, Cone> pieces;
    for (const Cone& c : a)
        for (const Cone& d : b) {
            Cone p = intersect(c, d);
            pieces.emplace(p.key(), std::move(p));
        }
    // keep only inclusion-maximal pieces
    std::vector<Cone> out;
    for (auto& [k, c] : pieces) out.push_back(std::move(c));
    std::vector<bool> drop(out.size(), false);
    for (size_t i = 0; i < out.size(); ++i) {
        std::vector<Rat> p = relative_interior_point(out[i]);
        for (size_t j = 0; j < out.size() && !drop[i]; ++j)
            if (i != j && !drop[j] && out[j].dim >= out[i].dim &&
                out[j].key() != out[i].key() && out[j].contains(p))
                drop[i] = true;
    }
    std::vector<Cone> kept;
    for (size_t i = 0; i < out.size(); ++i)
        if (!drop[i]) kept.push_back(std::move(out[i]));
    return kept;
}

std::vector<Cone> maximal_cones(const Fan& fan) {
    std::vector<Cone> out;
    for (size_t i : fan.maximal) out.push_back(fan.cones[i]);
    return out;
}

} // namespace

std::vector<long> complex_f_vector(const TropicalComplex& T) {
    std::vector<long> f(T.fan.n + 1, 0);
    for (const Cone& c : T.fan.cones) ++f[static_cast<size_t>(c.dim)];
    return f;
}

bool weight_in_tropical_hypersurface(const Polynomial& f, const WeightVector& w) {
    if (f.is_zero()) throw domain_error("tropical hypersurface of the zero polynomial");
    Rat best;
    int count = 0;
    for (const Term& t : f.terms()) {
        Rat s = mono_weight(w, t.m);
        if (count == 0 || s < best) {
            best = s;
            count = 1;
        } else if (s == best) {
            ++count;
        }
    }
    return count >= 2;
}

TropicalComplex tropical_hypersurface(const Polynomial& f) {
    if (f.is_zero()) throw domain_error("tropical hypersurface of the zero polynomial");
    if (!f.is_homogeneous()) throw domain_error("tropical hypersurface needs homogeneous input");
    size_t n = f.ring()->n();
    TropicalComplex T;
    T.source = ComplexSource::Hypersurface;
    T.fan.n = n;
    Polytope P = newton_polytope(f);
    if (P.dim() == 0) return T; // a monomial: empty support

    // normal cones of the minimal positive-dimensional faces; their face
    // closures supply the rest
    std::vector<Cone> gens;
    if (P.dim() >= 1) {
        const auto& edges = P.faces_by_dim().size() >= 1 && P.dim() >= 2
                                ? P.faces_by_dim()[1]
                                : std::vector<PMask>{};
        if (P.dim() == 1) {
            gens.push_back(normal_cone(n, P.points(), P.all_points_mask()));
        } else {
            for (const PMask& e : edges) gens.push_back(normal_cone(n, P.points(), e));
        }
    }
    T.fan = assemble_fan(n, std::move(gens));
    return T;
}

TropicalComplex tropical_prevariety(const std::vector<Polynomial>& polys) {
    if (polys.empty()) throw domain_error("prevariety of an empty list");
    size_t n = polys.front().ring()->n();
    TropicalComplex T;
    T.source = ComplexSource::Prevariety;
    T.fan.n = n;

    std::vector<Cone> current;
    bool first = true;
    for (const Polynomial& f : polys) {
        TropicalComplex H = tropical_hypersurface(f);
        if (H.empty()) return T; // empty intersection
        if (first) {
            current = maximal_cones(H.fan);
            first = false;
        } else {
            current = refine_maximal(current, maximal_cones(H.fan));
        }
    }
    T.fan = assemble_fan(n, std::move(current));
    return T;
}

bool weight_in_tropical_variety(const Ideal& I, const WeightVector& w) {
    Ideal J = initial_ideal(w, I);
    return !is_unit_ideal(saturate_torus(J).ideal);
}

TropicalComplex tropical_variety(const Ideal& I) {
    return tropical_variety(I, groebner_fan(I));
}

TropicalComplex tropical_variety(const Ideal& I, const GroebnerFan& gf) {
    TropicalComplex T;
    T.source = ComplexSource::Variety;
    T.fan.n = I.n();
    std::vector<Cone> kept;
    for (const Cone& c : gf.fan.cones)
        if (analyze_cone(I, c).monomial_free) kept.push_back(c);
    if (kept.empty()) return T;
    // the monomial-free cones form a subfan of the Groebner fan; assembly
    // re-derives maximality and keeps canonical order
    T.fan = assemble_fan(I.n(), std::move(kept));
    return T;
}

long fan_saturation_exponent(const Ideal& I, const GroebnerFan& gf) {
    long alpha = 0;
    for (const Cone& c : gf.fan.cones) alpha = std::max(alpha, analyze_cone(I, c).alpha);
    return alpha;
}

TropicalBasisCheck is_tropical_basis(const Ideal& I, const std::vector<Polynomial>& T) {
    if (T.empty()) throw domain_error("empty candidate basis");
    for (const Polynomial& t : T) {
        if (t.is_zero()) throw domain_error("zero polynomial in candidate basis");
        if (!t.ring()->same_as(*I.ring())) throw domain_error("ring mismatch");
        if (!ideal_member(I, t))
            throw domain_error("candidate basis is not a subset of the ideal: " +
                               t.to_string());
    }
    {
        Ideal gen(I.ring(), T);
        for (const Polynomial& g : I.generators())
            if (!ideal_member(gen, g))
                throw domain_error("candidate basis does not generate the ideal");
    }

    GroebnerFan gf = groebner_fan(I);

    TropicalComplex PV = tropical_prevariety(T);
    TropicalBasisCheck out;
    if (PV.empty()) {
        // trop(I) is contained in the prevariety, so it must be empty too
        out.is_basis = true;
        return out;
    }

    // every piece of the common refinement of the prevariety with the
    // (complete) Groebner fan must be monomial-free
    for (size_t mi : PV.fan.maximal) {
        const Cone& c = PV.fan.cones[mi];
        for (size_t gj : gf.fan.maximal) {
            Cone piece = intersect(c, gf.fan.cones[gj]);
            WeightVector p = relative_interior_point(piece);
            for (const Polynomial& t : T)
                if (!weight_in_tropical_hypersurface(t, p))
                    throw internal_error("refinement piece escaped the prevariety");
            if (!weight_in_tropical_variety(I, p)) {
                out.is_basis = false;
                out.counterexample = p;
                return out;
            }
        }
    }
    // the reverse containment holds pointwise for any subset of the ideal;
    // spot-check it on the variety's cones
    TropicalComplex trop = tropical_variety(I, gf);
    for (const Cone& c : trop.fan.cones) {
        WeightVector q = relative_interior_point(c);
        for (const Polynomial& t : T)
            if (!weight_in_tropical_hypersurface(t, q))
                throw internal_error("tropical variety escaped the prevariety");
    }
    out.is_basis = true;
    return out;
}

Polynomial find_witness(const Ideal& I, const WeightVector& w) {
    TermOrder ord = weight_refined_order(w, TermOrder::grevlex(I.n()));
    auto G = I.reduced_basis(ord);
    std::vector<Polynomial> inits;
    inits.reserve(G->size());
    for (const Polynomial& g : G->elements()) inits.push_back(initial_form(w, g));
    Ideal J(I.ring(), inits);

    Saturation s = saturate_torus(J);
    if (!is_unit_ideal(s.ideal))
        throw domain_error("weight lies in the tropical variety: no witness exists");
    long cap = std::max<long>(1, s.alpha * static_cast<long>(I.n()));
    auto m = contains_monomial(J, cap);
    if (!m) throw internal_error("saturation and monomial search disagree");
    Polynomial mono = Polynomial::monomial(I.ring(), *m);
    if (ideal_member(I, mono)) return mono; // the monomial itself is the witness

    // the initial forms are a reduced basis for the refined order; divide
    // with cofactors and push them back through the basis elements
    GroebnerBasis init_basis(ord, inits);
    std::vector<Polynomial> cof;
    Polynomial rem = normal_form(mono, init_basis, cof);
    if (!rem.is_zero()) throw internal_error("witness monomial failed to reduce to zero");
    Polynomial f = Polynomial::zero(I.ring());
    for (size_t i = 0; i < cof.size(); ++i) f = f + cof[i] * G->elements()[i];

    Polynomial check = initial_form(w, f);
    if (!check.is_monomial() || check.terms().front().m != *m)
        throw internal_error("witness lift does not have the expected initial form");
    if (!ideal_member(I, f)) throw internal_error("witness lift escaped the ideal");
    return f;
}

TropicalBasisResult compute_tropical_basis(const Ideal& I) {
    GroebnerFan gf = groebner_fan(I);
    UniversalBasis U = universal_basis_from_fan(gf);

    TropicalBasisResult res;
    res.universal_degree = U.degree;
    res.basis = U.elements;

    std::set<std::string> have;
    for (const Polynomial& p : res.basis) have.insert(p.to_string());

    std::vector<char> monomial_free(gf.fan.cones.size(), 0);
    long alpha = 0;
    for (size_t i = 0; i < gf.fan.cones.size(); ++i) {
        ConeAnalysis a = analyze_cone(I, gf.fan.cones[i]);
        monomial_free[i] = a.monomial_free ? 1 : 0;
        alpha = std::max(alpha, a.alpha);
    }
    res.alpha = alpha;

    for (int round = 0; round < 4; ++round) {
        bool changed = false;
        for (size_t i = 0; i < gf.fan.cones.size(); ++i) {
            if (monomial_free[i]) continue;
            WeightVector p = relative_interior_point(gf.fan.cones[i]);
            bool in_prevariety = true;
            for (const Polynomial& t : res.basis)
                if (!weight_in_tropical_hypersurface(t, p)) {
                    in_prevariety = false;
                    break;
                }
            if (!in_prevariety) continue;
            Polynomial wit = find_witness(I, p).monic_canonical();
            if (have.insert(wit.to_string()).second) {
                res.basis.push_back(wit);
                ++res.witnesses_added;
                changed = true;
            }
        }
        TropicalBasisCheck check = is_tropical_basis(I, res.basis);
        if (check.is_basis) break;
        if (!changed)
            throw internal_error("tropical basis construction stalled before the check passed");
    }

    res.degree = 0;
    for (const Polynomial& p : res.basis) res.degree = std::max(res.degree, p.degree());
    res.ideal_degree = minimal_degree(I);
    res.krull = krull_dimension(I);
    res.chain_max = std::max(Rat(res.universal_degree),
                             Rat(Rat(res.alpha) * static_cast<long>(I.n())));
    res.chain_n_degu = Rat(res.universal_degree) * static_cast<long>(I.n());
    long n = static_cast<long>(I.n());
    if (res.krull >= 1 && res.krull < n)
        res.chain_eq3 = Rat(n) * eq2_mayr_ritscher(res.ideal_degree, n, res.krull);
    return res;
}

} // namespace tropws
