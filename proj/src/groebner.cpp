#include "tropws/groebner.hpp"

#include <algorithm>
#include <set>

namespace tropws {

namespace {

// Working representation: terms sorted descending by the active order.
struct WPoly {
    std::vector<Term> t;
    bool zero() const { return t.empty(); }
    const Monomial& lead() const { return t.front().m; }
    const Rat& lc() const { return t.front().c; }
};

WPoly to_wpoly(const Polynomial& p, const TermOrder& ord) {
    WPoly w{p.terms()};
    std::sort(w.t.begin(), w.t.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
    return w;
}

Polynomial from_wpoly(const RingPtr& ring, const WPoly& w) {
    return Polynomial(ring, w.t);
}

// h -= c * x^m * g, keeping h sorted.
void submul(WPoly& h, const Rat& c, const Monomial& m, const WPoly& g, const TermOrder& ord) {
    std::vector<Term> prod;
    prod.reserve(g.t.size());
    for (const Term& t : g.t) prod.push_back({mono_mul(t.m, m), t.c * c});
    std::vector<Term> out;
    out.reserve(h.t.size() + prod.size());
    size_t a = 0, b = 0;
    while (a < h.t.size() || b < prod.size()) {
        if (b == prod.size() || (a < h.t.size() && ord.greater(h.t[a].m, prod[b].m))) {
            out.push_back(h.t[a++]);
        } else if (a == h.t.size() || ord.greater(prod[b].m, h.t[a].m)) {
            out.push_back({prod[b].m, -prod[b].c});
            ++b;
        } else {
            Rat d = h.t[a].c - prod[b].c;
            if (d != 0) out.push_back({h.t[a].m, d});
            ++a;
            ++b;
        }
    }
    h.t = std::move(out);
}

void make_monic(WPoly& h) {
    if (h.zero() || h.lc() == 1) return;
    Rat inv = Rat(1) / h.lc();
    for (Term& t : h.t) t.c *= inv;
}

// Full division: every term of the remainder is reducible by no basis
// lead. `cof` (when present) is aligned with the basis.
WPoly reduce_full(WPoly h, const std::vector<WPoly>& basis, const TermOrder& ord,
                  std::vector<WPoly>* cof = nullptr) {
    WPoly r;
    size_t done = 0; // terms of h before `done` are fully reduced... kept in r
    (void)done;
    while (!h.zero()) {
        const Term top = h.t.front();
        bool hit = false;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (!mono_divides(basis[i].lead(), top.m)) continue;
            Monomial q = mono_div(top.m, basis[i].lead());
            Rat c = top.c / basis[i].lc();
            submul(h, c, q, basis[i], ord);
            if (cof) {
                WPoly add{{Term{q, c}}};
                // accumulate cofactor term (sorted insert)
                std::vector<Term>& ct = (*cof)[i].t;
                auto it = std::lower_bound(
                    ct.begin(), ct.end(), q,
                    [&](const Term& t, const Monomial& mm) { return ord.greater(t.m, mm); });
                if (it != ct.end() && it->m == q) {
                    it->c += c;
                    if (it->c == 0) ct.erase(it);
                } else {
                    ct.insert(it, Term{q, c});
                }
            }
            hit = true;
            break;
        }
        if (!hit) {
            r.t.push_back(h.t.front());
            h.t.erase(h.t.begin());
        }
    }
    return r;
}

struct Pair {
    size_t i, j;
    Monomial lcm;
};

void interreduce(std::vector<WPoly>& g, const TermOrder& ord) {
    // drop elements whose lead is divisible by another lead
    for (size_t i = 0; i < g.size();) {
        bool redundant = false;
        for (size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            if (mono_divides(g[j].lead(), g[i].lead())) {
                if (g[j].lead() == g[i].lead() && j > i) continue; // keep first of equals
                redundant = true;
                break;
            }
        }
        if (redundant) g.erase(g.begin() + static_cast<long>(i));
        else ++i;
    }
    // full tail reduction of each element against the others
    for (size_t i = 0; i < g.size(); ++i) {
        std::vector<WPoly> others;
        others.reserve(g.size() - 1);
        for (size_t j = 0; j < g.size(); ++j)
            if (j != i) others.push_back(g[j]);
        g[i] = reduce_full(g[i], others, ord);
        if (g[i].zero()) throw internal_error("interreduce killed a basis element");
        make_monic(g[i]);
    }
    std::sort(g.begin(), g.end(),
              [&](const WPoly& a, const WPoly& b) { return ord.greater(a.lead(), b.lead()); });
}

} // namespace

GroebnerBasis::GroebnerBasis(TermOrder order, std::vector<Polynomial> elems)
    : order_(std::move(order)), elems_(std::move(elems)) {
    if (elems_.empty()) throw internal_error("empty Groebner basis");
    leads_.reserve(elems_.size());
    for (const Polynomial& p : elems_) {
        const Term* best = nullptr;
        for (const Term& t : p.terms())
            if (!best || order_.greater(t.m, best->m)) best = &t;
        leads_.push_back(best->m);
    }
}

int GroebnerBasis::degree() const {
    int d = 0;
    for (const Polynomial& p : elems_) d = std::max(d, p.degree());
    return d;
}

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                         const TermOrder& order) {
    std::vector<WPoly> g;
    for (const Polynomial& p : gens) {
        if (p.is_zero()) continue;
        if (!p.is_homogeneous())
            throw domain_error("buchberger requires homogeneous generators");
        WPoly w = to_wpoly(p, order);
        make_monic(w);
        g.push_back(std::move(w));
    }
    if (g.empty()) throw domain_error("zero ideal has no Groebner basis");

    std::set<std::pair<size_t, size_t>> pending;
    auto add_pairs = [&](size_t upto) {
        for (size_t i = 0; i < upto; ++i) pending.insert({i, upto});
    };
    for (size_t j = 1; j < g.size(); ++j) add_pairs(j);

    while (!pending.empty()) {
        // normal selection: smallest lcm under the order
        auto best = pending.end();
        Monomial best_lcm;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            Monomial l = mono_lcm(g[it->first].lead(), g[it->second].lead());
            if (best == pending.end() || order.less(l, best_lcm)) {
                best = it;
                best_lcm = std::move(l);
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        if (mono_coprime(g[i].lead(), g[j].lead())) continue; // product criterion
        bool chained = false; // chain criterion
        for (size_t k = 0; k < g.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!mono_divides(g[k].lead(), best_lcm)) continue;
            auto p1 = std::minmax(i, k), p2 = std::minmax(j, k);
            if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
                chained = true;
        }
        if (chained) continue;

        // S-polynomial
        Monomial qi = mono_div(best_lcm, g[i].lead());
        Monomial qj = mono_div(best_lcm, g[j].lead());
        WPoly s = g[i];
        for (Term& t : s.t) t.m = mono_mul(t.m, qi);
        submul(s, Rat(1), qj, g[j], order); // leads cancel: both monic
        WPoly r = reduce_full(std::move(s), g, order);
        if (!r.zero()) {
            make_monic(r);
            g.push_back(std::move(r));
            add_pairs(g.size() - 1);
        }
    }
    interreduce(g, order);

    std::vector<Polynomial> elems;
    elems.reserve(g.size());
    for (const WPoly& w : g) elems.push_back(from_wpoly(ring, w));
    return GroebnerBasis(order, std::move(elems));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    check_same_ring(f, G.elements().front());
    std::vector<WPoly> basis;
    for (const Polynomial& p : G.elements()) basis.push_back(to_wpoly(p, G.order()));
    WPoly r = reduce_full(to_wpoly(f, G.order()), basis, G.order());
    return from_wpoly(f.ring(), r);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G,
                       std::vector<Polynomial>& cof) {
    check_same_ring(f, G.elements().front());
    std::vector<WPoly> basis;
    for (const Polynomial& p : G.elements()) basis.push_back(to_wpoly(p, G.order()));
    std::vector<WPoly> c(basis.size());
    WPoly r = reduce_full(to_wpoly(f, G.order()), basis, G.order(), &c);
    cof.clear();
    for (const WPoly& w : c) cof.push_back(from_wpoly(f.ring(), w));
    return from_wpoly(f.ring(), r);
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    if (gens_.empty()) throw domain_error("ideal needs at least one generator");
    for (const Polynomial& g : gens_) {
        if (g.is_zero()) throw domain_error("zero polynomial among ideal generators");
        if (!g.is_homogeneous())
            throw domain_error("non-homogeneous generator: " + g.to_string());
        if (!g.ring()->same_as(*ring_)) throw domain_error("generator ring mismatch");
    }
}

std::shared_ptr<const GroebnerBasis> Ideal::reduced_basis(const TermOrder& order) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->map.find(order.key());
        if (it != cache_->map.end()) return it->second;
    }
    auto gb = std::make_shared<const GroebnerBasis>(buchberger(ring_, gens_, order));
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto [it, inserted] = cache_->map.emplace(order.key(), gb);
    return it->second;
}

bool ideal_member(const Ideal& I, const Polynomial& f) {
    if (f.is_zero()) return true;
    return normal_form(f, *I.reduced_basis(TermOrder::grevlex(I.n()))).is_zero();
}

bool equal_ideals(const Ideal& A, const Ideal& B) {
    if (!A.ring()->same_as(*B.ring())) throw domain_error("ring mismatch");
    auto ga = A.reduced_basis(TermOrder::grevlex(A.n()));
    auto gb = B.reduced_basis(TermOrder::grevlex(B.n()));
    return ga->elements() == gb->elements();
}

bool is_unit_ideal(const Ideal& I) {
    auto g = I.reduced_basis(TermOrder::grevlex(I.n()));
    return g->size() == 1 && g->elements().front().degree() == 0;
}

Ideal initial_ideal(const WeightVector& w, const Ideal& I) {
    TermOrder ord = weight_refined_order(w, TermOrder::grevlex(I.n()));
    auto G = I.reduced_basis(ord);
    std::vector<Polynomial> gens;
    gens.reserve(G->size());
    for (const Polynomial& g : G->elements()) gens.push_back(initial_form(w, g));
    return Ideal(I.ring(), std::move(gens));
}

TermOrder grevlex_with_last(size_t n, size_t last_var) {
    std::vector<size_t> seq;
    for (size_t i = 0; i < n; ++i)
        if (i != last_var) seq.push_back(i);
    seq.push_back(last_var);
    std::vector<std::vector<Int>> rows;
    rows.emplace_back(n, Int(1));
    for (size_t k = n; k-- > 1;) { // revlex tie-break on the permuted sequence
        std::vector<Int> r(n, 0);
        r[seq[k]] = -1;
        rows.push_back(std::move(r));
    }
    return TermOrder::matrix(n, std::move(rows));
}

namespace {

int var_content(const Polynomial& f, size_t var) {
    int c = -1;
    for (const Term& t : f.terms())
        c = (c < 0) ? t.m[var] : std::min(c, t.m[var]);
    return std::max(c, 0);
}

Polynomial divide_var_power(const Polynomial& f, size_t var, int k) {
    std::vector<Term> out;
    for (const Term& t : f.terms()) {
        Term u = t;
        u.m[var] -= k;
        if (u.m[var] < 0) throw internal_error("divide_var_power: not divisible");
        out.push_back(std::move(u));
    }
    return Polynomial(f.ring(), std::move(out));
}

std::vector<Polynomial> reduced_gens(const RingPtr& ring, const std::vector<Polynomial>& gens,
                                     const TermOrder& ord) {
    return buchberger(ring, gens, ord).elements();
}

// J : x_var^infinity via the revlex content trick, iterated until no
// element of the reduced basis carries a positive x_var content.
std::vector<Polynomial> saturate_variable(const RingPtr& ring, std::vector<Polynomial> gens,
                                          size_t var, bool& changed) {
    TermOrder ord = grevlex_with_last(ring->n(), var);
    while (true) {
        std::vector<Polynomial> g = reduced_gens(ring, gens, ord);
        bool divided = false;
        for (Polynomial& p : g) {
            int c = var_content(p, var);
            if (c > 0) {
                p = divide_var_power(p, var, c);
                divided = true;
            }
        }
        gens = std::move(g);
        if (!divided) return gens;
        changed = true;
    }
}

// J : x_var (one colon step, single division by the variable).
std::vector<Polynomial> colon_variable(const RingPtr& ring, std::vector<Polynomial> gens,
                                       size_t var) {
    TermOrder ord = grevlex_with_last(ring->n(), var);
    std::vector<Polynomial> g = reduced_gens(ring, gens, ord);
    for (Polynomial& p : g)
        if (var_content(p, var) > 0) p = divide_var_power(p, var, 1);
    return g;
}

} // namespace

Saturation saturate_torus(const Ideal& J) {
    const RingPtr& ring = J.ring();
    size_t n = J.n();
    std::vector<Polynomial> gens = J.generators();
    while (true) {
        bool changed = false;
        for (size_t v = 0; v < n; ++v)
            gens = saturate_variable(ring, std::move(gens), v, changed);
        if (!changed) break;
    }
    Ideal sat(ring, gens);

    TermOrder grev = TermOrder::grevlex(n);
    auto sat_gb = sat.reduced_basis(grev)->elements();
    std::vector<Polynomial> k_gens = J.generators();
    long alpha = 0;
    while (true) {
        if (buchberger(ring, k_gens, grev).elements() == sat_gb) break;
        for (size_t v = 0; v < n; ++v)
            k_gens = colon_variable(ring, std::move(k_gens), v);
        ++alpha;
        if (alpha > 10000)
            throw internal_error("saturation exponent loop failed to stabilize");
    }
    return Saturation{std::move(sat), alpha};
}

long default_monomial_cap(const Ideal& J) {
    Saturation s = saturate_torus(J);
    return std::max<long>(1, s.alpha * static_cast<long>(J.n()));
}

std::vector<Monomial> monomials_of_degree(size_t n, int degree) {
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    // lexicographically largest first: leading variables get high exponents
    auto rec = [&](auto&& self, size_t pos, int rem) -> void {
        if (pos + 1 == n) {
            cur[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = e;
            self(self, pos + 1, rem - e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

std::optional<Monomial> contains_monomial(const Ideal& J, long degree_cap) {
    if (degree_cap < 1) throw domain_error("degree cap must be at least 1");
    Saturation s = saturate_torus(J);
    if (!is_unit_ideal(s.ideal)) return std::nullopt;
    auto G = J.reduced_basis(TermOrder::grevlex(J.n()));
    for (long d = 1; d <= degree_cap; ++d) {
        for (const Monomial& m : monomials_of_degree(J.n(), static_cast<int>(d))) {
            Polynomial p = Polynomial::monomial(J.ring(), m);
            if (normal_form(p, *G).is_zero()) return m;
        }
    }
    throw internal_error(
        "saturation reports a monomial but the degree search cap was exhausted");
}

int krull_dimension(const Ideal& I) {
    auto G = I.reduced_basis(TermOrder::grevlex(I.n()));
    if (is_unit_ideal(I)) throw domain_error("Krull dimension of the unit ideal");
    size_t n = I.n();
    const auto& leads = G->leads();
    for (int size = static_cast<int>(n) - 1; size >= 0; --size) {
        // subsets of variables of the given size, lexicographic
        std::vector<int> idx(static_cast<size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<size_t>(i)] = i;
        while (true) {
            std::vector<bool> in_set(n, false);
            for (int i : idx) in_set[static_cast<size_t>(i)] = true;
            bool independent = true;
            for (const Monomial& m : leads) {
                bool supported = true;
                for (size_t v = 0; v < n; ++v)
                    if (m[v] > 0 && !in_set[v]) { supported = false; break; }
                if (supported) { independent = false; break; }
            }
            if (independent) return size;
            // next subset
            int i = size - 1;
            while (i >= 0 && idx[static_cast<size_t>(i)] == static_cast<int>(n) - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return 0;
}

int minimal_degree(const Ideal& I) {
    std::vector<Polynomial> gens = I.generators();
    std::stable_sort(gens.begin(), gens.end(),
                     [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
    std::vector<Polynomial> kept;
    TermOrder grev = TermOrder::grevlex(I.n());
    for (const Polynomial& g : gens) {
        if (kept.empty()) {
            kept.push_back(g);
            continue;
        }
        GroebnerBasis gb = buchberger(I.ring(), kept, grev);
        if (!normal_form(g, gb).is_zero()) kept.push_back(g);
    }
    int d = 0;
    for (const Polynomial& g : kept) d = std::max(d, g.degree());
    return d;
}

} // namespace tropws
