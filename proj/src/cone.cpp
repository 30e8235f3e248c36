#include "tropws/cone.hpp"
#include "tropws/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace tropws {

namespace {

bool vec_less(const std::vector<Int>& a, const std::vector<Int>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool is_zero_vec(const std::vector<Int>& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

std::vector<Int> negate(std::vector<Int> v) {
    for (Int& x : v) x = -x;
    return v;
}

// RREF over the rationals, returned as primitive integer rows.
IMat canonical_equations(const IMat& eqs) {
    QMat m = to_qmat(eqs);
    rref(m);
    IMat out;
    for (const QVec& r : m) out.push_back(primitive(r));
    return out;
}

// Zero out the pivot coordinates of v against the RREF equation rows.
std::vector<Int> reduce_mod_equations(const std::vector<Int>& v, const QMat& eq_rref,
                                      const std::vector<int>& pivots) {
    QVec q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
    for (size_t k = 0; k < eq_rref.size(); ++k) {
        Rat f = q[static_cast<size_t>(pivots[k])];
        if (f != 0)
            for (size_t j = 0; j < q.size(); ++j) q[j] -= f * eq_rref[k][j];
    }
    return primitive(q);
}

size_t int_rank(const IMat& rows) {
    return rank(to_qmat(rows));
}

} // namespace

std::string Cone::key() const {
    std::ostringstream os;
    os << "E";
    for (const auto& r : eqs) {
        for (const auto& x : r) os << x.get_str() << ",";
        os << ";";
    }
    os << "I";
    for (const auto& r : ineqs) {
        for (const auto& x : r) os << x.get_str() << ",";
        os << ";";
    }
    return os.str();
}

bool Cone::contains(const std::vector<Rat>& w) const {
    auto dot = [&](const std::vector<Int>& a) {
        Rat s = 0;
        for (size_t i = 0; i < n; ++i)
            if (a[i] != 0) s += Rat(a[i]) * w[i];
        return s;
    };
    for (const auto& e : eqs)
        if (dot(e) != 0) return false;
    for (const auto& a : ineqs)
        if (dot(a) < 0) return false;
    return true;
}

Cone make_cone(size_t n, IMat ineqs, IMat eqs) {
    while (true) {
        IMat E = canonical_equations(eqs);
        QMat eq_rref = to_qmat(E);
        QMat tmp = eq_rref;
        std::vector<int> pivots = rref(tmp); // recover pivot columns
        eq_rref = tmp;

        std::set<std::vector<Int>, decltype(&vec_less)> seen(&vec_less);
        IMat reduced;
        for (const auto& a : ineqs) {
            std::vector<Int> r = reduce_mod_equations(a, eq_rref, pivots);
            if (is_zero_vec(r)) continue;
            if (seen.insert(r).second) reduced.push_back(std::move(r));
        }

        // implied equalities: pairs a, -a first (cheap), then by LP
        std::vector<Int> new_eq;
        bool found = false;
        for (const auto& a : reduced) {
            if (seen.count(negate(a))) { new_eq = a; found = true; break; }
        }
        if (!found) {
            for (const auto& a : reduced) {
                IMat others;
                for (const auto& b : reduced)
                    if (&b != &a) others.push_back(b);
                if (!cone_point_where(others, E, a, +1)) {
                    new_eq = a;
                    found = true;
                    break;
                }
            }
        }
        if (found) {
            eqs = E;
            eqs.push_back(new_eq);
            // keep the already-reduced inequalities for the next round
            ineqs = std::move(reduced);
            continue;
        }

        // irredundancy: drop inequalities implied by the rest
        IMat kept = reduced;
        for (size_t i = 0; i < kept.size();) {
            IMat others;
            for (size_t j = 0; j < kept.size(); ++j)
                if (j != i) others.push_back(kept[j]);
            if (!cone_point_where(others, E, kept[i], -1)) {
                kept.erase(kept.begin() + static_cast<long>(i)); // implied by the others
            } else {
                ++i;
            }
        }
        std::sort(kept.begin(), kept.end(), vec_less);

        Cone c;
        c.n = n;
        c.eqs = std::move(E);
        c.ineqs = std::move(kept);
        c.dim = static_cast<int>(n - c.eqs.size());
        IMat all = c.eqs;
        for (const auto& a : c.ineqs) all.push_back(a);
        c.lineality_dim = static_cast<int>(n - int_rank(all));
        return c;
    }
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.n != b.n) throw domain_error("cone dimension mismatch");
    IMat ineqs = a.ineqs;
    ineqs.insert(ineqs.end(), b.ineqs.begin(), b.ineqs.end());
    IMat eqs = a.eqs;
    eqs.insert(eqs.end(), b.eqs.begin(), b.eqs.end());
    return make_cone(a.n, std::move(ineqs), std::move(eqs));
}

Cone cone_face(const Cone& c, size_t ineq_index) {
    if (ineq_index >= c.ineqs.size()) throw domain_error("facet index out of range");
    IMat eqs = c.eqs;
    eqs.push_back(c.ineqs[ineq_index]);
    IMat ineqs;
    for (size_t i = 0; i < c.ineqs.size(); ++i)
        if (i != ineq_index) ineqs.push_back(c.ineqs[i]);
    return make_cone(c.n, std::move(ineqs), std::move(eqs));
}

std::vector<Cone> all_proper_faces(const Cone& c) {
    std::map<std::string, Cone> out;
    std::vector<Cone> frontier{c};
    while (!frontier.empty()) {
        std::vector<Cone> next;
        for (const Cone& f : frontier) {
            for (size_t i = 0; i < f.ineqs.size(); ++i) {
                Cone g = cone_face(f, i);
                std::string k = g.key();
                if (!out.count(k)) {
                    out.emplace(k, g);
                    next.push_back(std::move(g));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Cone> faces;
    faces.reserve(out.size());
    for (auto& [k, f] : out) faces.push_back(std::move(f));
    return faces;
}

std::vector<Rat> relative_interior_point(const Cone& c) {
    std::vector<Rat> w(c.n, Rat(0));
    for (const auto& a : c.ineqs) {
        auto p = cone_point_where(c.ineqs, c.eqs, a, +1);
        if (!p) throw internal_error("canonical cone has a non-strict facet");
        for (size_t i = 0; i < c.n; ++i) w[i] += (*p)[i];
    }
    if (!c.contains(w)) throw internal_error("relative interior point escaped the cone");
    for (const auto& a : c.ineqs) {
        Rat s = 0;
        for (size_t i = 0; i < c.n; ++i) s += Rat(a[i]) * w[i];
        if (s <= 0) throw internal_error("relative interior point not strict");
    }
    return w;
}

std::vector<long> Fan::f_vector() const {
    std::vector<long> f(n + 1, 0);
    for (const Cone& c : cones) ++f[static_cast<size_t>(c.dim)];
    return f;
}

int Fan::top_dim() const {
    int d = -1;
    for (const Cone& c : cones) d = std::max(d, c.dim);
    return d;
}

bool Fan::supports(const std::vector<Rat>& w) const {
    for (size_t i : maximal)
        if (cones[i].contains(w)) return true;
    return false;
}

Fan assemble_fan(size_t n, std::vector<Cone> generators) {
    // dedup
    std::map<std::string, Cone> gen;
    for (Cone& c : generators) gen.emplace(c.key(), std::move(c));
    // prune cones contained in another (relative interior point test)
    std::vector<Cone> gens;
    for (auto& [k, c] : gen) gens.push_back(std::move(c));
    std::vector<bool> drop(gens.size(), false);
    for (size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_full_space()) continue;
        std::vector<Rat> p = gens[i].ineqs.empty() && gens[i].eqs.empty()
                                 ? std::vector<Rat>(n, Rat(0))
                                 : relative_interior_point(gens[i]);
        for (size_t j = 0; j < gens.size() && !drop[i]; ++j) {
            if (i == j || drop[j]) continue;
            if (gens[j].dim >= gens[i].dim && gens[j].key() != gens[i].key() &&
                gens[j].contains(p))
                drop[i] = true;
        }
    }

    std::map<std::string, Cone> all;
    std::vector<std::string> maximal_keys;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (drop[i]) continue;
        maximal_keys.push_back(gens[i].key());
        for (Cone& f : all_proper_faces(gens[i])) all.emplace(f.key(), std::move(f));
        all.emplace(gens[i].key(), gens[i]);
    }

    Fan fan;
    fan.n = n;
    for (auto& [k, c] : all) fan.cones.push_back(std::move(c));
    std::stable_sort(fan.cones.begin(), fan.cones.end(),
                     [](const Cone& a, const Cone& b) {
                         if (a.dim != b.dim) return a.dim < b.dim;
                         return a.key() < b.key();
                     });
    for (const std::string& k : maximal_keys)
        for (size_t i = 0; i < fan.cones.size(); ++i)
            if (fan.cones[i].key() == k) { fan.maximal.push_back(i); break; }
    std::sort(fan.maximal.begin(), fan.maximal.end());
    return fan;
}

} // namespace tropws
