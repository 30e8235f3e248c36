#include "tropws/polytope.hpp"
#include "tropws/error.hpp"
#include "tropws/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropws {

size_t PMask::count() const {
    size_t c = 0;
    for (uint64_t x : w) c += static_cast<size_t>(__builtin_popcountll(x));
    return c;
}

PMask PMask::operator&(const PMask& o) const {
    PMask r;
    for (size_t i = 0; i < 4; ++i) r.w[i] = w[i] & o.w[i];
    return r;
}

bool PMask::subset_of(const PMask& o) const {
    for (size_t i = 0; i < 4; ++i)
        if (w[i] & ~o.w[i]) return false;
    return true;
}

namespace {

using i128 = __int128;
using LVec = std::vector<long long>;

i128 dot(const LVec& a, const LVec& b) {
    i128 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += static_cast<i128>(a[i]) * b[i];
    return s;
}

LVec diff(const LPoint& a, const LPoint& b) {
    LVec d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

QMat to_qmat_ll(const std::vector<LVec>& m) {
    QMat q(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        q[i].resize(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j) q[i][j] = Rat(static_cast<long>(m[i][j]));
    }
    return q;
}

LVec to_ll(const std::vector<Int>& v) {
    LVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].fits_slong_p()) throw domain_error("polytope coordinates too large");
        r[i] = v[i].get_si();
    }
    return r;
}

// pivot columns of the difference matrix [p_i - p_0]
std::vector<size_t> pivot_columns(const std::vector<LPoint>& pts) {
    std::vector<LVec> diffs;
    for (size_t i = 1; i < pts.size(); ++i) diffs.push_back(diff(pts[i], pts[0]));
    QMat m = to_qmat_ll(diffs);
    std::vector<int> p = rref(m);
    std::vector<size_t> cols;
    for (int c : p) cols.push_back(static_cast<size_t>(c));
    return cols;
}

std::vector<LPoint> project(const std::vector<LPoint>& pts, const std::vector<size_t>& cols) {
    std::vector<LPoint> out(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        out[i].resize(cols.size());
        for (size_t j = 0; j < cols.size(); ++j) out[i][j] = pts[i][cols[j]];
    }
    return out;
}

struct Facet {
    LVec normal;  // outward: normal . p <= offset for every point
    i128 offset;
    PMask contact;
};

std::string facet_key(const Facet& f) {
    std::string s;
    for (long long x : f.normal) s += std::to_string(x) + ",";
    s += ":" + std::to_string(static_cast<long long>(f.offset));
    return s;
}

Facet make_facet(const std::vector<LPoint>& pts, LVec normal) {
    // scale primitive, orientation preserved
    long long g = 0;
    for (long long x : normal) g = std::__gcd(g, x < 0 ? -x : x);
    if (g > 1)
        for (long long& x : normal) x /= g;
    Facet f;
    f.offset = dot(normal, pts[0]);
    for (const LPoint& p : pts) {
        i128 v = dot(normal, p);
        if (v > f.offset) f.offset = v;
    }
    for (size_t i = 0; i < pts.size(); ++i)
        if (dot(normal, pts[i]) == f.offset) f.contact.set(i);
    f.normal = std::move(normal);
    return f;
}

// primitive normal of the hyperplane spanned by the direction rows
LVec hyperplane_normal(const std::vector<LVec>& dirs, size_t k) {
    QMat m = to_qmat_ll(dirs);
    QMat ns = null_space(m, k);
    if (ns.size() != 1) throw internal_error("hyperplane directions not of rank k-1");
    return to_ll(primitive(ns[0]));
}

// greedy affinely independent spanning subset (indices into idxs)
std::vector<size_t> affine_basis(const std::vector<LPoint>& pts, const std::vector<size_t>& idxs,
                                 size_t want_rank) {
    std::vector<size_t> chosen{idxs[0]};
    std::vector<LVec> dirs;
    for (size_t t = 1; t < idxs.size() && dirs.size() < want_rank; ++t) {
        std::vector<LVec> trial = dirs;
        trial.push_back(diff(pts[idxs[t]], pts[idxs[0]]));
        if (rank(to_qmat_ll(trial)) == trial.size()) {
            dirs = std::move(trial);
            chosen.push_back(idxs[t]);
        }
    }
    if (dirs.size() != want_rank) throw internal_error("affine basis extraction failed");
    return chosen;
}

std::vector<size_t> mask_indices(const PMask& m, size_t n) {
    std::vector<size_t> v;
    for (size_t i = 0; i < n; ++i)
        if (m.test(i)) v.push_back(i);
    return v;
}

std::vector<Facet> wrap(const std::vector<LPoint>& pts, size_t k);

// ridges of a facet: facets of the (k-1)-dimensional polytope spanned by
// its contact points, with indices mapped back
std::vector<PMask> facet_ridges(const std::vector<LPoint>& pts, size_t k, const Facet& f) {
    std::vector<size_t> idxs = mask_indices(f.contact, pts.size());
    std::vector<LPoint> sub;
    for (size_t i : idxs) sub.push_back(pts[i]);
    std::vector<size_t> cols = pivot_columns(sub);
    if (cols.size() != k - 1) throw internal_error("facet contact has wrong rank");
    std::vector<LPoint> proj = project(sub, cols);
    std::vector<Facet> subfacets = wrap(proj, k - 1);
    std::vector<PMask> ridges;
    for (const Facet& sf : subfacets) {
        PMask r;
        for (size_t j = 0; j < idxs.size(); ++j)
            if (sf.contact.test(j)) r.set(idxs[j]);
        ridges.push_back(r);
    }
    return ridges;
}

Facet initial_facet(const std::vector<LPoint>& pts, size_t k) {
    LVec eta(k, 0);
    eta[0] = 1;
    while (true) {
        i128 best = dot(eta, pts[0]);
        size_t x0 = 0;
        for (size_t i = 1; i < pts.size(); ++i) {
            i128 v = dot(eta, pts[i]);
            if (v > best) { best = v; x0 = i; }
        }
        std::vector<LVec> dirs;
        for (size_t i = 0; i < pts.size(); ++i)
            if (dot(eta, pts[i]) == best && i != x0) dirs.push_back(diff(pts[i], pts[x0]));
        size_t r = rank(to_qmat_ll(dirs));
        if (r == k - 1) return make_facet(pts, eta);

        // rotate: keep the contact flat, enlarge it
        QMat ns = null_space(to_qmat_ll(dirs), k);
        LVec xi;
        bool found = false;
        for (const QVec& cand : ns) {
            LVec x = to_ll(primitive(cand));
            // skip directions parallel to eta
            std::vector<LVec> pair{eta, x};
            if (rank(to_qmat_ll(pair)) < 2) continue;
            bool pos = false, neg = false;
            for (const LPoint& p : pts) {
                i128 s = dot(x, p) - dot(x, pts[x0]);
                if (s > 0) pos = true;
                if (s < 0) neg = true;
            }
            if (!pos && !neg) continue;
            if (!pos)
                for (long long& v : x) v = -v;
            xi = std::move(x);
            found = true;
            break;
        }
        if (!found) throw internal_error("initial facet rotation found no direction");

        // largest t with (eta + t*xi) still supporting at x0
        i128 tn = 0, td = 0; // t* = tn / td
        for (const LPoint& p : pts) {
            i128 xs = dot(xi, p) - dot(xi, pts[x0]);
            if (xs <= 0) continue;
            i128 es = best - dot(eta, p); // = -eta.(p - x0) >= 0
            if (td == 0 || es * td < tn * xs) { tn = es; td = xs; }
        }
        if (td == 0) throw internal_error("rotation unbounded on a full-dimensional hull");
        LVec next(k);
        for (size_t j = 0; j < k; ++j) {
            i128 v = td * eta[j] + tn * xi[j];
            next[j] = static_cast<long long>(v);
            if (v != static_cast<i128>(next[j]))
                throw domain_error("polytope coordinates too large");
        }
        long long g = 0;
        for (long long x : next) g = std::__gcd(g, x < 0 ? -x : x);
        if (g > 1)
            for (long long& x : next) x /= g;
        eta = std::move(next);
    }
}

Facet pivot_adjacent(const std::vector<LPoint>& pts, size_t k, const Facet& f, const PMask& ridge) {
    std::vector<size_t> ridx = mask_indices(ridge, pts.size());
    std::vector<size_t> rbasis = affine_basis(pts, ridx, k - 2);
    size_t r0 = rbasis[0];
    std::vector<LVec> rdirs;
    for (size_t t = 1; t < rbasis.size(); ++t) rdirs.push_back(diff(pts[rbasis[t]], pts[r0]));

    // a contact point of f outside the ridge's affine hull, used to anchor
    // orientation
    size_t off = pts.size();
    for (size_t i = 0; i < pts.size() && off == pts.size(); ++i) {
        if (!f.contact.test(i) || ridge.test(i)) continue;
        std::vector<LVec> trial = rdirs;
        trial.push_back(diff(pts[i], pts[r0]));
        if (rank(to_qmat_ll(trial)) == trial.size()) off = i;
    }
    if (off == pts.size()) throw internal_error("facet has no point outside its ridge");

    auto plane_through = [&](size_t cand) {
        std::vector<LVec> dirs = rdirs;
        dirs.push_back(diff(pts[cand], pts[r0]));
        LVec nu = hyperplane_normal(dirs, k);
        i128 s = dot(nu, pts[off]) - dot(nu, pts[r0]);
        if (s == 0) throw internal_error("orientation anchor lies on the pivot plane");
        if (s > 0)
            for (long long& v : nu) v = -v;
        return nu;
    };

    size_t cand = pts.size();
    LVec nu;
    for (size_t i = 0; i < pts.size(); ++i) {
        if (dot(f.normal, pts[i]) == f.offset) continue; // on f's plane
        if (cand == pts.size()) {
            cand = i;
            nu = plane_through(cand);
            continue;
        }
        if (dot(nu, pts[i]) - dot(nu, pts[r0]) > 0) {
            cand = i;
            nu = plane_through(cand);
        }
    }
    if (cand == pts.size()) throw internal_error("no pivot candidate below a facet");

    Facet g = make_facet(pts, nu);
    for (const LPoint& p : pts)
        if (dot(g.normal, p) > g.offset) throw internal_error("pivot produced a cutting plane");
    return g;
}

std::vector<Facet> wrap(const std::vector<LPoint>& pts, size_t k) {
    if (k == 1) {
        Facet a = make_facet(pts, LVec{1});
        Facet b = make_facet(pts, LVec{-1});
        return {a, b};
    }
    std::map<std::string, Facet> facets;
    std::vector<Facet> queue{initial_facet(pts, k)};
    facets.emplace(facet_key(queue[0]), queue[0]);
    while (!queue.empty()) {
        Facet f = std::move(queue.back());
        queue.pop_back();
        for (const PMask& ridge : facet_ridges(pts, k, f)) {
            Facet g = pivot_adjacent(pts, k, f, ridge);
            std::string key = facet_key(g);
            if (!facets.count(key)) {
                facets.emplace(key, g);
                queue.push_back(std::move(g));
            }
        }
    }
    std::vector<Facet> out;
    for (auto& [key, f] : facets) out.push_back(std::move(f));
    return out;
}

} // namespace

Polytope Polytope::hull(std::vector<LPoint> points) {
    if (points.empty()) throw domain_error("convex hull of an empty point set");
    size_t na = points[0].size();
    for (const LPoint& p : points)
        if (p.size() != na) throw domain_error("mixed ambient dimensions");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() > 256) throw domain_error("too many points (max 256)");

    Polytope P;
    P.pts_ = std::move(points);
    if (P.pts_.size() == 1) {
        P.dim_ = 0;
        P.vertex_idx_ = {0};
        return P;
    }

    std::vector<size_t> cols = pivot_columns(P.pts_);
    size_t k = cols.size();
    P.dim_ = static_cast<int>(k);
    std::vector<LPoint> proj = project(P.pts_, cols);
    std::vector<Facet> facets = wrap(proj, k);

    // face lattice: close the facet contact sets under intersection
    std::set<PMask> all;
    for (const Facet& f : facets) all.insert(f.contact);
    std::vector<PMask> frontier(all.begin(), all.end());
    while (!frontier.empty()) {
        std::vector<PMask> next;
        for (const PMask& m : frontier) {
            for (const Facet& f : facets) {
                PMask x = m & f.contact;
                if (x.none()) continue;
                if (all.insert(x).second) next.push_back(x);
            }
        }
        frontier = std::move(next);
    }

    P.faces_.assign(k, {});
    for (const PMask& m : all) {
        std::vector<LVec> normals;
        for (const Facet& f : facets)
            if (m.subset_of(f.contact)) normals.push_back(f.normal);
        size_t r = rank(to_qmat_ll(normals));
        size_t d = k - r;
        if (d >= k) throw internal_error("face dimension exceeds polytope dimension");
        P.faces_[d].push_back(m);
    }
    for (auto& level : P.faces_) std::sort(level.begin(), level.end());

    for (const PMask& m : P.faces_[0]) {
        if (m.count() != 1) throw internal_error("zero-dimensional face with several points");
        for (size_t i = 0; i < P.pts_.size(); ++i)
            if (m.test(i)) P.vertex_idx_.push_back(i);
    }
    std::sort(P.vertex_idx_.begin(), P.vertex_idx_.end());
    return P;
}

std::vector<LPoint> Polytope::vertices() const {
    std::vector<LPoint> v;
    v.reserve(vertex_idx_.size());
    for (size_t i : vertex_idx_) v.push_back(pts_[i]);
    return v;
}

std::vector<long> Polytope::f_vector() const {
    std::vector<long> f;
    for (const auto& level : faces_) f.push_back(static_cast<long>(level.size()));
    return f;
}

PMask Polytope::all_points_mask() const {
    PMask m;
    for (size_t i = 0; i < pts_.size(); ++i) m.set(i);
    return m;
}

bool Polytope::operator==(const Polytope& o) const {
    return vertices() == o.vertices();
}

Polytope newton_polytope(const Polynomial& f) {
    if (f.is_zero()) throw domain_error("Newton polytope of the zero polynomial");
    std::vector<LPoint> pts;
    for (const Term& t : f.terms()) {
        LPoint p(t.m.size());
        for (size_t i = 0; i < t.m.size(); ++i) p[i] = t.m[i];
        pts.push_back(std::move(p));
    }
    return Polytope::hull(std::move(pts));
}

Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
    if (P.ambient_dim() != Q.ambient_dim()) throw domain_error("ambient dimension mismatch");
    std::vector<LPoint> sums;
    for (const LPoint& p : P.vertices())
        for (const LPoint& q : Q.vertices()) {
            LPoint s(p.size());
            for (size_t i = 0; i < p.size(); ++i) s[i] = p[i] + q[i];
            sums.push_back(std::move(s));
        }
    return Polytope::hull(std::move(sums));
}

std::vector<LPoint> dilated_simplex_points(int d, int n) {
    if (d < 1 || n < 2) throw domain_error("dilated simplex needs d >= 1 and n >= 2");
    std::vector<LPoint> out;
    LPoint cur(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, size_t pos, int rem) -> void {
        if (pos + 1 == static_cast<size_t>(n)) {
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
    rec(rec, 0, d);
    return out;
}

bool euler_relation_holds(const Polytope& P) {
    long sum = 0;
    int sign = 1;
    for (long c : P.f_vector()) {
        sum += sign * c;
        sign = -sign;
    }
    long want = 1 - (P.dim() % 2 == 0 ? 1 : -1);
    return sum == want;
}

} // namespace tropws
