#include "tropws/lp.hpp"
#include "tropws/error.hpp"

namespace tropws {

namespace {

// Dense tableau. Column layout: 2*nvars structural columns (x = u - v),
// then one slack per inequality row, then one artificial per row.
struct Tableau {
    std::vector<std::vector<Rat>> row; // m x (ncols + 1), last entry = rhs
    std::vector<Rat> obj;              // reduced costs + objective value at back
    std::vector<int> basis;
    size_t ncols;

    void pivot(size_t r, size_t c) {
        Rat inv = Rat(1) / row[r][c];
        for (auto& x : row[r]) x *= inv;
        for (size_t i = 0; i < row.size(); ++i) {
            if (i == r || row[i][c] == 0) continue;
            Rat f = row[i][c];
            for (size_t j = 0; j <= ncols; ++j) row[i][j] -= f * row[r][j];
        }
        if (obj[c] != 0) {
            Rat f = obj[c];
            for (size_t j = 0; j <= ncols; ++j) obj[j] -= f * row[r][j];
        }
        basis[r] = static_cast<int>(c);
    }

    // Minimize; Bland's rule. Returns when all reduced costs >= 0.
    void solve() {
        while (true) {
            size_t enter = ncols;
            for (size_t j = 0; j < ncols; ++j)
                if (obj[j] < 0) { enter = j; break; }
            if (enter == ncols) return;
            size_t leave = row.size();
            Rat best;
            for (size_t i = 0; i < row.size(); ++i) {
                if (row[i][enter] <= 0) continue;
                Rat ratio = row[i][ncols] / row[i][enter];
                if (leave == row.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave]))
                    { leave = i; best = ratio; }
            }
            if (leave == row.size())
                throw internal_error("phase-1 objective unbounded"); // cannot happen
            pivot(leave, enter);
        }
    }
};

} // namespace

std::optional<std::vector<Rat>> lp_feasible_point(
    const std::vector<LinearConstraint>& cons, size_t nvars) {
    size_t m = cons.size();
    size_t nslack = 0;
    for (const auto& c : cons)
        if (c.rel != Rel::EQ) ++nslack;

    Tableau t;
    t.ncols = 2 * nvars + nslack + m;
    t.row.assign(m, std::vector<Rat>(t.ncols + 1, Rat(0)));
    t.obj.assign(t.ncols + 1, Rat(0));
    t.basis.assign(m, -1);

    size_t slack_at = 2 * nvars;
    for (size_t i = 0; i < m; ++i) {
        const auto& c = cons[i];
        if (c.a.size() != nvars) throw internal_error("lp constraint width mismatch");
        int flip = (c.b < 0) ? -1 : 1; // keep rhs nonnegative
        for (size_t k = 0; k < nvars; ++k) {
            t.row[i][k] = flip * c.a[k];
            t.row[i][nvars + k] = -flip * c.a[k];
        }
        t.row[i][t.ncols] = flip * c.b;
        if (c.rel != Rel::EQ) {
            int s = (c.rel == Rel::LE) ? 1 : -1;
            t.row[i][slack_at++] = flip * s;
        }
        size_t art = 2 * nvars + nslack + i;
        t.row[i][art] = 1;
        t.basis[i] = static_cast<int>(art);
        // price the artificial out of the phase-1 objective
        for (size_t j = 0; j <= t.ncols; ++j)
            if (j != art) t.obj[j] -= t.row[i][j];
    }
    t.solve();
    if (-t.obj[t.ncols] != 0) return std::nullopt; // residual infeasibility

    std::vector<Rat> full(t.ncols, Rat(0));
    for (size_t i = 0; i < m; ++i)
        full[static_cast<size_t>(t.basis[i])] = t.row[i][t.ncols];
    std::vector<Rat> x(nvars);
    for (size_t k = 0; k < nvars; ++k) x[k] = full[k] - full[nvars + k];

    for (const auto& c : cons) {
        Rat s = 0;
        for (size_t k = 0; k < nvars; ++k) s += c.a[k] * x[k];
        bool ok = (c.rel == Rel::EQ) ? (s == c.b)
               : (c.rel == Rel::LE) ? (s <= c.b)
                                    : (s >= c.b);
        if (!ok) throw internal_error("simplex returned an infeasible point");
    }
    return x;
}

std::optional<std::vector<Rat>> cone_point_where(
    const IMat& ineqs, const IMat& eqs,
    const std::vector<Int>& strict_row, int dir) {
    size_t n = strict_row.size();
    std::vector<LinearConstraint> cons;
    auto to_q = [&](const std::vector<Int>& v) {
        std::vector<Rat> q(v.size());
        for (size_t i = 0; i < v.size(); ++i) q[i] = Rat(v[i]);
        return q;
    };
    for (const auto& a : ineqs) cons.push_back({to_q(a), Rel::GE, Rat(0)});
    for (const auto& e : eqs) cons.push_back({to_q(e), Rel::EQ, Rat(0)});
    cons.push_back({to_q(strict_row), dir > 0 ? Rel::GE : Rel::LE, Rat(dir)});
    return lp_feasible_point(cons, n);
}

} // namespace tropws
