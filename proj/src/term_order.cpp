#include "tropws/term_order.hpp"

#include <sstream>

namespace tropws {

namespace {

// Reduce each row modulo the rational span of the rows before it, drop
// rows that become zero, scale the rest primitive. The result is a
// canonical representative of the order's refinement sequence.
std::vector<std::vector<Int>> reduce_rows(size_t n, const std::vector<std::vector<Int>>& rows) {
    std::vector<std::vector<Rat>> rref;      // row-echelon basis of the span so far
    std::vector<int> pivot_col;
    std::vector<std::vector<Int>> out;
    for (const auto& row : rows) {
        std::vector<Rat> r(n);
        for (size_t j = 0; j < n; ++j) r[j] = Rat(row[j]);
        for (size_t k = 0; k < rref.size(); ++k) {
            Rat f = r[static_cast<size_t>(pivot_col[k])];
            if (f != 0)
                for (size_t j = 0; j < n; ++j) r[j] -= f * rref[k][j];
        }
        int p = -1;
        for (size_t j = 0; j < n; ++j)
            if (r[j] != 0) { p = static_cast<int>(j); break; }
        if (p < 0) continue;
        out.push_back(primitive(r));
        // extend the echelon basis
        Rat lead = r[static_cast<size_t>(p)];
        for (size_t j = 0; j < n; ++j) r[j] /= lead;
        for (size_t k = 0; k < rref.size(); ++k) {
            Rat f = rref[k][static_cast<size_t>(p)];
            if (f != 0)
                for (size_t j = 0; j < n; ++j) rref[k][j] -= f * r[j];
        }
        rref.push_back(std::move(r));
        pivot_col.push_back(p);
    }
    return out;
}

std::string rows_key(const std::vector<std::vector<Int>>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        for (const auto& x : r) os << x.get_str() << ",";
        os << ";";
    }
    return os.str();
}

} // namespace

TermOrder::TermOrder(OrderKind kind, size_t n, std::vector<std::vector<Int>> rows)
    : kind_(kind), n_(n), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.size() != n_) throw domain_error("term order row length mismatch");
    canon_ = reduce_rows(n_, rows_);
    if (canon_.size() != n_)
        throw domain_error("term order matrix does not have full rank; order is not total");
    key_ = rows_key(canon_);
}

TermOrder TermOrder::lex(size_t n) {
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, 0));
    for (size_t i = 0; i < n; ++i) rows[i][i] = 1;
    return TermOrder(OrderKind::Lex, n, std::move(rows));
}

TermOrder TermOrder::grevlex(size_t n) {
    std::vector<std::vector<Int>> rows;
    rows.emplace_back(n, Int(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        std::vector<Int> r(n, 0);
        r[n - 1 - k] = -1;
        rows.push_back(std::move(r));
    }
    return TermOrder(OrderKind::Grevlex, n, std::move(rows));
}

TermOrder TermOrder::weighted(const WeightVector& w, const TermOrder& base) {
    if (w.size() != base.n()) throw domain_error("weight vector length mismatch");
    std::vector<std::vector<Int>> rows;
    std::vector<Int> first = primitive(w);
    bool zero = true;
    for (auto& x : first) {
        if (x != 0) zero = false;
        x = -x; // min convention: w-minimal terms lead
    }
    if (!zero) rows.push_back(std::move(first));
    for (const auto& r : base.rows()) rows.push_back(r);
    return TermOrder(OrderKind::Weighted, base.n(), std::move(rows));
}

TermOrder TermOrder::matrix(size_t n, std::vector<std::vector<Int>> rows) {
    return TermOrder(OrderKind::Matrix, n, std::move(rows));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != n_ || b.size() != n_) throw domain_error("monomial dimension mismatch");
    for (const auto& row : rows_) {
        Int s = 0;
        for (size_t j = 0; j < n_; ++j) {
            int d = a[j] - b[j];
            if (d != 0) s += row[j] * d;
        }
        int sg = sgn(s);
        if (sg != 0) return sg;
    }
    if (a != b)
        throw internal_error("term order failed to separate distinct monomials");
    return 0;
}

int compare_monomials(const TermOrder& order, const Monomial& a, const Monomial& b) {
    return order.compare(a, b);
}

} // namespace tropws
