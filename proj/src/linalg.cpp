#include "tropws/linalg.hpp"
#include "tropws/error.hpp"

namespace tropws {

std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t ncols = m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < ncols && row < m.size(); ++col) {
        size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        Rat inv = Rat(1) / m[row][col];
        for (size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    m.resize(row);
    return pivots;
}

size_t rank(QMat m) {
    return rref(m).size();
}

QMat null_space(const QMat& m_in, size_t ncols) {
    QMat m = m_in;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    QMat basis;
    for (size_t free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(ncols, Rat(0));
        v[free_col] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[static_cast<size_t>(pivots[k])] = -m[k][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Rat> solve(QMat m, QVec b, size_t ncols, bool& ok) {
    for (size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
    std::vector<int> pivots = rref(m);
    ok = true;
    for (int p : pivots)
        if (static_cast<size_t>(p) == ncols) { ok = false; return {}; }
    QVec x(ncols, Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k)
        x[static_cast<size_t>(pivots[k])] = m[k][ncols];
    return x;
}

QMat to_qmat(const std::vector<std::vector<Int>>& m) {
    QMat q(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        q[i].resize(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j) q[i][j] = Rat(m[i][j]);
    }
    return q;
}

} // namespace tropws
