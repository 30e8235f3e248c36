#pragma once
#include <vector>
#include "tropws/numeric.hpp"

namespace tropws {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;

size_t rank(QMat m); // by value: destroyed by elimination

// Reduced row echelon form; returns the pivot columns. Zero rows are
// dropped from m.
std::vector<int> rref(QMat& m);

// Basis of the right null space {x : m x = 0}.
QMat null_space(const QMat& m, size_t ncols);

// Solve m x = b exactly; empty optional when inconsistent.
// m is ncols wide; least-norm is NOT attempted: any solution is returned.
std::vector<Rat> solve(QMat m, QVec b, size_t ncols, bool& ok);

QMat to_qmat(const std::vector<std::vector<Int>>& m);

} // namespace tropws
