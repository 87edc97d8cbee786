#ifndef GKFOL_LINALG_HPP
#define GKFOL_LINALG_HPP

#include <optional>
#include <vector>

#include "gkfol/field.hpp"

namespace gkfol {

/// Kernel basis of A (rows = equations). Fraction-free elimination with
/// deterministic first-nonzero pivoting; each basis vector is scaled so its
/// first nonzero coordinate is 1. Column order fixes the basis uniquely.
std::vector<std::vector<mpq_class>> nullspace(const QMat& a, int ncols);

/// One solution of A x = b, if consistent.
std::optional<std::vector<mpq_class>> solve(const QMat& a, const std::vector<mpq_class>& b);

int rank(QMat a);

mpq_class determinant(QMat a);

bool is_nilpotent(const QMat& a);

} // namespace gkfol

#endif
