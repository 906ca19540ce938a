#pragma once

#include "foldprod/rational.hpp"

#include <optional>
#include <vector>

namespace foldprod {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

/// Reduces `a` in place to reduced row echelon form; returns pivot column indices.
std::vector<size_t> rref(QMatrix& a);

size_t rank(QMatrix a);

/// Basis of the right null space {v : a v = 0}, one vector per free column,
/// in ascending free-column order (deterministic).
std::vector<QVector> nullspace(const QMatrix& a);

/// Solves a x = b; std::nullopt when inconsistent. When the system is
/// underdetermined, free variables are set to zero.
std::optional<QVector> solve(QMatrix a, QVector b);

} // namespace foldprod
