#pragma once

#include <vector>

#include "mt/rational.hpp"

namespace mt {

using RowMatrix = std::vector<std::vector<Rational>>;

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(RowMatrix& m, int cols);
// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<Rational>> kernel_basis(const RowMatrix& m, int cols);
int rank(RowMatrix m, int cols);

}  // namespace mt
