#include "mt/linalg.hpp"

namespace mt {

std::vector<int> rref(RowMatrix& m, int cols) {
  std::vector<int> pivots;
  int r = 0, rows = static_cast<int>(m.size());
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(m[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Rational inv = 1 / m[r][c];
    for (int k = c; k < cols; ++k) m[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Rational f = m[i][c];
      for (int k = c; k < cols; ++k)
        if (sgn(m[r][k]) != 0) m[i][k] -= f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> kernel_basis(const RowMatrix& m0, int cols) {
  RowMatrix m = m0;
  std::vector<int> piv = rref(m, cols);
  std::vector<int> pivot_row(cols, -1);
  for (std::size_t i = 0; i < piv.size(); ++i) pivot_row[piv[i]] = static_cast<int>(i);
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < cols; ++f) {
    if (pivot_row[f] >= 0) continue;
    std::vector<Rational> v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

int rank(RowMatrix m, int cols) { return static_cast<int>(rref(m, cols).size()); }

}  // namespace mt
