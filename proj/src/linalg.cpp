#include "starrep/linalg.hpp"

#include <stdexcept>

namespace starrep {

namespace {

void require_square(const Matrix& m) {
  for (auto& row : m)
    if (row.size() != m.size()) throw std::invalid_argument("matrix is not square");
}

Matrix leading_block(const Matrix& m, std::size_t k) {
  Matrix out(k);
  for (std::size_t r = 0; r < k; ++r) out[r].assign(m[r].begin(), m[r].begin() + k);
  return out;
}

} // namespace

Scalar determinant(Matrix m) {
  require_square(m);
  const std::size_t n = m.size();
  Scalar sign(1), prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k].is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = Scalar(0);
    }
    prev = m[k][k];
  }
  return n == 0 ? Scalar(1) : sign * m[n - 1][n - 1];
}

std::vector<Scalar> leading_minors(const Matrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  std::vector<Scalar> out;
  out.reserve(n);
  // Without pivoting, the k-th Bareiss pivot is exactly the k-th leading minor.
  Matrix a = m;
  Scalar prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      for (std::size_t r = k; r < n; ++r) out.push_back(determinant(leading_block(m, r + 1)));
      return out;
    }
    out.push_back(a[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = Scalar(0);
    }
    prev = a[k][k];
  }
  return out;
}

bool is_hermitian(const Matrix& m) {
  require_square(m);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!(m[i][j] == m[j][i].conj())) return false;
  return true;
}

} // namespace starrep
