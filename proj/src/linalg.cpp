#include "gsp/linalg.hpp"

#include <stdexcept>

namespace gsp {

int rank(Matrix m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  int r = 0;
  for (size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Q f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

void EchelonBasis::reduce(std::vector<Q>& v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    int p = pivots_[k];
    if (v[p] == 0) continue;
    Q f = v[p];  // rows are normalized with pivot 1
    for (int j = p; j < dim_; ++j)
      if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
  }
}

bool EchelonBasis::add(std::vector<Q> v) {
  if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("dimension mismatch");
  reduce(v);
  int p = 0;
  while (p < dim_ && v[p] == 0) ++p;
  if (p == dim_) return false;
  Q inv = 1 / v[p];
  for (int j = p; j < dim_; ++j) v[j] *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::contains(std::vector<Q> v) const {
  reduce(v);
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

std::vector<Q> solve_columns(const std::vector<std::vector<Q>>& columns, const std::vector<Q>& b) {
  size_t k = columns.size(), d = b.size();
  // augmented system, rows indexed by coordinates
  Matrix m(d, std::vector<Q>(k + 1));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < k; ++j) m[i][j] = columns[j][i];
    m[i][k] = b[i];
  }
  std::vector<int> pivcol;
  size_t r = 0;
  for (size_t c = 0; c < k && r < d; ++c) {
    size_t piv = r;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) continue;
    std::swap(m[piv], m[r]);
    Q inv = 1 / m[r][c];
    for (size_t j = c; j <= k; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < d; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (size_t j = c; j <= k; ++j) m[i][j] -= f * m[r][j];
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  for (size_t i = r; i < d; ++i)
    if (m[i][k] != 0) throw std::runtime_error("no solution");
  std::vector<Q> x(k, Q(0));
  for (size_t i = 0; i < r; ++i) x[pivcol[i]] = m[i][k];
  return x;
}

}  // namespace gsp
