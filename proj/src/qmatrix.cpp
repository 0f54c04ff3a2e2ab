#include "waring/qmatrix.hpp"

#include <stdexcept>

namespace waring {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty()) return QMatrix();
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols())
      throw std::invalid_argument("ragged rows in QMatrix::from_rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rat> QMatrix::row(std::size_t r) const {
  std::vector<Rat> out(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

void QMatrix::append_row(const std::vector<Rat>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_)
    throw std::invalid_argument("appended row has wrong width");
  entries_.insert(entries_.end(), row.begin(), row.end());
  ++rows_;
}

RrefResult rref(QMatrix m) {
  RrefResult res;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    // first nonzero at or below pivot_row
    std::size_t sel = pivot_row;
    while (sel < rows && m.at(sel, col) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t j = col; j < cols; ++j)
        swap(m.at(sel, j), m.at(pivot_row, j));
    const Rat inv = 1 / m.at(pivot_row, col);
    for (std::size_t j = col; j < cols; ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m.at(r, col) == 0) continue;
      const Rat factor = m.at(r, col);
      for (std::size_t j = col; j < cols; ++j)
        m.at(r, j) -= factor * m.at(pivot_row, j);
    }
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  res.reduced = std::move(m);
  return res;
}

std::size_t rank_of(const QMatrix& m) { return rref(m).rank; }

std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m) {
  const RrefResult r = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(cols);
    v[free_col] = 1;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
      v[r.pivot_cols[i]] = -r.reduced.at(i, free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const std::vector<Rat>& v, const QMatrix& m) {
  if (v.size() != m.cols())
    throw std::invalid_argument("in_row_space: dimension mismatch");
  const RrefResult r = rref(m);
  std::vector<Rat> residual = v;
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    const std::size_t c = r.pivot_cols[i];
    if (residual[c] == 0) continue;
    const Rat factor = residual[c];
    for (std::size_t j = 0; j < v.size(); ++j)
      residual[j] -= factor * r.reduced.at(i, j);
  }
  for (const Rat& x : residual)
    if (x != 0) return false;
  return true;
}

std::optional<std::vector<Rat>> solve(const QMatrix& m,
                                      const std::vector<Rat>& rhs) {
  if (rhs.size() != m.rows())
    throw std::invalid_argument("solve: dimension mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = rhs[i];
  }
  const RrefResult r = rref(std::move(aug));
  std::vector<Rat> x(m.cols());
  for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
    if (r.pivot_cols[i] == m.cols()) return std::nullopt;  // 0 = 1 row
    x[r.pivot_cols[i]] = r.reduced.at(i, m.cols());
  }
  return x;
}

Rat determinant(QMatrix m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m.at(sel, col) == 0) ++sel;
    if (sel == n) return Rat(0);
    if (sel != col) {
      for (std::size_t j = col; j < n; ++j) swap(m.at(sel, j), m.at(col, j));
      det = -det;
    }
    det *= m.at(col, col);
    const Rat inv = 1 / m.at(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m.at(r, col) == 0) continue;
      const Rat factor = m.at(r, col) * inv;
      for (std::size_t j = col; j < n; ++j)
        m.at(r, j) -= factor * m.at(col, j);
    }
  }
  return det;
}

}  // namespace waring
