#ifndef WARING_QMATRIX_HPP
#define WARING_QMATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

// Dense rational matrix, row-major. All elimination below uses exact
// arithmetic with the first nonzero entry in column order as pivot, so
// reduced forms (and everything derived from them) are reproducible.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::vector<Rat> row(std::size_t r) const;
  QMatrix transposed() const;
  void append_row(const std::vector<Rat>& row);

  bool operator==(const QMatrix& other) const = default;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> entries_;
};

struct RrefResult {
  std::size_t rank = 0;
  QMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(QMatrix m);

std::size_t rank_of(const QMatrix& m);

// Echelonized basis of the right null space; empty when the matrix has
// full column rank. Basis vectors carry 1 at their free column.
std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m);

bool in_row_space(const std::vector<Rat>& v, const QMatrix& m);

// One solution of m x = rhs, or nullopt when inconsistent (free variables
// are set to zero, so the result is deterministic).
std::optional<std::vector<Rat>> solve(const QMatrix& m,
                                      const std::vector<Rat>& rhs);

Rat determinant(QMatrix m);

}  // namespace waring

#endif
