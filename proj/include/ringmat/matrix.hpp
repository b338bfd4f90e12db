#pragma once

/**
 * @file matrix.hpp
 * @brief Dense row-major matrices over a Ring.
 *
 * Matrix only guarantees a rectangular shape. Ring membership of the entries
 * is checked by is_matrix; the operations here take the ring explicitly and
 * assume their arguments belong to it. Everything is value semantics: no
 * operation modifies its inputs.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ringmat/ring.hpp"
#include "ringmat/vector.hpp"

namespace ringmat {

class Matrix {
 public:
  Matrix() = default;
  /// Throws precondition_error if the rows are ragged. A matrix with no rows
  /// has `cols` columns (default 0).
  explicit Matrix(std::vector<Vector> rows, std::size_t cols = 0);
  Matrix(std::size_t m, std::size_t n, const Element& fill) : rows_(m, Vector(n, fill)), cols_(n) {}

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_.size() == cols_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Element& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }
  const std::vector<Vector>& row_list() const noexcept { return rows_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::vector<Vector> rows_;
  std::size_t cols_ = 0;
};

/// True iff `rows` has exactly m members, each a ring vector of length n.
bool is_matrix(const Ring& ring, std::span<const Vector> rows, std::size_t m, std::size_t n);
bool is_matrix(const Ring& ring, const Matrix& a, std::size_t m, std::size_t n);

const Element& entry(std::size_t i, std::size_t j, const Matrix& a);
Vector row(std::size_t i, const Matrix& a);
Vector col(std::size_t j, const Matrix& a);

Matrix replace_row(const Matrix& a, std::size_t k, std::span<const Element> r);
Matrix replace_col(const Matrix& a, std::size_t k, std::span<const Element> r);

Matrix mat_add(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix mat_scale(const Ring& ring, const Element& c, const Matrix& a);
/// Row-major fold of every entry.
Element mat_sum(const Ring& ring, const Matrix& a);

Matrix transpose(const Matrix& a);
Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b);

Element delta(const Ring& ring, std::size_t i, std::size_t j);
Vector unit_vector(const Ring& ring, std::size_t i, std::size_t n);
Matrix identity(const Ring& ring, std::size_t n);

/// Removes entry k of a list.
template <typename T>
std::vector<T> delete_nth(std::size_t k, std::span<const T> l) {
  std::vector<T> result;
  result.reserve(l.empty() ? 0 : l.size() - 1);
  for (std::size_t i = 0; i < l.size(); ++i)
    if (i != k) result.push_back(l[i]);
  return result;
}

Matrix delete_row(std::size_t i, const Matrix& a);
/// Computed as transpose(delete_row(j, transpose(a))).
Matrix delete_col(std::size_t j, const Matrix& a);
/// Deletes row i and column j of a square matrix of order >= 2.
Matrix minor(std::size_t i, std::size_t j, const Matrix& a);

/// First row-major position where a and b differ, or nothing if equal.
std::optional<std::pair<std::size_t, std::size_t>> entry_diff(const Matrix& a, const Matrix& b);

}  // namespace ringmat
