#include "ringmat/matrix.hpp"

#include <algorithm>
#include <string>

#include "ringmat/error.hpp"

namespace ringmat {

namespace {

std::string dims(const Matrix& a) { return std::to_string(a.rows()) + "x" + std::to_string(a.cols()); }

void require_row(std::size_t i, const Matrix& a, const char* op) {
  if (i >= a.rows())
    throw precondition_error(std::string(op) + ": row index " + std::to_string(i) + " out of range for " + dims(a));
}

void require_col(std::size_t j, const Matrix& a, const char* op) {
  if (j >= a.cols())
    throw precondition_error(std::string(op) + ": column index " + std::to_string(j) + " out of range for " +
                             dims(a));
}

void require_same_dims(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw precondition_error(std::string(op) + ": dimension mismatch " + dims(a) + " vs " + dims(b));
}

void require_nonempty(const Matrix& a, const char* op) {
  if (a.rows() == 0 || a.cols() == 0) throw precondition_error(std::string(op) + ": empty matrix " + dims(a));
}

}  // namespace

Matrix::Matrix(std::vector<Vector> rows, std::size_t cols)
    : rows_(std::move(rows)), cols_(rows_.empty() ? cols : rows_.front().size()) {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i].size() != cols_)
      throw precondition_error("matrix row " + std::to_string(i) + " has length " + std::to_string(rows_[i].size()) +
                               ", expected " + std::to_string(cols_));
}

bool is_matrix(const Ring& ring, std::span<const Vector> rows, std::size_t m, std::size_t n) {
  return rows.size() == m && std::all_of(rows.begin(), rows.end(), [&](const Vector& r) { return is_vector(ring, r, n); });
}

bool is_matrix(const Ring& ring, const Matrix& a, std::size_t m, std::size_t n) {
  return a.cols() == n && is_matrix(ring, std::span<const Vector>(a.row_list()), m, n);
}

const Element& entry(std::size_t i, std::size_t j, const Matrix& a) {
  require_row(i, a, "entry");
  require_col(j, a, "entry");
  return a(i, j);
}

Vector row(std::size_t i, const Matrix& a) {
  require_row(i, a, "row");
  return a.row_list()[i];
}

Vector col(std::size_t j, const Matrix& a) {
  require_col(j, a, "col");
  Vector c;
  c.reserve(a.rows());
  for (const auto& r : a.row_list()) c.push_back(r[j]);
  return c;
}

Matrix replace_row(const Matrix& a, std::size_t k, std::span<const Element> r) {
  require_row(k, a, "replace_row");
  if (r.size() != a.cols()) throw precondition_error("replace_row: replacement has the wrong length");
  Matrix result = a;
  for (std::size_t j = 0; j < r.size(); ++j) result(k, j) = r[j];
  return result;
}

Matrix replace_col(const Matrix& a, std::size_t k, std::span<const Element> r) {
  require_col(k, a, "replace_col");
  if (r.size() != a.rows()) throw precondition_error("replace_col: replacement has the wrong length");
  Matrix result = a;
  for (std::size_t i = 0; i < r.size(); ++i) result(i, k) = r[i];
  return result;
}

Matrix mat_add(const Ring& ring, const Matrix& a, const Matrix& b) {
  require_same_dims(a, b, "mat_add");
  Matrix sum = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) sum(i, j) = ring.add(a(i, j), b(i, j));
  return sum;
}

Matrix mat_scale(const Ring& ring, const Element& c, const Matrix& a) {
  Matrix scaled = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) scaled(i, j) = ring.mul(c, a(i, j));
  return scaled;
}

Element mat_sum(const Ring& ring, const Matrix& a) {
  Element sum = ring.zero();
  for (const auto& r : a.row_list()) sum = ring.add(sum, vec_sum(ring, r));
  return sum;
}

Matrix transpose(const Matrix& a) {
  require_nonempty(a, "transpose");
  std::vector<Vector> columns;
  columns.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) columns.push_back(col(j, a));
  return Matrix(std::move(columns));
}

Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b) {
  require_nonempty(a, "multiply");
  require_nonempty(b, "multiply");
  if (a.cols() != b.rows()) throw precondition_error("multiply: inner dimension mismatch " + dims(a) + " * " + dims(b));
  const Matrix bt = transpose(b);
  Matrix product(a.rows(), b.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) product(i, j) = dot(ring, a.row_list()[i], bt.row_list()[j]);
  return product;
}

Element delta(const Ring& ring, std::size_t i, std::size_t j) { return i == j ? ring.one() : ring.zero(); }

Vector unit_vector(const Ring& ring, std::size_t i, std::size_t n) {
  if (i >= n) throw precondition_error("unit_vector: index " + std::to_string(i) + " out of range for length " +
                                       std::to_string(n));
  Vector v = zeros(ring, n);
  v[i] = ring.one();
  return v;
}

Matrix identity(const Ring& ring, std::size_t n) {
  if (n == 0) throw precondition_error("identity: order must be positive");
  std::vector<Vector> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) rows.push_back(unit_vector(ring, i, n));
  return Matrix(std::move(rows));
}

Matrix delete_row(std::size_t i, const Matrix& a) {
  require_row(i, a, "delete_row");
  return Matrix(delete_nth(i, std::span<const Vector>(a.row_list())), a.cols());
}

Matrix delete_col(std::size_t j, const Matrix& a) {
  require_col(j, a, "delete_col");
  return transpose(delete_row(j, transpose(a)));
}

Matrix minor(std::size_t i, std::size_t j, const Matrix& a) {
  if (!a.is_square() || a.rows() < 2) throw precondition_error("minor: needs a square matrix of order >= 2, got " + dims(a));
  require_row(i, a, "minor");
  require_col(j, a, "minor");
  return delete_col(j, delete_row(i, a));
}

std::optional<std::pair<std::size_t, std::size_t>> entry_diff(const Matrix& a, const Matrix& b) {
  require_same_dims(a, b, "entry_diff");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == b(i, j))) return std::pair{i, j};
  return std::nullopt;
}

}  // namespace ringmat
