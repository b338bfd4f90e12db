#include "ringmat/determinant.hpp"

#include <string>

#include "ringmat/error.hpp"

namespace ringmat {

namespace {

void require_order(const Matrix& a, std::size_t n, std::size_t min_order, const char* op) {
  if (n < min_order)
    throw precondition_error(std::string(op) + ": order must be at least " + std::to_string(min_order) + ", got " +
                             std::to_string(n));
  if (a.rows() != n || a.cols() != n)
    throw precondition_error(std::string(op) + ": expected a " + std::to_string(n) + "x" + std::to_string(n) +
                             " matrix, got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

void require_index(std::size_t k, std::size_t n, const char* op) {
  if (k >= n) throw precondition_error(std::string(op) + ": index " + std::to_string(k) + " out of range");
}

Element signed_by(const Ring& ring, const Element& x, bool negate) { return negate ? ring.neg(x) : x; }

}  // namespace

Element det_term(const Ring& ring, const Matrix& a, const Permutation& p, std::size_t n) {
  require_order(a, n, 1, "det_term");
  if (p.degree() != n) throw precondition_error("det_term: permutation degree does not match the matrix order");
  Element product = ring.one();
  for (std::size_t i = 0; i < n; ++i) product = ring.mul(product, a(i, p[i]));
  return signed_by(ring, product, parity(p) == Parity::odd);
}

Element det(const Ring& ring, const Matrix& a, std::size_t n, std::size_t cap) {
  require_order(a, n, 1, "det");
  Element sum = ring.zero();
  for (const auto& p : enumerate(n, cap)) sum = ring.add(sum, det_term(ring, a, p, n));
  return sum;
}

Element cofactor(const Ring& ring, std::size_t i, std::size_t j, const Matrix& a, std::size_t n, std::size_t cap) {
  require_order(a, n, 2, "cofactor");
  require_index(i, n, "cofactor");
  require_index(j, n, "cofactor");
  return signed_by(ring, det(ring, minor(i, j, a), n - 1, cap), (i + j) % 2 == 1);
}

Element expand_col(const Ring& ring, const Matrix& a, std::size_t j, std::size_t n, std::size_t cap) {
  require_order(a, n, 2, "expand_col");
  require_index(j, n, "expand_col");
  Element sum = ring.zero();
  for (std::size_t i = 0; i < n; ++i) sum = ring.add(sum, ring.mul(a(i, j), cofactor(ring, i, j, a, n, cap)));
  return sum;
}

Element expand_row(const Ring& ring, const Matrix& a, std::size_t i, std::size_t n, std::size_t cap) {
  require_order(a, n, 2, "expand_row");
  require_index(i, n, "expand_row");
  Element sum = ring.zero();
  for (std::size_t j = 0; j < n; ++j) sum = ring.add(sum, ring.mul(a(i, j), cofactor(ring, i, j, a, n, cap)));
  return sum;
}

Element det_rec(const Ring& ring, const Matrix& a, std::size_t n) {
  require_order(a, n, 1, "det_rec");
  if (n == 1) return a(0, 0);
  Element sum = ring.zero();
  for (std::size_t j = 0; j < n; ++j) {
    const Element minor_det = det_rec(ring, minor(0, j, a), n - 1);
    sum = ring.add(sum, ring.mul(a(0, j), signed_by(ring, minor_det, j % 2 == 1)));
  }
  return sum;
}

Matrix cofactor_matrix(const Ring& ring, const Matrix& a, std::size_t n, std::size_t cap) {
  require_order(a, n, 2, "cofactor_matrix");
  Matrix result(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) result(i, j) = cofactor(ring, i, j, a, n, cap);
  return result;
}

Matrix adjoint(const Ring& ring, const Matrix& a, std::size_t n, std::size_t cap) {
  return transpose(cofactor_matrix(ring, a, n, cap));
}

}  // namespace ringmat
