#include "ringmat/charpoly.hpp"

#include "ringmat/determinant.hpp"
#include "ringmat/error.hpp"

namespace ringmat {

Matrix characteristic_matrix(const Ring& ring, const Matrix& a) {
  if (!a.is_square() || a.rows() == 0) throw precondition_error("charpoly: needs a non-empty square matrix");
  const Ring poly = Ring::polynomials(ring);
  const std::size_t n = a.rows();
  Matrix result(n, n, poly.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Constant polynomial -a_ij, plus t on the diagonal.
      Element::Coefficients coefficients{ring.neg(a(i, j))};
      if (i == j) {
        coefficients.push_back(ring.one());
      } else if (ring.eq(coefficients.front(), ring.zero())) {
        coefficients.clear();
      }
      result(i, j) = Element(std::move(coefficients));
    }
  }
  return result;
}

Element charpoly(const Ring& ring, const Matrix& a, std::size_t cap) {
  if (ring.kind() == RingKind::polynomials)
    throw precondition_error("charpoly: base ring must be integers, rationals or zmod, got '" + ring.descriptor() + "'");
  const std::size_t n = a.rows();
  return det(Ring::polynomials(ring), characteristic_matrix(ring, a), n, cap);
}

}  // namespace ringmat
