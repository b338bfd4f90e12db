#pragma once

#include <cstddef>

#include "ringmat/matrix.hpp"
#include "ringmat/permutation.hpp"
#include "ringmat/ring.hpp"

namespace ringmat {

/// The matrix t*I - a over poly-over-`ring`.
Matrix characteristic_matrix(const Ring& ring, const Matrix& a);

/// det(t*I - a), computed as a Leibniz determinant over poly-over-`ring`.
/// The base ring must be integers, rationals or zmod; the result is monic of
/// degree n. Returns an element of Ring::polynomials(ring).
Element charpoly(const Ring& ring, const Matrix& a, std::size_t cap = kDefaultEnumerationCap);

}  // namespace ringmat
