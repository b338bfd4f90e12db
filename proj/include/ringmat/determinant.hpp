#pragma once

/**
 * @file determinant.hpp
 * @brief Determinants over a commutative ring.
 *
 * det is the Leibniz sum over the symmetric group and is the reference
 * definition. Everything else here (cofactor expansion along a row or a
 * column, the row-0 recursion, the adjugate) is an independent route to the
 * same value and is tested against it.
 *
 * No division is used anywhere, so all of this is valid over rings with zero
 * divisors such as zmod 6.
 */

#include <cstddef>

#include "ringmat/matrix.hpp"
#include "ringmat/permutation.hpp"
#include "ringmat/ring.hpp"

namespace ringmat {

/// Signed Leibniz term for one permutation: the product of entry(i, p[i])
/// over all rows, negated when p is odd.
Element det_term(const Ring& ring, const Matrix& a, const Permutation& p, std::size_t n);

/// Leibniz determinant of an n x n matrix. Throws precondition_error for
/// n = 0, a non-square matrix, or n above `cap`.
Element det(const Ring& ring, const Matrix& a, std::size_t n, std::size_t cap = kDefaultEnumerationCap);

/// (-1)^(i+j) det(minor(i, j, a)); the minor's determinant is the Leibniz sum.
Element cofactor(const Ring& ring, std::size_t i, std::size_t j, const Matrix& a, std::size_t n,
                 std::size_t cap = kDefaultEnumerationCap);

Element expand_col(const Ring& ring, const Matrix& a, std::size_t j, std::size_t n,
                   std::size_t cap = kDefaultEnumerationCap);
Element expand_row(const Ring& ring, const Matrix& a, std::size_t i, std::size_t n,
                   std::size_t cap = kDefaultEnumerationCap);

/// Determinant by recursive expansion along row 0. No enumeration cap.
Element det_rec(const Ring& ring, const Matrix& a, std::size_t n);

Matrix cofactor_matrix(const Ring& ring, const Matrix& a, std::size_t n, std::size_t cap = kDefaultEnumerationCap);
/// Classical adjoint: transpose of the cofactor matrix.
Matrix adjoint(const Ring& ring, const Matrix& a, std::size_t n, std::size_t cap = kDefaultEnumerationCap);

}  // namespace ringmat
