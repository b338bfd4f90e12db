#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ringmat/ring.hpp"

namespace ringmat {

/// Finite ordered sequence of ring elements.
using Vector = std::vector<Element>;

/// True iff `v` has length `n` and every entry belongs to `ring`.
bool is_vector(const Ring& ring, std::span<const Element> v, std::size_t n);

/// Sum of the products of corresponding entries; zero for empty vectors.
Element dot(const Ring& ring, std::span<const Element> u, std::span<const Element> v);

/// result[k] = dot(u, rows[k]).
Vector dot_list(const Ring& ring, std::span<const Element> u, std::span<const Vector> rows);

Vector vec_add(const Ring& ring, std::span<const Element> u, std::span<const Element> v);
Vector vec_scale(const Ring& ring, const Element& c, std::span<const Element> v);
Element vec_sum(const Ring& ring, std::span<const Element> v);
Element vec_prod(const Ring& ring, std::span<const Element> v);
Vector zeros(const Ring& ring, std::size_t n);
bool is_zero_vector(const Ring& ring, std::span<const Element> v);

}  // namespace ringmat
