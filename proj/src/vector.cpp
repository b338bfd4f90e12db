#include "ringmat/vector.hpp"

#include <algorithm>
#include <string>

#include "ringmat/error.hpp"

namespace ringmat {

namespace {

void require_same_length(std::size_t lhs, std::size_t rhs, const char* op) {
  if (lhs != rhs)
    throw precondition_error(std::string(op) + ": length mismatch (" + std::to_string(lhs) + " vs " +
                             std::to_string(rhs) + ")");
}

}  // namespace

bool is_vector(const Ring& ring, std::span<const Element> v, std::size_t n) {
  return v.size() == n && std::all_of(v.begin(), v.end(), [&](const Element& x) { return ring.contains(x); });
}

Element dot(const Ring& ring, std::span<const Element> u, std::span<const Element> v) {
  require_same_length(u.size(), v.size(), "dot");
  Element sum = ring.zero();
  for (std::size_t i = 0; i < u.size(); ++i) sum = ring.add(sum, ring.mul(u[i], v[i]));
  return sum;
}

Vector dot_list(const Ring& ring, std::span<const Element> u, std::span<const Vector> rows) {
  Vector result;
  result.reserve(rows.size());
  for (const auto& r : rows) result.push_back(dot(ring, u, r));
  return result;
}

Vector vec_add(const Ring& ring, std::span<const Element> u, std::span<const Element> v) {
  require_same_length(u.size(), v.size(), "vec_add");
  Vector sum;
  sum.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) sum.push_back(ring.add(u[i], v[i]));
  return sum;
}

Vector vec_scale(const Ring& ring, const Element& c, std::span<const Element> v) {
  Vector scaled;
  scaled.reserve(v.size());
  for (const auto& x : v) scaled.push_back(ring.mul(c, x));
  return scaled;
}

Element vec_sum(const Ring& ring, std::span<const Element> v) {
  Element sum = ring.zero();
  for (const auto& x : v) sum = ring.add(sum, x);
  return sum;
}

Element vec_prod(const Ring& ring, std::span<const Element> v) {
  Element product = ring.one();
  for (const auto& x : v) product = ring.mul(product, x);
  return product;
}

Vector zeros(const Ring& ring, std::size_t n) { return Vector(n, ring.zero()); }

bool is_zero_vector(const Ring& ring, std::span<const Element> v) {
  return std::all_of(v.begin(), v.end(), [&](const Element& x) { return ring.eq(x, ring.zero()); });
}

}  // namespace ringmat
