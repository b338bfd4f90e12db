#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "ringmat/matrix.hpp"
#include "ringmat/ring.hpp"
#include "ringmat/text_format.hpp"

namespace ringmat::testing {

/// The ring instances every law is exercised over.
inline std::vector<Ring> all_rings() {
  return {Ring::integers(),
          Ring::rationals(),
          Ring::zmod(2),
          Ring::zmod(5),
          Ring::zmod(6),
          Ring::zmod(12),
          Ring::polynomials(Ring::integers()),
          Ring::polynomials(Ring::zmod(5))};
}

inline Element el(const Ring& ring, const std::string& text) { return parse_element(ring, text); }

inline Element num(const Ring& ring, long value) { return ring.from_integer(mpz_class(value)); }

inline Vector vec(const Ring& ring, std::initializer_list<long> values) {
  Vector v;
  for (long x : values) v.push_back(num(ring, x));
  return v;
}

inline Matrix mat(const Ring& ring, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> parsed;
  for (const auto& r : rows) parsed.push_back(vec(ring, r));
  return Matrix(std::move(parsed));
}

}  // namespace ringmat::testing
