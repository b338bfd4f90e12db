#pragma once

/**
 * @file permutation.hpp
 * @brief The symmetric group on {0, ..., n-1}.
 *
 * A permutation is stored as its image sequence: p maps index i to p[i].
 * Composition is fixed by the action on lists,
 *
 *   apply(apply(l, p), q) == apply(l, compose(p, q)),
 *
 * which forces compose(p, q)[i] == p[q[i]].
 */

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ringmat/error.hpp"

namespace ringmat {

/// Largest degree `enumerate` accepts unless the caller raises it.
inline constexpr std::size_t kDefaultEnumerationCap = 8;

enum class Parity { even, odd };

inline Parity operator^(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }

class Permutation {
 public:
  /// Throws precondition_error unless `images` is a rearrangement of 0..n-1.
  explicit Permutation(std::vector<std::size_t> images);

  std::size_t degree() const noexcept { return images_.size(); }
  std::size_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

bool is_permutation(std::span<const std::size_t> images);

Permutation identity_perm(std::size_t n);

/// All n! permutations in lexicographic order; the identity comes first.
std::vector<Permutation> enumerate(std::size_t n, std::size_t cap = kDefaultEnumerationCap);

Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);
Permutation transposition(std::size_t i, std::size_t j, std::size_t n);

/// Parity of the inversion count.
Parity parity(const Permutation& p);

/// Transpositions whose left-to-right composition is `p`. Empty for the identity.
std::vector<Permutation> decompose(const Permutation& p);

/// result[i] = l[p[i]].
template <typename T>
std::vector<T> apply(std::span<const T> l, const Permutation& p) {
  if (l.size() != p.degree())
    throw precondition_error("apply: list length " + std::to_string(l.size()) + " does not match degree " +
                             std::to_string(p.degree()));
  std::vector<T> result;
  result.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) result.push_back(l[p[i]]);
  return result;
}

template <typename T>
std::vector<T> apply(const std::vector<T>& l, const Permutation& p) {
  return apply(std::span<const T>(l), p);
}

/// Comma separated image list, e.g. "1,2,0".
std::string to_string(const Permutation& p);
/// Inverse of to_string; throws parse_error on malformed text.
Permutation parse_permutation(std::string_view text);

}  // namespace ringmat
