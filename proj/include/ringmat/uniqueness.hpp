#pragma once

/**
 * @file uniqueness.hpp
 * @brief Executable form of the determinant uniqueness argument.
 *
 * Let f be any function of n x n matrices that is linear in each row and
 * vanishes when two adjacent rows are equal. For a k-tuple x of column
 * indices, eval_tuple weights f of the matrix whose first k rows are the unit
 * vectors e_{x[0]}, ..., e_{x[k-1]} (remaining rows taken from a) by the
 * product a[0][x[0]] * ... * a[k-1][x[k-1]]. Summing over all n^k tuples
 * gives the same value for every k. At k = 0 the sum is f(a); at k = n only
 * permutations survive and the sum is det(a) * f(I). Hence
 *
 *   f(a) = det(a) * f(I).
 *
 * check_uniqueness evaluates every level of that chain for a concrete f and
 * reports where it holds. The constraints on f are not assumed: they are
 * spot-checked on samples and reported alongside.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ringmat/matrix.hpp"
#include "ringmat/ring.hpp"
#include "ringmat/sampling.hpp"

namespace ringmat {

/// n^k grows quickly; all_tuples refuses n above this unless asked.
inline constexpr std::size_t kDefaultTupleCap = 6;

struct DeterminantFunctional {
  std::string name;
  std::function<Element(const Matrix&, std::size_t)> eval;
};

/// A k-tuple: k column indices, each below n.
using Tuple = std::vector<std::size_t>;

bool is_tuple(std::span<const std::size_t> x, std::size_t k, std::size_t n);

/// Every way of appending one index below n to each member of `tuples`,
/// keeping the order of `tuples` and ascending in the appended index.
std::vector<Tuple> extend_tuples(std::span<const Tuple> tuples, std::size_t n);

/// All n^k tuples; all_tuples(0, n) is the single empty tuple.
std::vector<Tuple> all_tuples(std::size_t k, std::size_t n, std::size_t cap = kDefaultTupleCap);

/// result[j] = entry(j, x[j], a).
Vector extract_entries(std::span<const std::size_t> x, const Matrix& a);

/// Unit row vectors e_{x[0]}, ..., e_{x[k-1]} of length n.
std::vector<Vector> runits(const Ring& ring, std::span<const std::size_t> x, std::size_t n);

Element eval_tuple(const Ring& ring, std::span<const std::size_t> x, std::size_t k, const Matrix& a, std::size_t n,
                   const DeterminantFunctional& f);

Element sum_tuples(const Ring& ring, std::span<const Tuple> tuples, std::size_t k, const Matrix& a, std::size_t n,
                   const DeterminantFunctional& f);

struct UniquenessOptions {
  /// Also sample the derived property that any two equal rows give zero.
  bool check_alternating = true;
  std::size_t linearity_samples = 4;
  std::uint64_t seed = kDefaultSeed;
  std::size_t tuple_cap = kDefaultTupleCap;
};

struct LevelSum {
  std::size_t k;
  Element sum;
  bool matches_f_of_a;
};

struct ConstraintCheck {
  std::string name;
  bool holds;
  std::size_t samples;
};

struct UniquenessVerdict {
  Element f_of_a;
  Element f_of_identity;
  Element det_of_a;
  /// det(a) * f(I)
  Element predicted;
  std::vector<LevelSum> levels;  // k = 0..n
  std::vector<ConstraintCheck> constraints;
  bool levels_invariant = false;
  bool identity_holds = false;

  bool constraints_hold() const;
  bool all_hold() const { return levels_invariant && identity_holds && constraints_hold(); }
};

/// Never throws for a misbehaving f; failures show up in the verdict.
/// Throws precondition_error only for a malformed `a` or n above the tuple cap.
UniquenessVerdict check_uniqueness(const Ring& ring, const DeterminantFunctional& f, const Matrix& a, std::size_t n,
                                   const UniquenessOptions& options = {});

}  // namespace ringmat
