#pragma once

/**
 * @file laws.hpp
 * @brief Determinant laws checked against a user supplied matrix.
 *
 * Each law is evaluated exactly on `a` and on seeded random companions
 * (second factor, replacement rows, scalars). A failing law means an
 * implementation bug, since all of them are theorems over any commutative
 * ring.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ringmat/matrix.hpp"
#include "ringmat/permutation.hpp"
#include "ringmat/ring.hpp"
#include "ringmat/sampling.hpp"

namespace ringmat {

using DeterminantFn = std::function<Element(const Ring&, const Matrix&, std::size_t)>;

struct LawCheckOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t cap = kDefaultEnumerationCap;
  /// Random trials for the sampled laws (n-linearity, multiplicativity).
  std::size_t samples = 8;
  /// Determinant under test. Empty means Leibniz when n <= cap, otherwise
  /// recursive expansion.
  DeterminantFn determinant;
};

struct LawResult {
  std::string law;
  bool passed;
  std::string detail;
};

struct LawReport {
  std::vector<LawResult> results;
  bool all_passed() const;
};

/// Throws precondition_error if `a` is not a non-empty square matrix.
LawReport run_law_checks(const Ring& ring, const Matrix& a, const LawCheckOptions& options = {});

}  // namespace ringmat
