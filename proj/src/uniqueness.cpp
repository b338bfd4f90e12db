#include "ringmat/uniqueness.hpp"

#include <algorithm>
#include <string>

#include "ringmat/determinant.hpp"
#include "ringmat/error.hpp"

namespace ringmat {

bool is_tuple(std::span<const std::size_t> x, std::size_t k, std::size_t n) {
  return x.size() == k && std::all_of(x.begin(), x.end(), [n](std::size_t i) { return i < n; });
}

std::vector<Tuple> extend_tuples(std::span<const Tuple> tuples, std::size_t n) {
  std::vector<Tuple> extended;
  extended.reserve(tuples.size() * n);
  for (const auto& x : tuples) {
    for (std::size_t i = 0; i < n; ++i) {
      Tuple y = x;
      y.push_back(i);
      extended.push_back(std::move(y));
    }
  }
  return extended;
}

std::vector<Tuple> all_tuples(std::size_t k, std::size_t n, std::size_t cap) {
  if (k > n) throw precondition_error("all_tuples: tuple length " + std::to_string(k) + " exceeds " + std::to_string(n));
  if (n > cap) throw precondition_error("all_tuples: n = " + std::to_string(n) + " exceeds tuple cap " + std::to_string(cap));
  std::vector<Tuple> tuples{Tuple{}};
  for (std::size_t level = 0; level < k; ++level) tuples = extend_tuples(tuples, n);
  return tuples;
}

Vector extract_entries(std::span<const std::size_t> x, const Matrix& a) {
  Vector entries;
  entries.reserve(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) entries.push_back(entry(j, x[j], a));
  return entries;
}

std::vector<Vector> runits(const Ring& ring, std::span<const std::size_t> x, std::size_t n) {
  std::vector<Vector> rows;
  rows.reserve(x.size());
  for (std::size_t i : x) rows.push_back(unit_vector(ring, i, n));
  return rows;
}

Element eval_tuple(const Ring& ring, std::span<const std::size_t> x, std::size_t k, const Matrix& a, std::size_t n,
                   const DeterminantFunctional& f) {
  if (!is_tuple(x, k, n) || k > n) throw precondition_error("eval_tuple: not a " + std::to_string(k) + "-tuple below " + std::to_string(n));
  if (a.rows() != n || a.cols() != n) throw precondition_error("eval_tuple: matrix is not " + std::to_string(n) + "x" + std::to_string(n));
  std::vector<Vector> rows = runits(ring, x, n);
  for (std::size_t i = k; i < n; ++i) rows.push_back(a.row_list()[i]);
  return ring.mul(vec_prod(ring, extract_entries(x, a)), f.eval(Matrix(std::move(rows), n), n));
}

Element sum_tuples(const Ring& ring, std::span<const Tuple> tuples, std::size_t k, const Matrix& a, std::size_t n,
                   const DeterminantFunctional& f) {
  Element sum = ring.zero();
  for (const auto& x : tuples) sum = ring.add(sum, eval_tuple(ring, x, k, a, n, f));
  return sum;
}

bool UniquenessVerdict::constraints_hold() const {
  return std::all_of(constraints.begin(), constraints.end(), [](const ConstraintCheck& c) { return c.holds; });
}

namespace {

ConstraintCheck check_equal_rows(const Ring& ring, const DeterminantFunctional& f, const Matrix& a, std::size_t n,
                                 bool adjacent_only) {
  ConstraintCheck check{adjacent_only ? "adjacent-equal-rows" : "alternating", true, 0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (adjacent_only && j != i + 1) continue;
      const Matrix duplicated = replace_row(a, j, a.row_list()[i]);
      ++check.samples;
      if (!ring.eq(f.eval(duplicated, n), ring.zero())) check.holds = false;
    }
  }
  return check;
}

ConstraintCheck check_linearity(const Ring& ring, const DeterminantFunctional& f, const Matrix& a, std::size_t n,
                                std::size_t samples, Rng& rng) {
  ConstraintCheck check{"n-linear", true, 0};
  std::uniform_int_distribution<std::size_t> pick_row(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = pick_row(rng);
    const Element c = random_element(ring, rng);
    const Vector x = random_vector(ring, n, rng);
    const Vector y = random_vector(ring, n, rng);
    const Vector combined = vec_add(ring, vec_scale(ring, c, x), y);
    const Element lhs = f.eval(replace_row(a, i, combined), n);
    const Element rhs = ring.add(ring.mul(c, f.eval(replace_row(a, i, x), n)), f.eval(replace_row(a, i, y), n));
    ++check.samples;
    if (!ring.eq(lhs, rhs)) check.holds = false;
  }
  return check;
}

}  // namespace

UniquenessVerdict check_uniqueness(const Ring& ring, const DeterminantFunctional& f, const Matrix& a, std::size_t n,
                                   const UniquenessOptions& options) {
  if (n == 0 || a.rows() != n || a.cols() != n)
    throw precondition_error("check_uniqueness: expected a square matrix of order " + std::to_string(n));
  if (n > options.tuple_cap)
    throw precondition_error("check_uniqueness: n = " + std::to_string(n) + " exceeds tuple cap " +
                             std::to_string(options.tuple_cap));

  UniquenessVerdict verdict;
  verdict.f_of_a = f.eval(a, n);
  verdict.f_of_identity = f.eval(identity(ring, n), n);
  verdict.det_of_a = det(ring, a, n, std::max(n, kDefaultEnumerationCap));
  verdict.predicted = ring.mul(verdict.det_of_a, verdict.f_of_identity);

  verdict.levels_invariant = true;
  std::vector<Tuple> tuples{Tuple{}};
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) tuples = extend_tuples(tuples, n);
    Element sum = sum_tuples(ring, tuples, k, a, n, f);
    const bool matches = ring.eq(sum, verdict.f_of_a);
    verdict.levels_invariant = verdict.levels_invariant && matches;
    verdict.levels.push_back(LevelSum{k, std::move(sum), matches});
  }
  verdict.identity_holds = ring.eq(verdict.f_of_a, verdict.predicted);

  Rng rng(options.seed);
  verdict.constraints.push_back(check_equal_rows(ring, f, a, n, true));
  verdict.constraints.push_back(check_linearity(ring, f, a, n, options.linearity_samples, rng));
  if (options.check_alternating) verdict.constraints.push_back(check_equal_rows(ring, f, a, n, false));
  return verdict;
}

}  // namespace ringmat
