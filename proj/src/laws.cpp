#include "ringmat/laws.hpp"

#include <algorithm>

#include "ringmat/determinant.hpp"
#include "ringmat/error.hpp"
#include "ringmat/text_format.hpp"

namespace ringmat {

bool LawReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.passed; });
}

namespace {

class LawRunner {
 public:
  LawRunner(const Ring& ring, const Matrix& a, const LawCheckOptions& options)
      : ring_(ring), a_(a), n_(a.rows()), options_(options), rng_(options.seed) {
    if (options_.determinant) {
      det_ = options_.determinant;
    } else {
      const std::size_t cap = options_.cap;
      det_ = [cap](const Ring& r, const Matrix& m, std::size_t n) { return n <= cap ? det(r, m, n, cap) : det_rec(r, m, n); };
    }
    det_a_ = det_(ring_, a_, n_);
  }

  LawReport run() {
    transpose_law();
    alternating_law();
    zero_row_law();
    linearity_law();
    row_permutation_law();
    multiplicativity_law();
    adjoint_law();
    cross_algorithm_law();
    return std::move(report_);
  }

 private:
  Element d(const Matrix& m) const { return det_(ring_, m, n_); }
  std::string show(const Element& x) const { return format_element(ring_, x); }

  void record(std::string law, bool passed, std::string detail) {
    report_.results.push_back(LawResult{std::move(law), passed, std::move(detail)});
  }

  void transpose_law() {
    const Element t = d(transpose(a_));
    record("transpose", ring_.eq(t, det_a_), "det(a^T) = " + show(t) + ", det(a) = " + show(det_a_));
  }

  void alternating_law() {
    std::size_t failures = 0, trials = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        ++trials;
        if (!ring_.eq(d(replace_row(a_, j, a_.row_list()[i])), ring_.zero())) ++failures;
      }
    record("alternating", failures == 0, std::to_string(trials - failures) + "/" + std::to_string(trials) + " duplicated-row cases vanish");
  }

  void zero_row_law() {
    std::size_t failures = 0;
    const Vector z = zeros(ring_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      if (!ring_.eq(d(replace_row(a_, i, z)), ring_.zero())) ++failures;
    record("zero-row", failures == 0, std::to_string(n_ - failures) + "/" + std::to_string(n_) + " zero-row cases vanish");
  }

  void linearity_law() {
    std::size_t failures = 0;
    std::uniform_int_distribution<std::size_t> pick(0, n_ - 1);
    for (std::size_t s = 0; s < options_.samples; ++s) {
      const std::size_t i = pick(rng_);
      const Element c = random_element(ring_, rng_);
      const Vector x = random_vector(ring_, n_, rng_);
      const Vector y = random_vector(ring_, n_, rng_);
      const Element lhs = d(replace_row(a_, i, vec_add(ring_, vec_scale(ring_, c, x), y)));
      const Element rhs = ring_.add(ring_.mul(c, d(replace_row(a_, i, x))), d(replace_row(a_, i, y)));
      if (!ring_.eq(lhs, rhs)) ++failures;
    }
    record("n-linearity", failures == 0,
           std::to_string(options_.samples - failures) + "/" + std::to_string(options_.samples) + " sampled rows");
  }

  void row_permutation_law() {
    // Exhaustive for small orders, otherwise a sample of the group.
    std::vector<Permutation> perms;
    if (n_ <= 4) {
      perms = enumerate(n_);
    } else {
      std::vector<std::size_t> images = identity_perm(n_).images();
      for (std::size_t s = 0; s < options_.samples; ++s) {
        std::shuffle(images.begin(), images.end(), rng_);
        perms.emplace_back(images);
      }
    }
    std::size_t failures = 0;
    for (const auto& p : perms) {
      const Matrix permuted(ringmat::apply(a_.row_list(), p), n_);
      const Element expected = parity(p) == Parity::odd ? ring_.neg(det_a_) : det_a_;
      if (!ring_.eq(d(permuted), expected)) ++failures;
    }
    record("row-permutation-sign", failures == 0,
           std::to_string(perms.size() - failures) + "/" + std::to_string(perms.size()) + " permutations");
  }

  void multiplicativity_law() {
    std::size_t failures = 0;
    for (std::size_t s = 0; s < options_.samples; ++s) {
      const Matrix b = random_matrix(ring_, n_, n_, rng_);
      if (!ring_.eq(d(multiply(ring_, a_, b)), ring_.mul(det_a_, d(b)))) ++failures;
    }
    record("multiplicativity", failures == 0,
           std::to_string(options_.samples - failures) + "/" + std::to_string(options_.samples) + " sampled factors");
  }

  void adjoint_law() {
    if (n_ < 2 || n_ - 1 > options_.cap) {
      record("adjoint-identity", true, "skipped for order " + std::to_string(n_));
      return;
    }
    const Matrix lhs = multiply(ring_, a_, adjoint(ring_, a_, n_, options_.cap));
    const Matrix rhs = mat_scale(ring_, det_a_, identity(ring_, n_));
    const auto diff = entry_diff(lhs, rhs);
    record("adjoint-identity", !diff.has_value(),
           diff ? "a * adj(a) differs from det(a) I at (" + std::to_string(diff->first) + "," +
                      std::to_string(diff->second) + ")"
                : "a * adj(a) = det(a) I");
  }

  void cross_algorithm_law() {
    std::vector<std::pair<std::string, Element>> values;
    if (n_ <= options_.cap) values.emplace_back("leibniz", det(ring_, a_, n_, options_.cap));
    values.emplace_back("cofactor", det_rec(ring_, a_, n_));
    if (n_ >= 2 && n_ - 1 <= options_.cap) {
      for (std::size_t k = 0; k < n_; ++k) {
        values.emplace_back("expand-row " + std::to_string(k), expand_row(ring_, a_, k, n_, options_.cap));
        values.emplace_back("expand-col " + std::to_string(k), expand_col(ring_, a_, k, n_, options_.cap));
      }
    }
    std::string mismatches;
    for (const auto& [name, value] : values)
      if (!ring_.eq(value, det_a_)) mismatches += (mismatches.empty() ? "" : ", ") + name + " = " + show(value);
    record("cross-algorithm", mismatches.empty(),
           mismatches.empty() ? std::to_string(values.size()) + " algorithms agree on " + show(det_a_)
                              : "det = " + show(det_a_) + " but " + mismatches);
  }

  const Ring& ring_;
  const Matrix& a_;
  std::size_t n_;
  const LawCheckOptions& options_;
  Rng rng_;
  DeterminantFn det_;
  Element det_a_;
  LawReport report_;
};

}  // namespace

LawReport run_law_checks(const Ring& ring, const Matrix& a, const LawCheckOptions& options) {
  if (!a.is_square() || a.rows() == 0)
    throw precondition_error("check: needs a non-empty square matrix, got " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()));
  return LawRunner(ring, a, options).run();
}

}  // namespace ringmat
