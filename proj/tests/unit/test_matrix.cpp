#include <gtest/gtest.h>

#include "ringmat/error.hpp"
#include "ringmat/matrix.hpp"
#include "ringmat/sampling.hpp"
#include "test_support.hpp"

using namespace ringmat;
using ringmat::testing::all_rings;
using ringmat::testing::mat;
using ringmat::testing::num;
using ringmat::testing::vec;

namespace {

const Ring Z = Ring::integers();

}  // namespace

TEST(Matrix, ConstructionRejectsRaggedRows) {
  EXPECT_THROW(Matrix(std::vector<Vector>{vec(Z, {1, 2}), vec(Z, {3})}), precondition_error);
  const Matrix empty(std::vector<Vector>{}, 3);
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(empty.cols(), 3u);
}

TEST(Matrix, IsMatrix) {
  const std::vector<Vector> good{vec(Z, {1, 2}), vec(Z, {3, 4})};
  const std::vector<Vector> ragged{vec(Z, {1, 2}), vec(Z, {3})};
  EXPECT_TRUE(is_matrix(Z, good, 2, 2));
  EXPECT_FALSE(is_matrix(Z, good, 2, 3));
  EXPECT_FALSE(is_matrix(Z, ragged, 2, 2));
  EXPECT_TRUE(is_matrix(Z, std::vector<Vector>{}, 0, 5));
  // Entries must belong to the ring.
  EXPECT_FALSE(is_matrix(Ring::zmod(3), std::vector<Vector>{vec(Z, {7})}, 1, 1));
}

TEST(Matrix, Access) {
  const Matrix a = mat(Z, {{1, 2}, {3, 4}});
  EXPECT_EQ(entry(0, 1, a), num(Z, 2));
  EXPECT_EQ(col(0, a), vec(Z, {1, 3}));
  EXPECT_EQ(row(1, a), vec(Z, {3, 4}));
  EXPECT_THROW(entry(2, 0, a), precondition_error);
  EXPECT_THROW(col(2, a), precondition_error);
  EXPECT_THROW(row(5, a), precondition_error);
}

TEST(Matrix, ReplaceRowAndCol) {
  const Matrix a = mat(Z, {{1, 2}, {3, 4}});
  EXPECT_EQ(replace_row(a, 0, vec(Z, {9, 9})), mat(Z, {{9, 9}, {3, 4}}));
  EXPECT_EQ(a, mat(Z, {{1, 2}, {3, 4}}));
  EXPECT_EQ(replace_row(a, 1, row(1, a)), a);
  EXPECT_EQ(replace_col(a, 1, vec(Z, {7, 8})), mat(Z, {{1, 7}, {3, 8}}));
  EXPECT_THROW(replace_row(a, 2, vec(Z, {1, 1})), precondition_error);
  EXPECT_THROW(replace_row(a, 0, vec(Z, {1})), precondition_error);
  EXPECT_THROW(replace_col(a, 0, vec(Z, {1, 2, 3})), precondition_error);

  // Oracle: replace_col(a, k, r) = transpose(replace_row(transpose(a), k, r)).
  Rng rng(1);
  for (const auto& ring : all_rings()) {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix b = random_matrix(ring, 3, 4, rng);
      const Vector r = random_vector(ring, 3, rng);
      const std::size_t k = static_cast<std::size_t>(trial) % 4;
      EXPECT_EQ(replace_col(b, k, r), transpose(replace_row(transpose(b), k, r)));
    }
  }
}

TEST(Matrix, AddScaleSum) {
  const Matrix a = mat(Z, {{1, 2}, {3, 4}});
  EXPECT_EQ(mat_sum(Z, a), num(Z, 10));
  EXPECT_EQ(mat_add(Z, a, a), mat(Z, {{2, 4}, {6, 8}}));
  EXPECT_EQ(mat_scale(Z, num(Z, -1), a), mat(Z, {{-1, -2}, {-3, -4}}));
  EXPECT_THROW(mat_add(Z, a, mat(Z, {{1, 2}})), precondition_error);
  Rng rng(2);
  for (const auto& ring : all_rings()) {
    const Matrix b = random_matrix(ring, 3, 2, rng);
    EXPECT_EQ(mat_scale(ring, ring.one(), b), b);
    EXPECT_EQ(mat_sum(ring, transpose(b)), mat_sum(ring, b));
  }
}

TEST(Matrix, Transpose) {
  const Matrix a = mat(Z, {{1, 2}, {3, 4}});
  EXPECT_EQ(transpose(a), mat(Z, {{1, 3}, {2, 4}}));
  EXPECT_THROW(transpose(Matrix()), precondition_error);
  EXPECT_THROW(transpose(Matrix(std::vector<Vector>{}, 2)), precondition_error);
  Rng rng(3);
  for (const auto& ring : all_rings()) {
    const Matrix b = random_matrix(ring, 2, 4, rng);
    EXPECT_EQ(transpose(transpose(b)), b);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(entry(i, j, b), entry(j, i, transpose(b)));
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(col(j, transpose(b)), row(j, b));
  }
}

TEST(Matrix, Multiply) {
  EXPECT_EQ(multiply(Z, mat(Z, {{1, 2}, {3, 4}}), mat(Z, {{5, 6}, {7, 8}})), mat(Z, {{19, 22}, {43, 50}}));
  EXPECT_THROW(multiply(Z, mat(Z, {{1, 2}}), mat(Z, {{1, 2}})), precondition_error);
  EXPECT_THROW(multiply(Z, Matrix(std::vector<Vector>{}, 2), mat(Z, {{1}, {2}})), precondition_error);
  Rng rng(4);
  for (const auto& ring : all_rings()) {
    const Matrix a = random_matrix(ring, 2, 3, rng);
    const Matrix b = random_matrix(ring, 3, 4, rng);
    EXPECT_EQ(multiply(ring, identity(ring, 2), a), a);
    EXPECT_EQ(multiply(ring, a, identity(ring, 3)), a);
    EXPECT_EQ(transpose(multiply(ring, a, b)), multiply(ring, transpose(b), transpose(a)));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        EXPECT_EQ(entry(i, j, multiply(ring, a, b)), dot(ring, row(i, a), col(j, b)));
  }
}

TEST(Matrix, MultiplyIsAssociativeAndDistributive) {
  Rng rng(5);
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  for (const auto& ring : all_rings()) {
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t m = dim(rng), n = dim(rng), p = dim(rng), q = dim(rng);
      const Matrix a = random_matrix(ring, m, n, rng);
      const Matrix b = random_matrix(ring, n, p, rng);
      const Matrix b2 = random_matrix(ring, n, p, rng);
      const Matrix c = random_matrix(ring, p, q, rng);
      EXPECT_EQ(multiply(ring, a, multiply(ring, b, c)), multiply(ring, multiply(ring, a, b), c)) << ring.descriptor();
      EXPECT_EQ(multiply(ring, a, mat_add(ring, b, b2)), mat_add(ring, multiply(ring, a, b), multiply(ring, a, b2)));
      EXPECT_EQ(multiply(ring, mat_add(ring, b, b2), c), mat_add(ring, multiply(ring, b, c), multiply(ring, b2, c)));
    }
  }
}

TEST(Matrix, IdentityUnitDelta) {
  for (const auto& ring : all_rings()) {
    EXPECT_EQ(unit_vector(ring, 1, 3), (Vector{ring.zero(), ring.one(), ring.zero()}));
    for (std::size_t n = 1; n <= 5; ++n) {
      const Matrix id = identity(ring, n);
      EXPECT_EQ(transpose(id), id);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_EQ(row(i, id), unit_vector(ring, i, n));
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(entry(i, j, id), delta(ring, i, j));
      }
    }
    EXPECT_EQ(delta(ring, 2, 2), ring.one());
    EXPECT_EQ(delta(ring, 2, 3), ring.zero());
  }
  EXPECT_THROW(identity(Z, 0), precondition_error);
  EXPECT_THROW(unit_vector(Z, 3, 3), precondition_error);
}

TEST(Matrix, Minor) {
  const Matrix a = mat(Z, {{1, 2}, {3, 4}});
  EXPECT_EQ(minor(0, 0, a), mat(Z, {{4}}));
  EXPECT_EQ(minor(1, 0, a), mat(Z, {{2}}));
  EXPECT_THROW(minor(0, 0, mat(Z, {{1}})), precondition_error);
  EXPECT_THROW(minor(2, 0, a), precondition_error);
  EXPECT_THROW(minor(0, 0, mat(Z, {{1, 2, 3}, {4, 5, 6}})), precondition_error);
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(minor(j, j, identity(Z, n)), identity(Z, n - 1));
}

TEST(Matrix, MinorEntryFormula) {
  Rng rng(6);
  for (const auto& ring : all_rings()) {
    const Matrix a = random_matrix(ring, 4, 4, rng);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const Matrix m = minor(i, j, a);
        ASSERT_EQ(m.rows(), 3u);
        ASSERT_EQ(m.cols(), 3u);
        for (std::size_t r = 0; r < 3; ++r)
          for (std::size_t s = 0; s < 3; ++s)
            EXPECT_EQ(entry(r, s, m), entry(r < i ? r : r + 1, s < j ? s : s + 1, a));
      }
  }
}

TEST(Matrix, DeleteHelpersAgreeWithIndexSkipping) {
  Rng rng(8);
  const Matrix a = random_matrix(Z, 4, 3, rng);
  for (std::size_t j = 0; j < 3; ++j) {
    const Matrix d = delete_col(j, a);
    for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(row(r, d), delete_nth(j, std::span<const Element>(a.row_list()[r])));
  }
  const std::vector<int> l{5, 6, 7};
  EXPECT_EQ(delete_nth(1, std::span<const int>(l)), (std::vector<int>{5, 7}));
  EXPECT_EQ(delete_row(0, mat(Z, {{1, 2}})).rows(), 0u);
}

TEST(Matrix, MinorOfIdentityRows) {
  const std::size_t n = 5;
  const Matrix id = identity(Z, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix m = minor(i, j, id);
      for (std::size_t r = 0; r < n - 1; ++r) {
        const std::size_t k = r < i ? r : r + 1;  // original row
        const Vector expected = delete_nth(j, std::span<const Element>(unit_vector(Z, k, n)));
        EXPECT_EQ(row(r, m), expected);
        if (k != j) {
          // Deleting position j from a unit vector at k shifts the one left past j.
          EXPECT_EQ(expected, unit_vector(Z, k > j ? k - 1 : k, n - 1));
        }
      }
    }
}

TEST(Matrix, EntryDiff) {
  const Matrix a = mat(Z, {{1, 2}, {3, 4}});
  EXPECT_FALSE(entry_diff(a, a).has_value());
  EXPECT_EQ(entry_diff(a, mat(Z, {{1, 2}, {3, 5}})), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(entry_diff(mat(Z, {{0, 1}, {2, 3}}), mat(Z, {{0, 9}, {9, 3}})), (std::pair<std::size_t, std::size_t>{0, 1}));
  EXPECT_THROW(entry_diff(a, mat(Z, {{1}})), precondition_error);
}
