#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qtangle/ring_matrix.hpp"

namespace qtangle {
namespace {

RingMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
  std::vector<LaurentPoly> e;
  for (std::size_t k = 0; k < r * c; ++k) e.push_back(testing::random_poly(rng, "A", 3, 3));
  return RingMatrix::from_entries(r, c, std::move(e));
}

TEST(RingMatrix, IdentityIsNeutral) {
  Rng rng(1);
  const RingMatrix m = random_matrix(rng, 3, 2);
  EXPECT_EQ(RingMatrix::identity(3, "A") * m, m);
  EXPECT_EQ(m * RingMatrix::identity(2, "A"), m);
  EXPECT_TRUE(RingMatrix::identity(4, "A").is_identity());
}

TEST(RingMatrix, ShapeAndVariableErrors) {
  EXPECT_THROW(RingMatrix(2, 3, "A") * RingMatrix(2, 3, "A"), RingError);
  EXPECT_THROW(RingMatrix(2, 2, "A") * RingMatrix(2, 2, "q"), RingError);
  EXPECT_THROW(RingMatrix::from_entries(2, 2, {LaurentPoly("A")}), RingError);
}

TEST(RingMatrix, KroneckerIndexing) {
  const RingMatrix a = RingMatrix::from_integers(2, 2, {1, 2, 3, 4}, "A");
  const RingMatrix b = RingMatrix::from_integers(2, 2, {0, 5, 6, 7}, "A");
  const RingMatrix k = mat_tensor(a, b);
  // Entry ((i1, i2), (j1, j2)) = a(i1, j1) * b(i2, j2) with index i1 * 2 + i2.
  EXPECT_EQ(k(1, 3), LaurentPoly::constant(2 * 7, "A"));
  EXPECT_EQ(k(2, 1), LaurentPoly::constant(3 * 5, "A"));
  EXPECT_EQ(k(3, 2), LaurentPoly::constant(4 * 6, "A"));
}

TEST(RingMatrix, MixedProductProperty) {
  Rng rng(5);
  for (int k = 0; k < 40; ++k) {
    const RingMatrix a = random_matrix(rng, 2, 3);
    const RingMatrix b = random_matrix(rng, 2, 2);
    const RingMatrix c = random_matrix(rng, 3, 1);
    const RingMatrix d = random_matrix(rng, 2, 3);
    EXPECT_EQ(mat_tensor(a, b) * mat_tensor(c, d), mat_tensor(a * c, b * d));
  }
}

TEST(RingMatrix, ProductAssociatesAndDistributes) {
  Rng rng(6);
  for (int k = 0; k < 30; ++k) {
    const RingMatrix a = random_matrix(rng, 2, 3);
    const RingMatrix b = random_matrix(rng, 3, 2);
    const RingMatrix c = random_matrix(rng, 2, 2);
    const RingMatrix b2 = random_matrix(rng, 3, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + b2), a * b + a * b2);
  }
}

TEST(RingMatrix, FirstDifference) {
  RingMatrix a = RingMatrix::identity(3, "A");
  RingMatrix b = a;
  EXPECT_TRUE(first_difference(a, b).equal);
  b.set(2, 1, testing::A(1, 1));
  const EntryDiff d = first_difference(a, b);
  EXPECT_FALSE(d.equal);
  EXPECT_EQ(d.row, 2u);
  EXPECT_EQ(d.col, 1u);
}

TEST(RingMatrix, TextForm) {
  const RingMatrix m = RingMatrix::from_entries(1, 2, {testing::A(1, 1), testing::A(-1, -1)});
  EXPECT_EQ(m.to_string(), "[A^1, -A^-1]\n");
}

}  // namespace
}  // namespace qtangle
