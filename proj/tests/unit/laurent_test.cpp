#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "qtangle/laurent.hpp"

namespace qtangle {
namespace {

using testing::A;
using testing::poly;

TEST(Laurent, ZeroAndConstants) {
  LaurentPoly z("A");
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.to_string(), "0");
  EXPECT_TRUE(LaurentPoly::constant(1, "A").is_one());
  EXPECT_TRUE(A(-1, 7).is_unit());
  EXPECT_FALSE(A(2, 7).is_unit());
  EXPECT_EQ(LaurentPoly::constant(0, "A"), z);
}

TEST(Laurent, CanonicalText) {
  EXPECT_EQ((A(-1, -2) + A(-1, 2)).to_string(), "-A^-2 - A^2");
  EXPECT_EQ((A(3, 1) + A(1, 0) - A(2, -5)).to_string(), "-2*A^-5 + 1 + 3*A^1");
  EXPECT_EQ(A(1, 1).to_string(), "A^1");
  EXPECT_EQ(LaurentPoly::constant(-4, "q").to_string(), "-4");
}

TEST(Laurent, ParseRoundTrip) {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly p = testing::random_poly(rng);
    EXPECT_EQ(LaurentPoly::parse(p.to_string(), "A"), p) << p.to_string();
  }
  EXPECT_EQ(poly("A"), A(1, 1));
  EXPECT_EQ(poly(" 2 * A ^ -3 - A + 5 "), A(2, -3) - A(1, 1) + A(5, 0));
  EXPECT_EQ(LaurentPoly::parse_any("q^2 - 1", "A").variable(), "q");
  EXPECT_EQ(LaurentPoly::parse_any("7", "A").variable(), "A");
}

TEST(Laurent, ParseErrors) {
  EXPECT_THROW(poly(""), RingError);
  EXPECT_THROW(poly("A^"), RingError);
  EXPECT_THROW(poly("2*"), RingError);
  EXPECT_THROW(poly("A + + A"), RingError);
  EXPECT_THROW(LaurentPoly::parse("q^2", "A"), RingError);
}

TEST(Laurent, VariableMismatchThrows) {
  const LaurentPoly a = A(1, 1);
  const LaurentPoly q = LaurentPoly::monomial(1, 1, "q");
  EXPECT_THROW(a + q, RingError);
  EXPECT_THROW(a * q, RingError);
  EXPECT_NE(LaurentPoly::constant(1, "A"), LaurentPoly::constant(1, "q"));
}

TEST(Laurent, CommutativeRingAxioms) {
  Rng rng(2024);
  const LaurentPoly zero("A");
  const LaurentPoly one = LaurentPoly::constant(1, "A");
  for (int k = 0; k < 300; ++k) {
    const LaurentPoly a = testing::random_poly(rng);
    const LaurentPoly b = testing::random_poly(rng);
    const LaurentPoly c = testing::random_poly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ(a - a, zero);
    EXPECT_EQ(a + (-a), zero);
  }
}

TEST(Laurent, BigCoefficients) {
  LaurentPoly p = A(1, 1) + A(1, -1);
  const LaurentPoly p40 = p.pow(40);
  // Central coefficient of (A + A^-1)^40 is C(40, 20).
  EXPECT_EQ(p40.coefficient(0), Integer("137846528820"));
  EXPECT_EQ(exact_divide(p40, p.pow(39)), p);
}

TEST(Laurent, PowersOfUnits) {
  EXPECT_EQ(A(-1, 3).pow(-2), A(1, -6));
  EXPECT_EQ(A(1, 1).pow(0), LaurentPoly::constant(1, "A"));
  EXPECT_THROW((A(1, 1) + A(1, 0)).pow(-1), RingError);
}

TEST(Laurent, SubstitutionIsHomomorphism) {
  Rng rng(7);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly a = testing::random_poly(rng);
    const LaurentPoly b = testing::random_poly(rng);
    for (int f : {-4, -1, 2, 3}) {
      for (bool neg : {false, true}) {
        auto sub = [&](const LaurentPoly& p) { return lp_subst_monomial(p, "t", f, neg); };
        EXPECT_EQ(sub(a + b), sub(a) + sub(b));
        EXPECT_EQ(sub(a * b), sub(a) * sub(b));
      }
    }
  }
  EXPECT_EQ(lp_subst_monomial(A(1, 1), "t", 2, true), LaurentPoly::monomial(-1, 2, "t"));
  EXPECT_THROW(lp_subst_monomial(A(1, 1), "t", 0), RingError);
}

TEST(Laurent, InvertVariable) {
  EXPECT_EQ(invert_variable(A(2, 3) + A(1, -1)), A(2, -3) + A(1, 1));
}

TEST(Laurent, DivideExponents) {
  EXPECT_EQ(divide_exponents(A(1, -4) + A(1, 8), -4), LaurentPoly::from_terms("A", {{1, 1}, {-2, 1}}));
  EXPECT_FALSE(divide_exponents(A(1, 2), 4).has_value());
}

TEST(Laurent, ExactDivision) {
  Rng rng(99);
  for (int k = 0; k < 200; ++k) {
    const LaurentPoly a = testing::random_poly(rng);
    const LaurentPoly b = testing::random_poly(rng);
    if (b.is_zero()) continue;
    EXPECT_EQ(exact_divide(a * b, b), a);
  }
  EXPECT_THROW(exact_divide(A(1, 0), LaurentPoly("A")), RingError);
  EXPECT_THROW(exact_divide(A(1, 0), A(2, 0)), RingError);
  EXPECT_FALSE(try_exact_divide(A(1, 2) + A(1, 0), A(1, 1) + A(1, 0)).has_value());
}

TEST(Laurent, HashAgreesWithEquality) {
  const LaurentPoly a = poly("A^-2 + 3");
  const LaurentPoly b = poly("3 + A^-2");
  EXPECT_EQ(std::hash<LaurentPoly>{}(a), std::hash<LaurentPoly>{}(b));
}

}  // namespace
}  // namespace qtangle
