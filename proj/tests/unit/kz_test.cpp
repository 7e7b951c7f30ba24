#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qtangle/kz.hpp"

namespace qtangle {
namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix identity(std::size_t n) { return ComplexMatrix::Identity(n, n); }

// Omega = P - I/2 with P^2 = I, so exp(i*theta*Omega) =
// exp(-i*theta/2) * (cos(theta) I + i sin(theta) P). Closed form, no ODE.
ComplexMatrix exact_half_turn(double h) {
  const double theta = kPi * h;
  const ComplexMatrix p = flip_matrix(2).to_complex();
  return std::exp(Complex(0, -theta / 2)) * (std::cos(theta) * identity(4) + Complex(0, std::sin(theta)) * p);
}

// Flip symmetric, not flat: sx(x)sx + sz(x)1 + 1(x)sz.
ComplexMatrix broken_omega() {
  Eigen::Matrix2cd sx, sz, one;
  sx << 0, 1, 1, 0;
  sz << 1, 0, 0, -1;
  one.setIdentity();
  auto kron = [](const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    ComplexMatrix k(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) k.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
    return k;
  };
  return kron(sx, sx) + kron(sz, one) + kron(one, sz);
}

TEST(Omega, DefaultEigenvalues) {
  const KZConfig c = KZConfig::standard(2, 0.1);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(c.omega);
  const auto ev = es.eigenvalues();
  EXPECT_NEAR(ev(0), -1.5, 1e-14);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(ev(k), 0.5, 1e-14);
}

TEST(Omega, SiteOperators) {
  const KZConfig c2 = KZConfig::standard(2, 0.1);
  EXPECT_EQ(omega_site(c2, 1, 2), c2.omega);
  const KZConfig c3 = KZConfig::standard(3, 0.1);
  // Omega_13 is Omega_12 conjugated by the swap of factors 2 and 3.
  ComplexMatrix swap23 = ComplexMatrix::Zero(8, 8);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) swap23(a * 4 + c * 2 + b, a * 4 + b * 2 + c) = 1;
  EXPECT_LT((swap23 * omega_site(c3, 1, 2) * swap23 - omega_site(c3, 1, 3)).norm(), 1e-15);
  // Flip symmetry of each site operator under its own factor swap.
  ComplexMatrix swap13 = ComplexMatrix::Zero(8, 8);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) swap13(c * 4 + b * 2 + a, a * 4 + b * 2 + c) = 1;
  EXPECT_LT((swap13 * omega_site(c3, 1, 3) * swap13 - omega_site(c3, 1, 3)).norm(), 1e-15);
  EXPECT_THROW(omega_site(c3, 2, 2), KZError);
  EXPECT_THROW(omega_site(c3, 0, 1), KZError);
  EXPECT_THROW(omega_site(c3, 2, 4), KZError);
}

TEST(Omega, ConfigValidation) {
  RationalMatrix asym(4, 4);
  asym(0, 1) = 1;
  EXPECT_THROW(KZConfig::rational(3, 0.1, asym), KZError);
  EXPECT_THROW(KZConfig::with_omega(3, 0.1, asym.to_complex()), KZError);
  EXPECT_NO_THROW(KZConfig::with_omega(3, 0.1, asym.to_complex(), 2, true));
  EXPECT_THROW(KZConfig::with_omega(3, 0.1, ComplexMatrix::Identity(3, 3)), KZError);
}

TEST(Flatness, DefaultIsExactlyFlat) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const FlatnessReport r = flatness_check(KZConfig::standard(n, 0.3));
    EXPECT_TRUE(r.exact);
    EXPECT_TRUE(r.pass()) << n;
  }
  EXPECT_EQ(flatness_check(KZConfig::standard(2, 0.3)).checked, 0u);
  // 4 triples x 3 rotations + 3 disjoint pairs.
  EXPECT_EQ(flatness_check(KZConfig::standard(4, 0.3)).checked, 15u);
}

TEST(Flatness, FailuresAreReported) {
  const FlatnessReport broken = flatness_check(KZConfig::with_omega(3, 0.1, broken_omega()));
  EXPECT_FALSE(broken.exact);
  EXPECT_FALSE(broken.pass());
  EXPECT_GT(broken.failures.front().norm, 0.1);

  ComplexMatrix random(4, 4);
  random << 1, 2, 0, -1, 0.5, 3, 1, 0, 0, 0, 2, 1, 1, 0, 0, -2;
  EXPECT_FALSE(flatness_check(KZConfig::with_omega(3, 0.1, random, 2, true)).pass());
}

TEST(BraidPath, Shape) {
  const ConfigPath empty = braid_path({}, 3);
  ASSERT_EQ(empty.segments.size(), 1u);
  EXPECT_EQ(empty.start(), empty.end());
  const ConfigPath one = braid_path({1}, 2);
  ASSERT_EQ(one.segments.size(), 1u);
  EXPECT_NEAR(std::abs(one.end()[0] - Complex(2, 0)), 0, 1e-12);
  EXPECT_NEAR(std::abs(one.end()[1] - Complex(1, 0)), 0, 1e-12);
  // Counterclockwise: the right point passes above the axis.
  EXPECT_GT(one.segments[0].points[1].position(0.5).imag(), 0.4);
  EXPECT_LT(braid_path({-1}, 2).segments[0].points[1].position(0.5).imag(), -0.4);
  EXPECT_THROW(braid_path({2}, 2), KZError);
  EXPECT_THROW(braid_path({1}, 2, 1.5), KZError);
  EXPECT_THROW(braid_path({1}, 2, 0.0), KZError);
}

TEST(Transport, TrivialCases) {
  const KZConfig zero = KZConfig::standard(3, 0.0);
  const TransportResult a = transport_word({1, 2, -1}, zero, 16);
  EXPECT_EQ(a.matrix, identity(8));
  EXPECT_EQ(a.error_estimate, 0.0);
  const TransportResult b = transport(braid_path({}, 3), KZConfig::standard(3, 0.4), 16);
  EXPECT_EQ(b.matrix, identity(8));
  EXPECT_THROW(transport_word({1}, KZConfig::standard(2, 0.1), 4), KZError);
}

TEST(Transport, HalfTurnMatchesClosedForm) {
  for (double h : {0.1, 0.25, -0.3}) {
    const TransportResult r = transport_word({1}, KZConfig::standard(2, h), 128);
    EXPECT_LT(operator_norm(r.matrix - exact_half_turn(h)), 1e-9) << h;
  }
}

TEST(Transport, FourthOrderConvergence) {
  const double h = 0.35;
  const ComplexMatrix exact = exact_half_turn(h);
  const KZConfig c = KZConfig::standard(2, h);
  const double e1 = operator_norm(transport_word({1}, c, 8).matrix - exact);
  const double e2 = operator_norm(transport_word({1}, c, 16).matrix - exact);
  const double ratio = e1 / e2;
  EXPECT_GE(ratio, 12.0);
  EXPECT_LE(ratio, 20.0);
  // The step-halving estimate tracks the true error.
  const TransportResult r = transport_word({1}, c, 8);
  EXPECT_NEAR(r.error_estimate, e1, 0.1 * e1);
}

TEST(Transport, InverseLettersCancel) {
  const TransportResult r = transport_word({1, -1}, KZConfig::standard(2, 0.1), 256);
  EXPECT_LT(operator_norm(r.matrix - identity(4)), 1e-6);
  EXPECT_LT(r.error_estimate, 1e-8);
}

TEST(Transport, ConcatenationIsProduct) {
  const KZConfig c = KZConfig::standard(3, 0.2);
  const ConfigPath p = braid_path({1, 2}, 3);
  ConfigPath first{3, {p.segments[0]}};
  ConfigPath second{3, {p.segments[1]}};
  const ComplexMatrix whole = transport(first.then(second), c, 128).matrix;
  const ComplexMatrix parts = transport(second, c, 128).matrix * transport(first, c, 128).matrix;
  EXPECT_LT(operator_norm(whole - parts), 1e-12);
}

TEST(Transport, ReversedPathInverts) {
  const KZConfig c = KZConfig::standard(3, 0.2);
  const ConfigPath p = braid_path({1, -2, 1}, 3);
  double previous = 1.0;
  for (std::size_t steps : {16u, 32u, 64u}) {
    const ComplexMatrix x = transport(p, c, steps).matrix;
    const ComplexMatrix y = transport(p.reversed(), c, steps).matrix;
    const double residual = operator_norm(y * x - identity(8));
    EXPECT_LT(residual, previous);
    previous = residual;
  }
  EXPECT_LT(previous, 1e-6);
}

TEST(Transport, ClearanceViolation) {
  ConfigPath p = braid_path({1}, 2);
  p.segments[0].clearance = 1.0;
  p.segments[0].points[0].radius = 0.3;  // points now come within 0.8
  EXPECT_THROW(transport(p, KZConfig::standard(2, 0.1), 16), KZError);
}

TEST(BraidRelation, DefaultOmega) {
  const BraidRelationReport r = braid_relation_check(KZConfig::standard(3, 0.2), 1e-6, 512);
  EXPECT_TRUE(r.pass) << r.difference;
  const BraidRelationReport zero = braid_relation_check(KZConfig::standard(3, 0.0), 1e-6, 16);
  EXPECT_EQ(zero.difference, 0.0);
  EXPECT_THROW(braid_relation_check(KZConfig::standard(2, 0.1), 1e-6), KZError);
}

TEST(BraidRelation, NonFlatOmegaDoesNotConverge) {
  const KZConfig c = KZConfig::with_omega(3, 0.2, broken_omega());
  const double coarse = braid_relation_check(c, 1e-6, 64).difference;
  const double fine = braid_relation_check(c, 1e-6, 256).difference;
  EXPECT_GT(fine, 1e-3);
  EXPECT_NEAR(fine, coarse, 0.01 * coarse);
}

}  // namespace
}  // namespace qtangle
