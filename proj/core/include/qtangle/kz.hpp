#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

namespace qtangle {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using Rational = boost::multiprecision::cpp_rational;

class KZError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact rationals. Only what the flatness
/// identities need.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  ComplexMatrix to_complex() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// The default two-site operator P - I/2 on C^2 (x) C^2. It equals
/// e(x)f + f(x)e + h(x)h/2; eigenvalues 1/2 on the triplet, -3/2 on the
/// singlet.
RationalMatrix default_omega();

/// The flip P on V (x) V.
RationalMatrix flip_matrix(std::size_t rep_dim);

struct KZConfig {
  std::size_t n_strands = 2;
  double coupling = 0.0;  // h
  std::size_t rep_dim = 2;
  ComplexMatrix omega;                        // rep_dim^2 x rep_dim^2
  std::optional<RationalMatrix> omega_exact;  // set when omega is rational

  /// Default Omega, exact.
  static KZConfig standard(std::size_t n, double h);
  /// Rational Omega; throws KZError unless P * omega * P == omega.
  static KZConfig rational(std::size_t n, double h, RationalMatrix omega, std::size_t rep_dim = 2);
  /// Complex Omega. The flip symmetry is checked to 1e-12 unless
  /// `allow_asymmetric` is set, which exists for negative controls.
  static KZConfig with_omega(std::size_t n, double h, ComplexMatrix omega, std::size_t rep_dim = 2,
                             bool allow_asymmetric = false);
};

/// Omega on tensor factors i, j (1-based, i < j) of V^(x)n, identity on the
/// rest. Size rep_dim^n.
ComplexMatrix omega_site(const KZConfig& config, std::size_t i, std::size_t j);
RationalMatrix omega_site_exact(const KZConfig& config, std::size_t i, std::size_t j);

struct FlatnessFailure {
  std::string identity;  // e.g. "[O12, O13 + O23]"
  double norm = 0.0;     // Frobenius norm of the commutator
};

struct FlatnessReport {
  bool exact = false;  // rational arithmetic was used
  std::size_t checked = 0;
  std::vector<FlatnessFailure> failures;
  bool pass() const { return failures.empty(); }
};

/// [O_ij, O_ik + O_jk] = 0 for all i < j < k and [O_ij, O_kl] = 0 for
/// disjoint pairs. Exact when omega_exact is set, else to 1e-12.
FlatnessReport flatness_check(const KZConfig& config);

/// Motion of one point over a segment parameter t in [0, 1].
struct PointMotion {
  enum class Kind { Fixed, Line, Arc };
  Kind kind = Kind::Fixed;
  Complex from;            // Fixed and Line start
  Complex to;              // Line end
  Complex center;          // Arc
  double radius = 0.0;     // Arc
  double start_angle = 0;  // Arc
  double sweep = 0;        // Arc, signed; positive is counterclockwise

  Complex position(double t) const;
  Complex velocity(double t) const;
  PointMotion reversed() const;
};

struct PathSegment {
  std::vector<PointMotion> points;  // one per particle
  double clearance = 0.0;           // declared lower bound on |z_i - z_j|
};

struct ConfigPath {
  std::size_t n = 0;
  std::vector<PathSegment> segments;

  std::vector<Complex> start() const;
  std::vector<Complex> end() const;
  /// Same curve traversed backwards.
  ConfigPath reversed() const;
  /// This path followed by `next`; endpoints must agree.
  ConfigPath then(const ConfigPath& next) const;
};

/// Base points 1..n on the real axis. Letter +i swaps the points in slots i
/// and i+1 by a counterclockwise half turn about their midpoint, -i
/// clockwise. The analytic clearance of such a half turn is 1;
/// `radius_clearance` is the bound declared on each segment and must lie in
/// (0, 1]. The empty word gives one constant segment.
ConfigPath braid_path(const std::vector<int>& word, std::size_t n, double radius_clearance = 0.5);

struct TransportResult {
  ComplexMatrix matrix;         // X(1) at the requested step count
  double error_estimate = 0.0;  // ||X_steps - X_2steps||, operator norm
  std::size_t steps = 0;        // per segment
};

/// Integrates X' = h * sum_{i<j} O_ij (z_i' - z_j') / (z_i - z_j) * X with
/// classical RK4, fixed steps per segment, X(0) = I. Throws KZError when
/// steps < 8, a sampled separation falls below the declared clearance or a
/// value is not finite.
TransportResult transport(const ConfigPath& path, const KZConfig& config, std::size_t steps_per_segment);

/// Convenience: transport along braid_path(word, config.n_strands).
TransportResult transport_word(const std::vector<int>& word, const KZConfig& config, std::size_t steps_per_segment);

double operator_norm(const ComplexMatrix& m);

struct BraidRelationReport {
  double difference = 0.0;  // ||X(s1 s2 s1) - X(s2 s1 s2)||
  double tolerance = 0.0;
  double error_estimate = 0.0;  // larger of the two sides
  bool pass = false;
};

/// Compares transport along s1 s2 s1 and s2 s1 s2 (needs n >= 3). Both sides
/// run concurrently.
BraidRelationReport braid_relation_check(const KZConfig& config, double tol, std::size_t steps_per_segment = 512);

}  // namespace qtangle
