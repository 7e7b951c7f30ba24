#include "qtangle/kz.hpp"

#include <cmath>
#include <future>
#include <numbers>

#include "qtangle/conventions.hpp"

namespace qtangle {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

ComplexMatrix RationalMatrix::to_complex() const {
  ComplexMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = Complex(static_cast<double>((*this)(r, c)), 0.0);
  }
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw KZError("rational matrix product: shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw KZError("rational matrix sum: shape mismatch");
  RationalMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw KZError("rational matrix difference: shape mismatch");
  RationalMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

RationalMatrix flip_matrix(std::size_t rep_dim) {
  RationalMatrix p(rep_dim * rep_dim, rep_dim * rep_dim);
  for (std::size_t a = 0; a < rep_dim; ++a) {
    for (std::size_t b = 0; b < rep_dim; ++b) {
      p(conventions::kron_index(b, a, rep_dim), conventions::kron_index(a, b, rep_dim)) = 1;
    }
  }
  return p;
}

RationalMatrix default_omega() {
  RationalMatrix m = flip_matrix(2);
  for (std::size_t i = 0; i < 4; ++i) m(i, i) -= Rational(1, 2);
  return m;
}

namespace {

void check_shape(std::size_t rows, std::size_t cols, std::size_t rep_dim) {
  if (rep_dim == 0) throw KZError("rep_dim must be positive");
  if (rows != rep_dim * rep_dim || cols != rep_dim * rep_dim) {
    throw KZError("omega must be rep_dim^2 x rep_dim^2 (" + std::to_string(rep_dim * rep_dim) + ")");
  }
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < e; ++k) r *= b;
  return r;
}

// Places a two-site operator on factors i, j (0-based, i < j) of d^n.
// `get(r, c)` reads the local operator, `put(R, C, value)` writes the result.
template <class Get, class Put>
void place_two_site(std::size_t d, std::size_t n, std::size_t i, std::size_t j, Get get, Put put) {
  const std::size_t dim = ipow(d, n);
  const std::size_t wi = ipow(d, n - 1 - i);  // weight of factor i in the index
  const std::size_t wj = ipow(d, n - 1 - j);
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t a = (col / wi) % d;
    const std::size_t b = (col / wj) % d;
    const std::size_t rest = col - a * wi - b * wj;
    for (std::size_t a2 = 0; a2 < d; ++a2) {
      for (std::size_t b2 = 0; b2 < d; ++b2) {
        put(rest + a2 * wi + b2 * wj, col, get(conventions::kron_index(a2, b2, d), conventions::kron_index(a, b, d)));
      }
    }
  }
}

void check_sites(const KZConfig& config, std::size_t i, std::size_t j) {
  if (i < 1 || j <= i || j > config.n_strands) {
    throw KZError("omega_site: need 1 <= i < j <= n, got (" + std::to_string(i) + "," + std::to_string(j) +
                  ") with n = " + std::to_string(config.n_strands));
  }
}

}  // namespace

KZConfig KZConfig::standard(std::size_t n, double h) { return rational(n, h, default_omega(), 2); }

KZConfig KZConfig::rational(std::size_t n, double h, RationalMatrix omega, std::size_t rep_dim) {
  check_shape(omega.rows(), omega.cols(), rep_dim);
  const RationalMatrix p = flip_matrix(rep_dim);
  if (!(p * omega * p == omega)) throw KZError("omega is not symmetric under the flip P");
  if (n == 0) throw KZError("n_strands must be positive");
  KZConfig c;
  c.n_strands = n;
  c.coupling = h;
  c.rep_dim = rep_dim;
  c.omega = omega.to_complex();
  c.omega_exact = std::move(omega);
  return c;
}

KZConfig KZConfig::with_omega(std::size_t n, double h, ComplexMatrix omega, std::size_t rep_dim,
                              bool allow_asymmetric) {
  check_shape(static_cast<std::size_t>(omega.rows()), static_cast<std::size_t>(omega.cols()), rep_dim);
  if (n == 0) throw KZError("n_strands must be positive");
  if (!omega.allFinite()) throw KZError("omega has non-finite entries");
  if (!allow_asymmetric) {
    const ComplexMatrix p = flip_matrix(rep_dim).to_complex();
    if ((p * omega * p - omega).norm() > 1e-12) throw KZError("omega is not symmetric under the flip P");
  }
  KZConfig c;
  c.n_strands = n;
  c.coupling = h;
  c.rep_dim = rep_dim;
  c.omega = std::move(omega);
  return c;
}

ComplexMatrix omega_site(const KZConfig& config, std::size_t i, std::size_t j) {
  check_sites(config, i, j);
  const std::size_t dim = ipow(config.rep_dim, config.n_strands);
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  place_two_site(
      config.rep_dim, config.n_strands, i - 1, j - 1, [&](std::size_t r, std::size_t c) { return config.omega(r, c); },
      [&](std::size_t r, std::size_t c, Complex v) { out(r, c) = v; });
  return out;
}

RationalMatrix omega_site_exact(const KZConfig& config, std::size_t i, std::size_t j) {
  check_sites(config, i, j);
  if (!config.omega_exact) throw KZError("omega_site_exact: configuration has no rational omega");
  const std::size_t dim = ipow(config.rep_dim, config.n_strands);
  RationalMatrix out(dim, dim);
  const RationalMatrix& om = *config.omega_exact;
  place_two_site(
      config.rep_dim, config.n_strands, i - 1, j - 1, [&](std::size_t r, std::size_t c) { return om(r, c); },
      [&](std::size_t r, std::size_t c, const Rational& v) { out(r, c) = v; });
  return out;
}

namespace {

std::string site_name(std::size_t i, std::size_t j) { return "O" + std::to_string(i) + std::to_string(j); }

// Each identity as (label, X, Y) meaning [X, Y] must vanish. Sites are
// (i, j) pairs; Y may be a sum of two sites.
struct Identity {
  std::string label;
  std::pair<std::size_t, std::size_t> x;
  std::vector<std::pair<std::size_t, std::size_t>> y;
};

std::vector<Identity> flatness_identities(std::size_t n) {
  std::vector<Identity> out;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (std::size_t k = j + 1; k <= n; ++k) {
        out.push_back({"[" + site_name(i, j) + ", " + site_name(i, k) + " + " + site_name(j, k) + "]",
                       {i, j},
                       {{i, k}, {j, k}}});
        out.push_back({"[" + site_name(i, k) + ", " + site_name(i, j) + " + " + site_name(j, k) + "]",
                       {i, k},
                       {{i, j}, {j, k}}});
        out.push_back({"[" + site_name(j, k) + ", " + site_name(i, j) + " + " + site_name(i, k) + "]",
                       {j, k},
                       {{i, j}, {i, k}}});
      }
    }
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t l = k + 1; l <= n; ++l) {
          const bool disjoint = k != i && k != j && l != i && l != j;
          if (!disjoint || std::make_pair(k, l) < std::make_pair(i, j)) continue;
          out.push_back({"[" + site_name(i, j) + ", " + site_name(k, l) + "]", {i, j}, {{k, l}}});
        }
      }
    }
  }
  return out;
}

}  // namespace

FlatnessReport flatness_check(const KZConfig& config) {
  FlatnessReport report;
  report.exact = config.omega_exact.has_value();
  for (const auto& id : flatness_identities(config.n_strands)) {
    ++report.checked;
    if (report.exact) {
      const RationalMatrix x = omega_site_exact(config, id.x.first, id.x.second);
      RationalMatrix y = omega_site_exact(config, id.y[0].first, id.y[0].second);
      for (std::size_t k = 1; k < id.y.size(); ++k) y = y + omega_site_exact(config, id.y[k].first, id.y[k].second);
      const RationalMatrix comm = x * y - y * x;
      if (!comm.is_zero()) report.failures.push_back({id.label, comm.to_complex().norm()});
    } else {
      const ComplexMatrix x = omega_site(config, id.x.first, id.x.second);
      ComplexMatrix y = omega_site(config, id.y[0].first, id.y[0].second);
      for (std::size_t k = 1; k < id.y.size(); ++k) y += omega_site(config, id.y[k].first, id.y[k].second);
      const double norm = (x * y - y * x).norm();
      if (norm > 1e-12) report.failures.push_back({id.label, norm});
    }
  }
  return report;
}

Complex PointMotion::position(double t) const {
  switch (kind) {
    case Kind::Fixed:
      return from;
    case Kind::Line:
      return from + (to - from) * t;
    case Kind::Arc:
      return center + std::polar(radius, start_angle + sweep * t);
  }
  return from;
}

Complex PointMotion::velocity(double t) const {
  switch (kind) {
    case Kind::Fixed:
      return {0.0, 0.0};
    case Kind::Line:
      return to - from;
    case Kind::Arc:
      return Complex(0.0, sweep) * std::polar(radius, start_angle + sweep * t);
  }
  return {0.0, 0.0};
}

PointMotion PointMotion::reversed() const {
  PointMotion r = *this;
  switch (kind) {
    case Kind::Fixed:
      break;
    case Kind::Line:
      std::swap(r.from, r.to);
      break;
    case Kind::Arc:
      r.start_angle = start_angle + sweep;
      r.sweep = -sweep;
      break;
  }
  return r;
}

std::vector<Complex> ConfigPath::start() const {
  std::vector<Complex> z;
  if (segments.empty()) return z;
  for (const auto& p : segments.front().points) z.push_back(p.position(0.0));
  return z;
}

std::vector<Complex> ConfigPath::end() const {
  std::vector<Complex> z;
  if (segments.empty()) return z;
  for (const auto& p : segments.back().points) z.push_back(p.position(1.0));
  return z;
}

ConfigPath ConfigPath::reversed() const {
  ConfigPath r{n, {}};
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    PathSegment s{{}, it->clearance};
    for (const auto& p : it->points) s.points.push_back(p.reversed());
    r.segments.push_back(std::move(s));
  }
  return r;
}

ConfigPath ConfigPath::then(const ConfigPath& next) const {
  if (next.n != n) throw KZError("path concatenation: particle counts differ");
  const auto a = end();
  const auto b = next.start();
  for (std::size_t k = 0; k < a.size() && k < b.size(); ++k) {
    if (std::abs(a[k] - b[k]) > 1e-9) throw KZError("path concatenation: endpoints do not match");
  }
  ConfigPath r = *this;
  r.segments.insert(r.segments.end(), next.segments.begin(), next.segments.end());
  return r;
}

ConfigPath braid_path(const std::vector<int>& word, std::size_t n, double radius_clearance) {
  if (n == 0) throw KZError("braid_path: n must be positive");
  if (!(radius_clearance > 0.0) || radius_clearance > 1.0) {
    throw KZError("braid_path: clearance must lie in (0, 1]; half turns of adjacent points keep distance 1");
  }
  // particle_at[k] is the particle currently sitting in slot k (0-based).
  std::vector<std::size_t> particle_at(n);
  for (std::size_t k = 0; k < n; ++k) particle_at[k] = k;
  auto fixed_at = [](std::size_t slot) {
    PointMotion m;
    m.from = Complex(static_cast<double>(slot + 1), 0.0);
    return m;
  };

  ConfigPath path{n, {}};
  if (word.empty()) {
    PathSegment s{{}, radius_clearance};
    for (std::size_t k = 0; k < n; ++k) s.points.push_back(fixed_at(k));
    path.segments.push_back(std::move(s));
    return path;
  }
  for (int letter : word) {
    const std::size_t mag = static_cast<std::size_t>(letter < 0 ? -letter : letter);
    if (letter == 0 || mag >= n) {
      throw KZError("braid_path: letter " + std::to_string(letter) + " out of range for n = " + std::to_string(n));
    }
    const std::size_t left = mag - 1;
    const double sweep = letter > 0 ? std::numbers::pi : -std::numbers::pi;
    const Complex center(static_cast<double>(left) + 1.5, 0.0);
    std::vector<PointMotion> by_slot(n);
    for (std::size_t k = 0; k < n; ++k) by_slot[k] = fixed_at(k);
    for (std::size_t k : {left, left + 1}) {
      PointMotion& m = by_slot[k];
      m.kind = PointMotion::Kind::Arc;
      m.center = center;
      m.radius = 0.5;
      m.start_angle = k == left ? std::numbers::pi : 0.0;
      m.sweep = sweep;
    }
    PathSegment s{std::vector<PointMotion>(n), radius_clearance};
    for (std::size_t k = 0; k < n; ++k) s.points[particle_at[k]] = by_slot[k];
    std::swap(particle_at[left], particle_at[left + 1]);
    path.segments.push_back(std::move(s));
  }
  return path;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

namespace {

struct Connection {
  double h;
  std::vector<std::pair<std::size_t, std::size_t>> sites;  // 0-based
  std::vector<ComplexMatrix> omegas;
  std::size_t dim;
};

Connection make_connection(const KZConfig& config) {
  Connection c{config.coupling, {}, {}, ipow(config.rep_dim, config.n_strands)};
  for (std::size_t i = 1; i <= config.n_strands; ++i) {
    for (std::size_t j = i + 1; j <= config.n_strands; ++j) {
      c.sites.emplace_back(i - 1, j - 1);
      c.omegas.push_back(omega_site(config, i, j));
    }
  }
  return c;
}

ComplexMatrix connection_at(const Connection& conn, const PathSegment& seg, double t) {
  ComplexMatrix a = ComplexMatrix::Zero(conn.dim, conn.dim);
  for (std::size_t s = 0; s < conn.sites.size(); ++s) {
    const auto& pi = seg.points[conn.sites[s].first];
    const auto& pj = seg.points[conn.sites[s].second];
    const Complex dz = pi.position(t) - pj.position(t);
    const double sep = std::abs(dz);
    if (!(sep >= seg.clearance * (1.0 - 1e-12))) {
      throw KZError("clearance violated: particles " + std::to_string(conn.sites[s].first + 1) + " and " +
                    std::to_string(conn.sites[s].second + 1) + " are " + std::to_string(sep) + " apart at t = " +
                    std::to_string(t));
    }
    const Complex dv = pi.velocity(t) - pj.velocity(t);
    if (dv == Complex(0.0, 0.0)) continue;
    a += (conn.h * dv / dz) * conn.omegas[s];
  }
  return a;
}

ComplexMatrix integrate(const ConfigPath& path, const Connection& conn, std::size_t steps) {
  ComplexMatrix x = ComplexMatrix::Identity(conn.dim, conn.dim);
  const double dt = 1.0 / static_cast<double>(steps);
  for (const auto& seg : path.segments) {
    if (seg.points.size() != path.n) throw KZError("path segment has the wrong number of particles");
    if (!(seg.clearance > 0.0)) throw KZError("path segment declares no positive clearance");
    for (std::size_t s = 0; s < steps; ++s) {
      const double t = static_cast<double>(s) * dt;
      const ComplexMatrix a0 = connection_at(conn, seg, t);
      const ComplexMatrix ah = connection_at(conn, seg, t + 0.5 * dt);
      const ComplexMatrix a1 = connection_at(conn, seg, t + dt);
      const ComplexMatrix k1 = a0 * x;
      const ComplexMatrix k2 = ah * (x + (0.5 * dt) * k1);
      const ComplexMatrix k3 = ah * (x + (0.5 * dt) * k2);
      const ComplexMatrix k4 = a1 * (x + dt * k3);
      x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    if (!x.allFinite()) throw KZError("transport produced non-finite values");
  }
  return x;
}

}  // namespace

TransportResult transport(const ConfigPath& path, const KZConfig& config, std::size_t steps_per_segment) {
  if (steps_per_segment < 8) throw KZError("transport: steps_per_segment must be at least 8");
  if (path.n != config.n_strands) throw KZError("transport: path and configuration disagree on n");
  const Connection conn = make_connection(config);
  TransportResult r;
  r.steps = steps_per_segment;
  r.matrix = integrate(path, conn, steps_per_segment);
  const ComplexMatrix fine = integrate(path, conn, 2 * steps_per_segment);
  r.error_estimate = operator_norm(r.matrix - fine);
  return r;
}

TransportResult transport_word(const std::vector<int>& word, const KZConfig& config, std::size_t steps_per_segment) {
  return transport(braid_path(word, config.n_strands), config, steps_per_segment);
}

BraidRelationReport braid_relation_check(const KZConfig& config, double tol, std::size_t steps_per_segment) {
  if (config.n_strands < 3) throw KZError("braid_relation_check needs at least 3 strands");
  const ConfigPath left = braid_path({1, 2, 1}, config.n_strands);
  const ConfigPath right = braid_path({2, 1, 2}, config.n_strands);
  const auto a = left.end();
  const auto b = right.end();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::abs(a[k] - b[k]) > 1e-9) throw KZError("braid_relation_check: the two paths end at different points");
  }
  auto far = std::async(std::launch::async, [&] { return transport(right, config, steps_per_segment); });
  const TransportResult x = transport(left, config, steps_per_segment);
  const TransportResult y = far.get();
  BraidRelationReport r;
  r.difference = operator_norm(x.matrix - y.matrix);
  r.tolerance = tol;
  r.error_estimate = std::max(x.error_estimate, y.error_estimate);
  r.pass = r.difference < tol;
  return r;
}

}  // namespace qtangle
