// Copyright 2026 The cylwig authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cylwig {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

template <typename Scalar>
using MatrixXc = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorXc = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixXr = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorXr = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

struct NonconvergentTheta : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AliasRisk : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// (-1)^k for any integer k.
inline constexpr int parity_sign(long long k) { return (k % 2 == 0) ? 1 : -1; }

/// An angle in radians, canonically reduced into [0, 2*pi).
///
/// The reduction uses a split representation of 2*pi so that inputs up to
/// ~1e6 rad come back with absolute error at the 1e-15 level instead of the
/// naive |x|*eps.
class Angle {
 public:
  Angle() = default;
  explicit Angle(double radians) : value_(reduce(radians)) {}

  double value() const { return value_; }

  static double reduce(double radians) {
    // 2*pi = hi + lo to double-double accuracy.
    constexpr double hi = 6.283185307179586476925286766559;  // rounds to nearest double
    constexpr double lo = 2.4492935982947063545742e-16;
    const double k = std::floor(radians / kTwoPi);
    double r = std::fma(-k, hi, radians);
    r = std::fma(-k, lo, r);
    while (r < 0.0) r += kTwoPi;
    while (r >= kTwoPi) r -= kTwoPi;
    return r;
  }

  /// Shortest distance along the circle.
  double distance_to(Angle other) const {
    const double d = std::abs(value_ - other.value_);
    return std::min(d, kTwoPi - d);
  }

  bool approx_equal(Angle other, double tol) const { return distance_to(other) <= tol; }

 private:
  double value_ = 0.0;
};

/// Uniform grid of n_points angles phi_j = 2*pi*j / n_points.
class PeriodicGrid {
 public:
  explicit PeriodicGrid(int n_points) : n_points_(n_points) {
    if (n_points < 1) throw std::invalid_argument("PeriodicGrid: n_points must be positive");
  }

  int n_points() const { return n_points_; }
  double spacing() const { return kTwoPi / n_points_; }
  double point(int j) const { return kTwoPi * j / n_points_; }

  int wrap(int j) const {
    const int r = j % n_points_;
    return r < 0 ? r + n_points_ : r;
  }

  /// Nyquist condition for spectra of bandwidth 2*l_max.
  bool resolves(int l_max) const { return n_points_ >= 4 * l_max + 2; }

  Eigen::VectorXd points() const {
    Eigen::VectorXd p(n_points_);
    for (int j = 0; j < n_points_; ++j) p[j] = point(j);
    return p;
  }

  friend bool operator==(const PeriodicGrid&, const PeriodicGrid&) = default;

 private:
  int n_points_;
};

/// Third Jacobi theta function, theta3(z, q) = sum_{n in Z} q^{n^2} e^{2 i n z}.
///
/// Terms are summed symmetrically outward from n = 0 and the sum stops once
/// the next term falls below 1e-15 of the running partial sum. The series
/// converges for every complex z when 0 < q < 1; for |Im z| > -ln q the first
/// few terms grow before the Gaussian factor wins, so the divergence guard
/// only fires when no decrease has started within 64 terms.
template <typename Scalar>
std::complex<Scalar> theta3(std::complex<Scalar> z, Scalar q) {
  if (!(q > Scalar(0)) || !(q < Scalar(1))) {
    throw std::invalid_argument("theta3: nome q must lie in (0, 1)");
  }
  using C = std::complex<Scalar>;
  const Scalar log_q = std::log(q);
  C sum(Scalar(1), Scalar(0));
  Scalar prev_mag(-1);
  bool decreasing = false;
  for (int n = 1;; ++n) {
    const Scalar nn_log_q = Scalar(n) * Scalar(n) * log_q;
    const Scalar re = Scalar(2 * n) * z.real();
    const Scalar im = Scalar(2 * n) * z.imag();
    const C term = std::exp(C(nn_log_q - im, re)) + std::exp(C(nn_log_q + im, -re));
    sum += term;
    const Scalar mag = std::abs(term);
    if (prev_mag >= Scalar(0) && mag < prev_mag) decreasing = true;
    if (decreasing && (mag < Scalar(1e-15) * std::abs(sum) || mag == Scalar(0))) break;
    if (!decreasing && n >= 64) {
      throw NonconvergentTheta("theta3: term magnitude failed to decrease within 64 terms");
    }
    if (n > 4096) throw NonconvergentTheta("theta3: series failed to terminate");
    prev_mag = mag;
  }
  return sum;
}

template <typename Scalar>
std::complex<Scalar> theta3(Scalar z, Scalar q) {
  return theta3(std::complex<Scalar>(z, Scalar(0)), q);
}

/// Truncated periodic delta, (1/2pi) sum_{|n| <= l_max} e^{i n phi}
/// = sin((2 l_max + 1) phi / 2) / (2 pi sin(phi / 2)), with the phi -> 0
/// limit (2 l_max + 1) / (2 pi) taken explicitly.
inline double dirichlet_delta(Angle phi, int l_max) {
  if (l_max < 0) throw std::invalid_argument("dirichlet_delta: l_max must be >= 0");
  double u = phi.value();
  if (u > std::numbers::pi) u -= kTwoPi;
  if (std::abs(u) < 1e-4) {
    // Near the zero of sin(u/2) the cosine sum has no cancellation.
    double acc = 1.0;
    for (int n = 1; n <= l_max; ++n) acc += 2.0 * std::cos(n * u);
    return acc / kTwoPi;
  }
  return std::sin((2 * l_max + 1) * 0.5 * u) / (kTwoPi * std::sin(0.5 * u));
}

/// Rectangle rule on the periodic grid: (2 pi / n) sum_j samples_j.
/// Exact for band-limited integrands of bandwidth below n_points / 2.
template <typename Derived>
typename Derived::Scalar circle_integrate(const Eigen::DenseBase<Derived>& samples,
                                          const PeriodicGrid& grid) {
  if (static_cast<int>(samples.size()) != grid.n_points()) {
    throw std::invalid_argument("circle_integrate: sample count does not match the grid");
  }
  using S = typename Derived::Scalar;
  using Real = typename Eigen::NumTraits<S>::Real;
  return samples.derived().sum() * S(Real(grid.spacing()));
}

/// (1/2pi) * circle integral of samples_j e^{-i n phi_j}.
template <typename Derived>
auto fourier_coefficient(const Eigen::DenseBase<Derived>& samples, const PeriodicGrid& grid,
                         int n)
    -> std::complex<typename Eigen::NumTraits<typename Derived::Scalar>::Real> {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const int n_points = grid.n_points();
  if (static_cast<int>(samples.size()) != n_points) {
    throw std::invalid_argument("fourier_coefficient: sample count does not match the grid");
  }
  if (2 * std::abs(n) >= n_points) {
    throw AliasRisk("fourier_coefficient: mode " + std::to_string(n) +
                    " aliases on a grid of " + std::to_string(n_points) + " points");
  }
  std::complex<Real> acc(0, 0);
  for (int j = 0; j < n_points; ++j) {
    acc += std::complex<Real>(samples.derived()(j)) *
           std::polar(Real(1), Real(-n * grid.point(j)));
  }
  return acc / Real(n_points);
}

}  // namespace cylwig
