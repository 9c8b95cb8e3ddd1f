// Copyright 2026 The spinjoint Authors
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

// Random generators and independent oracles shared by the test binaries.
// Nothing here calls the library routine it is used to check.

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include <Eigen/Dense>

#include "spinjoint/joint.hpp"

namespace spinjoint::tsupport {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  Vector3 unit() {
    std::normal_distribution<double> g;
    Vector3 v;
    do {
      v = Vector3(g(engine_), g(engine_), g(engine_));
    } while (v.norm() < 1e-6);
    return v.normalized();
  }

  /// Uniform in the closed unit ball.
  Vector3 ball() {
    Vector3 v;
    do {
      v = Vector3(uniform(-1, 1), uniform(-1, 1), uniform(-1, 1));
    } while (v.squaredNorm() > 1.0);
    return v;
  }

  UnitVector3 direction() { return UnitVector3::normalized(unit()); }

  /// Admissible spec by rejection: α, α' uniform in [-1, 1].
  JointSpec admissible_spec() {
    for (;;) {
      const auto a = direction();
      const auto ap = direction();
      const double al = uniform(-1, 1);
      const double alp = uniform(-1, 1);
      const double c = a.dot(ap);
      if (al * al + alp * alp - al * al * alp * alp * c * c <= 1.0 - 1e-9) {
        return JointSpec(a, ap, al, alp);
      }
    }
  }

  /// Spec on the boundary: random directions, random ratio α'/α, scaled until
  /// α² + α'² - α²α'²cos²θ = 1 (stable root of the quadratic in t²).
  JointSpec saturating_spec() {
    const auto a = direction();
    const auto ap = direction();
    const double u = uniform(-1, 1);
    const double v = uniform(-1, 1);
    const double c = a.dot(ap);
    const double s = u * u + v * v;
    const double q = u * u * v * v * c * c;
    const double t2 = 2.0 / (s + std::sqrt(s * s - 4.0 * q));
    const double t = std::sqrt(t2);
    return JointSpec(a, ap, t * u, t * v);
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Bisection for the largest α ∈ [0, 1] with 2α² - α⁴cos²θ ≤ 1.
inline double bisect_symmetric_alpha(double theta) {
  const double c2 = std::cos(theta) * std::cos(theta);
  auto f = [c2](double a) { return 2 * a * a - a * a * a * a * c2 - 1.0; };
  double lo = 0.0, hi = 1.0;
  if (f(hi) <= 0.0) return 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) <= 0.0 ? lo : hi) = mid;
  }
  return lo;
}

/// ⟨ψ|X ⊗ Y|ψ⟩ by explicit index sums over a two-qubit ket, no Kronecker product.
inline double ket_expectation(const Eigen::Vector4cd& psi, const ComplexMatrix2& x,
                              const ComplexMatrix2& y) {
  std::complex<double> acc = 0.0;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      for (int kp = 0; kp < 2; ++kp)
        for (int lp = 0; lp < 2; ++lp)
          acc += std::conj(psi(2 * k + l)) * x(k, kp) * y(l, lp) * psi(2 * kp + lp);
  return acc.real();
}

inline Eigen::Vector4cd singlet_ket() {
  return Eigen::Vector4cd(0.0, 1.0, -1.0, 0.0) / std::sqrt(2.0);
}

inline double max_abs_diff(const ComplexMatrix2& x, const ComplexMatrix2& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

}  // namespace spinjoint::tsupport
