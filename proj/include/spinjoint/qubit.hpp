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

// Dense single- and two-qubit algebra. Everything here is fixed-size Eigen
// arithmetic templated on the real scalar type; the double aliases at the
// bottom of each block are what the rest of the library uses.

#include <cmath>
#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "spinjoint/error.hpp"

namespace spinjoint {

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Mat2c = Eigen::Matrix<std::complex<Scalar>, 2, 2>;
template <typename Scalar>
using Mat4c = Eigen::Matrix<std::complex<Scalar>, 4, 4>;

using Vector3 = Vec3<double>;
using ComplexMatrix2 = Mat2c<double>;
using ComplexMatrix4 = Mat4c<double>;

/// Absolute tolerance for closed-form checks: 1e-12 for double.
template <typename Scalar>
constexpr Scalar exact_tol() {
  return Eigen::NumTraits<Scalar>::dummy_precision();
}

inline constexpr double kExactTol = 1e-12;

template <typename Scalar = double>
Mat2c<Scalar> identity2() {
  return Mat2c<Scalar>::Identity();
}

/// x·σx + y·σy + z·σz.
template <typename Derived>
Mat2c<typename Derived::Scalar> pauli_dot(const Eigen::MatrixBase<Derived>& v) {
  EIGEN_STATIC_ASSERT_VECTOR_SPECIFIC_SIZE(Derived, 3)
  using Scalar = typename Derived::Scalar;
  using C = std::complex<Scalar>;
  Mat2c<Scalar> m;
  m << C(v(2), 0), C(v(0), -v(1)),
       C(v(0), v(1)), C(-v(2), 0);
  return m;
}

template <typename Scalar = double>
Mat2c<Scalar> pauli_x() {
  return pauli_dot(Vec3<Scalar>::UnitX());
}
template <typename Scalar = double>
Mat2c<Scalar> pauli_y() {
  return pauli_dot(Vec3<Scalar>::UnitY());
}
template <typename Scalar = double>
Mat2c<Scalar> pauli_z() {
  return pauli_dot(Vec3<Scalar>::UnitZ());
}

/// Largest entrywise modulus of M - M†.
template <typename Derived>
typename Derived::RealScalar hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  typename Derived::RealScalar tol =
                      exact_tol<typename Derived::RealScalar>()) {
  return hermiticity_defect(m) <= tol;
}

// ---------------------------------------------------------------------------
// Unit vectors

/// A direction on the Bloch sphere. Construction checks the norm; use
/// `normalized` to build one from an arbitrary nonzero vector.
template <typename Scalar>
class UnitVec3 {
 public:
  explicit UnitVec3(const Vec3<Scalar>& v, Scalar tol = exact_tol<Scalar>()) : v_(v) {
    if (!v.allFinite() || std::abs(v.norm() - Scalar(1)) > tol) {
      throw Error(Errc::NotUnit, "direction must have unit norm", double(v.norm()));
    }
  }

  static UnitVec3 normalized(const Vec3<Scalar>& v) {
    const Scalar n = v.norm();
    if (!v.allFinite() || !(n > Scalar(0))) {
      throw Error(Errc::DegenerateDirection, "cannot normalize a zero vector");
    }
    return UnitVec3(v / n);
  }

  static UnitVec3 x() { return UnitVec3(Vec3<Scalar>::UnitX()); }
  static UnitVec3 y() { return UnitVec3(Vec3<Scalar>::UnitY()); }
  static UnitVec3 z() { return UnitVec3(Vec3<Scalar>::UnitZ()); }

  const Vec3<Scalar>& vec() const { return v_; }
  operator const Vec3<Scalar>&() const { return v_; }

  Scalar dot(const UnitVec3& other) const { return v_.dot(other.v_); }
  UnitVec3 operator-() const { return UnitVec3(-v_); }

 private:
  Vec3<Scalar> v_;
};

using UnitVector3 = UnitVec3<double>;

// ---------------------------------------------------------------------------
// Eigenvalues

/// Ascending eigenvalues of a 2x2 Hermitian matrix in closed form,
/// mean ± sqrt(((a-d)/2)^2 + |b|^2). For w/4·1 + v·σ/4 this is
/// ((w - |v|)/4, (w + |v|)/4) exactly.
template <typename Scalar>
std::pair<Scalar, Scalar> hermitian_eigenvalues(const Mat2c<Scalar>& m,
                                                Scalar tol = exact_tol<Scalar>()) {
  if (!is_hermitian(m, tol)) {
    throw Error(Errc::NotHermitian, "eigenvalues requested for a non-Hermitian matrix",
                double(hermiticity_defect(m)));
  }
  const Scalar a = m(0, 0).real();
  const Scalar d = m(1, 1).real();
  const Scalar mean = (a + d) / 2;
  const Scalar radius = std::hypot((a - d) / 2, std::abs(m(0, 1)));
  return {mean - radius, mean + radius};
}

// ---------------------------------------------------------------------------
// Single-qubit states

/// Density matrix of one qubit, ρ = ½(1 + m·σ).
template <typename Scalar>
class BasicQubitState {
 public:
  static BasicQubitState from_bloch(const Vec3<Scalar>& m, Scalar tol = exact_tol<Scalar>()) {
    if (!m.allFinite() || m.norm() > Scalar(1) + tol) {
      throw Error(Errc::BlochOutOfBall, "Bloch vector lies outside the unit ball",
                  double(m.norm()));
    }
    return BasicQubitState((identity2<Scalar>() + pauli_dot(m)) / Scalar(2));
  }

  /// Validates Hermiticity, unit trace and positivity.
  static BasicQubitState from_density(const Mat2c<Scalar>& rho, Scalar tol = exact_tol<Scalar>()) {
    if (!rho.allFinite() || !is_hermitian(rho, tol)) {
      throw Error(Errc::InvalidState, "density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - std::complex<Scalar>(1)) > tol) {
      throw Error(Errc::InvalidState, "density matrix trace differs from 1",
                  double(rho.trace().real()));
    }
    const auto [lo, hi] = hermitian_eigenvalues(rho, tol);
    (void)hi;
    if (lo < -tol) {
      throw Error(Errc::InvalidState, "density matrix has a negative eigenvalue", double(lo));
    }
    return BasicQubitState(rho);
  }

  static BasicQubitState maximally_mixed() { return BasicQubitState(identity2<Scalar>() / Scalar(2)); }

  /// Pure state with spin up along `n`.
  static BasicQubitState spin_up(const UnitVec3<Scalar>& n) { return from_bloch(n.vec()); }

  const Mat2c<Scalar>& rho() const { return rho_; }

  Vec3<Scalar> bloch() const {
    return Vec3<Scalar>(2 * rho_(1, 0).real(), 2 * rho_(1, 0).imag(),
                        (rho_(0, 0) - rho_(1, 1)).real());
  }

 private:
  explicit BasicQubitState(const Mat2c<Scalar>& rho) : rho_(rho) {}
  Mat2c<Scalar> rho_;
};

using QubitState = BasicQubitState<double>;

template <typename Derived>
BasicQubitState<typename Derived::Scalar> state_from_bloch(const Eigen::MatrixBase<Derived>& m) {
  return BasicQubitState<typename Derived::Scalar>::from_bloch(m.eval());
}

/// Re Tr(obs·ρ) for a Hermitian observable.
template <typename Scalar>
Scalar expectation(const Mat2c<Scalar>& obs, const BasicQubitState<Scalar>& state,
                   Scalar tol = exact_tol<Scalar>()) {
  if (!is_hermitian(obs, tol)) {
    throw Error(Errc::NotHermitian, "observable is not Hermitian", double(hermiticity_defect(obs)));
  }
  return (obs * state.rho()).trace().real();
}

// ---------------------------------------------------------------------------
// Two qubits

/// Kronecker product, qubit 1 major: index = 2·i1 + i2.
template <typename Scalar>
Mat4c<Scalar> tensor2(const Mat2c<Scalar>& a, const Mat2c<Scalar>& b) {
  Mat4c<Scalar> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

template <typename Scalar>
class BasicTwoQubitState {
 public:
  /// Eigenvalues are checked against `eig_tol`, which is looser than the
  /// Hermiticity and trace tolerance because it goes through an iterative solver.
  static BasicTwoQubitState from_density(const Mat4c<Scalar>& rho, Scalar tol = exact_tol<Scalar>(),
                                         Scalar eig_tol = Scalar(1e-10)) {
    if (!rho.allFinite() || !is_hermitian(rho, tol)) {
      throw Error(Errc::InvalidState, "two-qubit density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - std::complex<Scalar>(1)) > tol) {
      throw Error(Errc::InvalidState, "two-qubit density matrix trace differs from 1",
                  double(rho.trace().real()));
    }
    const Mat4c<Scalar> herm = (rho + rho.adjoint()) / Scalar(2);
    Eigen::SelfAdjointEigenSolver<Mat4c<Scalar>> solver(herm, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -eig_tol) {
      throw Error(Errc::InvalidState, "two-qubit density matrix has a negative eigenvalue",
                  double(solver.eigenvalues().minCoeff()));
    }
    return BasicTwoQubitState(rho);
  }

  static BasicTwoQubitState product(const BasicQubitState<Scalar>& first,
                                    const BasicQubitState<Scalar>& second) {
    return BasicTwoQubitState(tensor2(first.rho(), second.rho()));
  }

  const Mat4c<Scalar>& rho() const { return rho_; }

  /// Partial trace over qubit 2.
  BasicQubitState<Scalar> reduced_first() const {
    Mat2c<Scalar> r = Mat2c<Scalar>::Zero();
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j) r(i, k) += rho_(2 * i + j, 2 * k + j);
    return BasicQubitState<Scalar>::from_density(r);
  }

  /// Partial trace over qubit 1.
  BasicQubitState<Scalar> reduced_second() const {
    Mat2c<Scalar> r = Mat2c<Scalar>::Zero();
    for (int j = 0; j < 2; ++j)
      for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i) r(j, l) += rho_(2 * i + j, 2 * i + l);
    return BasicQubitState<Scalar>::from_density(r);
  }

  Scalar purity() const { return (rho_ * rho_).trace().real(); }

 private:
  explicit BasicTwoQubitState(const Mat4c<Scalar>& rho) : rho_(rho) {}
  Mat4c<Scalar> rho_;
};

using TwoQubitState = BasicTwoQubitState<double>;

}  // namespace spinjoint
