// Copyright 2026 The robgate Authors
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

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "robgate/error.hpp"

namespace robgate {

/// 2x2 complex matrix holding a single-qubit gate or segment propagator.
template <typename Scalar = double>
using Unitary2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

using Unitary2d = Unitary2<double>;

/// One constant-Hamiltonian segment: coupling, detuning and duration.
///
/// The generator is omega*X - delta*Z. Durations follow the half-angle
/// convention of the coupled-mode equations, so a segment rotates the Bloch
/// vector by sqrt(omega^2 + delta^2) * t.
template <typename Scalar = double>
struct SegmentParams {
  Scalar omega{};
  Scalar delta{};
  Scalar t{};

  bool operator==(const SegmentParams&) const = default;
};

using Segment = SegmentParams<double>;

template <typename Scalar>
void validate(const SegmentParams<Scalar>& p) {
  using std::isfinite;
  if (!isfinite(p.omega) || !isfinite(p.delta) || !isfinite(p.t)) {
    throw ValidationError("segment parameters must be finite");
  }
  if (p.t < Scalar(0)) {
    throw ValidationError("segment duration must be non-negative");
  }
}

namespace pauli {

template <typename Scalar = double>
Unitary2<Scalar> identity() {
  return Unitary2<Scalar>::Identity();
}

template <typename Scalar = double>
Unitary2<Scalar> x() {
  Unitary2<Scalar> m;
  m << Scalar(0), Scalar(1), Scalar(1), Scalar(0);
  return m;
}

template <typename Scalar = double>
Unitary2<Scalar> y() {
  using C = std::complex<Scalar>;
  Unitary2<Scalar> m;
  m << C(0), C(0, -1), C(0, 1), C(0);
  return m;
}

template <typename Scalar = double>
Unitary2<Scalar> z() {
  Unitary2<Scalar> m;
  m << Scalar(1), Scalar(0), Scalar(0), Scalar(-1);
  return m;
}

}  // namespace pauli

/// exp(-i (t/2) (omega X - (delta + epsilon) Z)), evaluated in closed form.
///
/// epsilon is a shared detuning offset. With g = sqrt(omega^2 + d^2) and
/// phi = g t / 2 the result is cos(phi) I - i sin(phi) (omega X - d Z) / g.
template <typename Scalar>
Unitary2<Scalar> propagator(const SegmentParams<Scalar>& p, Scalar epsilon = Scalar(0)) {
  using std::cos;
  using std::isfinite;
  using std::sin;
  using std::sqrt;
  validate(p);
  if (!isfinite(epsilon)) {
    throw ValidationError("detuning error must be finite");
  }
  using C = std::complex<Scalar>;
  const Scalar d = p.delta + epsilon;
  const Scalar g = sqrt(p.omega * p.omega + d * d);
  Unitary2<Scalar> u;
  if (g == Scalar(0)) {
    u.setIdentity();
    return u;
  }
  const Scalar half_angle = g * p.t / Scalar(2);
  const Scalar c = cos(half_angle);
  const Scalar s = sin(half_angle) / g;
  u(0, 0) = C(c, s * d);
  u(0, 1) = C(0, -s * p.omega);
  u(1, 0) = C(0, -s * p.omega);
  u(1, 1) = C(c, -s * d);
  return u;
}

/// |Tr(ideal^dagger actual)| / 2. Insensitive to global phase.
template <typename Derived1, typename Derived2>
auto fidelity(const Eigen::MatrixBase<Derived1>& ideal, const Eigen::MatrixBase<Derived2>& actual) {
  using std::abs;
  using std::min;
  using Real = typename Eigen::NumTraits<typename Derived1::Scalar>::Real;
  const Real f = abs((ideal.adjoint() * actual).trace()) / Real(2);
  return min(f, Real(1));
}

/// Largest entrywise deviation of U^dagger U from the identity.
template <typename Derived>
auto unitarity_defect(const Eigen::MatrixBase<Derived>& u) {
  using Plain = typename Derived::PlainObject;
  return (u.adjoint() * u - Plain::Identity()).cwiseAbs().maxCoeff();
}

/// exp(-i (theta/2) n.sigma) for a unit axis n; a Bloch rotation by theta.
template <typename Scalar>
Unitary2<Scalar> rotation(Scalar theta, Scalar nx, Scalar ny, Scalar nz) {
  using C = std::complex<Scalar>;
  const Scalar c = std::cos(theta / 2);
  const Scalar s = std::sin(theta / 2);
  Unitary2<Scalar> u;
  u(0, 0) = C(c, -s * nz);
  u(0, 1) = C(-s * ny, -s * nx);
  u(1, 0) = C(s * ny, -s * nx);
  u(1, 1) = C(c, s * nz);
  return u;
}

/// Bloch rotation angle in [0, 2 pi] of a special-unitary matrix.
template <typename Derived>
auto rotation_angle(const Eigen::MatrixBase<Derived>& u) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  // For SU(2): u = cos(a/2) I - i sin(a/2) n.sigma.
  const Real c = ((u(0, 0) + u(1, 1)) / Real(2)).real();
  const Real sx = -((u(0, 1) + u(1, 0)) / Real(2)).imag();
  const Real sy = ((u(1, 0) - u(0, 1)) / Real(2)).real();
  const Real sz = -((u(0, 0) - u(1, 1)) / Real(2)).imag();
  return Real(2) * std::atan2(std::sqrt(sx * sx + sy * sy + sz * sz), c);
}

/// Principal n-th root of iX, i.e. exp(log(iX) / n) = exp(i pi/(2n) X).
template <typename Scalar = double>
Unitary2<Scalar> ix_root(int n) {
  if (n < 1) {
    throw ValidationError("root order must be a positive integer");
  }
  using C = std::complex<Scalar>;
  const Scalar a = std::numbers::pi_v<Scalar> / Scalar(2 * n);
  Unitary2<Scalar> u;
  u << C(std::cos(a), 0), C(0, std::sin(a)), C(0, std::sin(a)), C(std::cos(a), 0);
  return u;
}

/// Principal n-th root of X: X^(1/n) = exp(log(X) / n).
template <typename Scalar = double>
Unitary2<Scalar> x_root(int n) {
  if (n < 1) {
    throw ValidationError("root order must be a positive integer");
  }
  using C = std::complex<Scalar>;
  // X has eigenvalues +1 (|+>) and -1 (|->); the principal log of -1 is i pi.
  const C plus(1, 0);
  const C minus = std::polar(Scalar(1), std::numbers::pi_v<Scalar> / Scalar(n));
  const C half(Scalar(0.5), 0);
  Unitary2<Scalar> u;
  u << half * (plus + minus), half * (plus - minus), half * (plus - minus), half * (plus + minus);
  return u;
}

/// Exact matrix for a named target gate.
///
/// Accepted labels: I, X, iX, -iX, X^(1/2), X^(1/3), X^(1/n), H, iH,
/// (iX)^(1/n) and sqrt13 (= sqrt(1/3) I - i sqrt(2/3) X).
template <typename Scalar = double>
Unitary2<Scalar> standard_gate(std::string_view label) {
  using C = std::complex<Scalar>;
  const C i(0, 1);
  if (label == "I") return pauli::identity<Scalar>();
  if (label == "X") return pauli::x<Scalar>();
  if (label == "iX") return i * pauli::x<Scalar>();
  if (label == "-iX") return -i * pauli::x<Scalar>();
  if (label == "H" || label == "iH") {
    Unitary2<Scalar> h = (pauli::x<Scalar>() + pauli::z<Scalar>()) / std::sqrt(Scalar(2));
    return label == "H" ? h : Unitary2<Scalar>(i * h);
  }
  if (label == "sqrt13") {
    return std::sqrt(Scalar(1) / 3) * pauli::identity<Scalar>() -
           i * std::sqrt(Scalar(2) / 3) * pauli::x<Scalar>();
  }
  auto parse_root = [&](std::string_view prefix) -> int {
    // prefix + "n)" with a positive integer n
    if (label.size() <= prefix.size() + 1 || label.substr(0, prefix.size()) != prefix ||
        label.back() != ')') {
      return 0;
    }
    const std::string digits(label.substr(prefix.size(), label.size() - prefix.size() - 1));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      return 0;
    }
    return std::stoi(digits);
  };
  if (int n = parse_root("(iX)^(1/"); n > 0) return ix_root<Scalar>(n);
  if (int n = parse_root("X^(1/"); n > 0) return x_root<Scalar>(n);
  throw ValidationError("unknown gate label: " + std::string(label));
}

}  // namespace robgate
