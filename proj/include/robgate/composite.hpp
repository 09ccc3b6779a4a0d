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

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "robgate/su2.hpp"

namespace robgate {

/// Ordered segment list, listed in physical action order (segment 0 acts
/// first), plus an optional bookend coupler angle.
template <typename Scalar = double>
struct CompositeGate {
  std::vector<SegmentParams<Scalar>> segments;
  std::optional<Scalar> bookend_angle;

  bool operator==(const CompositeGate&) const = default;
};

using Composite = CompositeGate<double>;

template <typename Scalar>
void validate(const CompositeGate<Scalar>& g) {
  if (g.segments.empty()) {
    throw ValidationError("composite gate needs at least one segment");
  }
  for (const auto& s : g.segments) validate(s);
  if (g.bookend_angle) {
    const Scalar a = *g.bookend_angle;
    if (!(a >= Scalar(0) && a < std::numbers::pi_v<Scalar> / 2)) {
      throw ValidationError("bookend angle must lie in [0, pi/2)");
    }
  }
}

/// cos(theta) I - i sin(theta) X: the residual coupling picked up when the
/// two waveguides approach and separate.
template <typename Scalar>
Unitary2<Scalar> bookend(Scalar theta) {
  using C = std::complex<Scalar>;
  Unitary2<Scalar> u;
  u << C(std::cos(theta), 0), C(0, -std::sin(theta)), C(0, -std::sin(theta)), C(std::cos(theta), 0);
  return u;
}

/// U_N ... U_2 U_1 under a shared detuning offset, wrapped as U_c (...) U_c
/// when a bookend angle is present.
template <typename Scalar>
Unitary2<Scalar> realize(const CompositeGate<Scalar>& g, Scalar epsilon = Scalar(0)) {
  validate(g);
  Unitary2<Scalar> u = Unitary2<Scalar>::Identity();
  for (const auto& s : g.segments) {
    u = propagator(s, epsilon) * u;
  }
  if (g.bookend_angle) {
    const Unitary2<Scalar> c = bookend(*g.bookend_angle);
    u = c * u * c;
  }
  return u;
}

/// Central finite-difference Taylor coefficients E_1..E_order of
/// E(eps) = U(eps) - U(0) about eps = 0.
template <typename Scalar>
std::vector<Unitary2<Scalar>> error_series(const CompositeGate<Scalar>& g, int order, Scalar h) {
  if (order < 1 || order > 3) {
    throw ValidationError("error series order must be 1, 2 or 3");
  }
  if (!(h >= Scalar(1e-6) && h <= Scalar(1e-2))) {
    throw ValidationError("finite-difference step must lie in [1e-6, 1e-2]");
  }
  const Unitary2<Scalar> u0 = realize(g, Scalar(0));
  const Unitary2<Scalar> up = realize(g, h);
  const Unitary2<Scalar> um = realize(g, -h);
  std::vector<Unitary2<Scalar>> out;
  out.push_back((up - um) / (Scalar(2) * h));
  if (order >= 2) {
    out.push_back((up - Scalar(2) * u0 + um) / (Scalar(2) * h * h));
  }
  if (order >= 3) {
    const Unitary2<Scalar> up2 = realize(g, Scalar(2) * h);
    const Unitary2<Scalar> um2 = realize(g, Scalar(-2) * h);
    // U''' ~ (U(2h) - 2U(h) + 2U(-h) - U(-2h)) / (2h^3); E_3 = U''' / 6.
    out.push_back((up2 - Scalar(2) * up + Scalar(2) * um - um2) / (Scalar(12) * h * h * h));
  }
  return out;
}

/// Single-segment uniform gate for an X-axis target rotation.
///
/// Returns the shortest positive-coupling segment (omega, 0, t) whose
/// propagator equals exp(-i (angle/2) X) up to a global phase.
template <typename Scalar>
SegmentParams<Scalar> uniform_x_rotation(Scalar angle, Scalar omega = Scalar(1)) {
  const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
  // Global phase -1 means angles are only defined modulo 2 pi.
  Scalar a = std::fmod(angle, two_pi);
  if (a < 0) a += two_pi;
  return {omega, Scalar(0), a / omega};
}

/// Single segment with coupling `omega` that implements `target` up to a
/// global phase. The target's rotation axis must lie in the X-Z plane with a
/// non-zero X component, since the generator has no Y term.
template <typename Derived>
auto uniform_gate(const Eigen::MatrixBase<Derived>& target,
                  typename Eigen::NumTraits<typename Derived::Scalar>::Real omega = 1) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using C = std::complex<Real>;
  Unitary2<Real> u = target;
  u /= std::sqrt(C(u.determinant()));
  // u = c I - i (sx X + sy Y + sz Z)
  Real c = ((u(0, 0) + u(1, 1)) / Real(2)).real();
  Real sx = -((u(0, 1) + u(1, 0)) / Real(2)).imag();
  const Real sy = ((u(1, 0) - u(0, 1)) / Real(2)).real();
  Real sz = -((u(0, 0) - u(1, 1)) / Real(2)).imag();
  const Real s = std::sqrt(sx * sx + sy * sy + sz * sz);
  if (s < Real(1e-12)) {
    return SegmentParams<Real>{omega, Real(0), Real(0)};
  }
  if (std::abs(sy) > Real(1e-9) * s || std::abs(sx) < Real(1e-12)) {
    throw ValidationError("target has no single-segment realization with omega > 0");
  }
  if (sx < 0) {
    c = -c;
    sx = -sx;
    sz = -sz;
  }
  const Real angle = Real(2) * std::atan2(std::sqrt(sx * sx + sz * sz), c);
  // Generator omega X - delta Z, so the axis (nx, nz) maps to delta = -omega nz / nx.
  const Real delta = -omega * sz / sx;
  const Real g = omega * std::sqrt(sx * sx + sz * sz) / sx;
  return SegmentParams<Real>{omega, delta, angle / g};
}

}  // namespace robgate
