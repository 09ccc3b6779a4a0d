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

#include "robgate/analytic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace robgate::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_duration(const Composite& g) {
  for (std::size_t k = 0; k < g.segments.size(); ++k) {
    const double t = g.segments[k].t;
    if (!(std::isfinite(t) && t > 0.0)) {
      std::ostringstream msg;
      msg << "constraint t_" << (k + 1) << ">0 violated (segment " << (k + 1) << ": t=" << t << ")";
      throw ValidationError(msg.str());
    }
    if (!std::isfinite(g.segments[k].omega)) {
      std::ostringstream msg;
      msg << "segment " << (k + 1) << " coupling is not finite";
      throw ValidationError(msg.str());
    }
  }
}

Composite build_a1(double w, double d) {
  const double gsq = w * w + d * d;
  const double t_outer = kPi / std::sqrt(gsq);
  return {{{w, d, t_outer}, {gsq / (2.0 * w), 0.0, 2.0 * kPi * w / gsq}, {w, -d, t_outer}}, {}};
}

Composite build_a2(double w, double theta, int n, int m) {
  const double a = kPi / (2.0 * n);
  const double w2 = std::sin(theta + a) / (std::sin(theta + a) - std::sin(a)) * w;
  const double t2 = 2.0 * (2.0 * kPi * m - theta - a) / w2;
  return {{{w, 0.0, theta / w}, {w2, 0.0, t2}, {w, 0.0, theta / w}}, {}};
}

Composite build_a3(double w, int n) {
  return {{{w, 0.0, kPi / w}, {w / 2.0, 0.0, 2.0 * (2.0 * kPi - kPi / n) / w}, {w, 0.0, kPi / w}}, {}};
}

Composite build_a4(double w, double d, int n, A4Variant variant) {
  const double gsq = w * w + d * d;
  const double g = std::sqrt(gsq);
  const double scale = variant == A4Variant::printed ? std::pow(g, 1.5) : std::pow(gsq, 1.5);
  const double w2 = scale / (2.0 * kPi * d * d) * std::tan(kPi / (2.0 * n));
  const double t2 = 2.0 * (2.0 * kPi - kPi / (2.0 * n)) / w2;
  return {{{w, d, 2.0 * kPi / g}, {w2, 0.0, t2}, {w, -d, 2.0 * kPi / g}}, {}};
}

Composite build_a5(double w, double d, int n, int m) {
  const double gsq = w * w + d * d;
  const double a = kPi / (2.0 * n);
  const double t1 =
      2.0 * (m * kPi - std::atan(std::sqrt(1.0 + d * d / (w * w)) * std::tan(a))) / std::sqrt(gsq);
  const double w2 = gsq * std::sin(a) / (2.0 * w * std::sin(a) - t1 * d * d * std::cos(a));
  const double t2 = kPi / (n * w2);
  return {{{w, d, t1}, {w2, 0.0, t2}, {w, -d, t1}}, {}};
}

Composite build_a6(double w, double xi) {
  const double t_outer = 4.0 * std::atan(1.0 + std::sqrt(2.0)) / w;
  const double d = xi * w;
  const double t_inner = 2.0 * kPi / std::sqrt(w * w + d * d);
  return {{{w, 0.0, t_outer}, {w, d, t_inner}, {w, -d, t_inner}, {w, 0.0, t_outer}}, {}};
}

bool uses_root_order(Family f) {
  return f == Family::A2_ixn3 || f == Family::A3_b || f == Family::A4_c || f == Family::A5_d;
}

double bisect(double lo, double hi) {
  double flo = xi_residual(lo);
  const double fhi = xi_residual(hi);
  if (!(flo * fhi < 0.0)) {
    throw NumericalError("xi bracket does not contain a sign change");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = xi_residual(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::A1_ix3:
      return "A1";
    case Family::A2_ixn3:
      return "A2";
    case Family::A3_b:
      return "A3";
    case Family::A4_c:
      return "A4";
    case Family::A5_d:
      return "A5";
    case Family::A6_ix4:
      return "A6";
  }
  return "A1";
}

Family family_from_string(std::string_view name) {
  if (name == "A1" || name == "A1_ix3") return Family::A1_ix3;
  if (name == "A2" || name == "A2_ixn3") return Family::A2_ixn3;
  if (name == "A3" || name == "A3_b") return Family::A3_b;
  if (name == "A4" || name == "A4_c") return Family::A4_c;
  if (name == "A5" || name == "A5_d") return Family::A5_d;
  if (name == "A6" || name == "A6_ix4") return Family::A6_ix4;
  throw ValidationError("unknown solution family: " + std::string(name));
}

double xi_residual(double xi) {
  const double lhs = 2.0 * kPi * xi * xi;
  const double rhs = 1.0 + xi * xi;
  return lhs * lhs - rhs * rhs * rhs;
}

std::pair<double, double> solve_xi() {
  return {bisect(0.1, 1.0), bisect(2.0, 10.0)};
}

Composite build(const FamilyRequest& req) {
  if (!(std::isfinite(req.omega) && req.omega > 0.0)) {
    throw ValidationError("coupling omega must be positive");
  }
  if (!std::isfinite(req.delta) || !std::isfinite(req.theta)) {
    throw ValidationError("family parameters must be finite");
  }
  if (uses_root_order(req.family) && req.n < 1) {
    throw ValidationError("root order n must be a positive integer");
  }
  Composite g;
  switch (req.family) {
    case Family::A1_ix3:
      g = build_a1(req.omega, req.delta);
      break;
    case Family::A2_ixn3:
      g = build_a2(req.omega, req.theta, req.n, req.m);
      break;
    case Family::A3_b:
      g = build_a3(req.omega, req.n);
      break;
    case Family::A4_c:
      if (req.delta == 0.0) throw ValidationError("family A4 needs a non-zero detuning");
      g = build_a4(req.omega, req.delta, req.n, req.a4_variant);
      break;
    case Family::A5_d:
      g = build_a5(req.omega, req.delta, req.n, req.m);
      break;
    case Family::A6_ix4: {
      const auto [low, high] = solve_xi();
      g = build_a6(req.omega, req.branch == XiBranch::low ? low : high);
      break;
    }
  }
  require_positive_duration(g);
  return g;
}

Unitary2d target(const FamilyRequest& req) {
  if (uses_root_order(req.family)) return ix_root<double>(req.n);
  return standard_gate<double>("iX");
}

std::string target_label(const FamilyRequest& req) {
  if (uses_root_order(req.family)) {
    if (req.n == 1) return "iX";
    return "(iX)^(1/" + std::to_string(req.n) + ")";
  }
  return "iX";
}

FirstOrderReport verify_first_order(const Composite& g, const Unitary2d& target, bool with_second_order) {
  FirstOrderReport r;
  r.fid0 = fidelity(target, realize(g, 0.0));
  r.e1_norm = error_series(g, 1, kFirstOrderStep)[0].norm();
  if (with_second_order) {
    // E_2 needs a coarser step; the 1e-6 first-order step is roundoff-bound.
    r.e2_norm = error_series(g, 2, 1e-3)[1].norm();
  }
  r.pass = r.fid0 >= 1.0 - kFirstOrderFidelityTol && r.e1_norm <= kFirstOrderE1Tol;
  return r;
}

}  // namespace robgate::analytic
