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

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "robgate/composite.hpp"

namespace robgate::analytic {

/// Closed-form first-order robust families.
///
/// A1_ix3   iX in three segments, detuning-mirrored outer segments.
/// A2_ixn3  (iX)^(1/n) in three resonant segments, free angle theta.
/// A3_b     (iX)^(1/n), fixed pi / half-coupling / pi construction.
/// A4_c     (iX)^(1/n) with detuned outer 2 pi segments.
/// A5_d     (iX)^(1/n) with detuned outer segments and a short centre.
/// A6_ix4   iX in four equal-coupling segments; needs a root xi.
enum class Family { A1_ix3, A2_ixn3, A3_b, A4_c, A5_d, A6_ix4 };

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

enum class XiBranch { low, high };

/// Which centre-coupling formula to use for A4_c. `printed` uses
/// (sqrt(W^2 + D^2))^(3/2); `cubic` uses (W^2 + D^2)^(3/2), which is the
/// variant that actually cancels the first-order error for n >= 2.
enum class A4Variant { printed, cubic };

struct FamilyRequest {
  Family family = Family::A1_ix3;
  double omega = 1.0;
  double delta = 0.0;
  double theta = 0.0;
  int n = 1;
  int m = 1;
  XiBranch branch = XiBranch::low;
  A4Variant a4_variant = A4Variant::printed;
};

/// Segments for the requested family. Throws ValidationError naming the
/// violated duration constraint (e.g. "t_2>0") and the segment index.
Composite build(const FamilyRequest& req);

/// Gate the family implements (up to global phase): iX or (iX)^(1/n).
Unitary2d target(const FamilyRequest& req);
std::string target_label(const FamilyRequest& req);

/// Both positive roots of (2 pi xi^2)^2 = (1 + xi^2)^3, low then high.
std::pair<double, double> solve_xi();

double xi_residual(double xi);

struct FirstOrderReport {
  double fid0 = 0.0;
  double e1_norm = 0.0;
  std::optional<double> e2_norm;
  bool pass = false;
};

inline constexpr double kFirstOrderFidelityTol = 1e-8;
inline constexpr double kFirstOrderE1Tol = 1e-5;
inline constexpr double kFirstOrderStep = 1e-6;

/// fid0 = F(realize(g, 0), target); e1_norm = ||E_1||_F.
/// pass iff fid0 >= 1 - 1e-8 and e1_norm <= 1e-5.
FirstOrderReport verify_first_order(const Composite& g, const Unitary2d& target,
                                    bool with_second_order = false);

}  // namespace robgate::analytic
