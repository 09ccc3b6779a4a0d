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
#include <string>
#include <vector>

#include "robgate/analytic.hpp"
#include "robgate/composite.hpp"

namespace robgate::fixtures {

/// A published analytic design: the request that generates it and the
/// segment values exactly as printed.
struct AnalyticRow {
  std::string table;  // "I", "II", "III" or "IV"
  std::string name;   // row label, e.g. "delta=0.5", "theta=pi/3"
  analytic::FamilyRequest request;
  std::vector<Segment> printed;
};

/// Every row of the four analytic tables (iX in 3, (iX)^(1/2) in 3,
/// (iX)^(1/3) in 3, iX in 4 equal-coupling segments).
const std::vector<AnalyticRow>& analytic_tables();

/// A published optimizer design for the detuning error model.
struct OptimizedRow {
  std::string name;          // "X", "X^(1/2)", "X^(1/3)", "H"
  std::string target_label;  // standard_gate label
  Composite gate;
};

const std::vector<OptimizedRow>& optimized_toy_designs();

/// Published directional-coupler geometries (widths and lengths in um,
/// gap 1.2 um). These depend on an unpublished fit, so they serve as
/// structure fixtures rather than numeric oracles.
struct GeometryRow {
  std::string target_label;
  double uniform_w1, uniform_w2, uniform_z;
  std::vector<std::array<double, 3>> segments;  // (w1, w2, z)
};

const std::vector<GeometryRow>& perturbative_geometries();
const std::vector<GeometryRow>& optimized_geometries();

inline constexpr double kFixtureGapUm = 1.2;

}  // namespace robgate::fixtures
