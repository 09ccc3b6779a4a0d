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

#include "robgate/composite.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"

namespace robgate {
namespace {

constexpr double kPi = std::numbers::pi;
const std::complex<double> kI(0, 1);

double max_diff(const Unitary2d& a, const Unitary2d& b) { return (a - b).cwiseAbs().maxCoeff(); }

const Composite kTableIRow1{{{1.00, 0.500, 2.81}, {0.625, 0, 5.03}, {1.00, -0.500, 2.81}}, {}};

TEST(Realize, SingleSegmentMinusIX) {
  const Composite g{{{1.0, 0.0, kPi}}, {}};
  EXPECT_LE(max_diff(realize(g), Unitary2d(-kI * pauli::x())), 1e-15);
}

TEST(Realize, PrintedThreeSegmentIX) {
  EXPECT_GE(fidelity(standard_gate("iX"), realize(kTableIRow1)), 0.9999);
}

TEST(Realize, ProductOrderFirstSegmentActsFirst) {
  const Composite g{{{1.0, 0.3, 0.7}, {0.4, -1.2, 2.1}, {2.0, 0.0, 0.2}}, {}};
  std::vector<oracle::Seg> segs;
  for (const auto& s : g.segments) segs.push_back({s.omega, s.delta, s.t});
  for (double eps : {0.0, 0.13}) {
    EXPECT_LE(max_diff(realize(g, eps), oracle::product(segs, eps)), 1e-9);
  }
}

TEST(Realize, ZeroBookendIsNoBookend) {
  Composite with = kTableIRow1;
  with.bookend_angle = 0.0;
  for (double eps : {-0.2, 0.0, 0.1}) {
    EXPECT_LE(max_diff(realize(with, eps), realize(kTableIRow1, eps)), 1e-15);
  }
}

TEST(Realize, BookendWrapsBothSides) {
  Composite with = kTableIRow1;
  with.bookend_angle = 0.232;
  const Unitary2d c = oracle::expm(-kI * 0.232 * oracle::pauli_x());
  EXPECT_LE(max_diff(realize(with, 0.05), Unitary2d(c * realize(kTableIRow1, 0.05) * c)), 1e-9);
}

TEST(Realize, Validation) {
  EXPECT_THROW(realize(Composite{}), ValidationError);
  Composite bad = kTableIRow1;
  bad.bookend_angle = kPi / 2;
  EXPECT_THROW(realize(bad), ValidationError);
  bad.bookend_angle = -0.1;
  EXPECT_THROW(realize(bad), ValidationError);
}

TEST(Realize, UnitaryUnderError) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 50; ++k) {
    Composite g;
    for (int s = 0; s < 4; ++s) g.segments.push_back({u(rng), u(rng), std::abs(u(rng)) * 2});
    EXPECT_LE(unitarity_defect(realize(g, u(rng) * 0.2)), 1e-12);
  }
}

TEST(ErrorSeries, UniformGateFirstOrderMatchesDyson) {
  const Composite g{{{1.0, 0.0, kPi}}, {}};
  const Unitary2d e1 = error_series(g, 1, 1e-6)[0];
  const Unitary2d ref = oracle::dyson_first_order({{1.0, 0.0, kPi}});
  EXPECT_LE(max_diff(e1, ref), 1e-7);
  EXPECT_GT(e1.norm(), 0.4);
}

TEST(ErrorSeries, CompositeMatchesDyson) {
  const Composite g{{{1.0, 0.3, 0.7}, {0.4, -1.2, 2.1}, {2.0, 0.0, 0.2}}, {}};
  std::vector<oracle::Seg> segs;
  for (const auto& s : g.segments) segs.push_back({s.omega, s.delta, s.t});
  EXPECT_LE(max_diff(error_series(g, 1, 1e-5)[0], oracle::dyson_first_order(segs)), 1e-7);
}

TEST(ErrorSeries, HigherOrdersMatchSeriesStencils) {
  // Reference derivatives from sixth-order-accurate stencils on the series
  // exponential product at a wider step.
  const Composite g{{{1.0, 0.5, 2.0}, {0.7, 0.0, 1.0}}, {}};
  const std::vector<oracle::Seg> segs{{1.0, 0.5, 2.0}, {0.7, 0.0, 1.0}};
  auto f = [&](double eps) { return oracle::product(segs, eps); };
  const double r = 0.02;
  const oracle::Mat2 d2 = (2.0 * f(3 * r) - 27.0 * f(2 * r) + 270.0 * f(r) - 490.0 * f(0) + 270.0 * f(-r) -
                           27.0 * f(-2 * r) + 2.0 * f(-3 * r)) /
                          (180.0 * r * r);
  const oracle::Mat2 d3 =
      (-f(3 * r) + 8.0 * f(2 * r) - 13.0 * f(r) + 13.0 * f(-r) - 8.0 * f(-2 * r) + f(-3 * r)) / (8.0 * r * r * r);
  const auto e = error_series(g, 3, 1e-3);
  ASSERT_EQ(e.size(), 3u);
  EXPECT_LE(max_diff(e[1], Unitary2d(d2 / 2.0)), 1e-5);
  EXPECT_LE(max_diff(e[2], Unitary2d(d3 / 6.0)), 1e-4);
}

TEST(ErrorSeries, PrintedCompositeIsFirstOrderFlat) {
  EXPECT_LE(error_series(kTableIRow1, 1, 1e-4)[0].norm(), 1e-2);
  Composite exact{{{1.0, 0.5, kPi / std::sqrt(1.25)}, {0.625, 0, 2 * kPi / 1.25}, {1.0, -0.5, kPi / std::sqrt(1.25)}},
                  {}};
  EXPECT_LE(error_series(exact, 1, 1e-4)[0].norm(), 1e-5);
}

TEST(ErrorSeries, ZeroDurationVanishes) {
  const Composite g{{{1.3, -0.4, 0.0}, {2.0, 1.0, 0.0}}, {}};
  for (const auto& e : error_series(g, 3, 1e-3)) EXPECT_EQ(e.norm(), 0.0);
}

TEST(ErrorSeries, Validation) {
  EXPECT_THROW(error_series(kTableIRow1, 0, 1e-4), ValidationError);
  EXPECT_THROW(error_series(kTableIRow1, 4, 1e-4), ValidationError);
  EXPECT_THROW(error_series(kTableIRow1, 1, 1e-7), ValidationError);
  EXPECT_THROW(error_series(kTableIRow1, 1, 0.1), ValidationError);
}

TEST(UniformGate, XAxisRotations) {
  EXPECT_EQ(uniform_x_rotation(kPi), (Segment{1.0, 0.0, kPi}));
  EXPECT_NEAR(uniform_x_rotation(-kPi / 2).t, 3 * kPi / 2, 1e-15);
  EXPECT_NEAR(uniform_x_rotation(kPi, 2.0).t, kPi / 2, 1e-15);
}

TEST(UniformGate, RealizesTargets) {
  for (const char* label : {"X", "iX", "-iX", "X^(1/2)", "X^(1/3)", "H", "iH", "sqrt13", "(iX)^(1/2)", "(iX)^(1/3)"}) {
    const Unitary2d target = standard_gate(label);
    for (double omega : {0.5, 1.0, 3.0}) {
      const Segment s = uniform_gate(target, omega);
      EXPECT_EQ(s.omega, omega);
      EXPECT_GE(s.t, 0.0);
      EXPECT_NEAR(fidelity(target, propagator(s)), 1.0, 1e-12) << label;
    }
  }
  const Segment h = uniform_gate(standard_gate("H"));
  EXPECT_NEAR(h.delta, -1.0, 1e-12);
  EXPECT_NEAR(h.t, kPi / std::sqrt(2.0), 1e-12);
  const Segment r2 = uniform_gate(standard_gate("(iX)^(1/2)"));
  EXPECT_NEAR(r2.t, 3 * kPi / 2, 1e-12);
  EXPECT_THROW(uniform_gate(Unitary2d(pauli::y())), ValidationError);
}

}  // namespace
}  // namespace robgate
