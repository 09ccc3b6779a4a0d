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

#include "robgate/fixtures.hpp"

#include <numbers>

namespace robgate::fixtures {

namespace {

using analytic::Family;
using analytic::FamilyRequest;
using analytic::XiBranch;

constexpr double kPi = std::numbers::pi;

AnalyticRow ix3_row(std::string name, double delta, std::vector<Segment> printed) {
  FamilyRequest req;
  req.family = Family::A1_ix3;
  req.omega = 1.0;
  req.delta = delta;
  return {"I", std::move(name), req, std::move(printed)};
}

AnalyticRow ixn3_row(std::string table, int n, double divisor, std::vector<Segment> printed) {
  FamilyRequest req;
  req.family = Family::A2_ixn3;
  req.omega = 1.0;
  req.theta = kPi / divisor;
  req.n = n;
  req.m = 1;
  std::string name = "theta=pi/" + std::to_string(divisor);
  name.erase(name.find_last_not_of('0') + 1);
  if (name.back() == '.') name.pop_back();
  return {std::move(table), std::move(name), req, std::move(printed)};
}

AnalyticRow ix4_row(std::string name, XiBranch branch, std::vector<Segment> printed) {
  FamilyRequest req;
  req.family = Family::A6_ix4;
  req.omega = 1.0;
  req.branch = branch;
  return {"IV", std::move(name), req, std::move(printed)};
}

}  // namespace

const std::vector<AnalyticRow>& analytic_tables() {
  static const std::vector<AnalyticRow> rows = [] {
    std::vector<AnalyticRow> r;
    // Table I
    r.push_back(ix3_row("delta=0.5", 0.5, {{1.00, 0.500, 2.81}, {0.625, 0, 5.03}, {1.00, -0.500, 2.81}}));
    r.push_back(ix3_row("delta=0.75", 0.75, {{1.00, 0.750, 2.51}, {0.781, 0, 4.02}, {1.00, -0.750, 2.51}}));
    r.push_back(ix3_row("delta=1", 1.0, {{1.00, 1.00, 2.22}, {1.00, 0, 3.14}, {1.00, -1.00, 2.22}}));
    r.push_back(ix3_row("delta=1.1", 1.1, {{1.00, 1.1, 2.11326}, {1.105, 0, 2.84307}, {1.00, -1.1, 2.11326}}));
    r.push_back(ix3_row("delta=1.2", 1.2, {{1.00, 1.2, 2.0112}, {1.22, 0, 2.57508}, {1.00, -1.2, 2.0112}}));
    // Table II, n = 2
    r.push_back(ixn3_row("II", 2, 2.2, {{1.00, 0, 1.428}, {8.56794, 0, 0.950004}, {1.00, 0, 1.428}}));
    r.push_back(ixn3_row("II", 2, 2.4, {{1.00, 0, 1.309}, {5.44949, 0, 1.53731}, {1.00, 0, 1.309}}));
    r.push_back(ixn3_row("II", 2, 2.6, {{1.00, 0, 1.2083}, {4.45279, 0, 1.92665}, {1.00, 0, 1.2083}}));
    r.push_back(ixn3_row("II", 2, 2.8, {{1.00, 0, 1.122}, {3.98639, 0, 2.19537}, {1.00, 0, 1.122}}));
    r.push_back(ixn3_row("II", 2, 3.0, {{1.00, 0, 1.05}, {3.73, 0, 2.39}, {1.00, 0, 1.05}}));
    r.push_back(ixn3_row("II", 2, 4.0, {{1.00, 0, 0.785}, {3.41, 0, 2.76}, {1.00, 0, 0.785}}));
    r.push_back(ixn3_row("II", 2, 5.0, {{1.00, 0, 0.628}, {3.52, 0, 2.77}, {1.00, 0, 0.628}}));
    // Table III, n = 3
    r.push_back(ixn3_row("III", 3, 1.8, {{1.00, 0, 1.74533}, {2.87939, 0, 2.78827}, {1.00, 0, 1.74533}}));
    r.push_back(ixn3_row("III", 3, 2.2, {{1.00, 0, 1.428}, {2.16722, 0, 3.99737}, {1.00, 0, 1.428}}));
    r.push_back(ixn3_row("III", 3, 2.4, {{1.00, 0, 1.309}, {2.07313, 0, 4.29359}, {1.00, 0, 1.309}}));
    r.push_back(ixn3_row("III", 3, 2.6, {{1.00, 0, 1.2083}, {2.02659, 0, 4.49157}, {1.00, 0, 1.2083}}));
    r.push_back(ixn3_row("III", 3, 2.8, {{1.00, 0, 1.122}, {2.00562, 0, 4.62459}, {1.00, 0, 1.122}}));
    r.push_back(ixn3_row("III", 3, 3.0, {{1.00, 0, 1.05}, {2.00, 0, 4.71}, {1.00, 0, 1.05}}));
    r.push_back(ixn3_row("III", 3, 4.0, {{1.00, 0, 0.785}, {2.07, 0, 4.80}, {1.00, 0, 0.785}}));
    r.push_back(ixn3_row("III", 3, 5.0, {{1.00, 0, 0.628}, {2.21, 0, 4.65}, {1.00, 0, 0.628}}));
    r.push_back(ixn3_row("III", 3, 6.0, {{1.00, 0, 0.524}, {2.37, 0, 4.43}, {1.00, 0, 0.524}}));
    r.push_back(ixn3_row("III", 3, 7.0, {{1.00, 0, 0.449}, {2.53, 0, 4.19}, {1.00, 0, 0.449}}));
    // Table IV
    r.push_back(ix4_row("xi=0.46097", XiBranch::low,
                        {{1.00, 0, 4.71}, {1.00, 0.460966, 5.70612}, {1.00, -0.460966, 5.70612}, {1.00, 0, 4.71}}));
    r.push_back(ix4_row("xi=6.03285", XiBranch::high,
                        {{1.00, 0, 4.71}, {1.00, 6.03285, 1.02748}, {1.00, -6.03285, 1.02748}, {1.00, 0, 4.71}}));
    return r;
  }();
  return rows;
}

const std::vector<OptimizedRow>& optimized_toy_designs() {
  static const std::vector<OptimizedRow> rows = {
      {"X", "X", {{{1.06, 1.784, 1.521}, {2.029, -0.005, 1.547}, {1.048, -1.776, 1.516}}, {}}},
      {"X^(1/2)", "X^(1/2)", {{{2.043, 0.2884, 2.0}, {5.763, -1.8525, 2.0}, {2.043, 0.2885, 2.0}}, {}}},
      {"X^(1/3)", "X^(1/3)", {{{3.629, 0.2737, 7.0}, {3.607, -0.4956, 7.0}, {3.6319, 0.259, 7.0}}, {}}},
      {"H", "H", {{{4.773, -0.978, 2.0}, {1.1855, 0.5415, 2.0}, {1.7075, -0.31135, 2.0}}, {}}},
  };
  return rows;
}

const std::vector<GeometryRow>& perturbative_geometries() {
  static const std::vector<GeometryRow> rows = {
      {"-iX", 0.450, 0.45, 79.44, {{0.4857, 0.4345, 47.1117}, {0.4057, 0.4896, 40.5109}, {0.4857, 0.4345, 47.1117}}},
      {"(iX)^(1/2)", 0.4, 0.4, 118.972, {{0.426, 0.387, 79.892}, {0.318, 0.499, 55.8067}, {0.426, 0.387, 79.892}}},
      {"iH", 0.426, 0.460, 58.8037, {{0.379, 0.486, 29.6481}, {0.5, 0.31, 53.75}, {0.379, 0.486, 29.6481}}},
      {"sqrt13", 0.450, 0.45, 35.278, {{0.358, 0.457, 21.890}, {0.485, 0.34, 28.0211}, {0.358, 0.457, 21.890}}},
  };
  return rows;
}

const std::vector<GeometryRow>& optimized_geometries() {
  static const std::vector<GeometryRow> rows = {
      {"-iX", 0.450, 0.45, 79.44, {{0.375, 0.425, 49.254}, {0.429, 0.363, 52.608}, {0.391, 0.45, 46.63}}},
      {"(iX)^(1/2)", 0.4, 0.4, 20.0872, {{0.48, 0.326, 15.28}, {0.32, 0.478, 28.402}, {0.48, 0.324, 15.18}}},
      {"iH", 0.426, 0.460, 58.8037, {{0.430, 0.452, 70.29}, {0.422, 0.325, 33.522}, {0.430, 0.452, 70.328}}},
      {"sqrt13", 0.450, 0.45, 35.278, {{0.351, 0.46, 20.468}, {0.459, 0.34, 34.078}, {0.349, 0.46, 20.261}}},
  };
  return rows;
}

}  // namespace robgate::fixtures
