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

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "robgate/composite.hpp"
#include "robgate/errors.hpp"

namespace robgate {

/// Maps a flat parameter vector (m roles per segment, segment-major) and a
/// shared error value onto the realised gate.
class GateModel {
 public:
  virtual ~GateModel() = default;
  virtual int params_per_segment() const = 0;
  virtual Unitary2d realize(const Eigen::VectorXd& params, double error) const = 0;
};

/// Detuning error model: roles (omega, delta, t), error added to every delta.
class DetuningModel final : public GateModel {
 public:
  DetuningModel() = default;
  explicit DetuningModel(std::optional<double> bookend_angle) : bookend_angle_(bookend_angle) {}

  int params_per_segment() const override { return 3; }
  Unitary2d realize(const Eigen::VectorXd& params, double error) const override;

  Composite to_gate(const Eigen::VectorXd& params) const;
  static Eigen::VectorXd to_params(const Composite& g);

 private:
  std::optional<double> bookend_angle_;
};

/// Per-role (min, max) limits, shared by every segment.
struct Bounds {
  std::vector<std::pair<double, double>> roles;

  int size() const { return static_cast<int>(roles.size()); }
};

void validate(const Bounds& b);

struct OptimizerConfig {
  double learning_rate = 1e-3;
  int iterations = 1000;
  double mu = 10.0;
  int n_grid = 2501;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps_adam = 1e-8;
  std::uint64_t seed = 0;
  double gradient_step = 1e-6;
  /// Adam steps are taken in coordinates scaled by each role's bound
  /// width, so the learning rate is a fraction of the admissible range.
  bool scale_by_bounds = true;
};

void validate(const OptimizerConfig& cfg);

/// Sum of hinge violations max(0, p - max) + max(0, min - p) over all
/// parameters.
double range_penalty(const Eigen::VectorXd& params, const Bounds& bounds);

/// sum_i w_i (1 - F(target, U(x_i))).
double robust_fidelity_loss(const GateModel& model, const Eigen::VectorXd& params, const Unitary2d& target,
                            const WeightGrid& grid);

double robust_fidelity_loss(const Composite& g, const Unitary2d& target, const WeightGrid& grid);

struct LossTerms {
  double fidelity = 0.0;
  double penalty = 0.0;
  double total = 0.0;
};

LossTerms loss_terms(const GateModel& model, const Eigen::VectorXd& params, const Unitary2d& target,
                     const WeightGrid& grid, const Bounds& bounds, double mu);

double total_loss(const GateModel& model, const Eigen::VectorXd& params, const Unitary2d& target,
                  const WeightGrid& grid, const Bounds& bounds, double mu);

using LossFn = std::function<double(const Eigen::VectorXd&)>;

/// Central differences with per-coordinate step max(step |p_j|, step).
Eigen::VectorXd gradient(const LossFn& loss, const Eigen::VectorXd& params, double step = 1e-6);

/// Uniform draw inside the bounds for `segments` segments.
Eigen::VectorXd random_init(const Bounds& bounds, int segments, std::uint64_t seed);

struct OptimizationResult {
  Eigen::VectorXd params;  // best parameters seen
  std::vector<LossTerms> history;  // history[0] is the initial point
  LossTerms best;
  int best_iteration = 0;
};

/// Adam with bias correction on the total loss over a truncated weight grid
/// built from `dist`. Returns the best parameters seen, so the final loss
/// never exceeds the initial one.
OptimizationResult optimize_gate(const GateModel& model, const Eigen::VectorXd& init, const Unitary2d& target,
                                 const ErrorDistribution& dist, const Bounds& bounds, const OptimizerConfig& cfg);

}  // namespace robgate
