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

#include "robgate/optimize.hpp"

#include <cmath>
#include <sstream>

namespace robgate {

namespace {

void check_shape(const Eigen::VectorXd& params, int per_segment) {
  if (params.size() == 0 || params.size() % per_segment != 0) {
    throw ValidationError("parameter vector length must be a positive multiple of the roles per segment");
  }
}

}  // namespace

Unitary2d DetuningModel::realize(const Eigen::VectorXd& params, double error) const {
  check_shape(params, 3);
  Unitary2d u = Unitary2d::Identity();
  for (Eigen::Index k = 0; k < params.size(); k += 3) {
    const Segment s{params[k], params[k + 1], std::max(params[k + 2], 0.0)};
    u = propagator(s, error) * u;
  }
  if (bookend_angle_) {
    const Unitary2d c = bookend(*bookend_angle_);
    u = c * u * c;
  }
  return u;
}

Composite DetuningModel::to_gate(const Eigen::VectorXd& params) const {
  check_shape(params, 3);
  Composite g;
  for (Eigen::Index k = 0; k < params.size(); k += 3) {
    g.segments.push_back({params[k], params[k + 1], params[k + 2]});
  }
  g.bookend_angle = bookend_angle_;
  return g;
}

Eigen::VectorXd DetuningModel::to_params(const Composite& g) {
  Eigen::VectorXd p(3 * g.segments.size());
  for (std::size_t k = 0; k < g.segments.size(); ++k) {
    p[3 * k] = g.segments[k].omega;
    p[3 * k + 1] = g.segments[k].delta;
    p[3 * k + 2] = g.segments[k].t;
  }
  return p;
}

void validate(const Bounds& b) {
  if (b.roles.empty()) throw ValidationError("bounds need at least one role");
  for (const auto& [lo, hi] : b.roles) {
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
      throw ValidationError("each bound needs finite min < max");
    }
  }
}

void validate(const OptimizerConfig& cfg) {
  if (!(cfg.learning_rate > 0.0) || cfg.iterations < 0 || !(cfg.mu >= 0.0) || cfg.n_grid < 3 ||
      !(cfg.beta1 > 0.0 && cfg.beta1 < 1.0) || !(cfg.beta2 > 0.0 && cfg.beta2 < 1.0) || !(cfg.eps_adam > 0.0) ||
      !(cfg.gradient_step > 0.0)) {
    throw ValidationError("invalid optimizer configuration");
  }
}

double range_penalty(const Eigen::VectorXd& params, const Bounds& bounds) {
  check_shape(params, bounds.size());
  double total = 0.0;
  for (Eigen::Index i = 0; i < params.size(); ++i) {
    const auto [lo, hi] = bounds.roles[i % bounds.size()];
    total += std::max(0.0, params[i] - hi) + std::max(0.0, lo - params[i]);
  }
  return total;
}

double robust_fidelity_loss(const GateModel& model, const Eigen::VectorXd& params, const Unitary2d& target,
                            const WeightGrid& grid) {
  double loss = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i) {
    if (grid.weights[i] == 0.0) continue;
    loss += grid.weights[i] * (1.0 - fidelity(target, model.realize(params, grid.points[i])));
  }
  return loss;
}

double robust_fidelity_loss(const Composite& g, const Unitary2d& target, const WeightGrid& grid) {
  const DetuningModel model(g.bookend_angle);
  return robust_fidelity_loss(model, DetuningModel::to_params(g), target, grid);
}

LossTerms loss_terms(const GateModel& model, const Eigen::VectorXd& params, const Unitary2d& target,
                     const WeightGrid& grid, const Bounds& bounds, double mu) {
  LossTerms t;
  t.fidelity = robust_fidelity_loss(model, params, target, grid);
  t.penalty = range_penalty(params, bounds);
  t.total = t.fidelity + mu * t.penalty;
  return t;
}

double total_loss(const GateModel& model, const Eigen::VectorXd& params, const Unitary2d& target,
                  const WeightGrid& grid, const Bounds& bounds, double mu) {
  return loss_terms(model, params, target, grid, bounds, mu).total;
}

Eigen::VectorXd gradient(const LossFn& loss, const Eigen::VectorXd& params, double step) {
  Eigen::VectorXd g(params.size());
  Eigen::VectorXd probe = params;
  for (Eigen::Index j = 0; j < params.size(); ++j) {
    const double h = std::max(step * std::abs(params[j]), step);
    probe[j] = params[j] + h;
    const double up = loss(probe);
    probe[j] = params[j] - h;
    const double down = loss(probe);
    probe[j] = params[j];
    if (!std::isfinite(up) || !std::isfinite(down)) {
      std::ostringstream msg;
      msg << "loss is not finite when probing coordinate " << j;
      throw NumericalError(msg.str());
    }
    g[j] = (up - down) / (2.0 * h);
  }
  return g;
}

Eigen::VectorXd random_init(const Bounds& bounds, int segments, std::uint64_t seed) {
  validate(bounds);
  const int m = bounds.size();
  const CounterRng rng(seed);
  Eigen::VectorXd p(m * segments);
  for (int i = 0; i < p.size(); ++i) {
    const auto [lo, hi] = bounds.roles[i % m];
    p[i] = lo + (hi - lo) * rng.uniform(static_cast<std::uint64_t>(i));
  }
  return p;
}

OptimizationResult optimize_gate(const GateModel& model, const Eigen::VectorXd& init, const Unitary2d& target,
                                 const ErrorDistribution& dist, const Bounds& bounds, const OptimizerConfig& cfg) {
  validate(cfg);
  validate(bounds);
  if (bounds.size() != model.params_per_segment()) {
    throw ValidationError("bounds must give one (min, max) pair per segment role");
  }
  check_shape(init, bounds.size());
  const WeightGrid grid = weight_grid(dist, cfg.n_grid);

  const Eigen::Index n = init.size();
  Eigen::VectorXd scale = Eigen::VectorXd::Ones(n);
  if (cfg.scale_by_bounds) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto [lo, hi] = bounds.roles[i % bounds.size()];
      scale[i] = hi - lo;
    }
  }

  // Work in u = p / scale; the loss sees physical parameters.
  const LossFn scaled_loss = [&](const Eigen::VectorXd& u) {
    return total_loss(model, u.cwiseProduct(scale), target, grid, bounds, cfg.mu);
  };

  OptimizationResult result;
  Eigen::VectorXd u = init.cwiseQuotient(scale);
  LossTerms current = loss_terms(model, init, target, grid, bounds, cfg.mu);
  if (!std::isfinite(current.total)) {
    throw NumericalError("loss is not finite at the initial parameters");
  }
  result.history.push_back(current);
  result.params = init;
  result.best = current;

  Eigen::VectorXd m1 = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd m2 = Eigen::VectorXd::Zero(n);
  double b1_pow = 1.0;
  double b2_pow = 1.0;
  for (int it = 1; it <= cfg.iterations; ++it) {
    const Eigen::VectorXd g = gradient(scaled_loss, u, cfg.gradient_step);
    m1 = cfg.beta1 * m1 + (1.0 - cfg.beta1) * g;
    m2 = cfg.beta2 * m2 + (1.0 - cfg.beta2) * g.cwiseAbs2();
    b1_pow *= cfg.beta1;
    b2_pow *= cfg.beta2;
    const Eigen::VectorXd m_hat = m1 / (1.0 - b1_pow);
    const Eigen::VectorXd v_hat = m2 / (1.0 - b2_pow);
    u -= cfg.learning_rate * m_hat.cwiseQuotient((v_hat.cwiseSqrt().array() + cfg.eps_adam).matrix());

    const Eigen::VectorXd p = u.cwiseProduct(scale);
    current = loss_terms(model, p, target, grid, bounds, cfg.mu);
    if (!std::isfinite(current.total) || !u.allFinite()) {
      std::ostringstream msg;
      msg << "optimizer diverged at iteration " << it;
      throw NumericalError(msg.str());
    }
    result.history.push_back(current);
    if (current.total < result.best.total) {
      result.best = current;
      result.params = p;
      result.best_iteration = it;
    }
  }
  return result;
}

}  // namespace robgate
