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

#include "robgate/apps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace robgate::apps {

namespace {

constexpr double kPi = std::numbers::pi;

void apply_single(const Unitary2d& g, int q, StateVector& psi) {
  const Eigen::Index stride = Eigen::Index{1} << q;
  for (Eigen::Index i = 0; i < psi.size(); ++i) {
    if (i & stride) continue;
    const std::complex<double> a = psi[i], b = psi[i | stride];
    psi[i] = g(0, 0) * a + g(0, 1) * b;
    psi[i | stride] = g(1, 0) * a + g(1, 1) * b;
  }
}

Unitary2d realization_at(const Realization& r, double error, const photonic::PhotonicFitMap* map) {
  if (const auto* c = std::get_if<Composite>(&r)) return realize(*c, error);
  if (!map) throw ValidationError("geometry realizations need a photonic map");
  return photonic::geometry_realize(std::get<photonic::GeometryGate>(r), *map, error * photonic::kUmPerNm);
}

}  // namespace

void validate(const SurfaceCodeModel& model) {
  if (!(model.p_th > 0.0 && model.p_th < 1.0)) throw ValidationError("threshold must lie in (0, 1)");
  if (model.d < 3 || model.d % 2 == 0) throw ValidationError("surface array size d must be odd and >= 3");
}

LogicalError logical_error(double p, const SurfaceCodeModel& model) {
  validate(model);
  if (!(std::isfinite(p) && p >= 0.0)) throw ValidationError("physical error rate must be >= 0");
  const double v = std::pow(p / model.p_th, model.effective_distance());
  if (v > 1.0) return {1.0, true};
  return {v, false};
}

State2 random_qubit_state(std::uint64_t seed, std::uint64_t index) {
  const CounterRng rng(seed);
  // A zero vector has probability zero; redraw on fresh lanes if it occurs.
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t lane = 4 * attempt;
    State2 v(std::complex<double>(rng.uniform(index, lane), rng.uniform(index, lane + 1)),
             std::complex<double>(rng.uniform(index, lane + 2), rng.uniform(index, lane + 3)));
    const double norm = v.norm();
    if (norm > 0.0) return v / norm;
  }
}

double physical_error_rate(const Unitary2d& u, const Unitary2d& ideal, int n_states, std::uint64_t seed,
                           OverlapMode mode) {
  if (n_states < 1) throw ValidationError("need at least one state");
  double lowest = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_states; ++i) {
    const State2 psi = random_qubit_state(seed, static_cast<std::uint64_t>(i));
    const double overlap = std::abs((ideal * psi).dot(u * psi));
    lowest = std::min(lowest, overlap);
  }
  lowest = std::min(lowest, 1.0);
  return mode == OverlapMode::one_minus_min ? 1.0 - lowest : lowest;
}

std::vector<CircuitOp> qft_circuit(int n) {
  if (n < 1 || n > kMaxQftQubits) {
    throw ValidationError("QFT size must lie in [1, " + std::to_string(kMaxQftQubits) + "]");
  }
  std::vector<CircuitOp> ops;
  // Qubit 0 is the most significant input bit of the transform.
  for (int j = 0; j < n; ++j) {
    ops.push_back({OpKind::hadamard, j, -1, 0});
    for (int c = j + 1; c < n; ++c) ops.push_back({OpKind::controlled_phase, j, c, c - j + 1});
  }
  for (int j = 0; j < n / 2; ++j) ops.push_back({OpKind::swap, j, n - 1 - j, 0});
  return ops;
}

std::vector<CircuitOp> inverse_circuit(const std::vector<CircuitOp>& ops) {
  std::vector<CircuitOp> inv(ops.rbegin(), ops.rend());
  for (auto& op : inv) {
    if (op.kind == OpKind::controlled_phase) op.k = -op.k;
  }
  return inv;
}

void apply(const std::vector<CircuitOp>& ops, StateVector& psi, const Unitary2d* hadamard) {
  const Unitary2d h_ideal = standard_gate("H");
  const Unitary2d& h = hadamard ? *hadamard : h_ideal;
  for (const auto& op : ops) {
    switch (op.kind) {
      case OpKind::hadamard:
        apply_single(h, op.target, psi);
        break;
      case OpKind::controlled_phase: {
        const double angle = (op.k > 0 ? 1.0 : -1.0) * 2.0 * kPi / std::ldexp(1.0, std::abs(op.k));
        const std::complex<double> phase = std::polar(1.0, angle);
        const Eigen::Index mask = (Eigen::Index{1} << op.target) | (Eigen::Index{1} << op.control);
        for (Eigen::Index i = 0; i < psi.size(); ++i) {
          if ((i & mask) == mask) psi[i] *= phase;
        }
        break;
      }
      case OpKind::swap: {
        const Eigen::Index a = Eigen::Index{1} << op.target, b = Eigen::Index{1} << op.control;
        for (Eigen::Index i = 0; i < psi.size(); ++i) {
          if ((i & a) && !(i & b)) std::swap(psi[i], psi[(i & ~a) | b]);
        }
        break;
      }
    }
  }
}

void validate(const QftConfig& cfg) {
  if (cfg.n_qubits < 1 || cfg.n_qubits > kMaxQftQubits) {
    throw ValidationError("QFT size must lie in [1, " + std::to_string(kMaxQftQubits) + "]");
  }
  if (cfg.shots < 1) throw ValidationError("need at least one shot");
  if (!cfg.realizations.contains("H")) throw ValidationError("realization for gate label H is missing");
  if (!cfg.fixed_error) validate(cfg.error);
  if (cfg.fixed_error && !std::isfinite(*cfg.fixed_error)) throw ValidationError("fixed error must be finite");
}

QftResult qft_infidelity(const QftConfig& cfg, const photonic::PhotonicFitMap* map) {
  validate(cfg);
  const auto ops = qft_circuit(cfg.n_qubits);
  const auto inv = inverse_circuit(ops);
  const Eigen::Index dim = Eigen::Index{1} << cfg.n_qubits;
  StateVector start = StateVector::Zero(dim);
  start[0] = 1.0;
  apply(inv, start);

  const Realization& h = cfg.realizations.at("H");
  double sum = 0.0, sum_sq = 0.0;
  for (int shot = 0; shot < cfg.shots; ++shot) {
    const double error =
        cfg.fixed_error ? *cfg.fixed_error : sample_one(cfg.error, cfg.seed, static_cast<std::uint64_t>(shot));
    const Unitary2d noisy = realization_at(h, error, map);
    StateVector psi = start;
    apply(ops, psi, &noisy);
    const double overlap = std::abs(psi[0]);
    const double value = cfg.mode == InfidelityMode::one_minus_squared ? 1.0 - overlap * overlap : overlap;
    sum += value;
    sum_sq += value * value;
  }
  QftResult r;
  r.shots = cfg.shots;
  r.mean = sum / cfg.shots;
  r.std = cfg.shots > 1 ? std::sqrt(std::max(0.0, (sum_sq - cfg.shots * r.mean * r.mean) / (cfg.shots - 1))) : 0.0;
  return r;
}

}  // namespace robgate::apps
