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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "robgate/composite.hpp"
#include "robgate/errors.hpp"
#include "robgate/photonic.hpp"

namespace robgate::apps {

// ---------------------------------------------------------------------------
// Surface-code scaling.

inline constexpr double kSurfaceCodeThreshold = 0.0057;

struct SurfaceCodeModel {
  double p_th = kSurfaceCodeThreshold;
  int d = 3;  // odd array size; the effective distance is (d + 1) / 2

  int effective_distance() const { return (d + 1) / 2; }
};

void validate(const SurfaceCodeModel& model);

struct LogicalError {
  double value = 0.0;
  bool clamped = false;
};

/// (p / p_th)^((d + 1) / 2), clamped to [0, 1].
LogicalError logical_error(double p, const SurfaceCodeModel& model);

// ---------------------------------------------------------------------------
// Physical error rate from random-state overlaps.

using State2 = Eigen::Vector2cd;

/// (a_r + i a_i, b_r + i b_i) with all four parts uniform on [0, 1],
/// normalised.
State2 random_qubit_state(std::uint64_t seed, std::uint64_t index = 0);

enum class OverlapMode {
  one_minus_min,  // 1 - min overlap, an error rate
  min_overlap,    // the bare minimum overlap
};

/// Minimum over n_states random states of |<ideal psi, u psi>|, reported as
/// 1 - min (default) or as the minimum itself. State i uses
/// random_qubit_state(seed, i), so a larger n_states extends the same set.
double physical_error_rate(const Unitary2d& u, const Unitary2d& ideal, int n_states, std::uint64_t seed,
                           OverlapMode mode = OverlapMode::one_minus_min);

// ---------------------------------------------------------------------------
// Quantum Fourier transform.

enum class OpKind { hadamard, controlled_phase, swap };

/// One circuit step. Controlled-phase applies diag(1, e^{2 pi i / 2^k}) on
/// `target` when `control` is set; swap exchanges `target` and `control`.
struct CircuitOp {
  OpKind kind = OpKind::hadamard;
  int target = 0;
  int control = -1;
  int k = 0;

  bool operator==(const CircuitOp&) const = default;
};

inline constexpr int kMaxQftQubits = 12;

/// Hadamard on each qubit followed by its controlled rotations, then the
/// qubit-reversal swaps. n = 1 is accepted and gives a single Hadamard.
std::vector<CircuitOp> qft_circuit(int n);

/// Inverse circuit: reversed order, conjugated phases.
std::vector<CircuitOp> inverse_circuit(const std::vector<CircuitOp>& ops);

using StateVector = Eigen::VectorXcd;

/// Qubit q is bit q of the basis index. `hadamard` replaces every
/// Hadamard when provided.
void apply(const std::vector<CircuitOp>& ops, StateVector& psi, const Unitary2d* hadamard = nullptr);

/// A single-qubit gate design in either model.
using Realization = std::variant<Composite, photonic::GeometryGate>;

enum class InfidelityMode {
  one_minus_squared,  // 1 - |<0|QFT~ QFT^-1|0>|^2
  raw_overlap,        // |<0|QFT~ QFT^-1|0>|
};

struct QftConfig {
  int n_qubits = 5;
  /// Gate label -> realization. The QFT uses only "H".
  std::map<std::string, Realization> realizations;
  /// Shared error per shot: detuning for toy designs, width offset in nm
  /// for geometry designs. Ignored when fixed_error is set.
  ErrorDistribution error{DistributionKind::gaussian, 0.1};
  std::optional<double> fixed_error;
  int shots = 1000;
  std::uint64_t seed = 0;
  InfidelityMode mode = InfidelityMode::one_minus_squared;
};

void validate(const QftConfig& cfg);

struct QftResult {
  double mean = 0.0;
  double std = 0.0;
  int shots = 0;
};

/// Noisy QFT applied to QFT^-1 |0...0>, with every Hadamard replaced by
/// the "H" realization at the shot's shared error. `map` is required for
/// geometry realizations.
QftResult qft_infidelity(const QftConfig& cfg, const photonic::PhotonicFitMap* map = nullptr);

}  // namespace robgate::apps
