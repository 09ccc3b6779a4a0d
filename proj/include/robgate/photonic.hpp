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

// Directional-coupler realization. All lengths are in micrometres and all
// propagation constants in rad/um.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "robgate/composite.hpp"
#include "robgate/errors.hpp"
#include "robgate/optimize.hpp"

namespace robgate::photonic {

inline constexpr double kDefaultThetaC = 0.232;
inline constexpr double kDefaultGapUm = 1.2;
/// Widths may leave the fitted range by this much before evaluation fails.
inline constexpr double kExtrapolationLimitUm = 0.050;
inline constexpr double kUmPerNm = 1e-3;

/// Fitted geometry-to-dynamics map.
///
///   delta_beta(w1, w2) = sum_i a_i w1^i + b_i w2^i,  b_i = -a_i
///   kappa(w1, w2)      = c0 + c1 s exp(c2 s),        s = w1 + w2
struct PhotonicFitMap {
  std::array<double, 5> detuning_a{};
  std::array<double, 5> detuning_b{};
  std::array<double, 3> coupling{};
  double width_min = 0.3;
  double width_max = 0.5;
  double gap = kDefaultGapUm;
  double theta_c = kDefaultThetaC;
  std::string provenance;
};

/// Map with b = -a, which makes delta_beta vanish at equal widths.
PhotonicFitMap make_map(const std::array<double, 5>& detuning_a, const std::array<double, 3>& coupling,
                        double width_min = 0.3, double width_max = 0.5, double gap = kDefaultGapUm,
                        double theta_c = kDefaultThetaC);

/// Checks antisymmetry, range ordering and kappa > 0 over the valid range.
void validate(const PhotonicFitMap& map);

double delta_beta(const PhotonicFitMap& map, double w1, double w2);
double kappa(const PhotonicFitMap& map, double w1, double w2);

/// Largest distance (um) by which either width lies outside the fitted
/// range; 0 inside.
double extrapolation_excess(const PhotonicFitMap& map, double w1, double w2);

struct GeometrySegment {
  double w1 = 0.0;
  double w2 = 0.0;
  double z = 0.0;
  double gap = kDefaultGapUm;

  bool operator==(const GeometrySegment&) const = default;
};

struct GeometryGate {
  std::vector<GeometrySegment> segments;
  double theta_c = kDefaultThetaC;

  bool operator==(const GeometryGate&) const = default;
};

/// Non-empty, z >= 0, one shared gap that matches the map, widths inside
/// the map's range.
void validate(const GeometryGate& g, const PhotonicFitMap& map);

/// Toy-model segments (kappa, delta_beta, z) at a shared width offset dw,
/// with the bookend angle theta_c. z is passed as the duration because the
/// propagator already carries the half-angle factor.
Composite to_composite(const GeometryGate& g, const PhotonicFitMap& map, double dw);

/// U_c (U_N ... U_1) U_c at width offset dw (um). Throws if any shifted
/// width leaves the range by more than the extrapolation limit.
Unitary2d geometry_realize(const GeometryGate& g, const PhotonicFitMap& map, double dw);

/// True when some shifted width is outside the fitted range but within
/// the extrapolation limit.
bool extrapolates(const GeometryGate& g, const PhotonicFitMap& map, double dw);

/// Length giving rotation angle target_angle = sqrt(kappa^2 + delta_beta^2) z.
GeometrySegment fine_tune_length(const GeometrySegment& seg, const PhotonicFitMap& map, double target_angle);

/// Equal-width single segment implementing an X-axis rotation by `angle`.
GeometryGate uniform_coupler(const PhotonicFitMap& map, double width, double angle, double theta_c = 0.0);

/// Re-fits segment lengths (widths fixed) so that the gate implements
/// `target` at dw = 0 under `map`. Used to carry published geometries over
/// to a different fit. Returns the best gate found over a multi-start
/// Levenberg-Marquardt search.
GeometryGate retune_lengths(const GeometryGate& g, const PhotonicFitMap& map, const Unitary2d& target);

// ---------------------------------------------------------------------------
// Sample grids and fitting.

struct SamplePoint {
  double w1, w2, delta_beta, kappa;
};

using SampleGrid = std::vector<SamplePoint>;

/// Synthetic stand-in for mode-solver data.
///
/// Each guide has propagation constant k0 (n_inf - A exp(-w / L)), so
/// delta_beta = beta(w1) - beta(w2) is antisymmetric under the width swap.
/// kappa = exp(-(gap - 1.2) / decay) (c0 + c1 s exp(c2 s)). `noise` is the
/// relative standard deviation of multiplicative Gaussian noise.
struct SurrogateSpec {
  double width_min = 0.3;
  double width_max = 0.5;
  int points = 400;  // rounded up to a square lattice
  double gap = kDefaultGapUm;
  double noise = 0.0;
  std::uint64_t seed = 0;
};

void validate(const SurrogateSpec& spec);

/// Noiseless surrogate values at one geometry.
double surrogate_delta_beta(double w1, double w2);
double surrogate_kappa(double w1, double w2, double gap = kDefaultGapUm);

SampleGrid surrogate_grid(const SurrogateSpec& spec);

/// Mean absolute fit error, absolute and relative to the mean magnitude of
/// the data.
struct FitResiduals {
  double detuning_abs = 0.0;
  double detuning_rel = 0.0;
  double coupling_abs = 0.0;
  double coupling_rel = 0.0;
};

FitResiduals residuals(const PhotonicFitMap& map, const SampleGrid& grid);

struct FitResult {
  PhotonicFitMap map;
  FitResiduals residuals;
};

inline constexpr int kMinFitPoints = 30;

/// Detuning: linear least squares on the antisymmetric basis w1^i - w2^i
/// (i = 1..4). Coupling: profile search over the exponent c2 with (c0, c1)
/// solved linearly, then a Levenberg-Marquardt polish on all three.
FitResult fit_map(const SampleGrid& grid, double gap = kDefaultGapUm, double theta_c = kDefaultThetaC);

/// Map fitted to a noiseless 21 x 21 surrogate grid over [0.3, 0.5] um.
const PhotonicFitMap& reference_map();

// ---------------------------------------------------------------------------
// Width-error sweeps.

enum class SweepMode { random, deterministic };

struct FidelityStats {
  double mean = 0.0;
  double std = 0.0;
  std::vector<double> dw_nm;
  std::vector<double> fidelity;
};

/// dist.sigma is in nanometres. Random mode draws n offsets from dist;
/// deterministic mode uses n evenly spaced offsets on [-3 sigma, 3 sigma].
FidelityStats width_error_sweep(const GeometryGate& g, const Unitary2d& target, const PhotonicFitMap& map,
                                const ErrorDistribution& dist_nm, SweepMode mode, int n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Optimizer model.

/// Roles (w1, w2, z) per segment; error is the shared width offset in um.
/// Evaluation does not enforce the extrapolation limit, the range penalty
/// keeps widths in bounds.
class GeometryModel final : public GateModel {
 public:
  GeometryModel(PhotonicFitMap map, double theta_c) : map_(std::move(map)), theta_c_(theta_c) {}

  int params_per_segment() const override { return 3; }
  Unitary2d realize(const Eigen::VectorXd& params, double error) const override;

  GeometryGate to_gate(const Eigen::VectorXd& params) const;
  static Eigen::VectorXd to_params(const GeometryGate& g);

 private:
  PhotonicFitMap map_;
  double theta_c_;
};

}  // namespace robgate::photonic
