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
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace robgate {

enum class DistributionKind { gaussian, poisson_scaled, uniform3sigma, exponential };

std::string_view to_string(DistributionKind kind);
DistributionKind distribution_kind_from_string(std::string_view name);

/// Law of the fully-correlated scalar error shared by every segment.
///
/// gaussian:       N(0, sigma^2)
/// poisson_scaled: sigma * Poisson(1), not centred
/// uniform3sigma:  U[-3 sigma, 3 sigma]
/// exponential:    Exp with mean sigma, support x >= 0
struct ErrorDistribution {
  DistributionKind kind = DistributionKind::gaussian;
  double sigma = 1.0;

  bool symmetric() const {
    return kind == DistributionKind::gaussian || kind == DistributionKind::uniform3sigma;
  }
};

void validate(const ErrorDistribution& dist);

/// Counter-based uniform stream: SplitMix64 finaliser applied to a hash of
/// (seed, index, lane). Every value is a pure function of its coordinates,
/// so sweeps can be evaluated in any order and still agree bit for bit.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t bits(std::uint64_t index, std::uint64_t lane = 0) const;
  /// Uniform double in the open interval (0, 1).
  double uniform(std::uint64_t index, std::uint64_t lane = 0) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// The index-th draw from dist under seed. Gaussian draws use Box-Muller
/// on lanes 0 and 1; Poisson draws use inversion on lane 0.
double sample_one(const ErrorDistribution& dist, std::uint64_t seed, std::uint64_t index);

std::vector<double> sample(const ErrorDistribution& dist, std::uint64_t seed, std::size_t count);

/// Evenly spaced points on [-3 sigma, 3 sigma] with normalised weights.
struct WeightGrid {
  Eigen::VectorXd points;
  Eigen::VectorXd weights;

  Eigen::Index size() const { return points.size(); }
};

/// Points x_i = -3 sigma + i * 6 sigma / (n - 1), weights proportional to
/// the density at x_i. The discrete Poisson law puts each mass e^-1/k! on the
/// grid point nearest k * sigma.
WeightGrid weight_grid(const ErrorDistribution& dist, int n);

}  // namespace robgate
