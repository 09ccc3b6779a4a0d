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

#include "robgate/errors.hpp"

#include <cmath>
#include <numbers>

#include "robgate/error.hpp"

namespace robgate {

std::string_view to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::gaussian:
      return "gaussian";
    case DistributionKind::poisson_scaled:
      return "poisson_scaled";
    case DistributionKind::uniform3sigma:
      return "uniform3sigma";
    case DistributionKind::exponential:
      return "exponential";
  }
  return "gaussian";
}

DistributionKind distribution_kind_from_string(std::string_view name) {
  if (name == "gaussian") return DistributionKind::gaussian;
  if (name == "poisson_scaled") return DistributionKind::poisson_scaled;
  if (name == "uniform3sigma") return DistributionKind::uniform3sigma;
  if (name == "exponential") return DistributionKind::exponential;
  throw ValidationError("unknown distribution kind: " + std::string(name));
}

void validate(const ErrorDistribution& dist) {
  if (!std::isfinite(dist.sigma) || dist.sigma <= 0.0) {
    throw ValidationError("distribution sigma must be positive and finite");
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t CounterRng::bits(std::uint64_t index, std::uint64_t lane) const {
  std::uint64_t h = splitmix64(seed_);
  h = splitmix64(h ^ index);
  return splitmix64(h ^ (lane * 0xd1b54a32d192ed03ULL));
}

double CounterRng::uniform(std::uint64_t index, std::uint64_t lane) const {
  // 53 random mantissa bits, shifted by half an ulp to stay off 0 and 1.
  return (static_cast<double>(bits(index, lane) >> 11) + 0.5) * 0x1.0p-53;
}

double sample_one(const ErrorDistribution& dist, std::uint64_t seed, std::uint64_t index) {
  const CounterRng rng(seed);
  switch (dist.kind) {
    case DistributionKind::gaussian: {
      const double u1 = rng.uniform(index, 0);
      const double u2 = rng.uniform(index, 1);
      return dist.sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }
    case DistributionKind::poisson_scaled: {
      const double u = rng.uniform(index, 0);
      double p = std::exp(-1.0);
      double cdf = p;
      int k = 0;
      while (u > cdf && k < 64) {
        ++k;
        p /= k;
        cdf += p;
      }
      return dist.sigma * k;
    }
    case DistributionKind::uniform3sigma:
      return dist.sigma * (6.0 * rng.uniform(index, 0) - 3.0);
    case DistributionKind::exponential:
      return -dist.sigma * std::log(rng.uniform(index, 0));
  }
  return 0.0;
}

std::vector<double> sample(const ErrorDistribution& dist, std::uint64_t seed, std::size_t count) {
  validate(dist);
  if (count < 1) {
    throw ValidationError("sample count must be at least 1");
  }
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = sample_one(dist, seed, i);
  return out;
}

WeightGrid weight_grid(const ErrorDistribution& dist, int n) {
  validate(dist);
  if (n < 3) {
    throw ValidationError("weight grid needs at least 3 points");
  }
  const double s = dist.sigma;
  WeightGrid grid;
  grid.points.resize(n);
  grid.weights.setZero(n);
  // Built from integer offsets so that points[n-1-i] == -points[i] exactly.
  const double step = 6.0 * s / (n - 1);
  for (int i = 0; i < n; ++i) {
    grid.points[i] = 0.5 * (2 * i - (n - 1)) * step;
  }
  for (int i = 0; i < n; ++i) {
    const double x = grid.points[i];
    switch (dist.kind) {
      case DistributionKind::gaussian:
        grid.weights[i] = std::exp(-x * x / (2.0 * s * s));
        break;
      case DistributionKind::uniform3sigma:
        grid.weights[i] = 1.0;
        break;
      case DistributionKind::exponential:
        grid.weights[i] = x < 0.0 ? 0.0 : std::exp(-x / s);
        break;
      case DistributionKind::poisson_scaled:
        break;
    }
  }
  if (dist.kind == DistributionKind::poisson_scaled) {
    double p = std::exp(-1.0);
    for (int k = 0; k <= 3; ++k) {
      if (k > 0) p /= k;
      const long idx = std::lround(k * s / step + 0.5 * (n - 1));
      grid.weights[std::min<long>(idx, n - 1)] += p;
    }
  }
  grid.weights /= grid.weights.sum();
  return grid;
}

}  // namespace robgate
