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

#include "robgate/photonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/LevenbergMarquardt>
#include <unsupported/Eigen/NumericalDiff>

namespace robgate::photonic {

namespace {

constexpr double kPi = std::numbers::pi;

// Surrogate cross-section: 1.55 um light, exponential approach of the
// effective index towards its wide-guide limit.
constexpr double kWavenumber = 2.0 * kPi / 1.55;
constexpr double kIndexContrast = 0.146;
constexpr double kIndexDecayUm = 0.2;
constexpr double kGapDecayUm = 0.18;
constexpr double kSurrogateGapRef = 1.2;
constexpr std::array<double, 3> kSurrogateCoupling{0.004, 0.98, -4.0};

double poly(const std::array<double, 5>& c, double w) {
  return c[0] + w * (c[1] + w * (c[2] + w * (c[3] + w * c[4])));
}

double coupling_form(const std::array<double, 3>& c, double s) { return c[0] + c[1] * s * std::exp(c[2] * s); }

void check_width(const PhotonicFitMap& map, double w, std::size_t segment) {
  const double excess = std::max(map.width_min - w, w - map.width_max);
  if (!(excess <= kExtrapolationLimitUm + 1e-12)) {
    std::ostringstream msg;
    msg << "segment " << segment + 1 << " width " << w << " um is more than " << kExtrapolationLimitUm * 1e3
        << " nm outside the fitted range [" << map.width_min << ", " << map.width_max << "]";
    throw ValidationError(msg.str());
  }
}

// SU(2) coordinates (c, sx, sy, sz) of u = c I - i (sx X + sy Y + sz Z)
// after removing the determinant phase.
Eigen::Vector4d su2_coords(const Unitary2d& m) {
  Unitary2d u = m / std::sqrt(m.determinant());
  return {((u(0, 0) + u(1, 1)) / 2.0).real(), -((u(0, 1) + u(1, 0)) / 2.0).imag(),
          ((u(1, 0) - u(0, 1)) / 2.0).real(), -((u(0, 0) - u(1, 1)) / 2.0).imag()};
}

struct CouplingFunctor : Eigen::DenseFunctor<double> {
  CouplingFunctor(const Eigen::VectorXd& s, const Eigen::VectorXd& k)
      : Eigen::DenseFunctor<double>(3, static_cast<int>(s.size())), s_(s), k_(k) {}

  int operator()(const InputType& x, ValueType& f) const {
    f = (x[0] + x[1] * s_.array() * (x[2] * s_.array()).exp()).matrix() - k_;
    return 0;
  }

  int df(const InputType& x, JacobianType& j) const {
    const Eigen::ArrayXd e = (x[2] * s_.array()).exp();
    j.resize(s_.size(), 3);
    j.col(0).setOnes();
    j.col(1) = (s_.array() * e).matrix();
    j.col(2) = (x[1] * s_.array().square() * e).matrix();
    return 0;
  }

  const Eigen::VectorXd& s_;
  const Eigen::VectorXd& k_;
};

// Linear (c0, c1) for a fixed exponent; returns the sum of squared errors.
double profile_coupling(const Eigen::VectorXd& s, const Eigen::VectorXd& k, double c2, Eigen::Vector2d* coeffs) {
  Eigen::MatrixXd a(s.size(), 2);
  a.col(0).setOnes();
  a.col(1) = (s.array() * (c2 * s.array()).exp()).matrix();
  const Eigen::Vector2d x = a.colPivHouseholderQr().solve(k);
  if (coeffs) *coeffs = x;
  return (a * x - k).squaredNorm();
}

struct LengthFunctor : Eigen::DenseFunctor<double> {
  LengthFunctor(const GeometryGate& g, const PhotonicFitMap& map, const Eigen::Vector4d& target)
      : Eigen::DenseFunctor<double>(static_cast<int>(g.segments.size()),
                                    std::max(4, static_cast<int>(g.segments.size()))),
        g_(g),
        map_(map),
        target_(target) {}

  int operator()(const InputType& z, ValueType& f) const {
    GeometryGate trial = g_;
    for (std::size_t k = 0; k < trial.segments.size(); ++k) trial.segments[k].z = std::abs(z[k]);
    const Eigen::Vector4d q = su2_coords(geometry_realize(trial, map_, 0.0));
    const double sign = q.dot(target_) < 0 ? -1.0 : 1.0;
    f.setZero(values());
    f.head<4>() = q - sign * target_;
    return 0;
  }

  const GeometryGate& g_;
  const PhotonicFitMap& map_;
  Eigen::Vector4d target_;
};

}  // namespace

PhotonicFitMap make_map(const std::array<double, 5>& detuning_a, const std::array<double, 3>& coupling,
                        double width_min, double width_max, double gap, double theta_c) {
  PhotonicFitMap m;
  m.detuning_a = detuning_a;
  for (int i = 0; i < 5; ++i) m.detuning_b[i] = -detuning_a[i];
  m.coupling = coupling;
  m.width_min = width_min;
  m.width_max = width_max;
  m.gap = gap;
  m.theta_c = theta_c;
  validate(m);
  return m;
}

void validate(const PhotonicFitMap& map) {
  for (int i = 0; i < 5; ++i) {
    const double a = map.detuning_a[i], b = map.detuning_b[i];
    if (!std::isfinite(a) || !std::isfinite(b)) throw ValidationError("detuning coefficients must be finite");
    if (std::abs(a + b) > 1e-12 * std::max({1.0, std::abs(a), std::abs(b)})) {
      throw ValidationError("detuning coefficients must satisfy b_i = -a_i");
    }
  }
  for (double c : map.coupling) {
    if (!std::isfinite(c)) throw ValidationError("coupling coefficients must be finite");
  }
  if (!(std::isfinite(map.width_min) && std::isfinite(map.width_max) && map.width_min > 0.0 &&
        map.width_min < map.width_max)) {
    throw ValidationError("width range must satisfy 0 < min < max");
  }
  if (!(std::isfinite(map.gap) && map.gap > 0.0)) throw ValidationError("gap must be positive");
  if (!(map.theta_c >= 0.0 && map.theta_c < kPi / 2)) throw ValidationError("theta_c must lie in [0, pi/2)");
  constexpr int kChecks = 21;
  for (int i = 0; i < kChecks; ++i) {
    for (int j = 0; j < kChecks; ++j) {
      const double w1 = map.width_min + (map.width_max - map.width_min) * i / (kChecks - 1);
      const double w2 = map.width_min + (map.width_max - map.width_min) * j / (kChecks - 1);
      if (!(kappa(map, w1, w2) > 0.0)) throw ValidationError("coupling must be positive over the width range");
    }
  }
}

double delta_beta(const PhotonicFitMap& map, double w1, double w2) {
  return poly(map.detuning_a, w1) + poly(map.detuning_b, w2);
}

double kappa(const PhotonicFitMap& map, double w1, double w2) { return coupling_form(map.coupling, w1 + w2); }

double extrapolation_excess(const PhotonicFitMap& map, double w1, double w2) {
  return std::max({0.0, map.width_min - w1, w1 - map.width_max, map.width_min - w2, w2 - map.width_max});
}

void validate(const GeometryGate& g, const PhotonicFitMap& map) {
  if (g.segments.empty()) throw ValidationError("geometry gate needs at least one segment");
  if (!(g.theta_c >= 0.0 && g.theta_c < kPi / 2)) throw ValidationError("theta_c must lie in [0, pi/2)");
  for (std::size_t k = 0; k < g.segments.size(); ++k) {
    const auto& s = g.segments[k];
    if (!std::isfinite(s.w1) || !std::isfinite(s.w2) || !std::isfinite(s.z) || !(s.z >= 0.0)) {
      throw ValidationError("segment " + std::to_string(k + 1) + " needs finite widths and z >= 0");
    }
    if (std::abs(s.gap - g.segments.front().gap) > 1e-12) {
      throw ValidationError("all segments must share one gap");
    }
    if (std::abs(s.gap - map.gap) > 1e-9) {
      throw ValidationError("segment gap does not match the map's gap");
    }
    if (extrapolation_excess(map, s.w1, s.w2) > 1e-12) {
      throw ValidationError("segment " + std::to_string(k + 1) + " widths lie outside the map's range");
    }
  }
}

Composite to_composite(const GeometryGate& g, const PhotonicFitMap& map, double dw) {
  if (!std::isfinite(dw)) throw ValidationError("width error must be finite");
  Composite c;
  for (std::size_t k = 0; k < g.segments.size(); ++k) {
    const auto& s = g.segments[k];
    const double w1 = s.w1 + dw, w2 = s.w2 + dw;
    check_width(map, w1, k);
    check_width(map, w2, k);
    c.segments.push_back({kappa(map, w1, w2), delta_beta(map, w1, w2), s.z});
  }
  if (g.theta_c > 0.0) c.bookend_angle = g.theta_c;
  return c;
}

Unitary2d geometry_realize(const GeometryGate& g, const PhotonicFitMap& map, double dw) {
  if (g.segments.empty()) throw ValidationError("geometry gate needs at least one segment");
  return realize(to_composite(g, map, dw));
}

bool extrapolates(const GeometryGate& g, const PhotonicFitMap& map, double dw) {
  for (const auto& s : g.segments) {
    if (extrapolation_excess(map, s.w1 + dw, s.w2 + dw) > 0.0) return true;
  }
  return false;
}

GeometrySegment fine_tune_length(const GeometrySegment& seg, const PhotonicFitMap& map, double target_angle) {
  if (!(std::isfinite(target_angle) && target_angle > 0.0)) {
    throw ValidationError("target angle must be positive");
  }
  const double rate = std::hypot(kappa(map, seg.w1, seg.w2), delta_beta(map, seg.w1, seg.w2));
  if (!(rate > 0.0)) throw NumericalError("generalized coupling is zero");
  GeometrySegment out = seg;
  out.z = target_angle / rate;
  return out;
}

GeometryGate uniform_coupler(const PhotonicFitMap& map, double width, double angle, double theta_c) {
  // Each bookend is a Bloch rotation by 2 theta_c about the same axis.
  double inner = std::fmod(angle - 4.0 * theta_c, 2.0 * kPi);
  if (inner <= 0.0) inner += 2.0 * kPi;
  GeometryGate g;
  g.theta_c = theta_c;
  g.segments.push_back(fine_tune_length({width, width, 0.0, map.gap}, map, inner));
  return g;
}

GeometryGate retune_lengths(const GeometryGate& g, const PhotonicFitMap& map, const Unitary2d& target) {
  validate(g, map);
  const Eigen::Vector4d t = su2_coords(target);
  LengthFunctor functor(g, map, t);
  Eigen::NumericalDiff<LengthFunctor> numdiff(functor);
  const int n = static_cast<int>(g.segments.size());

  std::vector<double> rates(n);
  for (int k = 0; k < n; ++k) {
    rates[k] = std::hypot(kappa(map, g.segments[k].w1, g.segments[k].w2),
                          delta_beta(map, g.segments[k].w1, g.segments[k].w2));
  }
  // Starts: the given lengths, then every combination of rotation angles
  // from a coarse ladder.
  std::vector<Eigen::VectorXd> starts;
  Eigen::VectorXd given(n);
  for (int k = 0; k < n; ++k) given[k] = g.segments[k].z;
  starts.push_back(given);
  const std::array<double, 5> ladder{0.5 * kPi, kPi, 1.5 * kPi, 2.0 * kPi, 2.5 * kPi};
  std::vector<int> idx(n, 0);
  while (true) {
    Eigen::VectorXd z(n);
    for (int k = 0; k < n; ++k) z[k] = ladder[idx[k]] / rates[k];
    starts.push_back(z);
    int k = 0;
    while (k < n && ++idx[k] == static_cast<int>(ladder.size())) idx[k++] = 0;
    if (k == n) break;
  }

  GeometryGate best = g;
  double best_loss = std::numeric_limits<double>::infinity();
  for (Eigen::VectorXd z : starts) {
    Eigen::LevenbergMarquardt<Eigen::NumericalDiff<LengthFunctor>> lm(numdiff);
    lm.setMaxfev(2000);
    lm.minimize(z);
    GeometryGate trial = g;
    for (int k = 0; k < n; ++k) trial.segments[k].z = std::abs(z[k]);
    const double loss = 1.0 - fidelity(target, geometry_realize(trial, map, 0.0));
    if (loss < best_loss) {
      best_loss = loss;
      best = trial;
    }
  }
  return best;
}

void validate(const SurrogateSpec& spec) {
  if (!(std::isfinite(spec.width_min) && std::isfinite(spec.width_max) && spec.width_min > 0.0 &&
        spec.width_min < spec.width_max)) {
    throw ValidationError("surrogate width range must satisfy 0 < min < max");
  }
  if (spec.points < 4) throw ValidationError("surrogate grid needs at least 4 points");
  if (!(spec.gap > 0.0) || !(spec.noise >= 0.0)) throw ValidationError("surrogate gap and noise must be valid");
}

double surrogate_delta_beta(double w1, double w2) {
  const double c = kWavenumber * kIndexContrast;
  return c * (std::exp(-w2 / kIndexDecayUm) - std::exp(-w1 / kIndexDecayUm));
}

double surrogate_kappa(double w1, double w2, double gap) {
  return std::exp(-(gap - kSurrogateGapRef) / kGapDecayUm) * coupling_form(kSurrogateCoupling, w1 + w2);
}

SampleGrid surrogate_grid(const SurrogateSpec& spec) {
  validate(spec);
  const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(spec.points))));
  const ErrorDistribution unit{DistributionKind::gaussian, 1.0};
  SampleGrid grid;
  grid.reserve(side * side);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const double w1 = spec.width_min + (spec.width_max - spec.width_min) * i / (side - 1);
      const double w2 = spec.width_min + (spec.width_max - spec.width_min) * j / (side - 1);
      double db = surrogate_delta_beta(w1, w2);
      double k = surrogate_kappa(w1, w2, spec.gap);
      if (spec.noise > 0.0) {
        const auto index = static_cast<std::uint64_t>(grid.size());
        db *= 1.0 + spec.noise * sample_one(unit, spec.seed, 2 * index);
        k *= 1.0 + spec.noise * sample_one(unit, spec.seed, 2 * index + 1);
      }
      grid.push_back({w1, w2, db, k});
    }
  }
  return grid;
}

FitResiduals residuals(const PhotonicFitMap& map, const SampleGrid& grid) {
  FitResiduals r;
  double db_scale = 0.0, k_scale = 0.0;
  for (const auto& p : grid) {
    r.detuning_abs += std::abs(delta_beta(map, p.w1, p.w2) - p.delta_beta);
    r.coupling_abs += std::abs(kappa(map, p.w1, p.w2) - p.kappa);
    db_scale += std::abs(p.delta_beta);
    k_scale += std::abs(p.kappa);
  }
  const double n = static_cast<double>(grid.size());
  r.detuning_abs /= n;
  r.coupling_abs /= n;
  r.detuning_rel = db_scale > 0.0 ? r.detuning_abs / (db_scale / n) : 0.0;
  r.coupling_rel = k_scale > 0.0 ? r.coupling_abs / (k_scale / n) : 0.0;
  return r;
}

FitResult fit_map(const SampleGrid& grid, double gap, double theta_c) {
  if (static_cast<int>(grid.size()) < kMinFitPoints) {
    throw ValidationError("fit needs at least " + std::to_string(kMinFitPoints) + " grid points, got " +
                          std::to_string(grid.size()));
  }
  const Eigen::Index n = static_cast<Eigen::Index>(grid.size());
  double wmin = grid.front().w1, wmax = grid.front().w1;
  for (const auto& p : grid) {
    if (!std::isfinite(p.w1) || !std::isfinite(p.w2) || !std::isfinite(p.delta_beta) || !std::isfinite(p.kappa)) {
      throw ValidationError("grid values must be finite");
    }
    wmin = std::min({wmin, p.w1, p.w2});
    wmax = std::max({wmax, p.w1, p.w2});
  }

  // Detuning.
  Eigen::MatrixXd a(n, 4);
  Eigen::VectorXd db(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& p = grid[r];
    for (int i = 1; i <= 4; ++i) a(r, i - 1) = std::pow(p.w1, i) - std::pow(p.w2, i);
    db[r] = p.delta_beta;
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < 4) {
    throw NumericalError("detuning design matrix is rank deficient (rank " + std::to_string(qr.rank()) + " of 4)");
  }
  const Eigen::VectorXd da = qr.solve(db);

  // Coupling.
  Eigen::VectorXd s(n), k(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    s[r] = grid[r].w1 + grid[r].w2;
    k[r] = grid[r].kappa;
  }
  constexpr double kLo = -20.0, kHi = 10.0;
  constexpr int kScan = 301;
  int best_i = 0;
  double best_sse = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScan; ++i) {
    const double c2 = kLo + (kHi - kLo) * i / (kScan - 1);
    const double sse = profile_coupling(s, k, c2, nullptr);
    if (sse < best_sse) {
      best_sse = sse;
      best_i = i;
    }
  }
  if (best_i == 0 || best_i == kScan - 1) {
    std::ostringstream msg;
    msg << "coupling fit did not converge: best exponent at the search boundary (mean squared residual "
        << best_sse / n << ")";
    throw NumericalError(msg.str());
  }
  // Golden section inside the bracketing scan cells.
  const double step = (kHi - kLo) / (kScan - 1);
  double lo = kLo + (best_i - 1) * step, hi = kLo + (best_i + 1) * step;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
  double f1 = profile_coupling(s, k, x1, nullptr), f2 = profile_coupling(s, k, x2, nullptr);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = profile_coupling(s, k, x1, nullptr);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = profile_coupling(s, k, x2, nullptr);
    }
  }
  const double c2 = 0.5 * (lo + hi);
  Eigen::Vector2d lin;
  profile_coupling(s, k, c2, &lin);
  Eigen::VectorXd c(3);
  c << lin[0], lin[1], c2;
  CouplingFunctor functor(s, k);
  Eigen::LevenbergMarquardt<CouplingFunctor> lm(functor);
  Eigen::VectorXd polished = c;
  lm.minimize(polished);
  Eigen::VectorXd f0(n), f1v(n);
  functor(c, f0);
  functor(polished, f1v);
  if (polished.allFinite() && f1v.squaredNorm() < f0.squaredNorm()) c = polished;
  if (!c.allFinite()) throw NumericalError("coupling fit produced non-finite coefficients");

  FitResult out;
  out.map = make_map({0.0, da[0], da[1], da[2], da[3]}, {c[0], c[1], c[2]}, wmin, wmax, gap, theta_c);
  out.map.provenance = "fit";
  out.residuals = residuals(out.map, grid);
  return out;
}

const PhotonicFitMap& reference_map() {
  static const PhotonicFitMap map = [] {
    SurrogateSpec spec;
    spec.points = 441;
    PhotonicFitMap m = fit_map(surrogate_grid(spec)).map;
    m.provenance = "surrogate reference fit (21x21 grid, noiseless)";
    return m;
  }();
  return map;
}

FidelityStats width_error_sweep(const GeometryGate& g, const Unitary2d& target, const PhotonicFitMap& map,
                                const ErrorDistribution& dist_nm, SweepMode mode, int n, std::uint64_t seed) {
  validate(dist_nm);
  if (n < 1) throw ValidationError("sweep needs at least one point");
  FidelityStats out;
  if (mode == SweepMode::random) {
    out.dw_nm = sample(dist_nm, seed, static_cast<std::size_t>(n));
  } else {
    out.dw_nm.resize(n);
    for (int i = 0; i < n; ++i) {
      out.dw_nm[i] = n == 1 ? 0.0 : dist_nm.sigma * (-3.0 + 6.0 * i / (n - 1));
    }
  }
  out.fidelity.reserve(n);
  for (double dw : out.dw_nm) out.fidelity.push_back(fidelity(target, geometry_realize(g, map, dw * kUmPerNm)));
  double sum = 0.0;
  for (double f : out.fidelity) sum += f;
  out.mean = sum / n;
  double var = 0.0;
  for (double f : out.fidelity) var += (f - out.mean) * (f - out.mean);
  out.std = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
  return out;
}

Unitary2d GeometryModel::realize(const Eigen::VectorXd& params, double error) const {
  if (params.size() == 0 || params.size() % 3 != 0) {
    throw ValidationError("parameter vector length must be a positive multiple of 3");
  }
  Unitary2d u = Unitary2d::Identity();
  for (Eigen::Index k = 0; k < params.size(); k += 3) {
    const double w1 = params[k] + error, w2 = params[k + 1] + error;
    const Segment s{kappa(map_, w1, w2), delta_beta(map_, w1, w2), std::max(params[k + 2], 0.0)};
    u = propagator(s) * u;
  }
  if (theta_c_ > 0.0) {
    const Unitary2d c = bookend(theta_c_);
    u = c * u * c;
  }
  return u;
}

GeometryGate GeometryModel::to_gate(const Eigen::VectorXd& params) const {
  GeometryGate g;
  g.theta_c = theta_c_;
  for (Eigen::Index k = 0; k + 2 < params.size(); k += 3) {
    g.segments.push_back({params[k], params[k + 1], params[k + 2], map_.gap});
  }
  return g;
}

Eigen::VectorXd GeometryModel::to_params(const GeometryGate& g) {
  Eigen::VectorXd p(3 * g.segments.size());
  for (std::size_t k = 0; k < g.segments.size(); ++k) {
    p[3 * k] = g.segments[k].w1;
    p[3 * k + 1] = g.segments[k].w2;
    p[3 * k + 2] = g.segments[k].z;
  }
  return p;
}

}  // namespace robgate::photonic
