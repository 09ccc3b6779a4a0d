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

// Acceptance checks. Prints one PASS/FAIL line per criterion.
//
//   robgate_acceptance <data dir> [--criterion N]
//
// With --criterion N only that check runs and the exit status reflects it.
// Criterion 10 reruns 1..9 and judges their combined wall time.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "robgate/analytic.hpp"
#include "robgate/apps.hpp"
#include "robgate/composite.hpp"
#include "robgate/errors.hpp"
#include "robgate/fixtures.hpp"
#include "robgate/io.hpp"
#include "robgate/optimize.hpp"
#include "robgate/photonic.hpp"
#include "robgate/su2.hpp"

namespace {

using namespace robgate;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

// Pinned tolerances.
constexpr double kXiLow = 0.46097, kXiHigh = 6.03285, kXiTol = 1e-4, kXiResidualTol = 1e-8;
constexpr double kTieTol = 1e-12;           // fidelity ties at the design point
constexpr double kTableVE1Tol = 1e-2;       // printed designs carry 3 s.f.
constexpr double kOptimizeRatio = 0.5;      // optimized / uniform loss
constexpr double kNoiselessFitTol = 1e-3;   // relative mean abs residual
constexpr double kNoisyDetuningTol = 0.01;  // against the noiseless truth
constexpr double kNoisyCouplingTol = 0.005;
constexpr double kExactTol = 1e-12;
constexpr double kQftZeroTol = 1e-10;

std::string g_data_dir;
bool g_quiet = false;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void detail(const char* fmt, auto... args) {
  if (g_quiet) return;
  std::printf("    ");
  std::printf(fmt, args...);
  std::printf("\n");
}

bool report(int id, bool pass, const std::string& summary) {
  std::printf("criterion %d: %s  %s\n", id, pass ? "PASS" : "FAIL", summary.c_str());
  std::fflush(stdout);
  return pass;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double round_sig(double x, int digits) {
  if (x == 0.0) return 0.0;
  const double scale = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(std::log10(std::abs(x)))));
  return std::round(x * scale) / scale;
}

Composite uniform_for(const Unitary2d& target, double omega = 1.0) { return Composite{{uniform_gate(target, omega)}}; }

struct Fixture {
  std::string name;
  Composite gate;
  Unitary2d target;
  double omega = 1.0;
  bool analytic = true;
};

std::vector<Fixture> toy_fixtures() {
  std::vector<Fixture> out;
  for (const auto& row : fixtures::analytic_tables()) {
    out.push_back({"Table " + row.table + " " + std::string(analytic::to_string(row.request.family)) + " " + row.name,
                   analytic::build(row.request), analytic::target(row.request), row.request.omega, true});
  }
  for (const auto& row : fixtures::optimized_toy_designs()) {
    out.push_back({"Table V " + row.name, row.gate, standard_gate(row.target_label), 1.0, false});
  }
  return out;
}

// ---------------------------------------------------------------------------

bool criterion1() {
  const auto t0 = Clock::now();
  int cells = 0, mismatches = 0;
  for (const auto& row : fixtures::analytic_tables()) {
    const Composite g = analytic::build(row.request);
    if (g.segments.size() != row.printed.size()) {
      ++mismatches;
      detail("%s %s: %zu segments, expected %zu", row.table.c_str(), row.name.c_str(), g.segments.size(),
             row.printed.size());
      continue;
    }
    for (std::size_t k = 0; k < g.segments.size(); ++k) {
      const auto& got = g.segments[k];
      const auto& want = row.printed[k];
      for (auto [a, b] : {std::pair{got.omega, want.omega}, {got.delta, want.delta}, {got.t, want.t}}) {
        ++cells;
        if (round_sig(a, 3) != round_sig(b, 3)) {
          ++mismatches;
          detail("Table %s %s segment %zu: %.6g vs %.6g", row.table.c_str(), row.name.c_str(), k + 1, a, b);
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return report(1, mismatches == 0 && secs < 1.0,
                fmt("%d cells, %d mismatches at 3 s.f., %.3f s (limit 1 s)", cells, mismatches, secs));
}

bool criterion2() {
  const auto [low, high] = analytic::solve_xi();
  const double rl = std::abs(analytic::xi_residual(low)), rh = std::abs(analytic::xi_residual(high));
  const bool pass = std::abs(low - kXiLow) <= kXiTol && std::abs(high - kXiHigh) <= kXiTol && rl < kXiResidualTol &&
                    rh < kXiResidualTol;
  return report(2, pass, fmt("xi = %.7f, %.7f; residuals %.1e, %.1e", low, high, rl, rh));
}

bool criterion3() {
  const auto t0 = Clock::now();
  int verify_fail = 0, dominance_fail = 0, n = 0;
  for (const auto& f : toy_fixtures()) {
    ++n;
    const auto r = analytic::verify_first_order(f.gate, f.target);
    const bool ok = f.analytic ? r.pass : (r.fid0 >= 1.0 - analytic::kFirstOrderFidelityTol && r.e1_norm <= kTableVE1Tol);
    if (!ok) {
      ++verify_fail;
      detail("verify %s: 1-F0 = %.2e, |E1| = %.3e", f.name.c_str(), 1.0 - r.fid0, r.e1_norm);
    }
    const Composite uni = uniform_for(f.target, f.omega);
    int bad = 0;
    double worst = 0.0, worst_eps = 0.0;
    for (int i = 0; i <= 60; ++i) {
      const double eps = -0.3 + 0.01 * i;
      const double gap = fidelity(f.target, realize(f.gate, eps)) - fidelity(f.target, realize(uni, eps));
      if (gap < -kTieTol) {
        ++bad;
        if (gap < worst) worst = gap, worst_eps = eps;
      }
    }
    if (bad > 0) {
      ++dominance_fail;
      detail("dominance %s: %d/61 points below uniform, worst %.2e at eps = %+.2f", f.name.c_str(), bad, worst,
             worst_eps);
    }
  }
  const double secs = seconds_since(t0);
  return report(3, verify_fail == 0 && dominance_fail == 0 && secs < 10.0,
                fmt("%d fixtures: %d fail verification, %d fail dominance on |eps| <= 0.3; %.2f s", n, verify_fail,
                    dominance_fail, secs));
}

bool criterion4() {
  const auto t0 = Clock::now();
  const io::OptimizeRun run = io::optimize_run_from_json(io::read_json(g_data_dir + "/configs/toy_x.json"));
  const Unitary2d target = standard_gate(run.target);
  const DetuningModel model;
  const auto init = random_init(run.bounds, run.n_segments, run.optimizer.seed);
  const auto a = optimize_gate(model, init, target, run.distribution, run.bounds, run.optimizer);
  const double secs = seconds_since(t0);
  const auto b = optimize_gate(model, init, target, run.distribution, run.bounds, run.optimizer);
  const bool deterministic = a.params == b.params && a.best.total == b.best.total;

  const auto grid = weight_grid(run.distribution, run.optimizer.n_grid);
  const double opt = robust_fidelity_loss(model.to_gate(a.params), target, grid);
  const double uni = robust_fidelity_loss(uniform_for(target), target, grid);
  const double ratio = opt / uni;
  detail("initial loss %.4e, best at iteration %d", a.history.front().total, a.best_iteration);
  return report(4, ratio <= kOptimizeRatio && deterministic && secs < 120.0,
                fmt("loss %.3e vs uniform %.3e (ratio %.4f, limit %.1f); deterministic %s; %.1f s per run", opt, uni,
                    ratio, kOptimizeRatio, deterministic ? "yes" : "no", secs));
}

bool criterion5() {
  using namespace photonic;
  SurrogateSpec spec;
  spec.points = 400;
  const SampleGrid clean = surrogate_grid(spec);
  const FitResult f0 = fit_map(clean);
  spec.noise = 0.01;
  spec.seed = 1;
  const SampleGrid noisy = surrogate_grid(spec);
  const FitResult f1 = fit_map(noisy);
  const FitResiduals truth = residuals(f1.map, clean);
  detail("noisy fit vs its own noisy data: detuning %.4f, coupling %.4f", f1.residuals.detuning_rel,
         f1.residuals.coupling_rel);
  const bool pass = f0.residuals.detuning_rel <= kNoiselessFitTol && f0.residuals.coupling_rel <= kNoiselessFitTol &&
                    truth.detuning_rel <= kNoisyDetuningTol && truth.coupling_rel <= kNoisyCouplingTol;
  return report(5, pass,
                fmt("noiseless rel residuals %.2e / %.2e (limit %.0e); 1%% noise vs truth %.2e / %.2e (limits %.3f / "
                    "%.3f)",
                    f0.residuals.detuning_rel, f0.residuals.coupling_rel, kNoiselessFitTol, truth.detuning_rel,
                    truth.coupling_rel, kNoisyDetuningTol, kNoisyCouplingTol));
}

// Geometric X design: published perturbative widths clamped to the bounds,
// lengths retuned to the reference map, then width-error optimization.
struct GeometricDesign {
  photonic::GeometryGate segmented;
  photonic::GeometryGate uniform;
};

GeometricDesign geometric_design() {
  using namespace photonic;
  constexpr double lo = 0.345, hi = 0.455;
  const auto& map = reference_map();
  const Unitary2d x = standard_gate("X");
  GeometryGate init;
  init.theta_c = kDefaultThetaC;
  for (const auto& s : fixtures::perturbative_geometries().front().segments) {
    init.segments.push_back({std::clamp(s[0], lo, hi), std::clamp(s[1], lo, hi), s[2], kDefaultGapUm});
  }
  init = retune_lengths(init, map, x);
  const GeometryModel model(map, kDefaultThetaC);
  OptimizerConfig cfg;
  cfg.iterations = 1500;
  cfg.learning_rate = 1e-3;
  cfg.mu = 10;
  const Bounds bounds{{{lo, hi}, {lo, hi}, {0.0, 300.0}}};
  const auto r = optimize_gate(model, GeometryModel::to_params(init), x, {DistributionKind::gaussian, 0.02}, bounds, cfg);
  return {model.to_gate(r.params), uniform_coupler(map, 0.4, kPi, kDefaultThetaC)};
}

bool criterion6() {
  using namespace photonic;
  const auto t0 = Clock::now();
  const auto d = geometric_design();
  const auto& map = reference_map();
  const Unitary2d x = standard_gate("X");
  bool random_ok = true;
  for (double s : {5.0, 10.0, 15.0, 20.0}) {
    const ErrorDistribution dist{DistributionKind::gaussian, s};
    const auto a = width_error_sweep(d.segmented, x, map, dist, SweepMode::random, 10000, 1);
    const auto u = width_error_sweep(d.uniform, x, map, dist, SweepMode::random, 10000, 1);
    const bool ok = a.mean > u.mean && a.std < u.std;
    random_ok = random_ok && ok;
    detail("sigma %4.1f nm: segmented %.5f +- %.2e, uniform %.5f +- %.2e %s", s, a.mean, a.std, u.mean, u.std,
           ok ? "" : "<- not better");
  }
  // Deterministic sweep over +-20 nm. The gap F_seg - F_uni must grow with
  // |dw| away from the design point on each side: monotone beyond 20/3 nm,
  // and every gap at |dw| >= 10 nm above every gap at |dw| <= 5 nm on the
  // same side. The response is not symmetric in dw, so sides are separate.
  const ErrorDistribution det{DistributionKind::gaussian, 20.0 / 3};
  const auto a = width_error_sweep(d.segmented, x, map, det, SweepMode::deterministic, 61, 1);
  const auto u = width_error_sweep(d.uniform, x, map, det, SweepMode::deterministic, 61, 1);
  std::vector<double> gap(a.fidelity.size());
  for (std::size_t i = 0; i < gap.size(); ++i) gap[i] = a.fidelity[i] - u.fidelity[i];
  bool monotone = true, separated = true;
  std::string margins;
  for (double side : {-1.0, 1.0}) {
    double inner_max = -1.0, outer_min = 1.0, prev = -1.0;
    for (std::size_t k = 0; k < gap.size(); ++k) {
      // Walk outward from the centre.
      const std::size_t i = side > 0 ? k : gap.size() - 1 - k;
      const double adw = side * a.dw_nm[i];
      if (adw < -1e-9) continue;
      if (adw <= 5.0 + 1e-9) inner_max = std::max(inner_max, gap[i]);
      if (adw >= 10.0 - 1e-9) outer_min = std::min(outer_min, gap[i]);
      if (adw >= 20.0 / 3 - 1e-9) {
        if (prev > -1.0 && gap[i] < prev) monotone = false;
        prev = gap[i];
      }
    }
    separated = separated && outer_min > inner_max;
    margins += fmt(" %s: %.2e > %.2e", side < 0 ? "dw<0" : "dw>0", outer_min, inner_max);
  }
  for (std::size_t i = 0; i < gap.size(); i += 10) detail("dw %+6.2f nm: gap %+.2e", a.dw_nm[i], gap[i]);
  const double secs = seconds_since(t0);
  return report(6, random_ok && monotone && separated && secs < 60.0,
                fmt("random sweeps %s; gap monotone beyond 6.67 nm %s; outer vs inner gap%s; %.1f s",
                    random_ok ? "ok" : "FAIL", monotone ? "yes" : "no", margins.c_str(), secs));
}

bool criterion7() {
  using apps::logical_error;
  using apps::SurfaceCodeModel;
  const double p_th = apps::kSurfaceCodeThreshold;
  bool exact = true;
  for (double p : {1e-4, 1e-3, 0.003, 0.0056}) {
    for (int d = 3; d <= 15; d += 2) {
      const double want = std::pow(p / p_th, (d + 1) / 2);
      exact = exact && std::abs(logical_error(p, {p_th, d}).value - want) <= kExactTol * std::max(1.0, want);
    }
  }
  bool monotone = true;
  for (int d = 3; d <= 13; d += 2) {
    for (double p = 1e-4; p < p_th; p += 2e-4) {
      monotone = monotone && logical_error(p, {p_th, d}).value > logical_error(p, {p_th, d + 2}).value &&
                 logical_error(p, {p_th, d}).value < logical_error(p + 2e-4, {p_th, d}).value;
    }
  }

  const auto design = geometric_design();
  const auto& map = photonic::reference_map();
  const Unitary2d x = standard_gate("X");
  const double dw = -0.020;
  const double p_seg =
      apps::physical_error_rate(photonic::geometry_realize(design.segmented, map, dw), x, 10000, 1);
  const double p_uni = apps::physical_error_rate(photonic::geometry_realize(design.uniform, map, dw), x, 10000, 1);
  std::vector<double> log_ratio;
  for (int d = 3; d <= 15; d += 2) {
    const auto ls = logical_error(p_seg, {p_th, d}), lu = logical_error(p_uni, {p_th, d});
    detail("d = %2d: P_L segmented %.3e, uniform %.3e%s", d, ls.value, lu.value, lu.clamped ? " (clamped)" : "");
    log_ratio.push_back(std::log(ls.value / lu.value));
  }
  bool linear = true;
  for (std::size_t i = 2; i < log_ratio.size(); ++i) {
    linear = linear && std::abs((log_ratio[i] - log_ratio[i - 1]) - (log_ratio[1] - log_ratio[0])) <= 1e-9;
  }
  const bool pattern = p_seg < p_th && p_th < p_uni;
  return report(7, exact && monotone && linear && pattern,
                fmt("power law exact %s, monotone %s, log-ratio linear %s; dw = -20 nm: p_seg %.5f < p_th %.4f < "
                    "p_uni %.5f %s",
                    exact ? "yes" : "no", monotone ? "yes" : "no", linear ? "yes" : "no", p_seg, p_th, p_uni,
                    pattern ? "holds" : "does not hold"));
}

bool criterion8() {
  double worst_zero = 0.0, worst_inverse = 0.0;
  for (int n = 1; n <= 8; ++n) {
    apps::QftConfig cfg;
    cfg.n_qubits = n;
    cfg.realizations["H"] = uniform_for(standard_gate("H"));
    cfg.fixed_error = 0.0;
    cfg.shots = 1;
    worst_zero = std::max(worst_zero, apps::qft_infidelity(cfg).mean);

    const auto ops = apps::qft_circuit(n);
    const auto inv = apps::inverse_circuit(ops);
    const Eigen::Index dim = Eigen::Index(1) << n;
    for (int s = 0; s < 20; ++s) {
      apps::StateVector psi = apps::StateVector::Random(dim).normalized();
      apps::StateVector phi = psi;
      apps::apply(ops, phi);
      apps::apply(inv, phi);
      worst_inverse = std::max(worst_inverse, (phi - psi).norm());
    }
  }
  apps::QftConfig cfg;
  cfg.n_qubits = 5;
  cfg.error = {DistributionKind::gaussian, 0.1};
  cfg.shots = 10000;
  cfg.seed = 1;
  const auto& h_row = fixtures::optimized_toy_designs().back();
  cfg.realizations["H"] = h_row.gate;
  const auto seg = apps::qft_infidelity(cfg);
  cfg.realizations["H"] = uniform_for(standard_gate("H"));
  const auto uni = apps::qft_infidelity(cfg);
  const bool pass = worst_zero <= kQftZeroTol && worst_inverse <= kQftZeroTol && seg.mean < uni.mean;
  return report(8, pass,
                fmt("zero-noise infidelity max %.1e (n <= 8); inverse error %.1e; n = 5, sigma 0.1: segmented %.3e "
                    "< uniform %.3e",
                    worst_zero, worst_inverse, seg.mean, uni.mean));
}

bool criterion9() {
  const auto fx = toy_fixtures();
  int checks = 0, fails = 0;
  for (DistributionKind kind : {DistributionKind::gaussian, DistributionKind::poisson_scaled,
                                DistributionKind::uniform3sigma, DistributionKind::exponential}) {
    for (double sigma : {0.05, 0.1, 0.15}) {
      const ErrorDistribution dist{kind, sigma};
      const auto eps = sample(dist, 1, 10000);
      for (const auto& f : fx) {
        const Composite uni = uniform_for(f.target, f.omega);
        double ms = 0.0, mu = 0.0;
        for (double e : eps) {
          ms += fidelity(f.target, realize(f.gate, e));
          mu += fidelity(f.target, realize(uni, e));
        }
        ms /= eps.size();
        mu /= eps.size();
        ++checks;
        if (ms < mu - kTieTol) {
          ++fails;
          detail("%-13s sigma %.2f %-38s composite %.5f < uniform %.5f", std::string(to_string(kind)).c_str(), sigma,
                 f.name.c_str(), ms, mu);
        }
      }
    }
  }
  return report(9, fails == 0,
                fmt("%d (distribution, sigma, fixture) cases, %d with composite mean fidelity below uniform", checks,
                    fails));
}

const std::vector<std::function<bool()>> kCriteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                      criterion6, criterion7, criterion8, criterion9};

bool criterion10(double elapsed) {
  return report(10, elapsed < 600.0, fmt("criteria 1-9 took %.1f s (limit 600 s)", elapsed));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <data dir> [--criterion N]\n", argv[0]);
    return 2;
  }
  g_data_dir = argv[1];
  int only = 0;
  if (argc >= 4 && std::string(argv[2]) == "--criterion") only = std::atoi(argv[3]);
  if (only < 0 || only > 10) {
    std::fprintf(stderr, "criterion must be 1..10\n");
    return 2;
  }
  try {
    if (only >= 1 && only <= 9) return kCriteria[only - 1]() ? 0 : 1;
    const auto t0 = Clock::now();
    bool all = true;
    g_quiet = only == 10;
    for (const auto& c : kCriteria) all = c() && all;
    g_quiet = false;
    const bool timed = criterion10(seconds_since(t0));
    if (only == 10) return timed ? 0 : 1;
    return all && timed ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
