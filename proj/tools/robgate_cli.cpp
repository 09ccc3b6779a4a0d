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

// robgate: design, optimize and evaluate error-robust single-qubit gates.
//
// Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 I/O error.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "robgate/analytic.hpp"
#include "robgate/apps.hpp"
#include "robgate/io.hpp"
#include "robgate/optimize.hpp"
#include "robgate/photonic.hpp"

namespace {

namespace fs = std::filesystem;
using robgate::io::Json;
using namespace robgate;

struct Globals {
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string format = "csv";
};

photonic::PhotonicFitMap load_map(const std::string& path) {
  if (path.empty() || path == "surrogate") return photonic::reference_map();
  return io::map_from_json(io::read_json(path));
}

std::string stem_of(const std::string& path) { return fs::path(path).stem().string(); }

void emit_table(const io::Table& t, const std::string& out, const std::string& format, const std::string& hash) {
  if (format == "json") {
    Json j;
    j["schema"] = io::kSchema;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    j["config_hash"] = hash;
    io::write_json(out, j);
    return;
  }
  io::Table copy = t;
  copy.comment = "config_hash=" + hash;
  io::write_text(out, io::to_csv(copy));
}

// Report goes to stdout unless stdout already carries the main output.
std::ostream& report_stream(const std::string& out) { return out == "-" ? std::cerr : std::cout; }

Json report_json(const analytic::FirstOrderReport& r) {
  Json j{{"fid0", r.fid0}, {"e1_norm", r.e1_norm}};
  if (r.e2_norm) j["e2_norm"] = *r.e2_norm;
  j["pass"] = r.pass;
  return j;
}

std::vector<double> mean_std(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  const double mean = s / static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  const double std = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0;
  return {mean, std};
}

// ---------------------------------------------------------------------------
// design analytic

struct DesignOpts {
  std::string family = "A1";
  double omega = 1.0, delta = 0.0, theta = 0.0;
  int n = 1, m = 1;
  std::string branch = "low", a4_variant = "printed";
  std::string out = "-";
  bool strict = false;
  bool second_order = false;
};

int run_design(const DesignOpts& o) {
  analytic::FamilyRequest req;
  req.family = analytic::family_from_string(o.family);
  req.omega = o.omega;
  req.delta = o.delta;
  req.theta = o.theta;
  req.n = o.n;
  req.m = o.m;
  if (o.branch != "low" && o.branch != "high") throw ValidationError("branch must be low or high");
  req.branch = o.branch == "low" ? analytic::XiBranch::low : analytic::XiBranch::high;
  if (o.a4_variant != "printed" && o.a4_variant != "cubic") throw ValidationError("a4 variant must be printed or cubic");
  req.a4_variant = o.a4_variant == "printed" ? analytic::A4Variant::printed : analytic::A4Variant::cubic;

  const Composite gate = analytic::build(req);
  const auto report = analytic::verify_first_order(gate, analytic::target(req), o.second_order);

  Json request{{"family", std::string(analytic::to_string(req.family))},
               {"omega", o.omega},
               {"delta", o.delta},
               {"theta", o.theta},
               {"n", o.n},
               {"m", o.m},
               {"branch", o.branch},
               {"a4_variant", o.a4_variant}};
  const io::GateDocument doc{analytic::target_label(req), gate, "analytic", io::config_hash(request)};
  io::write_json(o.out, io::to_json(doc));
  report_stream(o.out) << report_json(report).dump() << "\n";
  return o.strict && !report.pass ? 3 : 0;
}

// ---------------------------------------------------------------------------
// optimize

struct OptimizeOpts {
  std::string config;
  std::string out = "-";
  std::string history;
};

int run_optimize(const OptimizeOpts& o, const Globals& g) {
  io::OptimizeRun run = io::optimize_run_from_json(io::read_json(o.config));
  if (g.seed_given) run.optimizer.seed = g.seed;
  const std::string hash = io::config_hash(io::to_json(run));
  const Unitary2d target = standard_gate(run.target);

  std::optional<photonic::PhotonicFitMap> map;
  std::unique_ptr<GateModel> model;
  ErrorDistribution dist = run.distribution;
  if (run.model == io::ModelKind::toy) {
    model = std::make_unique<DetuningModel>(run.bookend_angle);
  } else {
    map = load_map(run.map);
    model = std::make_unique<photonic::GeometryModel>(*map, map->theta_c);
    dist.sigma *= photonic::kUmPerNm;  // configs give width errors in nm
  }

  const Eigen::VectorXd init = run.init ? *run.init : random_init(run.bounds, run.n_segments, run.optimizer.seed);
  if (run.optimizer.mu == 0.0 && range_penalty(init, run.bounds) > 0.0) {
    std::cerr << "warning: mu = 0 and the initial point lies outside the bounds; nothing keeps the search in range\n";
  }

  const auto result = optimize_gate(*model, init, target, dist, run.bounds, run.optimizer);

  io::GateDocument doc;
  doc.target_label = run.target;
  doc.provenance = "optimized";
  doc.config_hash = hash;
  if (map) {
    auto gate = static_cast<const photonic::GeometryModel&>(*model).to_gate(result.params);
    for (auto& s : gate.segments) s.gap = map->gap;
    doc.gate = gate;
  } else {
    doc.gate = static_cast<const DetuningModel&>(*model).to_gate(result.params);
  }
  io::write_json(o.out, io::to_json(doc));

  if (!o.history.empty()) {
    io::Table t;
    t.columns = {"iteration", "total_loss", "fidelity_loss", "penalty"};
    for (std::size_t i = 0; i < result.history.size(); ++i) {
      const auto& h = result.history[i];
      t.rows.push_back({static_cast<double>(i), h.total, h.fidelity, h.penalty});
    }
    emit_table(t, o.history, "csv", hash);
  }

  Json summary{{"best_loss", result.best.total},
               {"fidelity_loss", result.best.fidelity},
               {"penalty", result.best.penalty},
               {"best_iteration", result.best_iteration},
               {"config_hash", hash}};
  report_stream(o.out) << summary.dump() << "\n";
  if (run.max_final_loss && result.best.total > *run.max_final_loss) {
    std::cerr << "error: final loss " << result.best.total << " exceeds max_final_loss " << *run.max_final_loss
              << "\n";
    return 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
  std::string gate;
  std::string target;
  bool second_order = false;
};

int run_verify(const VerifyOpts& o) {
  const auto doc = io::gate_from_json(io::read_json(o.gate));
  if (doc.is_geometry()) throw ValidationError("verify checks detuning-model gates; use sweep for geometry gates");
  const std::string label = o.target.empty() ? doc.target_label : o.target;
  const auto report = analytic::verify_first_order(std::get<Composite>(doc.gate), standard_gate(label), o.second_order);
  Json j = report_json(report);
  j["target_label"] = label;
  std::cout << j.dump() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepOpts {
  std::vector<std::string> gates;
  std::string mode = "random";
  std::string dist = "gaussian";
  std::vector<double> sigmas{0.1};
  int n = 1000;
  bool all_distributions = false;
  std::string map;
  std::string out = "-";
};

io::Table sweep_table(const std::vector<io::GateDocument>& docs, const std::vector<std::string>& names,
                      const SweepOpts& o, DistributionKind kind, std::uint64_t seed,
                      const photonic::PhotonicFitMap* map) {
  const bool geometry = docs.front().is_geometry();
  const bool random = o.mode == "random";
  io::Table t;
  const std::string unit = geometry ? "_nm" : "";
  t.columns.push_back(random ? "sigma" + unit : (geometry ? "dw_nm" : "error"));
  for (const auto& name : names) {
    const std::string prefix = names.size() > 1 ? name + "_" : "";
    if (random) {
      t.columns.push_back(prefix + "mean_fidelity");
      t.columns.push_back(prefix + "std_fidelity");
    } else {
      t.columns.push_back(prefix + "fidelity");
    }
  }

  const auto sigmas = random ? o.sigmas : std::vector<double>{o.sigmas.front()};
  for (double sigma : sigmas) {
    const ErrorDistribution dist{kind, sigma};
    validate(dist);
    std::vector<std::vector<double>> columns;  // per gate: random -> {mean, std}, deterministic -> fidelities
    std::vector<double> errors;
    for (const auto& doc : docs) {
      const Unitary2d target = standard_gate(doc.target_label);
      if (geometry) {
        const auto stats = photonic::width_error_sweep(std::get<photonic::GeometryGate>(doc.gate), target, *map, dist,
                                                       random ? photonic::SweepMode::random
                                                              : photonic::SweepMode::deterministic,
                                                       o.n, seed);
        errors = stats.dw_nm;
        columns.push_back(random ? std::vector<double>{stats.mean, stats.std} : stats.fidelity);
      } else {
        const auto& c = std::get<Composite>(doc.gate);
        if (random) {
          errors = sample(dist, seed, static_cast<std::size_t>(o.n));
        } else {
          errors.clear();
          for (int i = 0; i < o.n; ++i) {
            errors.push_back(o.n == 1 ? 0.0 : -3.0 * sigma + 6.0 * sigma * i / (o.n - 1));
          }
        }
        std::vector<double> f;
        for (double e : errors) f.push_back(fidelity(target, realize(c, e)));
        columns.push_back(random ? mean_std(f) : f);
      }
    }
    if (random) {
      std::vector<double> row{sigma};
      for (const auto& c : columns) row.insert(row.end(), c.begin(), c.end());
      t.rows.push_back(row);
    } else {
      for (std::size_t i = 0; i < errors.size(); ++i) {
        std::vector<double> row{errors[i]};
        for (const auto& c : columns) row.push_back(c[i]);
        t.rows.push_back(row);
      }
    }
  }
  return t;
}

int run_sweep(const SweepOpts& o, const Globals& g) {
  if (o.mode != "random" && o.mode != "deterministic") throw ValidationError("mode must be random or deterministic");
  if (o.n < 1) throw ValidationError("--n must be >= 1");
  if (o.sigmas.empty()) throw ValidationError("at least one sigma is required");
  if (o.mode == "deterministic" && o.sigmas.size() > 1) {
    throw ValidationError("deterministic sweeps take a single sigma");
  }
  std::vector<io::GateDocument> docs;
  std::vector<std::string> names;
  for (const auto& path : o.gates) {
    docs.push_back(io::gate_from_json(io::read_json(path)));
    names.push_back(stem_of(path));
    if (docs.back().is_geometry() != docs.front().is_geometry()) {
      throw ValidationError("unit mismatch: " + path +
                            " mixes a geometry gate (errors in nm) with detuning gates (dimensionless errors)");
    }
  }
  std::optional<photonic::PhotonicFitMap> map;
  if (docs.front().is_geometry()) {
    map = load_map(o.map);
    for (const auto& d : docs) photonic::validate(std::get<photonic::GeometryGate>(d.gate), *map);
  } else if (!o.map.empty()) {
    throw ValidationError("--map applies only to geometry gates");
  }

  Json cfg{{"gates", Json::array()}, {"mode", o.mode}, {"sigmas", o.sigmas}, {"n", o.n}, {"seed", g.seed}};
  for (const auto& d : docs) cfg["gates"].push_back(io::to_json(d));

  std::vector<DistributionKind> kinds;
  if (o.all_distributions) {
    kinds = {DistributionKind::gaussian, DistributionKind::poisson_scaled, DistributionKind::uniform3sigma,
             DistributionKind::exponential};
    if (o.out == "-") throw ValidationError("--all-distributions writes one file per law and needs --out");
  } else {
    kinds = {distribution_kind_from_string(o.dist)};
  }
  for (auto kind : kinds) {
    cfg["distribution"] = std::string(to_string(kind));
    const auto table = sweep_table(docs, names, o, kind, g.seed, map ? &*map : nullptr);
    std::string out = o.out;
    if (o.all_distributions) {
      const fs::path p(o.out);
      out = (p.parent_path() / (p.stem().string() + "_" + std::string(to_string(kind)) + p.extension().string()))
                .string();
    }
    emit_table(table, out, g.format, io::config_hash(cfg));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// fit / surrogate

struct FitOpts {
  std::string grid = "-";
  std::string out = "-";
  double gap = photonic::kDefaultGapUm;
  double theta_c = photonic::kDefaultThetaC;
};

int run_fit(const FitOpts& o) {
  const auto table = io::read_csv(o.grid);
  const auto grid = io::grid_from_table(table);
  auto fit = photonic::fit_map(grid, o.gap, o.theta_c);
  Json source{{"grid", io::to_csv(table)}, {"gap", o.gap}, {"theta_c", o.theta_c}};
  fit.map.provenance = "fit:" + io::config_hash(source);
  io::write_json(o.out, io::to_json(fit.map));
  const auto& r = fit.residuals;
  report_stream(o.out) << Json{{"points", grid.size()},
                               {"detuning_mean_abs", r.detuning_abs},
                               {"detuning_rel", r.detuning_rel},
                               {"coupling_mean_abs", r.coupling_abs},
                               {"coupling_rel", r.coupling_rel}}
                              .dump()
                       << "\n";
  return 0;
}

struct SurrogateOpts {
  photonic::SurrogateSpec spec;
  std::string out = "-";
};

int run_surrogate(SurrogateOpts o, const Globals& g) {
  o.spec.seed = g.seed;
  const auto grid = photonic::surrogate_grid(o.spec);
  io::Table t = io::to_table(grid);
  Json cfg{{"points", o.spec.points}, {"noise", o.spec.noise},         {"gap", o.spec.gap},
           {"seed", o.spec.seed},     {"width_min", o.spec.width_min}, {"width_max", o.spec.width_max}};
  t.comment = "surrogate config_hash=" + io::config_hash(cfg);
  io::write_text(o.out, io::to_csv(t));
  return 0;
}

// ---------------------------------------------------------------------------
// surface-code

struct SurfaceOpts {
  std::optional<double> p;
  std::string from_gate;
  std::string map;
  double error = 0.0;
  std::vector<int> d{3, 5, 7};
  int states = 10000;
  double threshold = apps::kSurfaceCodeThreshold;
  std::string out = "-";
};

int run_surface(const SurfaceOpts& o, const Globals& g) {
  if (o.p.has_value() == !o.from_gate.empty()) throw ValidationError("give exactly one of --p and --from-gate");
  double p = 0.0;
  Json cfg{{"d", o.d}, {"threshold", o.threshold}};
  if (o.p) {
    p = *o.p;
    cfg["p"] = p;
  } else {
    const auto doc = io::gate_from_json(io::read_json(o.from_gate));
    Unitary2d u;
    if (doc.is_geometry()) {
      const auto map = load_map(o.map);
      u = photonic::geometry_realize(std::get<photonic::GeometryGate>(doc.gate), map, o.error * photonic::kUmPerNm);
    } else {
      u = realize(std::get<Composite>(doc.gate), o.error);
    }
    p = apps::physical_error_rate(u, standard_gate(doc.target_label), o.states, g.seed);
    cfg["gate"] = io::to_json(doc);
    cfg["error"] = o.error;
    cfg["states"] = o.states;
    cfg["seed"] = g.seed;
  }
  io::Table t;
  t.columns = {"d", "p", "logical_error", "clamped"};
  for (int d : o.d) {
    const auto le = apps::logical_error(p, {o.threshold, d});
    t.rows.push_back({static_cast<double>(d), p, le.value, le.clamped ? 1.0 : 0.0});
  }
  emit_table(t, o.out, g.format, io::config_hash(cfg));
  return 0;
}

// ---------------------------------------------------------------------------
// qft

struct QftOpts {
  int n = 5;
  std::string realization;
  std::string map;
  std::string dist = "gaussian";
  double sigma = 0.1;
  int shots = 1000;
  std::string out = "-";
};

int run_qft(const QftOpts& o, const Globals& g) {
  apps::QftConfig cfg;
  cfg.n_qubits = o.n;
  cfg.error = {distribution_kind_from_string(o.dist), o.sigma};
  cfg.shots = o.shots;
  cfg.seed = g.seed;
  Json j{{"n", o.n}, {"dist", o.dist}, {"sigma", o.sigma}, {"shots", o.shots}, {"seed", g.seed}};
  std::optional<photonic::PhotonicFitMap> map;
  if (o.realization.empty()) {
    cfg.realizations["H"] = Composite{{uniform_gate(standard_gate("H"))}, std::nullopt};
    j["realization"] = "uniform";
  } else {
    const auto doc = io::gate_from_json(io::read_json(o.realization));
    if (doc.target_label != "H") {
      throw ValidationError("QFT realization must target H, got " + doc.target_label);
    }
    cfg.realizations["H"] = doc.gate;
    if (doc.is_geometry()) map = load_map(o.map);
    j["realization"] = io::to_json(doc);
  }
  const auto r = apps::qft_infidelity(cfg, map ? &*map : nullptr);
  io::write_json(o.out, Json{{"n_qubits", o.n},
                             {"infidelity_mean", r.mean},
                             {"infidelity_std", r.std},
                             {"shots", r.shots},
                             {"config_hash", io::config_hash(j)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design, optimize and evaluate error-robust single-qubit gates"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every random draw")->each([&](const std::string&) { g.seed_given = true; });
  app.add_option("--format", g.format, "Table output format")->check(CLI::IsMember({"csv", "json"}));

  auto* design = app.add_subcommand("design", "Closed-form designs");
  design->require_subcommand(1);
  DesignOpts design_o;
  auto* analytic_cmd = design->add_subcommand("analytic", "Build a member of an analytic solution family");
  analytic_cmd->add_option("--family", design_o.family, "A1..A6")->required();
  analytic_cmd->add_option("--omega", design_o.omega);
  analytic_cmd->add_option("--delta", design_o.delta);
  analytic_cmd->add_option("--theta", design_o.theta);
  analytic_cmd->add_option("--n", design_o.n);
  analytic_cmd->add_option("--m", design_o.m);
  analytic_cmd->add_option("--branch", design_o.branch, "low | high");
  analytic_cmd->add_option("--a4-variant", design_o.a4_variant, "printed | cubic");
  analytic_cmd->add_option("--out", design_o.out, "Gate document path, - for stdout");
  analytic_cmd->add_flag("--strict", design_o.strict, "Exit 3 when the first-order check fails");
  analytic_cmd->add_flag("--second-order", design_o.second_order, "Also report ||E2||");

  OptimizeOpts opt_o;
  auto* optimize = app.add_subcommand("optimize", "Gradient-based robust design");
  optimize->add_option("--config", opt_o.config, "Run configuration (JSON)")->required();
  optimize->add_option("--out", opt_o.out, "Gate document path, - for stdout");
  optimize->add_option("--history", opt_o.history, "Loss history CSV");

  VerifyOpts verify_o;
  auto* verify = app.add_subcommand("verify", "First-order robustness check of a detuning-model gate");
  verify->add_option("--gate", verify_o.gate)->required();
  verify->add_option("--target", verify_o.target, "Override the document's target label");
  verify->add_flag("--second-order", verify_o.second_order);

  SweepOpts sweep_o;
  auto* sweep = app.add_subcommand("sweep", "Fidelity under correlated errors");
  sweep->add_option("--gate", sweep_o.gates, "Gate document (repeatable)")->required();
  sweep->add_option("--mode", sweep_o.mode, "random | deterministic");
  sweep->add_option("--dist", sweep_o.dist, "gaussian | poisson_scaled | uniform3sigma | exponential");
  sweep->add_option("--sigma", sweep_o.sigmas, "Error scale(s); nm for geometry gates")->delimiter(',');
  sweep->add_option("--n", sweep_o.n, "Samples (random) or points (deterministic)");
  sweep->add_flag("--all-distributions", sweep_o.all_distributions, "One output per error law");
  sweep->add_option("--map", sweep_o.map, "Photonic map (default: built-in surrogate fit)");
  sweep->add_option("--out", sweep_o.out);

  FitOpts fit_o;
  auto* fit = app.add_subcommand("fit", "Fit a photonic map to sampled coupler data");
  fit->add_option("--grid", fit_o.grid, "CSV with w1_um,w2_um,delta_beta,kappa; - for stdin");
  fit->add_option("--out", fit_o.out);
  fit->add_option("--gap", fit_o.gap);
  fit->add_option("--theta-c", fit_o.theta_c);

  SurrogateOpts sur_o;
  auto* surrogate = app.add_subcommand("surrogate", "Synthetic coupler data");
  surrogate->add_option("--points", sur_o.spec.points);
  surrogate->add_option("--noise", sur_o.spec.noise, "Relative noise level");
  surrogate->add_option("--gap", sur_o.spec.gap);
  surrogate->add_option("--width-min", sur_o.spec.width_min);
  surrogate->add_option("--width-max", sur_o.spec.width_max);
  surrogate->add_option("--out", sur_o.out);

  SurfaceOpts surf_o;
  auto* surface = app.add_subcommand("surface-code", "Logical error rate estimates");
  surface->add_option("--p", surf_o.p, "Physical error rate");
  surface->add_option("--from-gate", surf_o.from_gate, "Derive p from a gate document");
  surface->add_option("--map", surf_o.map);
  surface->add_option("--error", surf_o.error, "Fixed error for --from-gate (nm for geometry gates)");
  surface->add_option("--d", surf_o.d, "Array sizes")->delimiter(',');
  surface->add_option("--states", surf_o.states);
  surface->add_option("--threshold", surf_o.threshold);
  surface->add_option("--out", surf_o.out);

  QftOpts qft_o;
  auto* qft = app.add_subcommand("qft", "Noisy quantum Fourier transform benchmark");
  qft->add_option("--n", qft_o.n, "Qubits");
  qft->add_option("--realization", qft_o.realization, "Hadamard gate document (default: uniform pulse)");
  qft->add_option("--map", qft_o.map);
  qft->add_option("--dist", qft_o.dist);
  qft->add_option("--sigma", qft_o.sigma);
  qft->add_option("--shots", qft_o.shots);
  qft->add_option("--out", qft_o.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analytic_cmd) return run_design(design_o);
    if (*optimize) return run_optimize(opt_o, g);
    if (*verify) return run_verify(verify_o);
    if (*sweep) return run_sweep(sweep_o, g);
    if (*fit) return run_fit(fit_o);
    if (*surrogate) return run_surrogate(sur_o, g);
    if (*surface) return run_surface(surf_o, g);
    if (*qft) return run_qft(qft_o, g);
  } catch (const robgate::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
