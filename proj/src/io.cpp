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

#include "robgate/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace robgate::io {

namespace {

namespace fs = std::filesystem;

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string("field \"") + key + "\" has the wrong type");
  }
}

template <typename T>
std::optional<T> optional_field(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<T>(j, key);
}

void check_schema(const Json& j) {
  if (!j.is_object()) throw ValidationError("document must be a JSON object");
  const auto schema = optional_field<std::string>(j, "schema");
  if (schema && *schema != kSchema) throw ValidationError("unsupported schema \"" + *schema + "\"");
}

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_file(const fs::path& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_stream(in);
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

// Shortest text that parses back to the same double.
std::string format_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

std::string config_hash(const Json& j) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json read_json(const fs::path& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_json(const fs::path& path, const Json& j) { write_text(path, j.dump(2) + "\n"); }

void write_text(const fs::path& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  const fs::path target = output_path(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  std::ofstream out(target);
  if (!out) throw IoError("cannot write " + target.string());
  out << text;
  if (!out) throw IoError("write failed for " + target.string());
}

fs::path output_path(const fs::path& path) {
  if (path == "-" || path.is_absolute()) return path;
  const char* dir = std::getenv("ROBGATE_OUTPUT_DIR");
  if (!dir || !*dir) return path;
  return fs::path(dir) / path;
}

// ---------------------------------------------------------------------------

Json to_json(const GateDocument& doc) {
  Json j;
  j["schema"] = kSchema;
  j["target_label"] = doc.target_label;
  if (const auto* c = std::get_if<Composite>(&doc.gate)) {
    j["model"] = "toy";
    j["segments"] = Json::array();
    for (const auto& s : c->segments) j["segments"].push_back({{"omega", s.omega}, {"delta", s.delta}, {"t", s.t}});
    if (c->bookend_angle) j["bookend_angle"] = *c->bookend_angle;
  } else {
    const auto& g = std::get<photonic::GeometryGate>(doc.gate);
    j["model"] = "photonic";
    j["gap_um"] = g.segments.empty() ? photonic::kDefaultGapUm : g.segments.front().gap;
    j["theta_c"] = g.theta_c;
    j["segments"] = Json::array();
    for (const auto& s : g.segments) j["segments"].push_back({{"w1_um", s.w1}, {"w2_um", s.w2}, {"z_um", s.z}});
  }
  j["provenance"] = doc.provenance;
  if (!doc.config_hash.empty()) j["config_hash"] = doc.config_hash;
  return j;
}

GateDocument gate_from_json(const Json& j) {
  check_schema(j);
  GateDocument doc;
  doc.target_label = field<std::string>(j, "target_label");
  doc.provenance = optional_field<std::string>(j, "provenance").value_or("");
  doc.config_hash = optional_field<std::string>(j, "config_hash").value_or("");
  const std::string model = optional_field<std::string>(j, "model").value_or("toy");
  const Json segments = field<Json>(j, "segments");
  if (!segments.is_array() || segments.empty()) throw ValidationError("\"segments\" must be a non-empty array");
  if (model == "toy") {
    Composite c;
    for (const auto& s : segments) {
      c.segments.push_back({field<double>(s, "omega"), field<double>(s, "delta"), field<double>(s, "t")});
    }
    c.bookend_angle = optional_field<double>(j, "bookend_angle");
    validate(c);
    doc.gate = c;
  } else if (model == "photonic") {
    photonic::GeometryGate g;
    const double gap = optional_field<double>(j, "gap_um").value_or(photonic::kDefaultGapUm);
    g.theta_c = optional_field<double>(j, "theta_c").value_or(photonic::kDefaultThetaC);
    for (const auto& s : segments) {
      const double z = field<double>(s, "z_um");
      if (!(z >= 0.0)) throw ValidationError("segment length z_um must be >= 0");
      g.segments.push_back({field<double>(s, "w1_um"), field<double>(s, "w2_um"), z, gap});
    }
    doc.gate = g;
  } else {
    throw ValidationError("unknown model \"" + model + "\" (expected toy or photonic)");
  }
  return doc;
}

// ---------------------------------------------------------------------------

Json to_json(const photonic::PhotonicFitMap& map) {
  Json j;
  j["schema"] = kSchema;
  j["detuning_coeffs"] = {{"a", map.detuning_a}, {"b", map.detuning_b}};
  j["coupling_coeffs"] = map.coupling;
  j["width_range_um"] = {map.width_min, map.width_max};
  j["gap_um"] = map.gap;
  j["theta_c"] = map.theta_c;
  j["provenance"] = map.provenance;
  return j;
}

photonic::PhotonicFitMap map_from_json(const Json& j) {
  check_schema(j);
  photonic::PhotonicFitMap m;
  const Json det = field<Json>(j, "detuning_coeffs");
  m.detuning_a = field<std::array<double, 5>>(det, "a");
  m.detuning_b = field<std::array<double, 5>>(det, "b");
  m.coupling = field<std::array<double, 3>>(j, "coupling_coeffs");
  const auto range = field<std::array<double, 2>>(j, "width_range_um");
  m.width_min = range[0];
  m.width_max = range[1];
  m.gap = field<double>(j, "gap_um");
  m.theta_c = optional_field<double>(j, "theta_c").value_or(photonic::kDefaultThetaC);
  m.provenance = optional_field<std::string>(j, "provenance").value_or("");
  photonic::validate(m);
  return m;
}

Json to_json(const ErrorDistribution& d) { return {{"kind", std::string(to_string(d.kind))}, {"sigma", d.sigma}}; }

ErrorDistribution distribution_from_json(const Json& j) {
  ErrorDistribution d{distribution_kind_from_string(field<std::string>(j, "kind")), field<double>(j, "sigma")};
  validate(d);
  return d;
}

// ---------------------------------------------------------------------------

OptimizeRun optimize_run_from_json(const Json& j) {
  check_schema(j);
  OptimizeRun run;
  run.target = field<std::string>(j, "target");
  const std::string model = optional_field<std::string>(j, "model").value_or("toy");
  if (model == "toy") {
    run.model = ModelKind::toy;
  } else if (model == "photonic") {
    run.model = ModelKind::photonic;
  } else {
    throw ValidationError("unknown model \"" + model + "\" (expected toy or photonic)");
  }
  run.n_segments = field<int>(j, "n_segments");
  if (run.n_segments < 1) throw ValidationError("n_segments must be >= 1");
  run.distribution = distribution_from_json(field<Json>(j, "distribution"));

  const Json bounds = field<Json>(j, "bounds");
  if (!bounds.is_array()) throw ValidationError("\"bounds\" must be an array of [min, max] pairs");
  for (const auto& b : bounds) {
    const auto pair = b.get<std::array<double, 2>>();
    run.bounds.roles.emplace_back(pair[0], pair[1]);
  }
  validate(run.bounds);

  if (j.contains("optimizer")) {
    const Json& o = j.at("optimizer");
    auto& c = run.optimizer;
    c.learning_rate = optional_field<double>(o, "lr").value_or(c.learning_rate);
    c.iterations = optional_field<int>(o, "iterations").value_or(c.iterations);
    c.mu = optional_field<double>(o, "mu").value_or(c.mu);
    c.n_grid = optional_field<int>(o, "n_grid").value_or(c.n_grid);
    c.seed = optional_field<std::uint64_t>(o, "seed").value_or(c.seed);
  }
  validate(run.optimizer);

  if (const auto init = optional_field<std::vector<double>>(j, "init")) {
    if (static_cast<int>(init->size()) != run.n_segments * run.bounds.size()) {
      throw ValidationError("\"init\" must hold n_segments * " + std::to_string(run.bounds.size()) + " values");
    }
    run.init = Eigen::Map<const Eigen::VectorXd>(init->data(), static_cast<Eigen::Index>(init->size()));
  }
  run.bookend_angle = optional_field<double>(j, "bookend_angle");
  run.map = optional_field<std::string>(j, "map").value_or("surrogate");
  run.max_final_loss = optional_field<double>(j, "max_final_loss");
  return run;
}

Json to_json(const OptimizeRun& run) {
  Json j;
  j["schema"] = kSchema;
  j["target"] = run.target;
  j["model"] = run.model == ModelKind::toy ? "toy" : "photonic";
  j["n_segments"] = run.n_segments;
  j["distribution"] = to_json(run.distribution);
  j["bounds"] = Json::array();
  for (const auto& [lo, hi] : run.bounds.roles) j["bounds"].push_back({lo, hi});
  const auto& c = run.optimizer;
  j["optimizer"] = {{"lr", c.learning_rate}, {"iterations", c.iterations}, {"mu", c.mu},
                    {"n_grid", c.n_grid},    {"seed", c.seed}};
  if (run.init) j["init"] = std::vector<double>(run.init->begin(), run.init->end());
  if (run.bookend_angle) j["bookend_angle"] = *run.bookend_angle;
  if (run.model == ModelKind::photonic) j["map"] = run.map;
  if (run.max_final_loss) j["max_final_loss"] = *run.max_final_loss;
  return j;
}

// ---------------------------------------------------------------------------

std::string to_csv(const Table& t) {
  std::ostringstream out;
  if (!t.comment.empty()) out << "# " << t.comment << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << "\n";
  }
  return out.str();
}

Table table_from_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (t.columns.empty() && t.comment.empty()) t.comment = trim(line.substr(1));
      continue;
    }
    const auto cells = split(line, ',');
    if (t.columns.empty()) {
      for (const auto& c : cells) t.columns.push_back(trim(c));
      continue;
    }
    if (cells.size() != t.columns.size()) {
      throw IoError("CSV line " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                    " cells, expected " + std::to_string(t.columns.size()));
    }
    std::vector<double> row;
    for (const auto& c : cells) {
      const std::string cell = trim(c);
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (cell.empty() || *end != '\0') {
        throw IoError("CSV line " + std::to_string(line_no) + ": \"" + cell + "\" is not a number");
      }
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  if (t.columns.empty()) throw IoError("CSV input has no header");
  return t;
}

Table read_csv(const fs::path& path) { return table_from_csv(read_file(path)); }

Table to_table(const photonic::SampleGrid& grid) {
  Table t;
  t.columns = {"w1_um", "w2_um", "delta_beta", "kappa"};
  for (const auto& p : grid) t.rows.push_back({p.w1, p.w2, p.delta_beta, p.kappa});
  return t;
}

photonic::SampleGrid grid_from_table(const Table& t) {
  const std::vector<std::string> expected = {"w1_um", "w2_um", "delta_beta", "kappa"};
  std::array<std::size_t, 4> idx{};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto it = std::find(t.columns.begin(), t.columns.end(), expected[k]);
    if (it == t.columns.end()) throw ValidationError("sample grid is missing column " + expected[k]);
    idx[k] = static_cast<std::size_t>(it - t.columns.begin());
  }
  photonic::SampleGrid grid;
  for (const auto& r : t.rows) grid.push_back({r[idx[0]], r[idx[1]], r[idx[2]], r[idx[3]]});
  return grid;
}

}  // namespace robgate::io
