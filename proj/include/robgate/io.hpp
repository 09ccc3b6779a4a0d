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

// JSON documents and CSV tables exchanged by the command-line tool.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "robgate/apps.hpp"
#include "robgate/optimize.hpp"
#include "robgate/photonic.hpp"

namespace robgate::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "robgate/1";

/// 16 hex digits of FNV-1a over the compact dump of `j`.
std::string config_hash(const Json& j);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);
/// Path "-" means standard output.
void write_text(const std::filesystem::path& path, const std::string& text);

/// Relative paths resolve against $ROBGATE_OUTPUT_DIR when it is set.
std::filesystem::path output_path(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Gate documents.

struct GateDocument {
  std::string target_label;
  apps::Realization gate;
  std::string provenance;  // analytic | optimized | fixture
  std::string config_hash;

  bool is_geometry() const { return std::holds_alternative<photonic::GeometryGate>(gate); }
};

Json to_json(const GateDocument& doc);
GateDocument gate_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Photonic maps and distributions.

Json to_json(const photonic::PhotonicFitMap& map);
photonic::PhotonicFitMap map_from_json(const Json& j);

Json to_json(const ErrorDistribution& d);
ErrorDistribution distribution_from_json(const Json& j);

// ---------------------------------------------------------------------------
// Optimization runs.

enum class ModelKind { toy, photonic };

struct OptimizeRun {
  std::string target;
  ModelKind model = ModelKind::toy;
  int n_segments = 3;
  ErrorDistribution distribution{DistributionKind::gaussian, 0.1};
  Bounds bounds;
  OptimizerConfig optimizer;
  std::optional<Eigen::VectorXd> init;
  std::optional<double> bookend_angle;  // toy model only
  std::string map;  // photonic: map file path, or "surrogate"
  std::optional<double> max_final_loss;
};

OptimizeRun optimize_run_from_json(const Json& j);
Json to_json(const OptimizeRun& run);

// ---------------------------------------------------------------------------
// Tables.

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::string comment;  // written as a leading "# ..." line when non-empty
};

std::string to_csv(const Table& t);
Table table_from_csv(const std::string& text);
Table read_csv(const std::filesystem::path& path);

Table to_table(const photonic::SampleGrid& grid);
photonic::SampleGrid grid_from_table(const Table& t);

}  // namespace robgate::io
