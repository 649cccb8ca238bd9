#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "pdecomp/generators.hpp"
#include "pdecomp/graph.hpp"
#include "pdecomp/separators.hpp"

namespace pdecomp {

enum class Scheme { kPaper, kBaseline, kBoth };

Scheme parse_scheme(std::string_view name);
std::string_view to_string(Scheme scheme);

struct ExperimentConfig {
  std::string graph_file;  // exactly one of graph_file / generator
  std::string generator;   // "grid:R,C" or "ktree:N,K"
  WeightMode weights = WeightMode::kUnit;
  std::vector<double> deltas;  // empty: {W/8, W/4, W/2}
  std::vector<double> gammas{0.0, 1.0 / 400, 1.0 / 200, 1.0 / 100};
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  FinderKind finder = FinderKind::kGreedy;
  Scheme scheme = Scheme::kPaper;
  std::string out_path;
  std::string partition_path;
  /// Trials (the first ones of the padding run) whose partitions also get
  /// the partition and diameter checks.
  std::size_t check_samples = 8;
  bool timestamp = true;
};

/// Throws ParameterError describing the first invalid field.
void validate(const ExperimentConfig& cfg);

struct LoadedGraph {
  WeightedGraph graph;
  std::string source;
  std::size_t ktree_k = 0;                   // ktree generators only
  std::vector<VertexId> elimination_order;  // treewidth certificate, ktree only
};

LoadedGraph load_experiment_graph(const ExperimentConfig& cfg);

struct ExperimentResult {
  nlohmann::json report;
  bool pass = false;
};

/// For every delta and scheme: decompose, run every verifier check and the
/// padding estimate, and assemble one JSON report. The only
/// non-deterministic field is the top-level "timestamp".
ExperimentResult run_experiment(const ExperimentConfig& cfg, std::ostream* partition_dump = nullptr);

/// A run passes iff every entry of run["checks"] is ok and padding passed.
bool run_passes(const nlohmann::json& run);

/// Writes the report (2-space indented) to path.
void write_report(const std::string& path, const nlohmann::json& report);

}  // namespace pdecomp
