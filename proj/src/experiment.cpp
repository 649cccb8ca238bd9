#include "pdecomp/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pdecomp/decomposer.hpp"
#include "pdecomp/errors.hpp"
#include "pdecomp/graph_io.hpp"
#include "pdecomp/sampler.hpp"
#include "pdecomp/verifier.hpp"

namespace pdecomp {
namespace {

using nlohmann::json;

std::vector<std::size_t> parse_dims(std::string_view text, std::string_view what) {
  std::vector<std::size_t> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw ParameterError("bad " + std::string(what) + " generator spec '" + std::string(text) +
                           "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

json check_json(const CheckResult& r) { return {{"ok", r.ok}, {"message", r.message}}; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json padding_json(const PaddingReport& rep) {
  json records = json::array();
  for (const PaddingRecord& r : rep.records) {
    records.push_back({{"vertex", r.vertex},
                       {"gamma", r.gamma},
                       {"trials", r.trials},
                       {"successes", r.successes},
                       {"wilson_lb", r.wilson_lb},
                       {"floor", r.floor},
                       {"pass", r.pass}});
  }
  const double fitted = rep.fitted_beta();
  return {{"gammas", rep.gammas},
          {"trials", rep.trials},
          {"beta", rep.beta},
          {"fitted_beta", std::isfinite(fitted) ? json(fitted) : json("inf")},
          {"pass", rep.pass},
          {"records", std::move(records)}};
}

// Partition and diameter checks over the first `samples` trial partitions.
void check_samples(const WeightedGraph& g, double delta, const PartitionSampler& sampler,
                   const ExperimentConfig& cfg, json& checks) {
  CheckResult partition_ok = CheckResult::pass();
  CheckResult diameter_ok = CheckResult::pass();
  for (std::size_t i = 0; i < cfg.check_samples && i < cfg.trials; ++i) {
    const Partition part = sampler(derive_seed(cfg.seed, i));
    CheckResult p = check_partition(g, part);
    if (!p) {
      if (partition_ok) partition_ok = CheckResult::fail("trial " + std::to_string(i) + ": " + p.message);
      continue;
    }
    CheckResult d = check_cluster_diameters(g, part, delta);
    if (!d && diameter_ok) diameter_ok = CheckResult::fail("trial " + std::to_string(i) + ": " + d.message);
  }
  checks["partition"] = check_json(partition_ok);
  checks["diameter"] = check_json(diameter_ok);
}

json run_paper(const LoadedGraph& lg, double delta, const ExperimentConfig& cfg,
               const std::vector<VertexId>& vertices, std::ostream* dump) {
  const WeightedGraph& g = lg.graph;
  CheckResult separators = CheckResult::pass();
  std::size_t separator_nodes = 0;
  auto observer = [&](const VertexMask& node, const PathSeparator& sep, int depth) {
    ++separator_nodes;
    if (!separators) return;
    if (auto v = validate_separator(g, node, sep)) {
      separators = CheckResult::fail("depth " + std::to_string(depth) + ", group " +
                                     std::to_string(v->group) + ": " +
                                     std::string(to_string(v->kind)) + ": " + v->message);
    }
  };
  const PaperDecomposer dec(g, delta, make_finder(cfg.finder), observer);
  const CenterSequence& centers = dec.centers();
  const DecompositionParams params = dec.params(cfg.seed);
  const PartitionSampler sampler = [&](std::uint64_t s) { return dec.sample(s); };

  json checks;
  checks["separators"] = check_json(separators);
  checks["recursion_depth"] = check_json(check_recursion_depth(centers, g.n()));
  checks["coverage_certificate"] = check_json(check_coverage_certificate(g, centers, delta));
  check_samples(g, delta, sampler, cfg, checks);

  const double threat_gamma = *std::max_element(cfg.gammas.begin(), cfg.gammas.end());
  const ThreatenerReport threats = threatener_report(g, centers, params, threat_gamma);
  checks["threateners"] =
      check_json(threats.ok ? CheckResult::pass()
                            : CheckResult::fail("max count " + std::to_string(threats.max_count) +
                                                " exceeds bound " + std::to_string(threats.bound)));

  const PaddingReport padding =
      estimate_padding(g, delta, sampler, dec.beta(), cfg.gammas, cfg.trials, cfg.seed, vertices);

  if (dump != nullptr) {
    write_partition(*dump, dec.sample(cfg.seed),
                    "scheme=paper " + partition_metadata(params, dec.beta()));
  }

  json run{{"scheme", "paper"},
           {"delta", delta},
           {"finder", to_string(cfg.finder)},
           {"p_eff", centers.p_eff},
           {"K", params.K},
           {"lambda", params.lambda},
           {"beta", dec.beta()},
           {"centers", centers.records.size()},
           {"carve_prefix", dec.plan().size()},
           {"recursion_nodes", separator_nodes},
           {"max_depth", centers.max_depth},
           {"threateners",
            {{"gamma", threat_gamma}, {"max_count", threats.max_count}, {"bound", threats.bound}}},
           {"checks", std::move(checks)},
           {"padding", padding_json(padding)}};
  run["pass"] = run_passes(run);
  return run;
}

json run_baseline(const LoadedGraph& lg, double delta, const ExperimentConfig& cfg,
                  const std::vector<VertexId>& vertices, std::ostream* dump) {
  const WeightedGraph& g = lg.graph;
  const BaselineDecomposer dec(g, delta);
  const PartitionSampler sampler = [&](std::uint64_t s) { return dec.sample(s); };

  json checks;
  check_samples(g, delta, sampler, cfg, checks);
  const PaddingReport padding =
      estimate_padding(g, delta, sampler, dec.beta(), cfg.gammas, cfg.trials, cfg.seed, vertices);

  if (dump != nullptr) {
    DecompositionParams p;
    p.delta = delta;
    p.seed = cfg.seed;
    p.p_eff = 0;
    p.K = std::max<double>(2.0, static_cast<double>(g.n()));
    p.lambda = dec.lambda();
    write_partition(*dump, dec.sample(cfg.seed), "scheme=baseline " + partition_metadata(p, dec.beta()));
  }

  json run{{"scheme", "baseline"},
           {"delta", delta},
           {"lambda", dec.lambda()},
           {"beta", dec.beta()},
           {"checks", std::move(checks)},
           {"padding", padding_json(padding)}};
  run["pass"] = run_passes(run);
  return run;
}

}  // namespace

Scheme parse_scheme(std::string_view name) {
  if (name == "paper") return Scheme::kPaper;
  if (name == "baseline") return Scheme::kBaseline;
  if (name == "both") return Scheme::kBoth;
  throw ParameterError("unknown scheme '" + std::string(name) + "' (expected paper|baseline|both)");
}

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::kPaper: return "paper";
    case Scheme::kBaseline: return "baseline";
    case Scheme::kBoth: return "both";
  }
  return "unknown";
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.graph_file.empty() == cfg.generator.empty()) {
    throw ParameterError("exactly one of a graph file or a generator is required");
  }
  for (double d : cfg.deltas) {
    if (!(d > 0.0) || !std::isfinite(d)) throw ParameterError("every delta must be positive");
  }
  if (cfg.gammas.empty()) throw ParameterError("at least one gamma is required");
  for (double g : cfg.gammas) {
    if (!(g >= 0.0 && g <= 0.01)) throw ParameterError("every gamma must lie in [0, 1/100]");
  }
  if (cfg.trials == 0) throw ParameterError("trials must be at least 1");
}

LoadedGraph load_experiment_graph(const ExperimentConfig& cfg) {
  if (!cfg.graph_file.empty()) return {load_graph(cfg.graph_file), cfg.graph_file, 0, {}};

  const std::string& spec = cfg.generator;
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "grid") {
    auto dims = parse_dims(args, "grid");
    if (dims.size() != 2) throw ParameterError("grid generator expects grid:R,C");
    return {gen_grid(dims[0], dims[1], cfg.weights, cfg.seed), spec, 0, {}};
  }
  if (kind == "ktree") {
    auto dims = parse_dims(args, "ktree");
    if (dims.size() != 2) throw ParameterError("ktree generator expects ktree:N,K");
    KTree t = gen_ktree(dims[0], dims[1], cfg.weights, cfg.seed);
    return {std::move(t.graph), spec, t.k, std::move(t.elimination_order)};
  }
  throw ParameterError("unknown generator '" + spec + "' (expected grid:R,C or ktree:N,K)");
}

bool run_passes(const json& run) {
  for (const auto& [name, check] : run.at("checks").items()) {
    if (!check.at("ok").get<bool>()) return false;
  }
  return run.at("padding").at("pass").get<bool>();
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, std::ostream* partition_dump) {
  validate(cfg);
  const LoadedGraph lg = load_experiment_graph(cfg);
  const WeightedGraph& g = lg.graph;

  const double diameter = weighted_diameter(g);
  std::vector<double> deltas = cfg.deltas;
  if (deltas.empty()) {
    if (!(diameter > 0.0)) {
      deltas = {1.0};
    } else {
      deltas = {diameter / 8.0, diameter / 4.0, diameter / 2.0};
    }
  }

  json graph{{"source", lg.source},
             {"n", g.n()},
             {"m", g.m()},
             {"weights", cfg.graph_file.empty() ? std::string(to_string(cfg.weights)) : "file"},
             {"weighted_diameter", diameter},
             {"diameter_exact", g.n() <= 512}};
  if (lg.ktree_k > 0) {
    graph["treewidth_certificate"] = {
        {"k", lg.ktree_k},
        {"elimination_order_width", elimination_width(g, lg.elimination_order)}};
  }

  json config{{"deltas", deltas},
              {"gammas", cfg.gammas},
              {"trials", cfg.trials},
              {"seed", cfg.seed},
              {"finder", to_string(cfg.finder)},
              {"scheme", to_string(cfg.scheme)},
              {"check_samples", cfg.check_samples}};

  const std::vector<VertexId> vertices = padding_vertices(g.n(), cfg.seed);
  json runs = json::array();
  bool pass = true;
  for (double delta : deltas) {
    if (cfg.scheme != Scheme::kBaseline) {
      runs.push_back(run_paper(lg, delta, cfg, vertices, partition_dump));
      pass = pass && runs.back().at("pass").get<bool>();
    }
    if (cfg.scheme != Scheme::kPaper) {
      runs.push_back(run_baseline(lg, delta, cfg, vertices, partition_dump));
      pass = pass && runs.back().at("pass").get<bool>();
    }
  }

  json report{{"timestamp", cfg.timestamp ? utc_timestamp() : std::string()},
              {"config", std::move(config)},
              {"graph", std::move(graph)},
              {"runs", std::move(runs)},
              {"pass", pass}};
  return {std::move(report), pass};
}

void write_report(const std::string& path, const json& report) {
  std::ofstream out(path);
  if (!out) throw ParameterError("cannot write report to '" + path + "'");
  out << report.dump(2) << '\n';
}

}  // namespace pdecomp
