// Command-line front end: batch discrimination runs with JSON/CSV output.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "discrim/io.hpp"
#include "discrim/optimize.hpp"
#include "discrim/stats.hpp"

using namespace discrim;
using nlohmann::json;

namespace {

struct CommonOpts {
  std::string rho;
  std::string sigma;
  std::string obs = "stabilizers";
  std::string metric = "both";
  bool perms = false;
  int restarts = 64;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string out;
};

void add_optimizer_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_flag("--perms", o.perms, "include qubit permutations in the orbit");
  cmd->add_option("--restarts", o.restarts, "optimizer restarts per branch");
  cmd->add_option("--seed", o.seed, "rng seed");
  cmd->add_option("--tol", o.tol, "optimizer convergence tolerance");
}

OptimizerConfig config_of(const CommonOpts& o) {
  OptimizerConfig cfg;
  cfg.restarts = o.restarts;
  cfg.seed = o.seed;
  cfg.tolerance = o.tol;
  cfg.include_permutations = o.perms;
  return cfg;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    throw std::runtime_error("cannot write " + out_path);
  }
  out << text << '\n';
}

std::vector<double> parse_grid(const std::string& spec) {
  double a = 0, b = 0, step = 0;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0) {
    throw std::runtime_error("--noise-grid expects a:b:step with step > 0");
  }
  std::vector<double> grid;
  for (double p = a; p <= b + 1e-12; p += step) {
    grid.push_back(std::min(std::max(p, 0.0), 1.0));
  }
  return grid;
}

GraphSpec load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read " + path);
  }
  json j;
  in >> j;
  return graph_from_json(j);
}

int run(int argc, char** argv) {
  CLI::App app{"Entanglement-class discrimination toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string noise_grid = "0:1:0.05";
  std::size_t max_size = 3;
  int mc_samples = 1000;
  std::uint64_t runs = 1000;
  std::string data_path;
  std::string g1_path, g2_path;

  auto* discriminate = app.add_subcommand("discriminate",
                                          "both measures for rho vs the orbit of sigma");
  discriminate->add_option("--rho", o.rho, "prepared state")->required();
  discriminate->add_option("--sigma", o.sigma, "state class representative")->required();
  discriminate->add_option("--obs", o.obs, "observable family");
  discriminate->add_option("--metric", o.metric)->check(CLI::IsMember({"F", "D", "both"}));
  discriminate->add_option("--out", o.out, "output path (default stdout)");
  add_optimizer_flags(discriminate, o);

  auto* overlap_cmd = app.add_subcommand("overlap", "maximal squared overlap over the orbit");
  overlap_cmd->add_option("--rho", o.rho)->required();
  overlap_cmd->add_option("--sigma", o.sigma)->required();
  overlap_cmd->add_option("--out", o.out);
  add_optimizer_flags(overlap_cmd, o);

  auto* subset = app.add_subcommand("subset-search", "rank observable families");
  subset->add_option("--rho", o.rho)->required();
  subset->add_option("--sigma", o.sigma)->required();
  subset->add_option("--obs", o.obs, "candidate family");
  subset->add_option("--metric", o.metric)->check(CLI::IsMember({"F", "D"}));
  subset->add_option("--max-size", max_size, "largest family size");
  subset->add_option("--out", o.out);
  add_optimizer_flags(subset, o);

  auto* noise = app.add_subcommand("noise-curve", "measures under white noise (CSV)");
  noise->add_option("--rho", o.rho)->required();
  noise->add_option("--sigma", o.sigma)->required();
  noise->add_option("--obs", o.obs);
  noise->add_option("--noise-grid", noise_grid, "p values as a:b:step");
  noise->add_option("--out", o.out);
  add_optimizer_flags(noise, o);

  auto* bound = app.add_subcommand("graph-bound", "two-point discrimination bound");
  bound->add_option("--g1", g1_path, "graph JSON for the prepared class")->required();
  bound->add_option("--g2", g2_path, "graph JSON for the other class")->required();
  bound->add_option("--out", o.out);

  auto* simulate = app.add_subcommand("simulate", "finite-sample measurement runs");
  simulate->add_option("--rho", o.rho)->required();
  simulate->add_option("--obs", o.obs);
  simulate->add_option("--runs", runs, "total measurement runs");
  simulate->add_option("--seed", o.seed);
  simulate->add_option("--out", o.out);

  auto* ingest = app.add_subcommand("ingest", "measures from measured correlations");
  ingest->add_option("--data", data_path, "correlations CSV")->required();
  ingest->add_option("--sigma", o.sigma)->required();
  ingest->add_option("--metric", o.metric)->check(CLI::IsMember({"F", "D", "both"}));
  ingest->add_option("--mc-samples", mc_samples, "error-propagation resamples");
  ingest->add_option("--out", o.out);
  add_optimizer_flags(ingest, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  OptimizerConfig cfg = config_of(o);

  if (*discriminate) {
    DenseState rho = resolve_state(o.rho);
    DenseState sigma = resolve_state(o.sigma);
    auto obs = resolve_observables(o.obs, rho);
    DiscriminationReport report;
    if (o.metric != "D") {
      report.f = minimize_f(rho, sigma, obs, cfg).f;
    }
    if (o.metric != "F") {
      report.d = minimize_d(rho, sigma, obs, cfg).d;
    }
    report.permutations_included = cfg.include_permutations;
    emit(report_to_json(report).dump(2), o.out);
  } else if (*overlap_cmd) {
    auto [value, params] = max_overlap(resolve_state(o.rho), resolve_state(o.sigma), cfg);
    emit(json{{"max_overlap", value}, {"params", params_to_json(params)}}.dump(2),
         o.out);
  } else if (*subset) {
    if (o.metric == "both") {
      o.metric = "D";
    }
    DenseState rho = resolve_state(o.rho);
    std::vector<PauliString> candidates;
    for (const auto& obs : resolve_observables(o.obs, rho)) {
      if (const auto* p = std::get_if<PauliString>(&obs)) {
        candidates.push_back(*p);
      } else {
        throw std::runtime_error("subset search needs Pauli candidates");
      }
    }
    auto ranked = subset_search(rho, resolve_state(o.sigma), candidates, max_size,
                                o.metric == "F" ? Metric::F : Metric::D, cfg);
    emit(ranked_families_to_json(ranked).dump(2), o.out);
  } else if (*noise) {
    DenseState rho = resolve_state(o.rho);
    auto obs = resolve_observables(o.obs, rho);
    auto curve = noise_curve(rho, resolve_state(o.sigma), obs, parse_grid(noise_grid), cfg);
    emit(noise_curve_to_csv(curve), o.out);
  } else if (*bound) {
    GraphSpec g1 = load_graph(g1_path);
    GraphSpec g2 = load_graph(g2_path);
    auto c1 = count_two_point(g1);
    auto c2 = count_two_point(g2);
    emit(json{{"k1", c1.k}, {"k2", c2.k}, {"bound", two_point_bound(g1, g2)}}.dump(2),
         o.out);
  } else if (*simulate) {
    DenseState rho = resolve_state(o.rho);
    auto obs = resolve_observables(o.obs, rho);
    emit(sample_runs_to_json(simulate_runs(rho, obs, runs, o.seed)).dump(2), o.out);
  } else if (*ingest) {
    auto data = ingest_correlations_file(data_path);
    DenseState sigma = resolve_state(o.sigma);
    json out = json::object();
    if (o.metric != "D") {
      auto f = measures_from_correlations(data, sigma, Metric::F, cfg, mc_samples);
      out["F"] = {{"value", f.value},
                  {"uncertainty", f.uncertainty},
                  {"report", report_to_json(f.report)}};
    }
    if (o.metric != "F") {
      auto d = measures_from_correlations(data, sigma, Metric::D, cfg, mc_samples);
      out["D"] = {{"value", d.value},
                  {"uncertainty", d.uncertainty},
                  {"report", report_to_json(d.report)}};
    }
    emit(out.dump(2), o.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
