// Python bindings for the discrimination toolkit. Reports and rankings are
// returned as plain dicts/lists (round-tripped through the JSON serializers),
// so the python surface stays schema-compatible with the CLI output.
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "discrim/io.hpp"
#include "discrim/optimize.hpp"
#include "discrim/stats.hpp"

namespace py = pybind11;
using namespace discrim;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

OptimizerConfig make_config(int restarts, std::uint64_t seed, double tol,
                            bool perms, int max_iterations) {
  OptimizerConfig cfg;
  cfg.restarts = restarts;
  cfg.seed = seed;
  cfg.tolerance = tol;
  cfg.include_permutations = perms;
  cfg.max_iterations = max_iterations;
  return cfg;
}

std::vector<Observable> make_observables(const py::object& spec, const DenseState& rho) {
  if (py::isinstance<py::str>(spec)) {
    return resolve_observables(spec.cast<std::string>(), rho);
  }
  std::vector<Observable> out;
  for (const auto& item : spec.cast<py::sequence>()) {
    if (py::isinstance<PauliString>(item)) {
      out.push_back(item.cast<PauliString>());
    } else {
      out.push_back(PauliString::parse(item.cast<std::string>()));
    }
  }
  if (out.empty()) {
    throw std::invalid_argument("empty observable list");
  }
  return out;
}

GraphSpec make_graph(std::size_t n,
                     const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  GraphSpec g{n, edges};
  g.validate();
  return g;
}

Metric metric_from(const std::string& name) {
  if (name == "F") return Metric::F;
  if (name == "D") return Metric::D;
  throw std::invalid_argument("metric must be 'F' or 'D'");
}

}  // namespace

PYBIND11_MODULE(_discrim, m) {
  m.doc() = "Discrimination measures for inequivalent multipartite entangled states";

  py::class_<PauliString>(m, "PauliString")
      .def(py::init([](const std::string& text) { return PauliString::parse(text); }))
      .def_property_readonly("num_qubits", &PauliString::num_qubits)
      .def_property_readonly("sign", &PauliString::sign)
      .def("weight", &PauliString::weight)
      .def("support", &PauliString::support)
      .def("permuted", &PauliString::permuted, py::arg("perm"),
           "qubit q moves to position perm[q] (0-based)")
      .def("commutes_with", &PauliString::commutes_with)
      .def("__str__", &PauliString::str)
      .def("__repr__",
           [](const PauliString& p) { return "PauliString('" + p.str() + "')"; })
      .def("__eq__", [](const PauliString& a, const PauliString& b) { return a == b; })
      .def("__hash__", [](const PauliString& p) { return PauliStringHash{}(p); });

  py::class_<DenseState>(m, "DenseState")
      .def_property_readonly("is_pure", &DenseState::is_pure)
      .def_property_readonly("num_qubits", &DenseState::num_qubits)
      .def_property_readonly("amplitudes",
                             [](const DenseState& s) { return s.amplitudes(); })
      .def("density", &DenseState::density)
      .def("__repr__", [](const DenseState& s) {
        return "<DenseState " + std::to_string(s.num_qubits()) + " qubits, " +
               (s.is_pure() ? "pure" : "mixed") + ">";
      });

  m.def("pure_state", [](const Eigen::VectorXcd& v) { return DenseState::pure(v); },
        py::arg("amplitudes"));
  m.def("mixed_state", [](const Eigen::MatrixXcd& r) { return DenseState::mixed(r); },
        py::arg("rho"));
  m.def("state", &resolve_state, py::arg("name_or_path"),
        "builtin name (ghz3, ghz4, w3, what_w3, cluster4) or a state JSON file");
  m.def("ghz", &ghz, py::arg("n"));
  m.def("w3", &w3);
  m.def("what_w3", &what_w3);
  m.def("cluster4", &cluster4);

  m.def("graph_state",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
          auto g = make_graph(n, edges);
          return stabilizer_state(StabilizerGroup::from_generators(generators_from_graph(g)));
        },
        py::arg("n"), py::arg("edges"), "graph state from 0-based edges");
  m.def("two_point_count",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
          auto counted = count_two_point(make_graph(n, edges));
          std::vector<std::string> ops;
          for (const auto& op : counted.ops) {
            ops.push_back(op.str());
          }
          return py::make_tuple(counted.k, ops);
        },
        py::arg("n"), py::arg("edges"));
  m.def("two_point_bound",
        [](std::size_t n1, const std::vector<std::pair<std::size_t, std::size_t>>& e1,
           std::size_t n2, const std::vector<std::pair<std::size_t, std::size_t>>& e2) {
          return two_point_bound(make_graph(n1, e1), make_graph(n2, e2));
        },
        py::arg("n1"), py::arg("edges1"), py::arg("n2"), py::arg("edges2"));

  m.def("expectation",
        [](const py::object& obs, const DenseState& s) {
          if (py::isinstance<PauliString>(obs)) {
            return expectation(obs.cast<PauliString>(), s);
          }
          return expectation(PauliString::parse(obs.cast<std::string>()), s);
        },
        py::arg("observable"), py::arg("state"));
  m.def("outcome_distribution",
        [](const std::string& label, const DenseState& s) {
          auto dist = outcome_distribution(PauliString::parse(label), s);
          return py::make_tuple(dist.probs, dist.labels);
        },
        py::arg("observable"), py::arg("state"));
  m.def("overlap", &overlap, py::arg("a"), py::arg("b"));
  m.def("white_noise", &white_noise, py::arg("state"), py::arg("p"));
  m.def("permute_qubits", &permute_qubits, py::arg("state"), py::arg("perm"),
        "qubit q of the input becomes qubit perm[q] (0-based)");
  m.def("stabilizer_ops", [](const DenseState& s) {
    std::vector<std::string> out;
    for (const auto& op : stabilizer_ops_of(s)) {
      out.push_back(op.str());
    }
    return out;
  });

  m.def("relative_entropy",
        [](const std::vector<double>& p, const std::vector<double>& q) {
          if (p.size() != q.size()) {
            throw std::invalid_argument("distribution sizes differ");
          }
          std::vector<std::string> labels(p.size());
          for (std::size_t i = 0; i < p.size(); ++i) {
            labels[i] = std::to_string(i);
          }
          return relative_entropy({p, labels}, {q, labels});
        },
        py::arg("p"), py::arg("q"), "Kullback-Leibler divergence in bits");

  m.def("discriminate",
        [](const DenseState& rho, const DenseState& sigma, const py::object& obs,
           const std::string& metric, int restarts, std::uint64_t seed, double tol,
           bool perms, int max_iterations) {
          if (metric != "F" && metric != "D" && metric != "both") {
            throw std::invalid_argument("metric must be 'F', 'D', or 'both'");
          }
          auto cfg = make_config(restarts, seed, tol, perms, max_iterations);
          auto family = make_observables(obs, rho);
          DiscriminationReport report;
          if (metric != "D") {
            report.f = minimize_f(rho, sigma, family, cfg).f;
          }
          if (metric != "F") {
            report.d = minimize_d(rho, sigma, family, cfg).d;
          }
          report.permutations_included = perms;
          return json_to_py(report_to_json(report));
        },
        py::arg("rho"), py::arg("sigma"), py::arg("obs") = "stabilizers",
        py::arg("metric") = "both", py::arg("restarts") = 64, py::arg("seed") = 0,
        py::arg("tol") = 1e-9, py::arg("perms") = false,
        py::arg("max_iterations") = 4000);

  m.def("max_overlap",
        [](const DenseState& psi, const DenseState& phi, int restarts,
           std::uint64_t seed, double tol, bool perms, int max_iterations) {
          auto [value, params] = max_overlap(
              psi, phi, make_config(restarts, seed, tol, perms, max_iterations));
          return py::make_tuple(value, json_to_py(params_to_json(params)));
        },
        py::arg("psi"), py::arg("phi"), py::arg("restarts") = 64,
        py::arg("seed") = 0, py::arg("tol") = 1e-9, py::arg("perms") = false,
        py::arg("max_iterations") = 4000);

  m.def("subset_search",
        [](const DenseState& rho, const DenseState& sigma, const py::object& candidates,
           std::size_t max_size, const std::string& metric, int restarts,
           std::uint64_t seed, double tol, bool perms, int max_iterations) {
          std::vector<PauliString> ops;
          for (const auto& o : make_observables(candidates, rho)) {
            ops.push_back(std::get<PauliString>(o));
          }
          auto ranked = subset_search(
              rho, sigma, ops, max_size, metric_from(metric),
              make_config(restarts, seed, tol, perms, max_iterations));
          return json_to_py(ranked_families_to_json(ranked));
        },
        py::arg("rho"), py::arg("sigma"), py::arg("candidates") = "stabilizers",
        py::arg("max_size") = 3, py::arg("metric") = "D", py::arg("restarts") = 64,
        py::arg("seed") = 0, py::arg("tol") = 1e-9, py::arg("perms") = false,
        py::arg("max_iterations") = 4000);

  m.def("noise_curve",
        [](const DenseState& rho, const DenseState& sigma, const py::object& obs,
           const std::vector<double>& p_grid, int restarts, std::uint64_t seed,
           double tol, bool perms, int max_iterations) {
          auto curve = noise_curve(
              rho, sigma, make_observables(obs, rho), p_grid,
              make_config(restarts, seed, tol, perms, max_iterations));
          py::list out;
          for (const auto& point : curve) {
            out.append(py::make_tuple(point.one_minus_p, point.f, point.d));
          }
          return out;
        },
        py::arg("rho"), py::arg("sigma"), py::arg("obs"), py::arg("p_grid"),
        py::arg("restarts") = 64, py::arg("seed") = 0, py::arg("tol") = 1e-9,
        py::arg("perms") = false, py::arg("max_iterations") = 4000);

  m.def("simulate_runs",
        [](const DenseState& state, const py::object& obs, std::uint64_t runs_total,
           std::uint64_t seed) {
          auto samples =
              simulate_runs(state, make_observables(obs, state), runs_total, seed);
          return json_to_py(sample_runs_to_json(samples));
        },
        py::arg("state"), py::arg("obs"), py::arg("runs_total"), py::arg("seed") = 0);

  m.def("coin_equivalence",
        [](std::uint64_t n_runs, double d_value) {
          auto c = coin_equivalence(n_runs, d_value);
          return py::make_tuple(c.log2_probability, c.equivalent_tosses);
        },
        py::arg("n_runs"), py::arg("d_value"));

  m.def("measures_from_correlations",
        [](const std::vector<std::tuple<std::string, double, double>>& records,
           const DenseState& sigma, const std::string& metric, int restarts,
           std::uint64_t seed, double tol, bool perms, int max_iterations,
           int mc_samples) {
          MeasuredCorrelations data;
          for (const auto& [label, e, err] : records) {
            data.records.push_back({PauliString::parse(label), e, err});
          }
          auto result = measures_from_correlations(
              data, sigma, metric_from(metric),
              make_config(restarts, seed, tol, perms, max_iterations), mc_samples);
          py::dict out;
          out["value"] = result.value;
          out["uncertainty"] = result.uncertainty;
          out["report"] = json_to_py(report_to_json(result.report));
          return out;
        },
        py::arg("records"), py::arg("sigma"), py::arg("metric") = "D",
        py::arg("restarts") = 64, py::arg("seed") = 0, py::arg("tol") = 1e-9,
        py::arg("perms") = false, py::arg("max_iterations") = 4000,
        py::arg("mc_samples") = 1000);
}
