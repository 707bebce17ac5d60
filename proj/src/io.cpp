#include "discrim/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace discrim {

namespace {

using nlohmann::json;

json complex_to_json(const std::complex<double>& c) {
  return json::array({c.real(), c.imag()});
}

std::complex<double> complex_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json finite_or_inf(double v) {
  if (std::isinf(v)) {
    return v > 0 ? "inf" : "-inf";
  }
  return v;
}

json metric_result_to_json(const MetricResult& m) {
  json per = json::array();
  for (double v : m.per_observable) {
    per.push_back(finite_or_inf(v));
  }
  return {{"value", finite_or_inf(m.value)},
          {"per_observable", per},
          {"minimizer", params_to_json(m.minimizer)}};
}

}  // namespace

json state_to_json(const DenseState& s) {
  json data = json::array();
  if (s.is_pure()) {
    for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i) {
      data.push_back(complex_to_json(s.amplitudes()[i]));
    }
  } else {
    Eigen::MatrixXcd rho = s.density();
    for (Eigen::Index r = 0; r < rho.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < rho.cols(); ++c) {
        row.push_back(complex_to_json(rho(r, c)));
      }
      data.push_back(row);
    }
  }
  return {{"n", s.num_qubits()},
          {"kind", s.is_pure() ? "pure" : "mixed"},
          {"data", data}};
}

DenseState state_from_json(const json& j) {
  std::size_t n = j.at("n").get<std::size_t>();
  std::string kind = j.at("kind").get<std::string>();
  const json& data = j.at("data");
  Eigen::Index dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  if (kind == "pure") {
    if (static_cast<Eigen::Index>(data.size()) != dim) {
      throw std::invalid_argument("amplitude count does not match qubit count");
    }
    Eigen::VectorXcd v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      v[i] = complex_from_json(data.at(static_cast<std::size_t>(i)));
    }
    return DenseState::pure(std::move(v));
  }
  if (kind == "mixed") {
    Eigen::MatrixXcd rho(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      for (Eigen::Index c = 0; c < dim; ++c) {
        rho(r, c) = complex_from_json(
            data.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)));
      }
    }
    return DenseState::mixed(std::move(rho));
  }
  throw std::invalid_argument("kind must be 'pure' or 'mixed'");
}

json graph_to_json(const GraphSpec& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges) {
    edges.push_back({a + 1, b + 1});
  }
  return {{"n", g.n}, {"edges", edges}};
}

GraphSpec graph_from_json(const json& j) {
  GraphSpec g;
  g.n = j.at("n").get<std::size_t>();
  for (const auto& e : j.at("edges")) {
    std::size_t a = e.at(0).get<std::size_t>();
    std::size_t b = e.at(1).get<std::size_t>();
    if (a == 0 || b == 0) {
      throw std::invalid_argument("graph vertices are 1-based");
    }
    g.edges.emplace_back(a - 1, b - 1);
  }
  g.validate();
  return g;
}

json params_to_json(const LocalUnitaryParams& p) {
  json angles = json::array();
  for (const auto& a : p.angles) {
    angles.push_back({a[0], a[1], a[2]});
  }
  json out{{"angles", angles}};
  if (p.perm) {
    json perm = json::array();
    for (std::size_t v : *p.perm) {
      perm.push_back(v + 1);
    }
    out["perm"] = perm;
  }
  return out;
}

LocalUnitaryParams params_from_json(const json& j) {
  LocalUnitaryParams p;
  for (const auto& a : j.at("angles")) {
    p.angles.push_back({a.at(0).get<double>(), a.at(1).get<double>(),
                        a.at(2).get<double>()});
  }
  if (j.contains("perm")) {
    std::vector<std::size_t> perm;
    for (const auto& v : j.at("perm")) {
      std::size_t idx = v.get<std::size_t>();
      if (idx == 0) {
        throw std::invalid_argument("permutation entries are 1-based");
      }
      perm.push_back(idx - 1);
    }
    p.perm = std::move(perm);
  }
  return p;
}

json report_to_json(const DiscriminationReport& r) {
  json out{{"permutations_included", r.permutations_included},
           {"normalization", r.normalization}};
  if (r.f) {
    out["F"] = metric_result_to_json(*r.f);
  }
  if (r.d) {
    out["D"] = metric_result_to_json(*r.d);
  }
  return out;
}

json ranked_families_to_json(const std::vector<RankedFamily>& families) {
  json out = json::array();
  for (const auto& fam : families) {
    json ops = json::array();
    for (const auto& op : fam.ops) {
      ops.push_back(op.str());
    }
    out.push_back({{"ops", ops}, {"value", finite_or_inf(fam.value)}});
  }
  return out;
}

json sample_runs_to_json(const std::vector<SampleRun>& runs) {
  json out = json::array();
  for (const auto& run : runs) {
    json counts = json::object();
    for (std::size_t i = 0; i < run.labels.size(); ++i) {
      counts[run.labels[i]] = run.counts[i];
    }
    json entry{{"counts", counts}, {"total", run.total}};
    if (const auto* p = std::get_if<PauliString>(&run.observable)) {
      entry["observable"] = p->str();
    }
    out.push_back(entry);
  }
  return out;
}

std::string noise_curve_to_csv(const std::vector<NoisePoint>& points) {
  std::ostringstream out;
  out << "one_minus_p,F,D\n";
  out.precision(12);
  for (const auto& p : points) {
    out << p.one_minus_p << ',' << p.f << ',';
    if (std::isinf(p.d)) {
      out << "inf";
    } else {
      out << p.d;
    }
    out << '\n';
  }
  return out.str();
}

DenseState resolve_state(const std::string& name_or_path) {
  if (name_or_path == "ghz3") return ghz(3);
  if (name_or_path == "ghz4") return ghz(4);
  if (name_or_path == "w3") return w3();
  if (name_or_path == "what_w3") return what_w3();
  if (name_or_path == "cluster4") return cluster4();
  std::ifstream in(name_or_path);
  if (!in) {
    throw std::runtime_error("unknown state name and unreadable file: " + name_or_path);
  }
  json j;
  in >> j;
  return state_from_json(j);
}

std::vector<PauliString> stabilizer_ops_of(const DenseState& s) {
  std::size_t n = s.num_qubits();
  std::vector<PauliString> ops;
  // Scan all 4^n words; a stabilizer state has expectation +-1 on exactly
  // 2^n of them and 0 on the rest.
  std::size_t words = std::size_t{1} << (2 * n);
  for (std::size_t code = 0; code < words; ++code) {
    PauliString p(n);
    std::size_t c = code;
    for (std::size_t q = 0; q < n; ++q) {
      p.set_letter(q, "IXYZ"[c & 3]);
      c >>= 2;
    }
    double e = expectation(p, s);
    if (std::abs(std::abs(e) - 1.0) < 1e-8) {
      ops.push_back(p.with_sign(e > 0 ? +1 : -1));
    } else if (std::abs(e) > 1e-8) {
      throw std::invalid_argument("state is not a stabilizer state");
    }
  }
  if (ops.size() != s.dim()) {
    throw std::invalid_argument("state is not a stabilizer state");
  }
  return ops;
}

std::vector<Observable> resolve_observables(const std::string& name_or_path,
                                            const DenseState& rho) {
  auto weight_filter = [&](std::size_t weight) {
    std::vector<Observable> out;
    for (const auto& op : stabilizer_ops_of(rho)) {
      if (op.weight() == weight) {
        out.push_back(op);
      }
    }
    if (out.empty()) {
      throw std::invalid_argument("state has no stabilizing operators of weight " +
                                  std::to_string(weight));
    }
    return out;
  };
  if (name_or_path == "stabilizers") {
    std::vector<Observable> out;
    for (const auto& op : stabilizer_ops_of(rho)) {
      if (!op.is_identity_word()) {
        out.push_back(op);
      }
    }
    return out;
  }
  if (name_or_path == "two-point") return weight_filter(2);
  if (name_or_path == "three-point") return weight_filter(3);
  if (name_or_path == "comp-basis") {
    return {ProductBasis::computational(rho.num_qubits())};
  }
  std::ifstream in(name_or_path);
  if (!in) {
    throw std::runtime_error("unknown observable set and unreadable file: " +
                             name_or_path);
  }
  std::vector<Observable> out;
  std::string line;
  while (std::getline(in, line)) {
    auto begin = line.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos || line[begin] == '#') {
      continue;
    }
    auto end = line.find_last_not_of(" \t\r\n");
    out.push_back(PauliString::parse(line.substr(begin, end - begin + 1)));
  }
  if (out.empty()) {
    throw std::runtime_error("no observables in " + name_or_path);
  }
  return out;
}

}  // namespace discrim
