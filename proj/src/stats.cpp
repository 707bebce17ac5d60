#include "discrim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "discrim/nelder_mead.hpp"

namespace discrim {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) {
    return "";
  }
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double kl_surrogate(const std::vector<double>& p, const std::vector<double>& q) {
  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < kProbabilityFloor) continue;
    sum += p[i] * std::log2(p[i] / std::max(q[i], 1e-300));
  }
  return sum;
}

OutcomeDistribution dichotomic(double e) {
  double p_plus = std::clamp((1.0 + e) / 2.0, 0.0, 1.0);
  return {{p_plus, 1.0 - p_plus}, {"+1", "-1"}};
}

/// One local re-minimization from a known-good starting point, with the
/// permutation held fixed. Used for Monte-Carlo resamples.
double reoptimize_d(std::span<const OutcomeDistribution> p_dists,
                    const DenseState& sigma, std::span<const Observable> obs,
                    const LocalUnitaryParams& start, const OptimizerConfig& cfg) {
  std::size_t n = sigma.num_qubits();
  double k = static_cast<double>(obs.size());
  auto make_params = [&](const Eigen::VectorXd& x) {
    LocalUnitaryParams p;
    p.perm = start.perm;
    for (std::size_t q = 0; q < n; ++q) {
      p.angles.push_back({x[static_cast<Eigen::Index>(3 * q)],
                          x[static_cast<Eigen::Index>(3 * q + 1)],
                          x[static_cast<Eigen::Index>(3 * q + 2)]});
    }
    return p;
  };
  auto eval = [&](const Eigen::VectorXd& x) {
    DenseState rotated = conjugate_state(make_params(x), sigma);
    double sum = 0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
      sum += kl_surrogate(p_dists[i].probs, outcome_distribution(obs[i], rotated).probs);
    }
    return sum / k;
  };
  Eigen::VectorXd x0(static_cast<Eigen::Index>(3 * n));
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t c = 0; c < 3; ++c) {
      x0[static_cast<Eigen::Index>(3 * q + c)] = start.angles[q][c];
    }
  }
  NelderMeadResult res = nelder_mead(eval, x0, {0.05, cfg.tolerance, cfg.max_iterations});
  DenseState rotated = conjugate_state(make_params(res.x), sigma);
  double sum = 0;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    sum += relative_entropy(p_dists[i], outcome_distribution(obs[i], rotated));
  }
  return sum / k;
}

double standard_deviation(const std::vector<double>& values, double mean) {
  if (values.empty()) {
    return 0.0;
  }
  double acc = 0;
  for (double v : values) {
    acc += (v - mean) * (v - mean);
  }
  return std::sqrt(acc / static_cast<double>(values.size()));
}

}  // namespace

OutcomeDistribution SampleRun::frequencies() const {
  if (total == 0) {
    throw std::invalid_argument("sample has no runs");
  }
  OutcomeDistribution out;
  out.labels = labels;
  out.probs.reserve(counts.size());
  for (std::uint64_t c : counts) {
    out.probs.push_back(static_cast<double>(c) / static_cast<double>(total));
  }
  return out;
}

std::vector<SampleRun> simulate_runs(const DenseState& state,
                                     std::span<const Observable> obs,
                                     std::uint64_t runs_total, std::uint64_t seed) {
  if (obs.empty()) {
    throw std::invalid_argument("observable list is empty");
  }
  if (runs_total < obs.size()) {
    throw std::invalid_argument("fewer runs than observables");
  }
  std::uint64_t shots = runs_total / obs.size();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  std::vector<SampleRun> out;
  out.reserve(obs.size());
  for (const Observable& a : obs) {
    OutcomeDistribution dist = outcome_distribution(a, state);
    SampleRun run;
    run.observable = a;
    run.labels = dist.labels;
    run.counts.assign(dist.probs.size(), 0);
    run.total = shots;
    for (std::uint64_t s = 0; s < shots; ++s) {
      double u = uniform(rng);
      double acc = 0;
      std::size_t outcome = dist.probs.size() - 1;
      for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        acc += dist.probs[i];
        if (u < acc) {
          outcome = i;
          break;
        }
      }
      ++run.counts[outcome];
    }
    out.push_back(std::move(run));
  }
  return out;
}

double empirical_d(const SampleRun& sample, const DenseState& sigma) {
  return relative_entropy(sample.frequencies(),
                          outcome_distribution(sample.observable, sigma));
}

CoinEquivalence coin_equivalence(std::uint64_t n_runs, double d_value) {
  if (d_value < 0) {
    throw std::invalid_argument("relative entropy must be >= 0");
  }
  double tosses = static_cast<double>(n_runs) * d_value;
  return {-tosses, tosses};
}

MeasuredCorrelations ingest_correlations(std::istream& in) {
  MeasuredCorrelations data;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string text = trim(line);
    if (text.empty() || text.front() == '#') {
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ',')) {
      fields.push_back(trim(field));
    }
    if (fields.size() != 2 && fields.size() != 3) {
      throw std::runtime_error("line " + std::to_string(line_number) +
                               ": expected 'label,expectation[,stderr]'");
    }
    CorrelationRecord record;
    try {
      record.op = PauliString::parse(fields[0]);
      record.expectation = std::stod(fields[1]);
      record.stderr_ = fields.size() == 3 ? std::stod(fields[2]) : 0.0;
    } catch (const std::exception&) {
      throw std::runtime_error("line " + std::to_string(line_number) +
                               ": malformed record '" + text + "'");
    }
    if (std::abs(record.expectation) > 1.0) {
      throw std::runtime_error("line " + std::to_string(line_number) +
                               ": expectation out of [-1, 1]");
    }
    if (record.stderr_ < 0.0) {
      throw std::runtime_error("line " + std::to_string(line_number) +
                               ": negative stderr");
    }
    for (const auto& existing : data.records) {
      if (existing.op == record.op) {
        throw std::runtime_error("line " + std::to_string(line_number) +
                                 ": duplicate label " + record.op.str());
      }
    }
    data.records.push_back(record);
  }
  return data;
}

MeasuredCorrelations ingest_correlations_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  return ingest_correlations(in);
}

CorrelationMeasures measures_from_correlations(const MeasuredCorrelations& data,
                                               const DenseState& sigma_pure,
                                               Metric metric,
                                               const OptimizerConfig& cfg,
                                               int mc_samples) {
  if (data.records.empty()) {
    throw std::invalid_argument("no correlation records");
  }
  std::vector<Observable> obs;
  std::vector<double> expectations;
  bool noiseless = true;
  for (const auto& r : data.records) {
    obs.push_back(r.op);
    expectations.push_back(r.expectation);
    if (r.stderr_ > 0) {
      noiseless = false;
    }
  }
  double k = static_cast<double>(obs.size());

  CorrelationMeasures out;
  std::mt19937_64 rng(cfg.seed + 0x51ed270b);
  auto resample = [&]() {
    std::vector<double> e(expectations);
    for (std::size_t i = 0; i < e.size(); ++i) {
      std::normal_distribution<double> dist(expectations[i], data.records[i].stderr_);
      e[i] = std::clamp(dist(rng), -1.0, 1.0);
    }
    return e;
  };

  if (metric == Metric::D) {
    std::vector<OutcomeDistribution> p_dists;
    p_dists.reserve(obs.size());
    for (double e : expectations) {
      p_dists.push_back(dichotomic(e));
    }
    out.report = minimize_d_given_p(p_dists, sigma_pure, obs, cfg);
    out.value = out.report.d->value;
    if (!noiseless) {
      std::vector<double> values;
      values.reserve(static_cast<std::size_t>(mc_samples));
      for (int s = 0; s < mc_samples; ++s) {
        std::vector<double> e = resample();
        std::vector<OutcomeDistribution> p_mc;
        p_mc.reserve(e.size());
        for (double ei : e) {
          p_mc.push_back(dichotomic(ei));
        }
        values.push_back(
            reoptimize_d(p_mc, sigma_pure, obs, out.report.d->minimizer, cfg));
      }
      double mean = 0;
      for (double v : values) mean += v;
      mean /= static_cast<double>(values.size());
      out.uncertainty = standard_deviation(values, mean);
    }
    return out;
  }

  // Expectation-gap side: observables are normalized against the ideal state
  // (every recorded operator has expectation 1 there), so the combined
  // observable needs no rescaling and rho enters only through mean(e).
  Eigen::MatrixXcd mean_obs = to_matrix(data.records[0].op);
  for (std::size_t i = 1; i < data.records.size(); ++i) {
    mean_obs += to_matrix(data.records[i].op);
  }
  mean_obs /= k;
  auto [orbit_max, params] = orbit_max_expectation(mean_obs, sigma_pure, cfg);
  double mean_e = 0;
  for (double e : expectations) mean_e += e;
  mean_e /= k;
  out.value = std::max(0.0, mean_e - orbit_max);

  MetricResult result;
  result.value = out.value;
  result.minimizer = params;
  DenseState rotated = conjugate_state(params, sigma_pure);
  for (std::size_t i = 0; i < data.records.size(); ++i) {
    result.per_observable.push_back(
        expectations[i] - pauli_expectation(data.records[i].op, rotated.amplitudes()));
  }
  out.report.f = std::move(result);
  out.report.permutations_included = cfg.include_permutations;
  out.report.normalization = "ideal";

  if (!noiseless) {
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(mc_samples));
    for (int s = 0; s < mc_samples; ++s) {
      std::vector<double> e = resample();
      double m = 0;
      for (double ei : e) m += ei;
      values.push_back(std::max(0.0, m / k - orbit_max));
    }
    double mean = 0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    out.uncertainty = standard_deviation(values, mean);
  }
  return out;
}

}  // namespace discrim
