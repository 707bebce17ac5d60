#include "discrim/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "discrim/nelder_mead.hpp"

namespace discrim {

namespace {

constexpr double kSurrogateFloor = 1e-300;  // keeps log finite off singular points

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t branch, std::uint64_t restart) {
  std::uint64_t h = seed + 0x9E3779B97F4A7C15ull * (branch * 1315423911ull + restart + 1);
  h ^= h >> 30;
  h *= 0xBF58476D1CE4E5B9ull;
  h ^= h >> 27;
  h *= 0x94D049BB133111EBull;
  h ^= h >> 31;
  return h;
}

LocalUnitaryParams params_from_vector(const Eigen::VectorXd& x, std::size_t n,
                                      const std::vector<std::size_t>& perm,
                                      bool is_identity_perm) {
  LocalUnitaryParams p;
  p.angles.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    p.angles.push_back({x[static_cast<Eigen::Index>(3 * q)],
                        x[static_cast<Eigen::Index>(3 * q + 1)],
                        x[static_cast<Eigen::Index>(3 * q + 2)]});
  }
  if (!is_identity_perm) {
    p.perm = perm;
  }
  return p;
}

struct OrbitResult {
  double value = std::numeric_limits<double>::infinity();
  LocalUnitaryParams params;
};

/// Multi-start simplex search over the 3n Euler angles, repeated for every
/// distinct qubit permutation of sigma when enabled. Deterministic per seed.
OrbitResult minimize_orbit(const DenseState& sigma,
                           const std::function<double(const DenseState&)>& objective,
                           const OptimizerConfig& cfg) {
  cfg.validate();
  if (!sigma.is_pure()) {
    throw std::invalid_argument("orbit optimization requires a pure sigma");
  }
  std::size_t n = sigma.num_qubits();
  Eigen::Index dim = static_cast<Eigen::Index>(3 * n);

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  if (cfg.include_permutations) {
    for (const auto& rep : distinct_permutations(sigma)) {
      perms.push_back(rep.perm);
    }
  } else {
    perms.push_back(identity);
  }

  OrbitResult best;
  for (std::size_t branch = 0; branch < perms.size(); ++branch) {
    const auto& perm = perms[branch];
    bool is_identity = perm == identity;
    auto eval = [&](const Eigen::VectorXd& x) {
      LocalUnitaryParams p = params_from_vector(x, n, perm, is_identity);
      return objective(conjugate_state(p, sigma));
    };

    Eigen::VectorXd branch_x;
    double branch_value = std::numeric_limits<double>::infinity();
    for (int r = 0; r < cfg.restarts; ++r) {
      Eigen::VectorXd x0(dim);
      if (r == 0) {
        x0.setZero();
      } else {
        std::mt19937_64 rng(mix_seed(cfg.seed, branch, static_cast<std::uint64_t>(r)));
        std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
        for (Eigen::Index i = 0; i < dim; ++i) {
          x0[i] = dist(rng);
        }
      }
      NelderMeadResult res = nelder_mead(
          eval, x0, {r == 0 ? 0.3 : 0.7, cfg.tolerance, cfg.max_iterations});
      res = nelder_mead(eval, res.x, {0.05, cfg.tolerance, cfg.max_iterations});
      if (res.value < branch_value) {
        branch_value = res.value;
        branch_x = res.x;
      }
    }
    for (double step : {0.02, 0.002}) {
      NelderMeadResult res =
          nelder_mead(eval, branch_x, {step, cfg.tolerance, cfg.max_iterations});
      if (res.value <= branch_value) {
        branch_value = res.value;
        branch_x = res.x;
      }
    }
    if (branch_value < best.value) {
      best.value = branch_value;
      best.params = params_from_vector(branch_x, n, perm, is_identity);
    }
  }
  return best;
}

double kl_surrogate(const std::vector<double>& p, const std::vector<double>& q) {
  double sum = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < kProbabilityFloor) continue;
    sum += p[i] * std::log2(p[i] / std::max(q[i], kSurrogateFloor));
  }
  return sum;
}

Eigen::MatrixXcd observable_matrix(const Observable& a) {
  return std::visit(
      [](const auto& obs) -> Eigen::MatrixXcd {
        using T = std::decay_t<decltype(obs)>;
        if constexpr (std::is_same_v<T, PauliString>) {
          return to_matrix(obs);
        } else if constexpr (std::is_same_v<T, Eigen::MatrixXcd>) {
          return obs;
        } else {
          throw std::invalid_argument(
              "a product basis cannot enter the expectation-gap measure");
        }
      },
      a);
}

double dense_expectation(const Eigen::MatrixXcd& a, const DenseState& s) {
  if (s.is_pure()) {
    return (s.amplitudes().adjoint() * a * s.amplitudes())(0, 0).real();
  }
  return (a * s.density()).trace().real();
}

std::string family_key(std::vector<PauliString> ops) {
  std::vector<std::string> labels;
  labels.reserve(ops.size());
  for (const auto& op : ops) {
    labels.push_back(op.str());
  }
  std::sort(labels.begin(), labels.end());
  std::string key;
  for (const auto& l : labels) {
    key += l;
    key += ' ';
  }
  return key;
}

}  // namespace

void OptimizerConfig::validate() const {
  if (restarts < 1) {
    throw std::invalid_argument("restarts must be >= 1");
  }
  if (tolerance <= 0) {
    throw std::invalid_argument("tolerance must be > 0");
  }
  if (max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
}

DiscriminationReport minimize_d_given_p(std::span<const OutcomeDistribution> p_dists,
                                        const DenseState& sigma,
                                        std::span<const Observable> obs,
                                        const OptimizerConfig& cfg) {
  if (obs.empty() || obs.size() != p_dists.size()) {
    throw std::invalid_argument("need one rho-side distribution per observable");
  }
  double k = static_cast<double>(obs.size());
  auto objective = [&](const DenseState& rotated) {
    double sum = 0;
    for (std::size_t i = 0; i < obs.size(); ++i) {
      sum += kl_surrogate(p_dists[i].probs, outcome_distribution(obs[i], rotated).probs);
    }
    return sum / k;
  };
  OrbitResult best = minimize_orbit(sigma, objective, cfg);

  DenseState rotated = conjugate_state(best.params, sigma);
  MetricResult result;
  result.minimizer = best.params;
  double sum = 0;
  for (std::size_t i = 0; i < obs.size(); ++i) {
    double d = relative_entropy(p_dists[i], outcome_distribution(obs[i], rotated));
    result.per_observable.push_back(d);
    sum += d;
  }
  result.value = sum / k;

  DiscriminationReport report;
  report.d = std::move(result);
  report.permutations_included = cfg.include_permutations;
  return report;
}

DiscriminationReport minimize_d(const DenseState& rho, const DenseState& sigma,
                                std::span<const Observable> obs,
                                const OptimizerConfig& cfg) {
  std::vector<OutcomeDistribution> p_dists;
  p_dists.reserve(obs.size());
  for (const Observable& a : obs) {
    p_dists.push_back(outcome_distribution(a, rho));
  }
  return minimize_d_given_p(p_dists, sigma, obs, cfg);
}

std::pair<double, LocalUnitaryParams> orbit_max_expectation(
    const Eigen::MatrixXcd& a, const DenseState& sigma, const OptimizerConfig& cfg) {
  auto objective = [&](const DenseState& rotated) {
    return -dense_expectation(a, rotated);
  };
  OrbitResult best = minimize_orbit(sigma, objective, cfg);
  return {-best.value, best.params};
}

std::pair<double, LocalUnitaryParams> max_overlap(const DenseState& psi,
                                                  const DenseState& phi,
                                                  const OptimizerConfig& cfg) {
  if (!psi.is_pure() || !phi.is_pure()) {
    throw std::invalid_argument("max_overlap requires pure states");
  }
  auto objective = [&](const DenseState& rotated) {
    return -overlap(psi, rotated);
  };
  OrbitResult best = minimize_orbit(phi, objective, cfg);
  return {-best.value, best.params};
}

DiscriminationReport minimize_f(const DenseState& rho, const DenseState& sigma,
                                std::span<const Observable> obs,
                                const OptimizerConfig& cfg,
                                const FGapOptions& opts) {
  const DenseState& norm_state = opts.normalize_against ? *opts.normalize_against : rho;
  Eigen::MatrixXcd a = normalized_mean_observable(obs, norm_state);
  double on_rho = (a * rho.density()).trace().real();
  auto [orbit_max, params] = orbit_max_expectation(a, sigma, cfg);

  MetricResult result;
  result.value = std::max(0.0, on_rho - orbit_max);
  result.minimizer = params;
  DenseState rotated = conjugate_state(params, sigma);
  for (const Observable& single : obs) {
    Eigen::MatrixXcd m = observable_matrix(single);
    result.per_observable.push_back((m * rho.density()).trace().real() -
                                    dense_expectation(m, rotated));
  }

  DiscriminationReport report;
  report.f = std::move(result);
  report.permutations_included = cfg.include_permutations;
  report.normalization = opts.normalize_against ? "ideal" : "rho";
  return report;
}

std::vector<RankedFamily> subset_search(const DenseState& rho, const DenseState& sigma,
                                        const std::vector<PauliString>& candidates,
                                        std::size_t max_size, Metric metric,
                                        const OptimizerConfig& cfg) {
  if (candidates.empty()) {
    throw std::invalid_argument("candidate list is empty");
  }
  if (max_size == 0) {
    throw std::invalid_argument("max_size must be >= 1");
  }
  std::size_t n = rho.num_qubits();

  // Permutations that fix rho; subsets related by one of these have the same
  // metric value when the orbit itself is permutation-closed.
  std::vector<std::vector<std::size_t>> symmetry;
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  symmetry.push_back(identity);
  if (cfg.include_permutations && rho.is_pure()) {
    std::vector<std::size_t> perm = identity;
    while (std::next_permutation(perm.begin(), perm.end())) {
      if (overlap(permute_qubits(rho, perm), rho) >= 1.0 - 1e-10) {
        symmetry.push_back(perm);
      }
    }
  }

  auto canonical_key = [&](const std::vector<PauliString>& ops) {
    std::string best_key;
    for (const auto& perm : symmetry) {
      std::vector<PauliString> permuted;
      permuted.reserve(ops.size());
      for (const auto& op : ops) {
        permuted.push_back(op.permuted(perm));
      }
      std::string key = family_key(std::move(permuted));
      if (best_key.empty() || key < best_key) {
        best_key = key;
      }
    }
    return best_key;
  };

  std::map<std::string, double> cache;
  auto evaluate = [&](const std::vector<PauliString>& ops) {
    std::string key = canonical_key(ops);
    auto it = cache.find(key);
    if (it != cache.end()) {
      return it->second;
    }
    std::vector<Observable> family(ops.begin(), ops.end());
    double value;
    if (metric == Metric::F) {
      value = minimize_f(rho, sigma, family, cfg).f->value;
    } else {
      value = minimize_d(rho, sigma, family, cfg).d->value;
    }
    cache[key] = value;
    return value;
  };

  std::vector<RankedFamily> out;
  std::vector<std::size_t> pick;
  auto recurse = [&](auto&& self, std::size_t start) -> void {
    if (!pick.empty()) {
      std::vector<PauliString> ops;
      ops.reserve(pick.size());
      for (std::size_t i : pick) {
        ops.push_back(candidates[i]);
      }
      out.push_back({ops, evaluate(ops)});
    }
    if (pick.size() == max_size) {
      return;
    }
    for (std::size_t i = start; i < candidates.size(); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);

  std::sort(out.begin(), out.end(), [](const RankedFamily& a, const RankedFamily& b) {
    if (a.value != b.value) {
      return a.value > b.value;
    }
    std::vector<PauliString> sa = a.ops, sb = b.ops;
    return family_key(std::move(sa)) < family_key(std::move(sb));
  });
  return out;
}

std::vector<NoisePoint> noise_curve(const DenseState& rho, const DenseState& sigma,
                                    std::span<const Observable> obs,
                                    std::span<const double> p_grid,
                                    const OptimizerConfig& cfg) {
  if (p_grid.empty()) {
    throw std::invalid_argument("noise grid is empty");
  }
  for (double p : p_grid) {
    if (p < 0.0 || p > 1.0) {
      throw std::invalid_argument("noise grid values must be in [0, 1]");
    }
  }
  // Normalize against the noiseless state; the orbit maximum is independent
  // of the noise level, so it is computed once.
  Eigen::MatrixXcd a = normalized_mean_observable(obs, rho);
  double orbit_max = orbit_max_expectation(a, sigma, cfg).first;

  std::vector<NoisePoint> out;
  out.reserve(p_grid.size());
  for (double p : p_grid) {
    DenseState noisy = white_noise(rho, p);
    double f = std::max(0.0, (a * noisy.density()).trace().real() - orbit_max);
    double d = minimize_d(noisy, sigma, obs, cfg).d->value;
    out.push_back({1.0 - p, f, d});
  }
  return out;
}

}  // namespace discrim
