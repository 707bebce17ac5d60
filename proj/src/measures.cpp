#include "discrim/measures.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace discrim {

namespace {

void check_distribution(const OutcomeDistribution& d) {
  double sum = 0;
  for (double p : d.probs) {
    if (p < -1e-10) {
      throw std::invalid_argument("negative probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-8) {
    throw std::invalid_argument("probabilities do not sum to 1");
  }
  if (!d.labels.empty() && d.labels.size() != d.probs.size()) {
    throw std::invalid_argument("label count mismatch");
  }
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

}  // namespace

double relative_entropy(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  check_distribution(p);
  check_distribution(q);
  if (p.probs.size() != q.probs.size()) {
    throw std::invalid_argument("outcome count mismatch");
  }
  if (!p.labels.empty() && !q.labels.empty() && p.labels != q.labels) {
    throw std::invalid_argument("outcome labels mismatch");
  }
  double sum = 0;
  for (std::size_t i = 0; i < p.probs.size(); ++i) {
    double pi = p.probs[i] < kProbabilityFloor ? 0.0 : p.probs[i];
    double qi = q.probs[i] < kProbabilityFloor ? 0.0 : q.probs[i];
    if (pi == 0.0) {
      continue;
    }
    if (qi == 0.0) {
      return std::numeric_limits<double>::infinity();
    }
    sum += pi * std::log2(pi / qi);
  }
  return std::max(sum, 0.0);
}

double d_single(const DenseState& rho, const DenseState& sigma, const Observable& a) {
  return relative_entropy(outcome_distribution(a, rho), outcome_distribution(a, sigma));
}

double d_multi(const DenseState& rho, const DenseState& sigma,
               std::span<const Observable> obs) {
  if (obs.empty()) {
    throw std::invalid_argument("observable list is empty");
  }
  double sum = 0;
  for (const Observable& a : obs) {
    sum += d_single(rho, sigma, a);  // infinity propagates through the mean
  }
  return sum / static_cast<double>(obs.size());
}

Eigen::MatrixXcd normalized_mean_observable(std::span<const Observable> obs,
                                            const DenseState& normalize_against) {
  if (obs.empty()) {
    throw std::invalid_argument("observable list is empty");
  }
  Eigen::MatrixXcd mean = observable_matrix(obs[0]);
  for (std::size_t i = 1; i < obs.size(); ++i) {
    mean += observable_matrix(obs[i]);
  }
  mean /= static_cast<double>(obs.size());
  Eigen::Index dim = mean.rows();
  mean -= (mean.trace() / static_cast<double>(dim)) *
          Eigen::MatrixXcd::Identity(dim, dim);
  double scale = (mean * normalize_against.density()).trace().real();
  if (std::abs(scale) < 1e-12) {
    throw std::invalid_argument(
        "observable carries no signal on the normalization state");
  }
  if (scale < 0) {
    throw std::invalid_argument(
        "combined observable has negative expectation on the normalization state");
  }
  return mean / scale;
}

double f_gap(const DenseState& rho, const DenseState& sigma,
             std::span<const Observable> obs, const FGapOptions& opts) {
  const DenseState& norm_state = opts.normalize_against ? *opts.normalize_against : rho;
  Eigen::MatrixXcd a = normalized_mean_observable(obs, norm_state);
  double on_rho = (a * rho.density()).trace().real();
  double on_sigma = (a * sigma.density()).trace().real();
  return std::max(0.0, on_rho - on_sigma);
}

double d_product_basis(const DenseState& rho, const DenseState& sigma,
                       const ProductBasis& basis) {
  Observable obs = basis;
  return relative_entropy(outcome_distribution(obs, rho),
                          outcome_distribution(obs, sigma));
}

}  // namespace discrim
