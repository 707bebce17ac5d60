#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "discrim/dense.hpp"
#include "discrim/local_unitary.hpp"

namespace discrim {

/// Probabilities below this are treated as exact zeros before the 0*log(0)
/// conventions apply, so dense arithmetic noise cannot turn infinities into
/// large finite values or vice versa.
inline constexpr double kProbabilityFloor = 1e-12;

/// Kullback-Leibler divergence in bits. 0*log(0/q) = 0, p*log(p/0) = +inf,
/// 0*log(0/0) = 0. Requires matching label sets.
double relative_entropy(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// Relative entropy between the outcome distributions of one observable.
double d_single(const DenseState& rho, const DenseState& sigma, const Observable& a);

/// (1/k) sum of d_single over the family; keeps the total number of
/// measurement runs fixed independent of the family size.
double d_multi(const DenseState& rho, const DenseState& sigma,
               std::span<const Observable> obs);

struct FGapOptions {
  /// State against which the combined observable is normalized (tr(A nu) = 1
  /// after the traceless shift). Defaults to rho itself.
  std::optional<DenseState> normalize_against;
};

/// Expectation-gap measure at fixed sigma (no orbit optimization): shift the
/// averaged observable traceless, scale so its expectation on the
/// normalization state is 1, then max(0, tr(A rho) - <A>_sigma).
double f_gap(const DenseState& rho, const DenseState& sigma,
             std::span<const Observable> obs, const FGapOptions& opts = {});

/// The averaged observable after the traceless shift and normalization scale.
Eigen::MatrixXcd normalized_mean_observable(std::span<const Observable> obs,
                                            const DenseState& normalize_against);

/// Relative entropy of the two 2^n-outcome distributions of a product basis.
double d_product_basis(const DenseState& rho, const DenseState& sigma,
                       const ProductBasis& basis);

struct MetricResult {
  double value = 0.0;
  std::vector<double> per_observable;
  LocalUnitaryParams minimizer;
};

/// Result of an orbit optimization; either metric section may be absent.
struct DiscriminationReport {
  std::optional<MetricResult> f;
  std::optional<MetricResult> d;
  bool permutations_included = false;
  std::string normalization = "rho";
};

}  // namespace discrim
