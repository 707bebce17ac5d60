#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "discrim/measures.hpp"

namespace discrim {

struct OptimizerConfig {
  int restarts = 64;
  int max_iterations = 4000;
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  bool include_permutations = false;

  void validate() const;
};

enum class Metric { F, D };

/// Orbit-minimized relative-entropy measure: min over local unitaries (and
/// qubit permutations when enabled) of the averaged per-observable relative
/// entropy. The result is an upper bound on the true minimum.
DiscriminationReport minimize_d(const DenseState& rho, const DenseState& sigma,
                                std::span<const Observable> obs,
                                const OptimizerConfig& cfg);

/// Same minimization but with the rho-side outcome distributions supplied
/// directly (one per observable), e.g. reconstructed from measured data.
DiscriminationReport minimize_d_given_p(std::span<const OutcomeDistribution> p_dists,
                                        const DenseState& sigma,
                                        std::span<const Observable> obs,
                                        const OptimizerConfig& cfg);

/// Maximized squared overlap over the orbit; a lower bound on the true max.
std::pair<double, LocalUnitaryParams> max_overlap(const DenseState& psi,
                                                  const DenseState& phi,
                                                  const OptimizerConfig& cfg);

/// Orbit-minimized expectation-gap measure max(0, tr(A rho) - orbit-max <A>).
DiscriminationReport minimize_f(const DenseState& rho, const DenseState& sigma,
                                std::span<const Observable> obs,
                                const OptimizerConfig& cfg,
                                const FGapOptions& opts = {});

/// Orbit maximum of the expectation of a fixed dense observable, with the
/// maximizing parameters.
std::pair<double, LocalUnitaryParams> orbit_max_expectation(
    const Eigen::MatrixXcd& a, const DenseState& sigma, const OptimizerConfig& cfg);

struct RankedFamily {
  std::vector<PauliString> ops;
  double value = 0.0;
};

/// Evaluates every candidate subset up to max_size (deduplicated under the
/// qubit-permutation symmetry of rho when permutations are in the orbit) and
/// returns all families sorted by metric value, best first.
std::vector<RankedFamily> subset_search(const DenseState& rho, const DenseState& sigma,
                                        const std::vector<PauliString>& candidates,
                                        std::size_t max_size, Metric metric,
                                        const OptimizerConfig& cfg);

struct NoisePoint {
  double one_minus_p = 0.0;
  double f = 0.0;
  double d = 0.0;
};

/// Both measures for white_noise(rho, p) across the grid. The expectation-gap
/// side is normalized against the noiseless rho, so its zero crossing sits at
/// the noise tolerance.
std::vector<NoisePoint> noise_curve(const DenseState& rho, const DenseState& sigma,
                                    std::span<const Observable> obs,
                                    std::span<const double> p_grid,
                                    const OptimizerConfig& cfg);

}  // namespace discrim
