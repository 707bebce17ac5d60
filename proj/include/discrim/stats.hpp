#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "discrim/optimize.hpp"

namespace discrim {

/// Observed counts of one observable's outcomes.
struct SampleRun {
  Observable observable = PauliString(1);
  std::vector<std::string> labels;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;

  OutcomeDistribution frequencies() const;
};

/// Multinomial sampling: each observable gets floor(N/k) of the total runs.
std::vector<SampleRun> simulate_runs(const DenseState& state,
                                     std::span<const Observable> obs,
                                     std::uint64_t runs_total, std::uint64_t seed);

/// D(observed frequencies || outcome distribution of sigma).
double empirical_d(const SampleRun& sample, const DenseState& sigma);

struct CoinEquivalence {
  double log2_probability = 0.0;  // -N * D
  double equivalent_tosses = 0.0;  // N * D consecutive tails of a fair coin
};

CoinEquivalence coin_equivalence(std::uint64_t n_runs, double d_value);

/// One measured stabilizer correlation: Pauli label, expectation, stderr.
struct CorrelationRecord {
  PauliString op = PauliString(1);
  double expectation = 0.0;
  double stderr_ = 0.0;
};

struct MeasuredCorrelations {
  std::vector<CorrelationRecord> records;
};

/// CSV lines "label,expectation,stderr"; '#' starts a comment.
MeasuredCorrelations ingest_correlations(std::istream& in);
MeasuredCorrelations ingest_correlations_file(const std::string& path);

struct CorrelationMeasures {
  double value = 0.0;
  double uncertainty = 0.0;
  DiscriminationReport report;
};

/// Evaluates one measure treating rho only through the recorded expectations
/// (dichotomic reconstruction p_pm = (1 pm e)/2). Uncertainty is the standard
/// deviation over Monte-Carlo resamples e' ~ Normal(e, stderr) clamped to
/// [-1, 1], re-minimized from the point-estimate minimizer.
CorrelationMeasures measures_from_correlations(const MeasuredCorrelations& data,
                                               const DenseState& sigma_pure,
                                               Metric metric,
                                               const OptimizerConfig& cfg,
                                               int mc_samples = 1000);

}  // namespace discrim
