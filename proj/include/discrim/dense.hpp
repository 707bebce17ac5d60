#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "discrim/pauli.hpp"

namespace discrim {

/// Dense n-qubit state, either a pure state vector or a density matrix in the
/// 2^n computational basis. Qubit 0 is the most significant basis bit, so the
/// amplitude of |0011> on 4 qubits sits at index 3. Desk-scale oracle: n <= 6.
class DenseState {
 public:
  static constexpr std::size_t kMaxQubits = 6;

  static DenseState pure(Eigen::VectorXcd amplitudes);
  static DenseState mixed(Eigen::MatrixXcd rho);

  bool is_pure() const { return pure_; }
  std::size_t num_qubits() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << n_; }

  const Eigen::VectorXcd& amplitudes() const;  // pure only
  Eigen::MatrixXcd density() const;            // works for both kinds

  /// Fixes the global phase so the first nonzero amplitude is real positive.
  DenseState phase_normalized() const;

 private:
  DenseState() = default;
  bool pure_ = true;
  std::size_t n_ = 0;
  Eigen::VectorXcd amps_;
  Eigen::MatrixXcd rho_;
};

/// Ordered orthonormal basis of 2^n product vectors, stored as matrix columns.
struct ProductBasis {
  Eigen::MatrixXcd vectors;

  static ProductBasis computational(std::size_t n);
};

/// Measurable quantity: a Pauli word, a dense Hermitian matrix, or a product
/// basis measured as one experiment with 2^n outcomes.
using Observable = std::variant<PauliString, Eigen::MatrixXcd, ProductBasis>;

/// Finite probability vector over labeled measurement outcomes.
struct OutcomeDistribution {
  std::vector<double> probs;
  std::vector<std::string> labels;
};

double expectation(const Observable& a, const DenseState& s);

/// Probabilities over distinct eigenvalues (Pauli: two outcomes +1/-1; dense
/// Hermitian: eigenvalues grouped within 1e-8; product basis: 2^n outcomes).
OutcomeDistribution outcome_distribution(const Observable& a, const DenseState& s);

/// |<a|b>|^2 for pure states.
double overlap(const DenseState& a, const DenseState& b);

/// (1-p) * I/d + p * rho.
DenseState white_noise(const DenseState& s, double p);

/// Reindexes tensor factors; qubit q of the input becomes qubit perm[q].
DenseState permute_qubits(const DenseState& s, const std::vector<std::size_t>& perm);

struct PermutedState {
  std::vector<std::size_t> perm;
  DenseState state;
};

/// One representative per distinct permuted state (distinct: overlap < 1-1e-10).
std::vector<PermutedState> distinct_permutations(const DenseState& s);

// Built-in states with the amplitudes used throughout.
DenseState ghz(std::size_t n);    // (|0...0> + |1...1>)/sqrt(2)
DenseState cluster4();            // (|0000>+|0011>+|1100>-|1111>)/2
DenseState w3();                  // (|001>+|010>+|100>)/sqrt(3)
DenseState what_w3();             // (1/(2*sqrt(6))) (3,-1,-1,-1,-1,-1,-1,3)

/// <psi| p |psi> without forming the dense matrix.
double pauli_expectation(const PauliString& p, const Eigen::VectorXcd& psi);

}  // namespace discrim
