#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "discrim/dense.hpp"

namespace discrim {

/// Per-qubit Euler angles (phi, theta, psi) for
/// U = exp(i psi sz/2) exp(i theta sy/2) exp(i phi sz/2),
/// plus an optional qubit permutation applied after the local rotations.
struct LocalUnitaryParams {
  std::vector<std::array<double, 3>> angles;
  std::optional<std::vector<std::size_t>> perm;

  std::size_t num_qubits() const { return angles.size(); }
  static LocalUnitaryParams identity(std::size_t n);
};

Eigen::Matrix2cd euler_unitary(double phi, double theta, double psi);

/// Dense 2^n x 2^n unitary (tensor product of Euler rotations, then the
/// permutation operator when present).
Eigen::MatrixXcd build_unitary(const LocalUnitaryParams& p);

/// U|s> for pure states, U s U^dag for mixed ones.
DenseState conjugate_state(const LocalUnitaryParams& p, const DenseState& s);

/// Applies the per-qubit rotations (and permutation) to a state vector in
/// place, without forming the dense unitary.
void apply_local_unitary(const LocalUnitaryParams& p, Eigen::VectorXcd& psi);

/// Angles uniform in [0, 2pi), identity permutation; deterministic per seed.
LocalUnitaryParams random_params(std::size_t n, std::uint64_t seed);

}  // namespace discrim
