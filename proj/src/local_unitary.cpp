#include "discrim/local_unitary.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace discrim {

namespace {

using cd = std::complex<double>;

void check_params(const LocalUnitaryParams& p) {
  if (p.angles.empty()) {
    throw std::invalid_argument("no angles given");
  }
  if (p.perm && p.perm->size() != p.angles.size()) {
    throw std::invalid_argument("permutation length mismatch");
  }
}

}  // namespace

LocalUnitaryParams LocalUnitaryParams::identity(std::size_t n) {
  LocalUnitaryParams p;
  p.angles.assign(n, {0.0, 0.0, 0.0});
  return p;
}

Eigen::Matrix2cd euler_unitary(double phi, double theta, double psi) {
  // exp(i a sz/2) = diag(e^{ia/2}, e^{-ia/2});
  // exp(i a sy/2) = [[cos(a/2), sin(a/2)], [-sin(a/2), cos(a/2)]].
  cd ez_psi = std::exp(cd(0, psi / 2));
  cd ez_phi = std::exp(cd(0, phi / 2));
  double c = std::cos(theta / 2);
  double s = std::sin(theta / 2);
  Eigen::Matrix2cd u;
  u << ez_psi * c * ez_phi, ez_psi * s * std::conj(ez_phi),
      -std::conj(ez_psi) * s * ez_phi, std::conj(ez_psi) * c * std::conj(ez_phi);
  return u;
}

Eigen::MatrixXcd build_unitary(const LocalUnitaryParams& p) {
  check_params(p);
  std::size_t n = p.num_qubits();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(1, 1);
  for (std::size_t q = 0; q < n; ++q) {
    const auto& a = p.angles[q];
    u = Eigen::kroneckerProduct(u, euler_unitary(a[0], a[1], a[2])).eval();
  }
  if (p.perm) {
    std::size_t dim = std::size_t{1} << n;
    Eigen::MatrixXcd pm = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                 static_cast<Eigen::Index>(dim));
    for (std::size_t b = 0; b < dim; ++b) {
      std::size_t out = 0;
      for (std::size_t q = 0; q < n; ++q) {
        std::size_t bit = (b >> (n - 1 - q)) & 1u;
        out |= bit << (n - 1 - (*p.perm)[q]);
      }
      pm(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(b)) = 1;
    }
    u = pm * u;
  }
  return u;
}

void apply_local_unitary(const LocalUnitaryParams& p, Eigen::VectorXcd& psi) {
  check_params(p);
  std::size_t n = p.num_qubits();
  std::size_t dim = static_cast<std::size_t>(psi.size());
  if (dim != (std::size_t{1} << n)) {
    throw std::invalid_argument("dimension mismatch");
  }
  for (std::size_t q = 0; q < n; ++q) {
    const auto& a = p.angles[q];
    Eigen::Matrix2cd u = euler_unitary(a[0], a[1], a[2]);
    std::size_t stride = std::size_t{1} << (n - 1 - q);
    for (std::size_t base = 0; base < dim; ++base) {
      if (base & stride) continue;
      cd v0 = psi[static_cast<Eigen::Index>(base)];
      cd v1 = psi[static_cast<Eigen::Index>(base | stride)];
      psi[static_cast<Eigen::Index>(base)] = u(0, 0) * v0 + u(0, 1) * v1;
      psi[static_cast<Eigen::Index>(base | stride)] = u(1, 0) * v0 + u(1, 1) * v1;
    }
  }
  if (p.perm) {
    Eigen::VectorXcd out(psi.size());
    for (std::size_t b = 0; b < dim; ++b) {
      std::size_t target = 0;
      for (std::size_t q = 0; q < n; ++q) {
        std::size_t bit = (b >> (n - 1 - q)) & 1u;
        target |= bit << (n - 1 - (*p.perm)[q]);
      }
      out[static_cast<Eigen::Index>(target)] = psi[static_cast<Eigen::Index>(b)];
    }
    psi = std::move(out);
  }
}

DenseState conjugate_state(const LocalUnitaryParams& p, const DenseState& s) {
  check_params(p);
  if (p.num_qubits() != s.num_qubits()) {
    throw std::invalid_argument("dimension mismatch");
  }
  if (s.is_pure()) {
    Eigen::VectorXcd psi = s.amplitudes();
    apply_local_unitary(p, psi);
    return DenseState::pure(std::move(psi));
  }
  Eigen::MatrixXcd u = build_unitary(p);
  return DenseState::mixed(u * s.density() * u.adjoint());
}

LocalUnitaryParams random_params(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
  LocalUnitaryParams p;
  p.angles.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    double phi = dist(rng), theta = dist(rng), psi = dist(rng);
    p.angles.push_back({phi, theta, psi});
  }
  return p;
}

}  // namespace discrim
