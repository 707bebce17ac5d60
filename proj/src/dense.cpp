#include "discrim/dense.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace discrim {

namespace {

using cd = std::complex<double>;

std::size_t qubits_for_dim(Eigen::Index dim) {
  if (dim <= 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension is not a power of two");
  }
  auto n = static_cast<std::size_t>(std::countr_zero(static_cast<std::uint64_t>(dim)));
  if (n == 0 || n > DenseState::kMaxQubits) {
    throw std::invalid_argument("qubit count must be in 1.." +
                                std::to_string(DenseState::kMaxQubits));
  }
  return n;
}

void check_hermitian(const Eigen::MatrixXcd& m, double tol) {
  if (m.rows() != m.cols() || (m - m.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw std::invalid_argument("matrix is not Hermitian");
  }
}

// Index-space masks for a Pauli word; qubit 0 is the most significant bit.
struct IndexMasks {
  std::uint64_t flip;   // letters with an X component (X, Y)
  std::uint64_t phase;  // letters with a Z component (Z, Y)
  int y_count;
};

IndexMasks index_masks(const PauliString& p) {
  IndexMasks m{0, 0, 0};
  std::size_t n = p.num_qubits();
  for (std::size_t q = 0; q < n; ++q) {
    std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
    char l = p.letter(q);
    if (l == 'X' || l == 'Y') m.flip |= bit;
    if (l == 'Z' || l == 'Y') m.phase |= bit;
    if (l == 'Y') ++m.y_count;
  }
  return m;
}

cd i_power(int k) {
  static const cd powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return powers[((k % 4) + 4) % 4];
}

std::string eigenvalue_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string basis_label(std::size_t index, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t q = 0; q < n; ++q) {
    if ((index >> (n - 1 - q)) & 1u) s[q] = '1';
  }
  return s;
}

void check_orthonormal(const Eigen::MatrixXcd& vectors) {
  Eigen::MatrixXcd gram = vectors.adjoint() * vectors;
  if ((gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols()))
          .cwiseAbs()
          .maxCoeff() > 1e-10) {
    throw std::invalid_argument("basis vectors are not orthonormal");
  }
}

std::size_t permute_index(std::size_t b, const std::vector<std::size_t>& perm,
                          std::size_t n) {
  std::size_t out = 0;
  for (std::size_t q = 0; q < n; ++q) {
    std::size_t bit = (b >> (n - 1 - q)) & 1u;
    out |= bit << (n - 1 - perm[q]);
  }
  return out;
}

void check_perm(const std::vector<std::size_t>& perm, std::size_t n) {
  if (perm.size() != n) {
    throw std::invalid_argument("permutation length mismatch");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t v : perm) {
    if (v >= n || seen[v]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[v] = true;
  }
}

}  // namespace

DenseState DenseState::pure(Eigen::VectorXcd amplitudes) {
  DenseState s;
  s.pure_ = true;
  s.n_ = qubits_for_dim(amplitudes.size());
  if (std::abs(amplitudes.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("pure state is not normalized");
  }
  s.amps_ = std::move(amplitudes);
  return s;
}

DenseState DenseState::mixed(Eigen::MatrixXcd rho) {
  DenseState s;
  s.pure_ = false;
  s.n_ = qubits_for_dim(rho.rows());
  check_hermitian(rho, 1e-10);
  if (std::abs(rho.trace().real() - 1.0) > 1e-9) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
  s.rho_ = std::move(rho);
  return s;
}

const Eigen::VectorXcd& DenseState::amplitudes() const {
  if (!pure_) {
    throw std::logic_error("mixed state has no amplitude vector");
  }
  return amps_;
}

Eigen::MatrixXcd DenseState::density() const {
  if (pure_) {
    return amps_ * amps_.adjoint();
  }
  return rho_;
}

DenseState DenseState::phase_normalized() const {
  if (!pure_) {
    return *this;
  }
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    if (std::abs(amps_[i]) > 1e-12) {
      cd phase = amps_[i] / std::abs(amps_[i]);
      return DenseState::pure(amps_ / phase);
    }
  }
  return *this;
}

ProductBasis ProductBasis::computational(std::size_t n) {
  std::size_t dim = std::size_t{1} << n;
  return ProductBasis{Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(dim),
                                                 static_cast<Eigen::Index>(dim))};
}

double pauli_expectation(const PauliString& p, const Eigen::VectorXcd& psi) {
  std::size_t dim = static_cast<std::size_t>(psi.size());
  if (dim != (std::size_t{1} << p.num_qubits())) {
    throw std::invalid_argument("dimension mismatch");
  }
  IndexMasks m = index_masks(p);
  cd acc = 0;
  for (std::size_t b = 0; b < dim; ++b) {
    int phase_sign = std::popcount(b & m.phase) % 2 ? -1 : 1;
    acc += std::conj(psi[static_cast<Eigen::Index>(b ^ m.flip)]) *
           (static_cast<double>(phase_sign) * psi[static_cast<Eigen::Index>(b)]);
  }
  acc *= i_power(m.y_count) * static_cast<double>(p.sign());
  return acc.real();
}

double expectation(const Observable& a, const DenseState& s) {
  return std::visit(
      [&](const auto& obs) -> double {
        using T = std::decay_t<decltype(obs)>;
        if constexpr (std::is_same_v<T, PauliString>) {
          if (obs.num_qubits() != s.num_qubits()) {
            throw std::invalid_argument("dimension mismatch");
          }
          if (s.is_pure()) {
            return pauli_expectation(obs, s.amplitudes());
          }
          return (to_matrix(obs) * s.density()).trace().real();
        } else if constexpr (std::is_same_v<T, Eigen::MatrixXcd>) {
          if (obs.rows() != static_cast<Eigen::Index>(s.dim())) {
            throw std::invalid_argument("dimension mismatch");
          }
          check_hermitian(obs, 1e-10);
          return (obs * s.density()).trace().real();
        } else {
          throw std::invalid_argument(
              "a product basis has no scalar expectation value");
        }
      },
      a);
}

OutcomeDistribution outcome_distribution(const Observable& a, const DenseState& s) {
  return std::visit(
      [&](const auto& obs) -> OutcomeDistribution {
        using T = std::decay_t<decltype(obs)>;
        if constexpr (std::is_same_v<T, PauliString>) {
          double e = expectation(a, s);
          double p_plus = std::clamp((1.0 + e) / 2.0, 0.0, 1.0);
          return {{p_plus, 1.0 - p_plus}, {"+1", "-1"}};
        } else if constexpr (std::is_same_v<T, Eigen::MatrixXcd>) {
          if (obs.rows() != static_cast<Eigen::Index>(s.dim())) {
            throw std::invalid_argument("dimension mismatch");
          }
          check_hermitian(obs, 1e-10);
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(obs);
          const auto& vals = es.eigenvalues();
          Eigen::MatrixXcd rho = s.density();
          OutcomeDistribution out;
          Eigen::Index i = 0;
          while (i < vals.size()) {
            Eigen::Index j = i;
            // Eigenvalues within 1e-8 of their neighbor form one outcome.
            while (j + 1 < vals.size() && vals[j + 1] - vals[j] <= 1e-8) ++j;
            double prob = 0;
            double value = 0;
            for (Eigen::Index k = i; k <= j; ++k) {
              const auto v = es.eigenvectors().col(k);
              prob += (v.adjoint() * rho * v)(0, 0).real();
              value += vals[k];
            }
            value /= static_cast<double>(j - i + 1);
            out.probs.push_back(std::max(prob, 0.0));
            out.labels.push_back(eigenvalue_label(value));
            i = j + 1;
          }
          return out;
        } else {
          check_orthonormal(obs.vectors);
          if (obs.vectors.rows() != static_cast<Eigen::Index>(s.dim())) {
            throw std::invalid_argument("dimension mismatch");
          }
          OutcomeDistribution out;
          std::size_t count = static_cast<std::size_t>(obs.vectors.cols());
          out.probs.reserve(count);
          for (std::size_t i = 0; i < count; ++i) {
            const auto v = obs.vectors.col(static_cast<Eigen::Index>(i));
            double prob;
            if (s.is_pure()) {
              prob = std::norm(v.dot(s.amplitudes()));
            } else {
              prob = (v.adjoint() * s.density() * v)(0, 0).real();
            }
            out.probs.push_back(std::max(prob, 0.0));
            out.labels.push_back(basis_label(i, s.num_qubits()));
          }
          return out;
        }
      },
      a);
}

double overlap(const DenseState& a, const DenseState& b) {
  if (!a.is_pure() || !b.is_pure()) {
    throw std::invalid_argument("overlap requires pure states");
  }
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

DenseState white_noise(const DenseState& s, double p) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("noise parameter must be in [0, 1]");
  }
  double d = static_cast<double>(s.dim());
  Eigen::MatrixXcd rho =
      (1.0 - p) / d *
          Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(s.dim()),
                                     static_cast<Eigen::Index>(s.dim())) +
      p * s.density();
  return DenseState::mixed(std::move(rho));
}

DenseState permute_qubits(const DenseState& s, const std::vector<std::size_t>& perm) {
  std::size_t n = s.num_qubits();
  check_perm(perm, n);
  std::size_t dim = s.dim();
  if (s.is_pure()) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(dim));
    for (std::size_t b = 0; b < dim; ++b) {
      out[static_cast<Eigen::Index>(permute_index(b, perm, n))] =
          s.amplitudes()[static_cast<Eigen::Index>(b)];
    }
    return DenseState::pure(std::move(out));
  }
  Eigen::MatrixXcd rho = s.density();
  Eigen::MatrixXcd out(rho.rows(), rho.cols());
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      out(static_cast<Eigen::Index>(permute_index(r, perm, n)),
          static_cast<Eigen::Index>(permute_index(c, perm, n))) =
          rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return DenseState::mixed(std::move(out));
}

std::vector<PermutedState> distinct_permutations(const DenseState& s) {
  if (!s.is_pure()) {
    throw std::invalid_argument("distinct_permutations requires a pure state");
  }
  std::size_t n = s.num_qubits();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<PermutedState> out;
  do {
    DenseState candidate = permute_qubits(s, perm);
    bool duplicate = false;
    for (const auto& rep : out) {
      if (overlap(candidate, rep.state) >= 1.0 - 1e-10) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      out.push_back({perm, std::move(candidate)});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

DenseState ghz(std::size_t n) {
  std::size_t dim = std::size_t{1} << n;
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
  v[0] = 1.0 / std::sqrt(2.0);
  v[static_cast<Eigen::Index>(dim - 1)] = 1.0 / std::sqrt(2.0);
  return DenseState::pure(std::move(v));
}

DenseState cluster4() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(16);
  v[0b0000] = 0.5;
  v[0b0011] = 0.5;
  v[0b1100] = 0.5;
  v[0b1111] = -0.5;
  return DenseState::pure(std::move(v));
}

DenseState w3() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(8);
  double a = 1.0 / std::sqrt(3.0);
  v[0b001] = a;
  v[0b010] = a;
  v[0b100] = a;
  return DenseState::pure(std::move(v));
}

DenseState what_w3() {
  Eigen::VectorXcd v(8);
  double c = 1.0 / (2.0 * std::sqrt(6.0));
  v << 3, -1, -1, -1, -1, -1, -1, 3;
  v *= c;
  return DenseState::pure(std::move(v));
}

}  // namespace discrim
