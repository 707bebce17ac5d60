#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "discrim/local_unitary.hpp"

using namespace discrim;

namespace {

LocalUnitaryParams z_only(std::vector<double> phis) {
  LocalUnitaryParams p = LocalUnitaryParams::identity(phis.size());
  for (std::size_t q = 0; q < phis.size(); ++q) {
    p.angles[q][0] = phis[q];
  }
  return p;
}

}  // namespace

TEST_CASE("identity params give the identity matrix") {
  auto u = build_unitary(LocalUnitaryParams::identity(3));
  CHECK((u - Eigen::MatrixXcd::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("theta = pi flips a single qubit up to phase") {
  auto u = euler_unitary(0.0, M_PI, 0.0);
  Eigen::Vector2cd mapped = u * Eigen::Vector2cd(1.0, 0.0);
  CHECK(std::abs(std::abs(mapped[1]) - 1.0) < 1e-14);
  CHECK(std::abs(mapped[0]) < 1e-14);
}

TEST_CASE("z-rotations build a diagonal unitary") {
  auto u = build_unitary(z_only({0.3, 1.1, 2.0, 0.7}));
  for (Eigen::Index r = 0; r < 16; ++r) {
    for (Eigen::Index c = 0; c < 16; ++c) {
      if (r != c) {
        CHECK(std::abs(u(r, c)) < 1e-14);
      } else {
        CHECK(std::abs(std::abs(u(r, c)) - 1.0) < 1e-14);
      }
    }
  }
}

TEST_CASE("unitarity for random params") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    std::size_t n = 1 + seed % 4;
    auto u = build_unitary(random_params(n, seed));
    Eigen::Index dim = u.rows();
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim))
              .cwiseAbs()
              .maxCoeff() < 1e-12);
  }
}

TEST_CASE("conjugation by identity leaves states alone") {
  auto pure = conjugate_state(LocalUnitaryParams::identity(4), cluster4());
  CHECK((pure.amplitudes() - cluster4().amplitudes()).norm() < 1e-14);
  auto mixed = conjugate_state(LocalUnitaryParams::identity(4),
                               white_noise(cluster4(), 0.3));
  CHECK((mixed.density() - white_noise(cluster4(), 0.3).density())
            .cwiseAbs()
            .maxCoeff() < 1e-14);
}

TEST_CASE("z-rotations put the expected phases on the cluster state") {
  double gamma = 0.7;
  double delta = 1.3;
  auto rotated =
      conjugate_state(z_only({gamma, 0.0, delta, 0.0}), cluster4()).phase_normalized();
  const auto& a = rotated.amplitudes();
  auto phase = [](double t) { return std::exp(std::complex<double>(0, -t)); };
  CHECK(std::abs(a[0b0000] - 0.5) < 1e-12);
  CHECK(std::abs(a[0b0011] - 0.5 * phase(delta)) < 1e-12);
  CHECK(std::abs(a[0b1100] - 0.5 * phase(gamma)) < 1e-12);
  CHECK(std::abs(a[0b1111] + 0.5 * phase(gamma + delta)) < 1e-12);
}

TEST_CASE("y-rotations by pi/2 turn IZZ into a two-point X correlation") {
  LocalUnitaryParams p = LocalUnitaryParams::identity(3);
  for (auto& angles : p.angles) {
    angles[1] = M_PI / 2.0;
  }
  auto rotated = conjugate_state(p, w3());
  CHECK(expectation(PauliString::parse("IZZ"), rotated) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("conjugation preserves purity, trace, and spectrum") {
  auto noisy = white_noise(cluster4(), 0.4);
  auto p = random_params(4, 42);
  auto rotated = conjugate_state(p, noisy);
  CHECK_FALSE(rotated.is_pure());
  CHECK(std::abs(rotated.density().trace().real() - 1.0) < 1e-12);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> before(noisy.density());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> after(rotated.density());
  CHECK((before.eigenvalues() - after.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("composition matches the composed dense unitary") {
  auto p = random_params(3, 5);
  auto q = random_params(3, 6);
  q.perm = std::vector<std::size_t>{2, 0, 1};
  auto via_states = conjugate_state(q, conjugate_state(p, w3()));
  Eigen::VectorXcd via_matrix =
      build_unitary(q) * (build_unitary(p) * w3().amplitudes());
  CHECK((via_states.amplitudes() - via_matrix).norm() < 1e-10);
}

TEST_CASE("fast in-place application matches the dense unitary") {
  for (std::uint64_t seed = 100; seed < 104; ++seed) {
    auto p = random_params(4, seed);
    if (seed % 2) {
      p.perm = std::vector<std::size_t>{3, 1, 0, 2};
    }
    Eigen::VectorXcd psi = cluster4().amplitudes();
    apply_local_unitary(p, psi);
    Eigen::VectorXcd dense = build_unitary(p) * cluster4().amplitudes();
    CHECK((psi - dense).norm() < 1e-12);
  }
}

TEST_CASE("random params are deterministic per seed") {
  auto a = random_params(3, 9);
  auto b = random_params(3, 9);
  auto c = random_params(3, 10);
  CHECK(a.angles == b.angles);
  CHECK(a.angles != c.angles);
  CHECK(a.angles.size() == 3);
  for (const auto& q : a.angles) {
    for (double v : q) {
      CHECK(v >= 0.0);
      CHECK(v < 2.0 * M_PI);
    }
  }
}
