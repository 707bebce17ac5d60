#include "discrim/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace discrim {

namespace {

PauliString fold_real_product(const PauliString& a, const PauliString& b) {
  PauliProduct p = pauli_product(a, b);
  if (std::abs(p.phase.imag()) > 1e-12) {
    throw std::invalid_argument("product of group elements has imaginary phase");
  }
  return p.word.with_sign(p.phase.real() > 0 ? +1 : -1);
}

// GF(2) rank of the symplectic (x|z) bit matrix.
std::size_t symplectic_rank(const std::vector<PauliString>& gens) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    rows.emplace_back(g.x_bits(), g.z_bits());
  }
  std::size_t rank = 0;
  for (std::size_t bit = 0; bit < 2 * PauliString::kMaxQubits && rank < rows.size(); ++bit) {
    bool use_x = bit < PauliString::kMaxQubits;
    std::uint64_t mask = std::uint64_t{1} << (use_x ? bit : bit - PauliString::kMaxQubits);
    auto has_bit = [&](const auto& row) {
      return ((use_x ? row.first : row.second) & mask) != 0;
    };
    std::size_t pivot = rank;
    while (pivot < rows.size() && !has_bit(rows[pivot])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && has_bit(rows[r])) {
        rows[r].first ^= rows[rank].first;
        rows[r].second ^= rows[rank].second;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

void GraphSpec::validate() const {
  if (n == 0) {
    throw std::invalid_argument("graph must have at least one vertex");
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) {
      throw std::invalid_argument("edge vertex out of range");
    }
    if (a == b) {
      throw std::invalid_argument("self-loops are not allowed");
    }
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate edge");
    }
  }
}

std::vector<std::size_t> GraphSpec::neighbors(std::size_t vertex) const {
  std::vector<std::size_t> out;
  for (auto [a, b] : edges) {
    if (a == vertex) out.push_back(b);
    if (b == vertex) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool GraphSpec::adjacent(std::size_t a, std::size_t b) const {
  for (auto [u, v] : edges) {
    if ((u == a && v == b) || (u == b && v == a)) return true;
  }
  return false;
}

bool GraphSpec::connected() const {
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> stack{0};
  visited[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : neighbors(v)) {
      if (!visited[w]) {
        visited[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

GraphSpec GraphSpec::star(std::size_t n) {
  GraphSpec g{n, {}};
  for (std::size_t v = 1; v < n; ++v) {
    g.edges.emplace_back(0, v);
  }
  return g;
}

GraphSpec GraphSpec::path(std::size_t n) {
  GraphSpec g{n, {}};
  for (std::size_t v = 0; v + 1 < n; ++v) {
    g.edges.emplace_back(v, v + 1);
  }
  return g;
}

std::vector<PauliString> generators_from_graph(const GraphSpec& g) {
  g.validate();
  std::vector<PauliString> gens;
  gens.reserve(g.n);
  for (std::size_t i = 0; i < g.n; ++i) {
    PauliString k(g.n);
    k.set_letter(i, 'X');
    for (std::size_t j : g.neighbors(i)) {
      k.set_letter(j, 'Z');
    }
    gens.push_back(k);
  }
  return gens;
}

StabilizerGroup StabilizerGroup::from_generators(const std::vector<PauliString>& generators) {
  if (generators.empty()) {
    throw std::invalid_argument("generator list is empty");
  }
  std::size_t n = generators.front().num_qubits();
  for (const auto& g : generators) {
    if (g.num_qubits() != n) {
      throw std::invalid_argument("generators act on different qubit counts");
    }
  }
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (std::size_t j = i + 1; j < generators.size(); ++j) {
      if (!generators[i].commutes_with(generators[j])) {
        throw std::invalid_argument("generators " + generators[i].str() + " and " +
                                    generators[j].str() + " anticommute");
      }
    }
  }
  if (symplectic_rank(generators) != generators.size()) {
    throw std::invalid_argument("generators are not independent");
  }

  StabilizerGroup group;
  group.n_ = n;
  group.elements_.push_back(PauliString(n));  // +I...I
  for (const auto& g : generators) {
    std::size_t count = group.elements_.size();
    for (std::size_t i = 0; i < count; ++i) {
      group.elements_.push_back(fold_real_product(group.elements_[i], g));
    }
  }
  return group;
}

DenseState stabilizer_state(const StabilizerGroup& group) {
  std::size_t dim = std::size_t{1} << group.num_qubits();
  Eigen::MatrixXcd projector = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (const auto& e : group.elements()) {
    projector += to_matrix(e);
  }
  projector /= static_cast<double>(dim);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(projector);
  const auto& vals = es.eigenvalues();
  // Rank-1 projector: one unit eigenvalue, everything else zero.
  if (std::abs(vals[vals.size() - 1] - 1.0) > 1e-8 ||
      (vals.size() > 1 && std::abs(vals[vals.size() - 2]) > 1e-8)) {
    throw std::invalid_argument(
        "stabilizer sum is not a rank-1 projector (inconsistent signs or too few generators)");
  }
  return DenseState::pure(es.eigenvectors().col(vals.size() - 1)).phase_normalized();
}

TwoPointCount count_two_point(const GraphSpec& g) {
  g.validate();
  if (g.n < 3 || !g.connected()) {
    throw std::invalid_argument("two-point counting requires a connected graph with >= 3 vertices");
  }
  std::vector<PauliString> gens = generators_from_graph(g);
  TwoPointCount result;
  // Degree-1 vertices: the generator itself is an XZ-type two-point operator.
  for (std::size_t i = 0; i < g.n; ++i) {
    if (g.neighbors(i).size() == 1) {
      result.ops.push_back(gens[i]);
    }
  }
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) {
      auto ni = g.neighbors(i);
      auto nj = g.neighbors(j);
      if (!g.adjacent(i, j)) {
        // Unconnected pair with equal neighborhoods: K_i K_j = X_i X_j.
        if (ni == nj) {
          result.ops.push_back(fold_real_product(gens[i], gens[j]));
        }
      } else {
        // Connected pair with equal closed neighborhoods: K_i K_j = Y_i Y_j.
        auto closed = [](std::vector<std::size_t> nb, std::size_t self) {
          nb.push_back(self);
          std::sort(nb.begin(), nb.end());
          return nb;
        };
        if (closed(ni, i) == closed(nj, j)) {
          result.ops.push_back(fold_real_product(gens[i], gens[j]));
        }
      }
    }
  }
  result.k = result.ops.size();
  return result;
}

double two_point_bound(const GraphSpec& g1, const GraphSpec& g2) {
  std::size_t k1 = count_two_point(g1).k;
  std::size_t k2 = count_two_point(g2).k;
  if (k1 == 0) {
    throw std::invalid_argument("first graph has no two-point stabilizing operators");
  }
  double bound = (static_cast<double>(k1) - static_cast<double>(k2)) /
                 static_cast<double>(k1);
  return std::max(0.0, bound);
}

}  // namespace discrim
