#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "discrim/dense.hpp"
#include "discrim/pauli.hpp"

namespace discrim {

/// Simple undirected graph; vertices are 0-based in code, 1-based in files
/// and printed text. No self-loops, no duplicate edges.
struct GraphSpec {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  void validate() const;
  std::vector<std::size_t> neighbors(std::size_t vertex) const;
  bool adjacent(std::size_t a, std::size_t b) const;
  bool connected() const;

  static GraphSpec star(std::size_t n);  // vertex 0 connected to all others
  static GraphSpec path(std::size_t n);  // 0-1-2-...-(n-1)
};

/// Abelian group of 2^n signed Pauli words with all real signs.
class StabilizerGroup {
 public:
  static StabilizerGroup from_generators(const std::vector<PauliString>& generators);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliString>& elements() const { return elements_; }

 private:
  std::size_t n_ = 0;
  std::vector<PauliString> elements_;
};

/// Correlation operators K_i = X_i prod_{j in N(i)} Z_j, all with sign +1.
std::vector<PauliString> generators_from_graph(const GraphSpec& g);

/// The unique joint +1 eigenstate; errors unless the sign pattern is
/// consistent (the group sum must be a rank-1 projector).
DenseState stabilizer_state(const StabilizerGroup& group);

struct TwoPointCount {
  std::size_t k = 0;
  std::vector<PauliString> ops;
};

/// Counts weight-2 group elements via the neighborhood rules; requires a
/// connected graph with at least 3 vertices.
TwoPointCount count_two_point(const GraphSpec& g);

/// max(0, (k1 - k2) / k1), a lower bound on both discrimination measures
/// when using the weight-2 stabilizing operators of g1.
double two_point_bound(const GraphSpec& g1, const GraphSpec& g2);

}  // namespace discrim
