#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace discrim {

/// Signed n-qubit Pauli word. Letters are stored symplectically (one x bit
/// and one z bit per qubit) together with a sign in {+1, -1}. Phases +-i are
/// never stored; operations that produce them report the phase out-of-band.
/// Qubit indices are 0-based in code, 1-based in printed text.
class PauliString {
 public:
  static constexpr std::size_t kMaxQubits = 32;
  static constexpr std::size_t kMaxDenseQubits = 8;

  explicit PauliString(std::size_t n);  // identity word, sign +1

  /// Parses e.g. "-XXYY" or "IZIZ" (optional leading sign).
  static PauliString parse(std::string_view text);
  static PauliString from_letters(std::string_view letters, int sign = +1);

  std::size_t num_qubits() const { return n_; }
  int sign() const { return sign_; }
  char letter(std::size_t qubit) const;  // 'I', 'X', 'Y' or 'Z'
  void set_letter(std::size_t qubit, char letter);

  PauliString with_sign(int sign) const;
  PauliString negated() const { return with_sign(-sign_); }

  std::size_t weight() const;
  std::vector<std::size_t> support() const;  // 0-based indices with letter != I
  bool is_identity_word() const { return x_ == 0 && z_ == 0; }

  bool commutes_with(const PauliString& other) const;

  /// Word permuted so that qubit perm[q] carries the letter previously at q.
  PauliString permuted(const std::vector<std::size_t>& perm) const;

  std::string str() const;  // "+IXYZ" form; round-trips through parse()

  bool operator==(const PauliString& other) const = default;
  bool same_word(const PauliString& other) const {
    return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
  }

  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }

 private:
  std::size_t n_;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int sign_ = +1;
};

struct PauliProduct {
  std::complex<double> phase;  // one of {+1, -1, +i, -i}; input signs folded in
  PauliString word;            // sign-free part (sign always +1)
};

/// Group multiplication: phase * word equals the matrix product a * b.
PauliProduct pauli_product(const PauliString& a, const PauliString& b);

/// tr(a*b) / 2^n, which is +1, -1 or 0.
int trace_overlap(const PauliString& a, const PauliString& b);

/// Dense matrix form (Kronecker product of single-qubit Paulis times sign).
Eigen::MatrixXcd to_matrix(const PauliString& p);

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const;
};

}  // namespace discrim
