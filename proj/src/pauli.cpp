#include "discrim/pauli.hpp"

#include <array>
#include <bit>
#include <functional>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

namespace discrim {

namespace {

// Letter codes: (x, z) -> 00 I, 10 X, 11 Y, 01 Z.
constexpr int code_of(char letter) {
  switch (letter) {
    case 'I': return 0b00;
    case 'X': return 0b10;
    case 'Y': return 0b11;
    case 'Z': return 0b01;
    default: return -1;
  }
}

constexpr char letter_of(int code) {
  constexpr std::array<char, 4> letters{'I', 'Z', 'X', 'Y'};
  return letters[static_cast<std::size_t>(code)];
}

// Exponent of i in the single-qubit product a*b, indexed by letter codes.
// XY = iZ, YZ = iX, ZX = iY and the reversed orders pick up -i.
constexpr std::array<std::array<int, 4>, 4> kPhaseExp = [] {
  std::array<std::array<int, 4>, 4> t{};
  auto set = [&](char a, char b, int e) {
    t[static_cast<std::size_t>(code_of(a))][static_cast<std::size_t>(code_of(b))] = e;
  };
  set('X', 'Y', 1); set('Y', 'X', 3);
  set('Y', 'Z', 1); set('Z', 'Y', 3);
  set('Z', 'X', 1); set('X', 'Z', 3);
  return t;
}();

void check_qubit(std::size_t qubit, std::size_t n) {
  if (qubit >= n) {
    throw std::out_of_range("qubit index out of range");
  }
}

}  // namespace

PauliString::PauliString(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in 1.." +
                                std::to_string(kMaxQubits));
  }
}

PauliString PauliString::parse(std::string_view text) {
  int sign = +1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '+' ? +1 : -1;
    text.remove_prefix(1);
  }
  return from_letters(text, sign);
}

PauliString PauliString::from_letters(std::string_view letters, int sign) {
  PauliString p(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    p.set_letter(q, letters[q]);
  }
  return p.with_sign(sign);
}

char PauliString::letter(std::size_t qubit) const {
  check_qubit(qubit, n_);
  int x = static_cast<int>((x_ >> qubit) & 1u);
  int z = static_cast<int>((z_ >> qubit) & 1u);
  return letter_of((x << 1) | z);
}

void PauliString::set_letter(std::size_t qubit, char letter) {
  check_qubit(qubit, n_);
  int code = code_of(letter);
  if (code < 0) {
    throw std::invalid_argument(std::string("invalid Pauli letter: ") + letter);
  }
  std::uint64_t mask = std::uint64_t{1} << qubit;
  x_ = (x_ & ~mask) | ((code & 0b10) ? mask : 0);
  z_ = (z_ & ~mask) | ((code & 0b01) ? mask : 0);
}

PauliString PauliString::with_sign(int sign) const {
  if (sign != +1 && sign != -1) {
    throw std::invalid_argument("sign must be +1 or -1");
  }
  PauliString p = *this;
  p.sign_ = sign;
  return p;
}

std::size_t PauliString::weight() const {
  return static_cast<std::size_t>(std::popcount(x_ | z_));
}

std::vector<std::size_t> PauliString::support() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n_; ++q) {
    if (((x_ | z_) >> q) & 1u) {
      out.push_back(q);
    }
  }
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("qubit count mismatch");
  }
  // Symplectic form: words commute iff <a.x, b.z> + <a.z, b.x> is even.
  int parity = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return parity % 2 == 0;
}

PauliString PauliString::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != n_) {
    throw std::invalid_argument("permutation length mismatch");
  }
  PauliString out(n_);
  std::vector<bool> seen(n_, false);
  for (std::size_t q = 0; q < n_; ++q) {
    std::size_t target = perm[q];
    check_qubit(target, n_);
    if (seen[target]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[target] = true;
    out.set_letter(target, letter(q));
  }
  return out.with_sign(sign_);
}

std::string PauliString::str() const {
  std::string out;
  out.reserve(n_ + 1);
  out.push_back(sign_ > 0 ? '+' : '-');
  for (std::size_t q = 0; q < n_; ++q) {
    out.push_back(letter(q));
  }
  return out;
}

PauliProduct pauli_product(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("qubit count mismatch");
  }
  PauliString word(a.num_qubits());
  int phase_exp = 0;
  for (std::size_t q = 0; q < a.num_qubits(); ++q) {
    int ca = code_of(a.letter(q));
    int cb = code_of(b.letter(q));
    phase_exp += kPhaseExp[static_cast<std::size_t>(ca)][static_cast<std::size_t>(cb)];
    word.set_letter(q, letter_of(ca ^ cb));
  }
  phase_exp %= 4;
  static const std::array<std::complex<double>, 4> powers{
      std::complex<double>{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::complex<double> phase =
      powers[static_cast<std::size_t>(phase_exp)] *
      static_cast<double>(a.sign() * b.sign());
  return {phase, word};
}

int trace_overlap(const PauliString& a, const PauliString& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("qubit count mismatch");
  }
  if (!a.same_word(b)) {
    return 0;
  }
  return a.sign() * b.sign();
}

Eigen::MatrixXcd to_matrix(const PauliString& p) {
  if (p.num_qubits() > PauliString::kMaxDenseQubits) {
    throw std::invalid_argument("dense Pauli matrix capped at " +
                                std::to_string(PauliString::kMaxDenseQubits) +
                                " qubits");
  }
  using cd = std::complex<double>;
  Eigen::Matrix2cd single[4];
  single[0] << 1, 0, 0, 1;                       // I
  single[1] << 1, 0, 0, -1;                      // Z
  single[2] << 0, 1, 1, 0;                       // X
  single[3] << 0, cd(0, -1), cd(0, 1), 0;        // Y
  auto code = [](char c) {
    switch (c) {
      case 'I': return 0;
      case 'Z': return 1;
      case 'X': return 2;
      default: return 3;
    }
  };
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  // Qubit 0 is the leftmost tensor factor (most significant basis bit).
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    const Eigen::Matrix2cd& m = single[code(p.letter(q))];
    out = Eigen::kroneckerProduct(out, m).eval();
  }
  return out * static_cast<double>(p.sign());
}

std::size_t PauliStringHash::operator()(const PauliString& p) const {
  std::size_t h = std::hash<std::uint64_t>{}(p.x_bits());
  h ^= std::hash<std::uint64_t>{}(p.z_bits()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= std::hash<int>{}(p.sign()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h ^= std::hash<std::size_t>{}(p.num_qubits()) + (h << 6) + (h >> 2);
  return h;
}

}  // namespace discrim
