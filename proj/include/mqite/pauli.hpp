#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mqite {

// Tensor product of {I,X,Y,Z} over n qubits in symplectic form, with a global
// phase i^phase_exp. Qubit 1 is the leftmost label character and the most
// significant bit of basis-state indices; qubit q maps to index bit (n - q).
//
// Canonical matrix: P = i^phase_exp * prod_q O(x_q, z_q) with O(1,1) = Y,
// so a plain tensor product always has phase_exp = 0.
class PauliString {
  public:
    PauliString() = default;
    PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp = 0);

    static PauliString identity(int n) { return PauliString(n, 0, 0, 0); }
    // Parses a label over {I,X,Y,Z}; throws std::invalid_argument naming the
    // (1-based) offending position.
    static PauliString from_label(std::string_view label);

    int num_qubits() const { return n_; }
    std::uint64_t x_mask() const { return x_; }
    std::uint64_t z_mask() const { return z_; }
    int phase_exp() const { return phase_; }

    bool is_identity() const { return x_ == 0 && z_ == 0; }
    // Number of non-identity tensor factors.
    int weight() const;
    // Qubit indices (1-based, ascending) carrying a non-identity factor.
    std::vector<int> support() const;

    // Label of the tensor-product part; phase_exp is not rendered and must be
    // 0 if the round-trip property is wanted.
    std::string label() const;

    PauliString operator*(const PauliString& rhs) const;
    bool operator==(const PauliString& rhs) const = default;

    bool commutes_with(const PauliString& other) const;

    // P|j> = c |j XOR x_mask| with |c| = 1; returns (j', c).
    std::pair<std::uint64_t, std::complex<double>> apply_to_basis(std::uint64_t j) const;
    // Power of i (mod 4) such that P|j> = i^k |j XOR x_mask>.
    int basis_phase_pow(std::uint64_t j) const;

  private:
    int n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
    int phase_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PauliString& p);

// All-X string on the set bits of j: P|0...0> = |j>. Rejects j = 0.
PauliString p_imag_for(int n, std::uint64_t j);
// p_imag_for with the X at the lowest-index set qubit (most significant bit)
// replaced by Y: P|0...0> = i|j>. Rejects j = 0.
PauliString p_real_for(int n, std::uint64_t j);

struct HamiltonianTerm {
    double weight = 0.0;
    PauliString op;
};

// Ordered weighted sum of Pauli strings. Iteration order is storage order;
// the trotterized sweeps depend on it.
class Hamiltonian {
  public:
    explicit Hamiltonian(int n);

    int num_qubits() const { return n_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }
    const HamiltonianTerm& term(std::size_t k) const { return terms_[k]; }
    const std::vector<HamiltonianTerm>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    // Identity terms are rejected unless allow_identity is set (constant offset).
    void add_term(double weight, PauliString op, bool allow_identity = false);

  private:
    int n_;
    std::vector<HamiltonianTerm> terms_;
};

// Text format: one "weight<ws>label" per line, '#' starts a comment, blank
// lines ignored. Errors carry 1-based line numbers.
Hamiltonian parse_hamiltonian(std::istream& in, std::string_view source_name = "<stream>");
void write_hamiltonian(std::ostream& out, const Hamiltonian& h);

}  // namespace mqite
