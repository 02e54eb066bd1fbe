#pragma once

#include <complex>
#include <cstdint>
#include <deque>
#include <iosfwd>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "mqite/pauli.hpp"

namespace mqite {

using cplx = std::complex<double>;

// Initial-state preparation tag carried by a Circuit.
struct Prep {
    enum class Kind { zero, basis, ghz_plus, ghz_minus };
    Kind kind = Kind::zero;
    std::uint64_t basis_index = 0;

    static Prep zero() { return {}; }
    static Prep basis(std::uint64_t j) { return {Kind::basis, j}; }
    static Prep ghz(bool plus) { return {plus ? Kind::ghz_plus : Kind::ghz_minus, 0}; }
};

class StateVector {
  public:
    explicit StateVector(int n);

    int num_qubits() const { return n_; }
    std::size_t size() const { return amps_.size(); }
    cplx* data() { return amps_.data(); }
    const cplx* data() const { return amps_.data(); }
    cplx& operator[](std::size_t j) { return amps_[j]; }
    const cplx& operator[](std::size_t j) const { return amps_[j]; }
    std::span<const cplx> amps() const { return amps_; }

    double norm_sq() const;
    // Rescales to unit norm; throws if the norm collapsed below 1e-12.
    void normalize();

  private:
    int n_;
    std::vector<cplx> amps_;
};

struct Layer {
    double angle = 0.0;
    PauliString op;
};

// Ordered product of Pauli rotations exp(i y P) applied after the prep;
// layers run in list order (front first).
class Circuit {
  public:
    explicit Circuit(int n, Prep prep = Prep::zero());

    int num_qubits() const { return n_; }
    const Prep& prep() const { return prep_; }
    const std::deque<Layer>& layers() const { return layers_; }
    std::size_t depth() const { return layers_.size(); }

    void append(double angle, PauliString op);
    // Inserts a block so it acts before every existing layer.
    void prepend_block(const std::vector<Layer>& block);

    // The prep realized as rotation layers (exact up to a global phase).
    std::vector<Layer> prep_layers() const;

  private:
    int n_;
    Prep prep_;
    std::deque<Layer> layers_;
};

// |0...0> or the prep-tagged state, exactly (no global phase). n in [1, 24].
StateVector init_state(int n, const Prep& prep = Prep::zero());

// psi <- P psi
void apply_pauli(StateVector& state, const PauliString& p);
// psi <- cos(y) psi + i sin(y) P psi, one index-pairing pass
void apply_pauli_rotation(StateVector& state, const PauliString& p, double y);
// Applies P on the subspace where (1-based) control_qubit reads control_value.
void apply_controlled_pauli(StateVector& state, const PauliString& p, int control_qubit,
                            bool control_value);
// Full unitary of the circuit (prep layers + layers); dagger reverses with
// negated angles.
void apply_circuit(StateVector& state, const Circuit& c, bool dagger = false);
// init_state(n, zero) + apply_circuit; the standard |psi> = U|0...0>.
StateVector run_circuit(const Circuit& c);

cplx pauli_expectation(const StateVector& state, const PauliString& p);
// <bra| P |ket>
cplx pauli_matrix_element(const StateVector& bra, const StateVector& ket, const PauliString& p);
double expectation(const StateVector& state, const Hamiltonian& h);
cplx inner(const StateVector& a, const StateVector& b);
// out-of-place H|psi>
StateVector apply_hamiltonian(const StateVector& state, const Hamiltonian& h);
// <H^2> - <H>^2
double energy_variance(const StateVector& state, const Hamiltonian& h);

// chi independent draws from Prob(j) = |amps[j]|^2. Requires norm within 1e-6.
std::map<std::uint64_t, std::uint64_t> sample(const StateVector& state, std::uint64_t shots,
                                              std::mt19937_64& rng);

// Debug dump: qubit count then interleaved little-endian re/im doubles.
void dump_amplitudes(const StateVector& state, std::ostream& out);

// splitmix64-style mixing for deriving independent substream seeds.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag);

}  // namespace mqite
