#include "mqite/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "mqite/kernels.hpp"

namespace mqite {

namespace {

constexpr int kMaxDenseQubits = 24;

void check_n(int n) {
    if (n < 1 || n > kMaxDenseQubits)
        throw std::invalid_argument("statevector: qubit count " + std::to_string(n) +
                                    " outside [1, " + std::to_string(kMaxDenseQubits) + "]");
}

int total_phase_pow(const PauliString& p) {
    return (p.phase_exp() + std::popcount(p.x_mask() & p.z_mask())) & 3;
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
    check_n(n);
    amps_.assign(std::size_t{1} << n, cplx(0.0, 0.0));
    amps_[0] = 1.0;
}

double StateVector::norm_sq() const {
    return kernels::norm_sq(amps_.data(), amps_.size());
}

void StateVector::normalize() {
    const double n2 = norm_sq();
    if (n2 < 1e-12)
        throw std::runtime_error("statevector: norm collapsed (" + std::to_string(n2) + ")");
    kernels::scale(amps_.data(), amps_.size(), 1.0 / std::sqrt(n2));
}

Circuit::Circuit(int n, Prep prep) : n_(n), prep_(prep) {
    check_n(n);
    if (prep_.kind == Prep::Kind::basis && (prep_.basis_index >> n) != 0)
        throw std::invalid_argument("circuit: prep basis index exceeds qubit count");
}

void Circuit::append(double angle, PauliString op) {
    if (op.num_qubits() != n_)
        throw std::invalid_argument("circuit: layer qubit count mismatch");
    layers_.push_back({angle, std::move(op)});
}

void Circuit::prepend_block(const std::vector<Layer>& block) {
    for (const auto& l : block)
        if (l.op.num_qubits() != n_)
            throw std::invalid_argument("circuit: layer qubit count mismatch");
    layers_.insert(layers_.begin(), block.begin(), block.end());
}

std::vector<Layer> Circuit::prep_layers() const {
    constexpr double pi = std::numbers::pi;
    std::vector<Layer> out;
    switch (prep_.kind) {
        case Prep::Kind::zero:
            break;
        case Prep::Kind::basis: {
            // exp(i pi/2 X_q) = i X_q per set bit; global phase cancels in
            // every U^dag ... U sandwich.
            for (int q = 1; q <= n_; ++q)
                if (prep_.basis_index >> (n_ - q) & 1)
                    out.push_back({pi / 2, PauliString(n_, 1ULL << (n_ - q), 0)});
            break;
        }
        case Prep::Kind::ghz_plus:
        case Prep::Kind::ghz_minus: {
            // Ry on qubit 1 then a CNOT fan-out, each CNOT as a product of
            // three commuting rotations: e^{-i pi/4 Z_c} e^{-i pi/4 X_t} e^{i pi/4 Z_c X_t}.
            const double sgn = prep_.kind == Prep::Kind::ghz_plus ? 1.0 : -1.0;
            const std::uint64_t q1 = 1ULL << (n_ - 1);
            out.push_back({-sgn * pi / 4, PauliString(n_, q1, q1)});  // Ry(sgn*pi/2) on qubit 1
            for (int t = 2; t <= n_; ++t) {
                const std::uint64_t qt = 1ULL << (n_ - t);
                out.push_back({-pi / 4, PauliString(n_, 0, q1)});
                out.push_back({-pi / 4, PauliString(n_, qt, 0)});
                out.push_back({pi / 4, PauliString(n_, qt, q1)});
            }
            break;
        }
    }
    return out;
}

StateVector init_state(int n, const Prep& prep) {
    check_n(n);
    StateVector s(n);
    switch (prep.kind) {
        case Prep::Kind::zero:
            break;
        case Prep::Kind::basis:
            if ((prep.basis_index >> n) != 0)
                throw std::invalid_argument("init_state: basis index exceeds qubit count");
            s[0] = 0.0;
            s[prep.basis_index] = 1.0;
            break;
        case Prep::Kind::ghz_plus:
        case Prep::Kind::ghz_minus: {
            const double r = 1.0 / std::numbers::sqrt2;
            s[0] = r;
            s[s.size() - 1] = prep.kind == Prep::Kind::ghz_plus ? r : -r;
            break;
        }
    }
    return s;
}

void apply_pauli(StateVector& state, const PauliString& p) {
    if (p.num_qubits() != state.num_qubits())
        throw std::invalid_argument("apply_pauli: size mismatch");
    kernels::pauli_axpby(state.data(), state.size(), p.x_mask(), p.z_mask(), total_phase_pow(p),
                         0.0, 1.0);
}

void apply_pauli_rotation(StateVector& state, const PauliString& p, double y) {
    if (p.num_qubits() != state.num_qubits())
        throw std::invalid_argument("apply_pauli_rotation: size mismatch");
    kernels::pauli_axpby(state.data(), state.size(), p.x_mask(), p.z_mask(), total_phase_pow(p),
                         std::cos(y), cplx(0.0, std::sin(y)));
}

void apply_controlled_pauli(StateVector& state, const PauliString& p, int control_qubit,
                            bool control_value) {
    const int n = state.num_qubits();
    if (p.num_qubits() != n)
        throw std::invalid_argument("apply_controlled_pauli: size mismatch");
    if (control_qubit < 1 || control_qubit > n)
        throw std::invalid_argument("apply_controlled_pauli: control qubit out of range");
    const std::uint64_t cbit = 1ULL << (n - control_qubit);
    if (p.x_mask() & cbit)
        throw std::invalid_argument("apply_controlled_pauli: operator flips the control qubit");
    const std::uint64_t want = control_value ? cbit : 0;
    // Cold path (ancilla measurement circuits); plain scalar sweep.
    std::vector<cplx> out(state.size());
    for (std::size_t j = 0; j < state.size(); ++j) {
        if ((j & cbit) == want) {
            auto [t, c] = p.apply_to_basis(j);
            out[t] = c * state[j];
        } else {
            out[j] = state[j];
        }
    }
    std::copy(out.begin(), out.end(), state.data());
}

void apply_circuit(StateVector& state, const Circuit& c, bool dagger) {
    if (c.num_qubits() != state.num_qubits())
        throw std::invalid_argument("apply_circuit: size mismatch");
    const auto prep = c.prep_layers();
    if (!dagger) {
        for (const auto& l : prep) apply_pauli_rotation(state, l.op, l.angle);
        for (const auto& l : c.layers()) apply_pauli_rotation(state, l.op, l.angle);
    } else {
        for (auto it = c.layers().rbegin(); it != c.layers().rend(); ++it)
            apply_pauli_rotation(state, it->op, -it->angle);
        for (auto it = prep.rbegin(); it != prep.rend(); ++it)
            apply_pauli_rotation(state, it->op, -it->angle);
    }
}

StateVector run_circuit(const Circuit& c) {
    StateVector s(c.num_qubits());
    apply_circuit(s, c, false);
    return s;
}

cplx pauli_matrix_element(const StateVector& bra, const StateVector& ket, const PauliString& p) {
    if (bra.num_qubits() != ket.num_qubits() || p.num_qubits() != ket.num_qubits())
        throw std::invalid_argument("pauli_matrix_element: size mismatch");
    return kernels::pauli_bilinear(bra.data(), ket.data(), ket.size(), p.x_mask(), p.z_mask(),
                                   total_phase_pow(p));
}

cplx pauli_expectation(const StateVector& state, const PauliString& p) {
    return pauli_matrix_element(state, state, p);
}

double expectation(const StateVector& state, const Hamiltonian& h) {
    if (h.num_qubits() != state.num_qubits())
        throw std::invalid_argument("expectation: size mismatch");
    cplx acc = 0.0;
    for (const auto& t : h) acc += t.weight * pauli_expectation(state, t.op);
    if (std::abs(acc.imag()) > 1e-10)
        throw std::runtime_error("expectation: imaginary residue " + std::to_string(acc.imag()));
    return acc.real();
}

cplx inner(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() != b.num_qubits())
        throw std::invalid_argument("inner: size mismatch");
    return kernels::inner(a.data(), b.data(), a.size());
}

StateVector apply_hamiltonian(const StateVector& state, const Hamiltonian& h) {
    if (h.num_qubits() != state.num_qubits())
        throw std::invalid_argument("apply_hamiltonian: size mismatch");
    StateVector out(state.num_qubits());
    out[0] = 0.0;
    std::vector<cplx> tmp(state.size());
    for (const auto& t : h) {
        std::copy(state.data(), state.data() + state.size(), tmp.begin());
        kernels::pauli_axpby(tmp.data(), tmp.size(), t.op.x_mask(), t.op.z_mask(),
                             (t.op.phase_exp() + std::popcount(t.op.x_mask() & t.op.z_mask())) & 3,
                             0.0, t.weight);
        for (std::size_t j = 0; j < tmp.size(); ++j) out[j] += tmp[j];
    }
    return out;
}

double energy_variance(const StateVector& state, const Hamiltonian& h) {
    const StateVector hpsi = apply_hamiltonian(state, h);
    const double e = expectation(state, h);
    return kernels::norm_sq(hpsi.data(), hpsi.size()) - e * e;
}

std::map<std::uint64_t, std::uint64_t> sample(const StateVector& state, std::uint64_t shots,
                                              std::mt19937_64& rng) {
    if (shots < 1) throw std::invalid_argument("sample: need at least one shot");
    const double n2 = state.norm_sq();
    if (std::abs(n2 - 1.0) > 1e-6)
        throw std::runtime_error("sample: state not normalized (norm^2 = " + std::to_string(n2) +
                                 ")");
    std::vector<double> cdf(state.size());
    double run = 0.0;
    for (std::size_t j = 0; j < state.size(); ++j) {
        run += std::norm(state[j]);
        cdf[j] = run;
    }
    std::uniform_real_distribution<double> uni(0.0, run);
    std::map<std::uint64_t, std::uint64_t> counts;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uni(rng);
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t j = std::min<std::size_t>(it - cdf.begin(), state.size() - 1);
        ++counts[j];
    }
    return counts;
}

void dump_amplitudes(const StateVector& state, std::ostream& out) {
    const std::uint32_t n = static_cast<std::uint32_t>(state.num_qubits());
    out.write(reinterpret_cast<const char*>(&n), sizeof n);
    for (std::size_t j = 0; j < state.size(); ++j) {
        const double re = state[j].real(), im = state[j].imag();
        out.write(reinterpret_cast<const char*>(&re), sizeof re);
        out.write(reinterpret_cast<const char*>(&im), sizeof im);
    }
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (tag + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace mqite
