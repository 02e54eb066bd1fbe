#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mqite/pauli.hpp"
#include "mqite/statevector.hpp"

namespace mqite {

// psi <- (cosh(dk) psi - sinh(dk) Q psi) / norm. Throws if the norm collapses.
void apply_imaginary_term(StateVector& state, const PauliString& q, double dk);

struct ITEOptions {
    double delta = 0.1;
    double total_time = 3.0;
    Prep prep = Prep::zero();
    // symmetrized sweep (forward then reverse half-steps)
    bool second_order = false;
    bool store_states = true;
};

// One record per sweep plus the tau = 0 entry.
struct ITETrajectory {
    std::vector<double> tau;
    std::vector<double> energy;
    std::vector<StateVector> states;  // empty unless store_states
    int sweeps = 0;
    long long term_applications = 0;
};

// Trotterized reference evolution: sweeps = round(T/delta), each sweep applies
// every term in stored order with dk = delta * w_k, renormalizing per term;
// tau advances by delta per sweep.
ITETrajectory run_ite(const Hamiltonian& h, const ITEOptions& opt);

using SectorFilter = std::function<bool(std::uint64_t)>;

struct GroundInfo {
    double e0 = 0;
    double gap = 0;
    StateVector vector{1};
};

// Dense Hermitian eigendecomposition, optionally restricted to the basis
// states passing the filter (M-scheme sectors). n <= 12.
GroundInfo exact_ground(const Hamiltonian& h, const SectorFilter& sector = {});

// Sum of |<v_i|psi>|^2 over eigenvectors within degeneracy_tol of E0.
double ground_projector_overlap(const Hamiltonian& h, const StateVector& psi,
                                double degeneracy_tol = 1e-8, const SectorFilter& sector = {});

}  // namespace mqite
