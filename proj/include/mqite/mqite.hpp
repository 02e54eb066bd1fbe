#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mqite/decomposition.hpp"
#include "mqite/ite.hpp"
#include "mqite/measurement.hpp"
#include "mqite/pauli.hpp"
#include "mqite/statevector.hpp"

namespace mqite {

struct MQITEConfig {
    double delta = 0.1;
    double total_time = 3.0;
    int epsilon = 2;
    std::size_t eta_cap = 100;
    std::uint64_t chi = 1000;
    ReadoutMode mode = ReadoutMode::exact;
    Prep prep = Prep::zero();
    std::uint64_t seed = 1;
    bool qse_enabled = false;
    // applies to the paired reference evolution only
    bool second_order_trotter = false;
    // y = +/- delta c instead of the n_k-normalized form
    bool bare_parameters = false;
    // route phase readout through the ancilla circuits in exact mode too
    bool phases_via_circuits = false;
};

struct AppliedComponent {
    std::uint64_t j = 0;
    double re = 0, im = 0;   // measured parts of c_j
    double y_re = 0, y_im = 0;  // rotation angles actually appended
};

struct TermStepStats {
    double weight = 0;
    double delta_k = 0;
    double c0 = 0;
    double n_k = 1;
    std::size_t eta_observed = 0;  // component-table size
    double delta_star = 1.0;
    GateCount gates;  // ladder budget units
    std::size_t layers_added = 0;
    bool budget_warning = false;
    std::vector<AppliedComponent> components;
};

// One Fig.-style term update: estimate the component table of U^dag Q U|0>,
// turn the dominant components into P(r)/P(i) rotations with
// y = +/- delta_k c / n_k, and grow the circuit next to |0...0>.
TermStepStats mqite_term_step(Circuit& u, double weight, const PauliString& q,
                              const MQITEConfig& cfg, std::mt19937_64& rng);

// Largest minus second-largest amplitude; 1 for empty or single-entry tables.
double delta_star(const ComponentTable& table);

struct SweepRecord {
    int sweep = 0;
    double tau = 0;
    double energy = 0;
    double rel_error = 0;
    double fidelity = 1;
    std::size_t eta_observed = 0;  // max over the sweep's terms
    double delta_star_last = 1;    // last term of the sweep
    GateCount gates_added;
    double energy_variance = 0;
    // this sweep's new layers in application order (they precede older layers)
    std::vector<Layer> appended_layers;
};

struct RunRecord {
    int n = 0;
    MQITEConfig config;
    double exact_e0 = 0;
    double exact_gap = 0;
    bool has_reference = false;
    std::vector<SweepRecord> sweeps;  // index 0 is the tau = 0 row
    std::vector<TermStepStats> term_steps;
    Circuit final_circuit{1};
    ITETrajectory ite;
    bool budget_warning_any = false;
};

// Full evolution with a paired reference trajectory at identical settings.
// When no reference is passed, the exact ground is computed for n <= 12.
RunRecord run_mqite(const Hamiltonian& h, const MQITEConfig& cfg,
                    const GroundInfo* reference = nullptr);

// || sum_j y_j U|j> - delta [Q - <Q>] |psi> ||^2 in the orthogonal-component
// representation, with the target normalized by n_k (bare = plain delta c).
double mqite_cost(const TermStepStats& step, const std::vector<std::pair<double, double>>& y,
                  bool bare);
// max |d(f^2)/d y| over all parameters at the step's computed values,
// by central finite differences.
double cost_function_check(const TermStepStats& step, bool bare, double fd_step = 1e-5);

}  // namespace mqite
