#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "mqite/pauli.hpp"
#include "mqite/statevector.hpp"

namespace mqite {

enum class ReadoutMode { shot, exact };

struct ComponentEntry {
    std::uint64_t j = 0;
    double amp = 0;  // |c_j|
    double re = 0;
    double im = 0;
};

// Estimated components of U^dag Q U |0...0>, sorted by amplitude descending
// with ties broken by ascending j; at most eta_cap entries.
struct ComponentTable {
    std::vector<ComponentEntry> entries;
    int epsilon = 2;
    std::size_t eta_cap = 0;
    std::uint64_t chi = 0;
    ReadoutMode mode = ReadoutMode::exact;
    // <0|U^dag Q U|0>; signed in exact mode, sqrt(n_0/chi) in shot mode.
    double c0 = 0;
    // shot mode with chi below eta * 10^(2 eps)
    bool budget_warning = false;

    const ComponentEntry* find(std::uint64_t j) const;
    // entries with j != 0, in table order; these get gates
    std::vector<ComponentEntry> selected() const;
};

struct EstimationSettings {
    std::uint64_t chi = 1000;
    int epsilon = 2;
    std::size_t eta_cap = 100;
    ReadoutMode mode = ReadoutMode::exact;
    // route (re, im) through the ancilla circuits even in exact mode
    bool phases_via_circuits = false;
};

// |psi> = U^dag Q U |0...0> as a statevector.
StateVector sandwich_state(const Circuit& u, const PauliString& q);

// Amplitude map: shot mode sqrt(n_j/chi); exact mode |amps| rounded to
// 10^-epsilon, zero-rounded entries dropped.
std::map<std::uint64_t, double> estimate_amplitudes(const Circuit& u, const PauliString& q,
                                                    std::uint64_t chi, int epsilon,
                                                    ReadoutMode mode, std::mt19937_64& rng);

// Largest-amplitude bitstrings (ties ascending), j = 0 excluded, at most
// eta_cap returned.
std::vector<std::uint64_t> select_dominant(const std::map<std::uint64_t, double>& amps,
                                           std::size_t eta_cap);

// Smallest nonzero bitstring outside the observed set.
std::uint64_t choose_j_ref(const std::set<std::uint64_t>& observed, int n);

// T_ts = exp(i pi/4 P) with P the X string on the bits where t and s differ.
std::pair<double, PauliString> t_gate(std::uint64_t t, std::uint64_t s, int n);

struct PhaseParts {
    double re = 0;
    double im = 0;
};

// Ancilla-circuit measurement of Re/Im c_j (the gamma-rotation reference
// construction). Exact mode evaluates the two probabilities from the
// (n+1)-qubit statevector; shot mode samples them chi times each. The
// recovered parts are rounded to 10^-epsilon and flagged against amp.
PhaseParts estimate_phase_parts(const Circuit& u, const PauliString& q, std::uint64_t j,
                                std::uint64_t j_ref, double gamma, int epsilon, ReadoutMode mode,
                                double amp, std::uint64_t chi, std::mt19937_64& rng);

// Two-component relative phase via T_{j1 j2}; result in [-pi/2, pi/2].
double relative_phase(const Circuit& u, const PauliString& q, std::uint64_t j1, std::uint64_t j2,
                      const std::map<std::uint64_t, double>& amps, ReadoutMode mode, int epsilon,
                      std::uint64_t chi, std::mt19937_64& rng);

// Full assembly used by the evolution driver.
ComponentTable build_component_table(const Circuit& u, const PauliString& q,
                                     const EstimationSettings& settings, std::mt19937_64& rng);

}  // namespace mqite
