#include "mqite/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mqite {

namespace {

constexpr double pi = std::numbers::pi;

double round_to(double v, int epsilon) {
    const double scale = std::pow(10.0, epsilon);
    return std::round(v * scale) / scale;
}

PauliString widen(const PauliString& p, int new_n) {
    // register masks live in the low bits; extra qubits prepend as identity
    return PauliString(new_n, p.x_mask(), p.z_mask(), p.phase_exp());
}

// U on the register qubits of an extended (ancilla + register) state.
void apply_circuit_widened(StateVector& ext, const Circuit& c, bool dagger) {
    const int wn = ext.num_qubits();
    auto prep = c.prep_layers();
    std::vector<Layer> all(prep.begin(), prep.end());
    for (const auto& l : c.layers()) all.push_back(l);
    if (!dagger) {
        for (const auto& l : all) apply_pauli_rotation(ext, widen(l.op, wn), l.angle);
    } else {
        for (auto it = all.rbegin(); it != all.rend(); ++it)
            apply_pauli_rotation(ext, widen(it->op, wn), -it->angle);
    }
}

}  // namespace

const ComponentEntry* ComponentTable::find(std::uint64_t j) const {
    for (const auto& e : entries)
        if (e.j == j) return &e;
    return nullptr;
}

std::vector<ComponentEntry> ComponentTable::selected() const {
    std::vector<ComponentEntry> out;
    for (const auto& e : entries)
        if (e.j != 0) out.push_back(e);
    return out;
}

StateVector sandwich_state(const Circuit& u, const PauliString& q) {
    if (q.num_qubits() != u.num_qubits())
        throw std::invalid_argument("sandwich_state: size mismatch");
    StateVector psi = run_circuit(u);
    apply_pauli(psi, q);
    apply_circuit(psi, u, true);
    return psi;
}

std::map<std::uint64_t, double> estimate_amplitudes(const Circuit& u, const PauliString& q,
                                                    std::uint64_t chi, int epsilon,
                                                    ReadoutMode mode, std::mt19937_64& rng) {
    if (chi < 1) throw std::invalid_argument("estimate_amplitudes: chi must be positive");
    if (epsilon < 1) throw std::invalid_argument("estimate_amplitudes: epsilon must be >= 1");
    const StateVector psi = sandwich_state(u, q);
    std::map<std::uint64_t, double> amps;
    if (mode == ReadoutMode::shot) {
        for (const auto& [j, count] : sample(psi, chi, rng))
            amps[j] = std::sqrt(static_cast<double>(count) / static_cast<double>(chi));
    } else {
        for (std::size_t j = 0; j < psi.size(); ++j) {
            const double a = round_to(std::abs(psi[j]), epsilon);
            if (a > 0) amps[j] = a;
        }
    }
    return amps;
}

std::vector<std::uint64_t> select_dominant(const std::map<std::uint64_t, double>& amps,
                                           std::size_t eta_cap) {
    std::vector<std::pair<std::uint64_t, double>> items(amps.begin(), amps.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<std::uint64_t> out;
    for (const auto& [j, amp] : items) {
        if (j == 0) continue;
        if (out.size() == eta_cap) break;
        out.push_back(j);
    }
    return out;
}

std::uint64_t choose_j_ref(const std::set<std::uint64_t>& observed, int n) {
    const std::uint64_t dim = 1ULL << n;
    for (std::uint64_t j = 1; j < dim; ++j)
        if (!observed.contains(j)) return j;
    throw std::runtime_error("choose_j_ref: observed set saturates the space");
}

std::pair<double, PauliString> t_gate(std::uint64_t t, std::uint64_t s, int n) {
    if (t == s) throw std::invalid_argument("t_gate: t == s");
    return {pi / 4, PauliString(n, t ^ s, 0)};
}

namespace {

// The two reference-circuit probabilities. Ancilla is the extra top qubit of
// an (n+1)-qubit register; layout keeps register indices in the low n bits.
//   R_gamma, X on ancilla; Q anti-controlled; U^dag; P_{0,jref} controlled;
//   [S on ancilla for the real part]; T_{jref,j}; H on ancilla;
//   m = Prob(ancilla = 0, register = jref).
double reference_prob(const Circuit& u, const PauliString& q, std::uint64_t j, std::uint64_t j_ref,
                      double gamma, bool real_part, ReadoutMode mode, std::uint64_t chi,
                      std::mt19937_64& rng) {
    const int n = u.num_qubits();
    const int wn = n + 1;
    StateVector ext(wn);

    const PauliString y_anc(wn, 1ULL << n, 1ULL << n);
    const PauliString x_anc(wn, 1ULL << n, 0);
    const PauliString z_anc(wn, 0, 1ULL << n);

    apply_pauli_rotation(ext, y_anc, -gamma);  // R_gamma: |0> -> cos g |0> + sin g |1>
    apply_circuit_widened(ext, u, false);
    apply_pauli(ext, x_anc);
    apply_controlled_pauli(ext, widen(q, wn), 1, false);
    apply_circuit_widened(ext, u, true);
    apply_controlled_pauli(ext, PauliString(wn, j_ref, 0), 1, true);  // P_{0,jref}
    if (real_part) apply_pauli_rotation(ext, z_anc, -pi / 4);  // S up to phase
    auto [ty, tp] = t_gate(j_ref, j, n);
    apply_pauli_rotation(ext, widen(tp, wn), ty);
    // H on the ancilla as Rz(pi) Ry(-pi/2), a global phase away from H
    apply_pauli_rotation(ext, y_anc, pi / 4);
    apply_pauli_rotation(ext, z_anc, -pi / 2);

    if (mode == ReadoutMode::exact) return std::norm(ext[j_ref]);
    const auto counts = sample(ext, chi, rng);
    const auto it = counts.find(j_ref);
    return it == counts.end() ? 0.0
                              : static_cast<double>(it->second) / static_cast<double>(chi);
}

}  // namespace

PhaseParts estimate_phase_parts(const Circuit& u, const PauliString& q, std::uint64_t j,
                                std::uint64_t j_ref, double gamma, int epsilon, ReadoutMode mode,
                                double amp, std::uint64_t chi, std::mt19937_64& rng) {
    if (gamma <= 0) throw std::invalid_argument("estimate_phase_parts: gamma must be positive");
    if (j == j_ref) throw std::invalid_argument("estimate_phase_parts: j must differ from j_ref");
    const double m_im = reference_prob(u, q, j, j_ref, gamma, false, mode, chi, rng);
    const double m_re = reference_prob(u, q, j, j_ref, gamma, true, mode, chi, rng);
    const double cg = std::cos(gamma), sg = std::sin(gamma);
    const double base = cg * cg + sg * sg * amp * amp;
    PhaseParts parts;
    parts.im = (base - 4 * m_im) / (2 * sg * cg);
    parts.re = (4 * m_re - base) / (2 * sg * cg);
    if (mode == ReadoutMode::exact) {
        parts.re = round_to(parts.re, epsilon);
        parts.im = round_to(parts.im, epsilon);
        // in exact readout a mismatch can only mean a mis-built circuit
        const double tol = 10.0 * std::pow(10.0, -epsilon);
        if (std::abs(std::hypot(parts.re, parts.im) - amp) > tol)
            throw std::runtime_error(
                "estimate_phase_parts: |re + i im| inconsistent with amplitude (" +
                std::to_string(std::hypot(parts.re, parts.im)) + " vs " + std::to_string(amp) +
                ")");
    }
    return parts;
}

double relative_phase(const Circuit& u, const PauliString& q, std::uint64_t j1, std::uint64_t j2,
                      const std::map<std::uint64_t, double>& amps, ReadoutMode mode, int epsilon,
                      std::uint64_t chi, std::mt19937_64& rng) {
    const auto i1 = amps.find(j1);
    const auto i2 = amps.find(j2);
    if (i1 == amps.end() || i2 == amps.end())
        throw std::invalid_argument("relative_phase: amplitudes for j1, j2 required");
    const double a1 = i1->second, a2 = i2->second;
    if (2 * a1 * a2 < std::pow(10.0, -epsilon))
        throw std::runtime_error("relative_phase: denominator below precision, use the reference circuit");

    StateVector psi = sandwich_state(u, q);
    auto [ty, tp] = t_gate(j1, j2, u.num_qubits());
    apply_pauli_rotation(psi, tp, ty);
    double m = 0;
    if (mode == ReadoutMode::exact) {
        m = std::norm(psi[j1]);
    } else {
        const auto counts = sample(psi, chi, rng);
        const auto it = counts.find(j1);
        m = it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(chi);
    }
    const double s = std::clamp((2 * m - a1 * a1 - a2 * a2) / (2 * a1 * a2), -1.0, 1.0);
    return std::asin(s);
}

ComponentTable build_component_table(const Circuit& u, const PauliString& q,
                                     const EstimationSettings& settings, std::mt19937_64& rng) {
    const int n = u.num_qubits();
    ComponentTable table;
    table.epsilon = settings.epsilon;
    table.eta_cap = settings.eta_cap;
    table.chi = settings.chi;
    table.mode = settings.mode;

    const StateVector psi = sandwich_state(u, q);
    std::map<std::uint64_t, double> amps;
    if (settings.mode == ReadoutMode::shot) {
        for (const auto& [j, count] : sample(psi, settings.chi, rng))
            amps[j] = std::sqrt(static_cast<double>(count) / static_cast<double>(settings.chi));
    } else {
        for (std::size_t j = 0; j < psi.size(); ++j) {
            const double a = round_to(std::abs(psi[j]), settings.epsilon);
            if (a > 0) amps[j] = a;
        }
    }

    std::vector<std::pair<std::uint64_t, double>> items(amps.begin(), amps.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (items.size() > settings.eta_cap) items.resize(settings.eta_cap);

    std::set<std::uint64_t> observed;
    for (const auto& [j, amp] : amps) observed.insert(j);

    // c0: signed real part in exact mode, unsigned count estimate in shot mode
    if (settings.mode == ReadoutMode::exact) {
        table.c0 = round_to(psi[0].real(), settings.epsilon);
    } else {
        const auto it = amps.find(0);
        table.c0 = it == amps.end() ? 0.0 : it->second;
    }

    const bool via_circuits =
        settings.mode == ReadoutMode::shot || settings.phases_via_circuits;
    std::uint64_t j_ref = 0;
    if (via_circuits) j_ref = choose_j_ref(observed, n);
    const double gamma = std::pow(10.0, -settings.epsilon);

    for (const auto& [j, amp] : items) {
        ComponentEntry e;
        e.j = j;
        e.amp = amp;
        if (j == 0) {
            e.re = table.c0;
            e.im = 0.0;
        } else if (!via_circuits) {
            e.re = round_to(psi[j].real(), settings.epsilon);
            e.im = round_to(psi[j].imag(), settings.epsilon);
        } else {
            const auto parts = estimate_phase_parts(u, q, j, j_ref, gamma, settings.epsilon,
                                                    settings.mode, amp, settings.chi, rng);
            e.re = parts.re;
            e.im = parts.im;
        }
        table.entries.push_back(e);
    }

    if (settings.mode == ReadoutMode::shot) {
        const double budget = static_cast<double>(table.entries.size()) *
                              std::pow(10.0, 2.0 * settings.epsilon);
        table.budget_warning = static_cast<double>(settings.chi) < budget;
    }
    return table;
}

}  // namespace mqite
