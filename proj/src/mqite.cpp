#include "mqite/mqite.hpp"

#include <cmath>
#include <stdexcept>

namespace mqite {

double delta_star(const ComponentTable& table) {
    if (table.entries.empty()) return 1.0;
    const double a1 = table.entries[0].amp;
    const double a2 = table.entries.size() > 1 ? table.entries[1].amp : 0.0;
    return a1 - a2;
}

TermStepStats mqite_term_step(Circuit& u, double weight, const PauliString& q,
                              const MQITEConfig& cfg, std::mt19937_64& rng) {
    const double dk = cfg.delta * weight;
    if (std::abs(dk) >= 1.0)
        throw std::invalid_argument("mqite_term_step: |delta * w| = " + std::to_string(dk) +
                                    " leaves the perturbative regime");

    EstimationSettings settings;
    settings.chi = cfg.chi;
    settings.epsilon = cfg.epsilon;
    settings.eta_cap = cfg.eta_cap;
    settings.mode = cfg.mode;
    settings.phases_via_circuits = cfg.phases_via_circuits;
    const ComponentTable table = build_component_table(u, q, settings, rng);

    TermStepStats stats;
    stats.weight = weight;
    stats.delta_k = dk;
    stats.c0 = table.c0;
    stats.eta_observed = table.entries.size();
    stats.delta_star = delta_star(table);
    stats.budget_warning = table.budget_warning;
    stats.n_k = cfg.bare_parameters ? 1.0 : std::sqrt(1.0 - 2.0 * dk * table.c0 + dk * dk);
    if (!(stats.n_k > 0))
        throw std::runtime_error("mqite_term_step: normalization collapsed");

    std::vector<Layer> block;
    const int n = u.num_qubits();
    for (const auto& e : table.selected()) {
        AppliedComponent ac;
        ac.j = e.j;
        ac.re = e.re;
        ac.im = e.im;
        ac.y_re = dk * e.re / stats.n_k;
        ac.y_im = -dk * e.im / stats.n_k;
        if (ac.y_re != 0.0) {
            const PauliString pr = p_real_for(n, e.j);
            block.push_back({ac.y_re, pr});
            const GateCount g = rotation_gate_budget(pr);
            stats.gates.one_qubit += g.one_qubit;
            stats.gates.two_qubit += g.two_qubit;
        }
        if (ac.y_im != 0.0) {
            const PauliString pi = p_imag_for(n, e.j);
            block.push_back({ac.y_im, pi});
            const GateCount g = rotation_gate_budget(pi);
            stats.gates.one_qubit += g.one_qubit;
            stats.gates.two_qubit += g.two_qubit;
        }
        stats.components.push_back(ac);
    }
    stats.layers_added = block.size();
    u.prepend_block(block);
    return stats;
}

RunRecord run_mqite(const Hamiltonian& h, const MQITEConfig& cfg, const GroundInfo* reference) {
    if (cfg.delta <= 0) throw std::invalid_argument("run_mqite: delta must be positive");
    const int sweeps = static_cast<int>(std::llround(cfg.total_time / cfg.delta));
    if (sweeps < 1) throw std::invalid_argument("run_mqite: total_time shorter than one sweep");
    const int n = h.num_qubits();

    RunRecord rec;
    rec.n = n;
    rec.config = cfg;
    rec.final_circuit = Circuit(n, cfg.prep);

    GroundInfo local_ref;
    if (reference) {
        local_ref = *reference;
        rec.has_reference = true;
    } else if (n <= 12) {
        local_ref = exact_ground(h);
        rec.has_reference = true;
    }
    rec.exact_e0 = local_ref.e0;
    rec.exact_gap = local_ref.gap;

    ITEOptions ite_opt;
    ite_opt.delta = cfg.delta;
    ite_opt.total_time = cfg.total_time;
    ite_opt.prep = cfg.prep;
    ite_opt.second_order = cfg.second_order_trotter;
    ite_opt.store_states = true;
    rec.ite = run_ite(h, ite_opt);

    std::mt19937_64 rng(cfg.seed);
    Circuit& u = rec.final_circuit;

    auto rel_err = [&](double e) {
        if (!rec.has_reference || rec.exact_e0 == 0.0) return 0.0;
        return std::abs(e - rec.exact_e0) / std::abs(rec.exact_e0);
    };

    {
        const StateVector s0 = run_circuit(u);
        SweepRecord r0;
        r0.sweep = 0;
        r0.tau = 0;
        r0.energy = expectation(s0, h);
        r0.rel_error = rel_err(r0.energy);
        r0.fidelity = std::norm(inner(rec.ite.states[0], s0));
        r0.energy_variance = energy_variance(s0, h);
        rec.sweeps.push_back(std::move(r0));
    }

    for (int s = 1; s <= sweeps; ++s) {
        SweepRecord r;
        r.sweep = s;
        r.tau = s * cfg.delta;
        const std::size_t depth_before = u.depth();
        for (const auto& t : h) {
            TermStepStats stats = mqite_term_step(u, t.weight, t.op, cfg, rng);
            r.eta_observed = std::max(r.eta_observed, stats.eta_observed);
            r.delta_star_last = stats.delta_star;
            r.gates_added.one_qubit += stats.gates.one_qubit;
            r.gates_added.two_qubit += stats.gates.two_qubit;
            rec.budget_warning_any |= stats.budget_warning;
            rec.term_steps.push_back(std::move(stats));
        }
        const std::size_t added = u.depth() - depth_before;
        r.appended_layers.assign(u.layers().begin(),
                                 u.layers().begin() + static_cast<std::ptrdiff_t>(added));

        const StateVector state = run_circuit(u);
        r.energy = expectation(state, h);
        r.rel_error = rel_err(r.energy);
        r.fidelity = std::norm(inner(rec.ite.states[static_cast<std::size_t>(s)], state));
        r.energy_variance = energy_variance(state, h);
        rec.sweeps.push_back(std::move(r));
    }
    return rec;
}

double mqite_cost(const TermStepStats& step, const std::vector<std::pair<double, double>>& y,
                  bool bare) {
    if (y.size() != step.components.size())
        throw std::invalid_argument("mqite_cost: parameter count mismatch");
    const double nk = bare ? 1.0 : step.n_k;
    double f2 = 0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        const double tr = step.delta_k * step.components[k].re / nk;
        const double ti = step.delta_k * step.components[k].im / nk;
        const double dre = y[k].first - tr;
        const double dim = y[k].second + ti;
        f2 += dre * dre + dim * dim;
    }
    return f2;
}

double cost_function_check(const TermStepStats& step, bool bare, double fd_step) {
    std::vector<std::pair<double, double>> y;
    y.reserve(step.components.size());
    for (const auto& c : step.components) y.emplace_back(c.y_re, c.y_im);
    double worst = 0;
    for (std::size_t k = 0; k < y.size(); ++k) {
        for (int part = 0; part < 2; ++part) {
            auto yp = y;
            auto ym = y;
            (part == 0 ? yp[k].first : yp[k].second) += fd_step;
            (part == 0 ? ym[k].first : ym[k].second) -= fd_step;
            const double grad =
                (mqite_cost(step, yp, bare) - mqite_cost(step, ym, bare)) / (2 * fd_step);
            worst = std::max(worst, std::abs(grad));
        }
    }
    return worst;
}

}  // namespace mqite
