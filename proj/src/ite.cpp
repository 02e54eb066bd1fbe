#include "mqite/ite.hpp"

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "mqite/kernels.hpp"

namespace mqite {

void apply_imaginary_term(StateVector& state, const PauliString& q, double dk) {
    if (q.num_qubits() != state.num_qubits())
        throw std::invalid_argument("apply_imaginary_term: size mismatch");
    if (!std::isfinite(dk))
        throw std::invalid_argument("apply_imaginary_term: non-finite step");
    const int ph = (q.phase_exp() + std::popcount(q.x_mask() & q.z_mask())) & 3;
    kernels::pauli_axpby(state.data(), state.size(), q.x_mask(), q.z_mask(), ph, std::cosh(dk),
                         -std::sinh(dk));
    state.normalize();
}

ITETrajectory run_ite(const Hamiltonian& h, const ITEOptions& opt) {
    if (opt.delta <= 0) throw std::invalid_argument("run_ite: delta must be positive");
    const int sweeps = static_cast<int>(std::llround(opt.total_time / opt.delta));
    if (sweeps < 1) throw std::invalid_argument("run_ite: total_time shorter than one sweep");

    ITETrajectory traj;
    traj.sweeps = sweeps;
    StateVector psi = init_state(h.num_qubits(), opt.prep);

    auto record = [&](int sweep) {
        traj.tau.push_back(sweep * opt.delta);
        traj.energy.push_back(expectation(psi, h));
        if (opt.store_states) traj.states.push_back(psi);
    };
    record(0);

    for (int s = 1; s <= sweeps; ++s) {
        if (!opt.second_order) {
            for (const auto& t : h) {
                apply_imaginary_term(psi, t.op, opt.delta * t.weight);
                ++traj.term_applications;
            }
        } else {
            for (const auto& t : h) {
                apply_imaginary_term(psi, t.op, 0.5 * opt.delta * t.weight);
                ++traj.term_applications;
            }
            for (auto it = h.terms().rbegin(); it != h.terms().rend(); ++it) {
                apply_imaginary_term(psi, it->op, 0.5 * opt.delta * it->weight);
                ++traj.term_applications;
            }
        }
        record(s);
    }
    return traj;
}

namespace {

std::vector<std::uint64_t> sector_indices(int n, const SectorFilter& sector) {
    std::vector<std::uint64_t> idx;
    const std::uint64_t dim = 1ULL << n;
    for (std::uint64_t j = 0; j < dim; ++j)
        if (!sector || sector(j)) idx.push_back(j);
    return idx;
}

Eigen::MatrixXcd sector_matrix(const Hamiltonian& h, const std::vector<std::uint64_t>& idx) {
    std::unordered_map<std::uint64_t, Eigen::Index> pos;
    pos.reserve(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k)
        pos[idx[k]] = static_cast<Eigen::Index>(k);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(idx.size()),
                                                static_cast<Eigen::Index>(idx.size()));
    for (std::size_t col = 0; col < idx.size(); ++col) {
        for (const auto& t : h) {
            auto [jp, c] = t.op.apply_to_basis(idx[col]);
            const auto it = pos.find(jp);
            if (it != pos.end()) m(it->second, static_cast<Eigen::Index>(col)) += t.weight * c;
        }
    }
    return m;
}

}  // namespace

GroundInfo exact_ground(const Hamiltonian& h, const SectorFilter& sector) {
    const int n = h.num_qubits();
    if (n > 12) throw std::invalid_argument("exact_ground: n > 12");
    const auto idx = sector_indices(n, sector);
    if (idx.empty()) throw std::invalid_argument("exact_ground: empty sector");

    const Eigen::MatrixXcd m = sector_matrix(h, idx);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("exact_ground: eigensolver failed");

    GroundInfo g{solver.eigenvalues()(0),
                 idx.size() > 1 ? solver.eigenvalues()(1) - solver.eigenvalues()(0) : 0.0,
                 StateVector(n)};
    g.vector[0] = 0.0;
    const auto vec = solver.eigenvectors().col(0);
    for (std::size_t k = 0; k < idx.size(); ++k) g.vector[idx[k]] = vec(static_cast<Eigen::Index>(k));
    return g;
}

double ground_projector_overlap(const Hamiltonian& h, const StateVector& psi,
                                double degeneracy_tol, const SectorFilter& sector) {
    const int n = h.num_qubits();
    if (n > 12) throw std::invalid_argument("ground_projector_overlap: n > 12");
    const auto idx = sector_indices(n, sector);
    const Eigen::MatrixXcd m = sector_matrix(h, idx);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    const double e0 = solver.eigenvalues()(0);
    double total = 0.0;
    for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
        if (solver.eigenvalues()(k) > e0 + degeneracy_tol) break;
        std::complex<double> ov = 0.0;
        for (std::size_t r = 0; r < idx.size(); ++r)
            ov += std::conj(solver.eigenvectors()(static_cast<Eigen::Index>(r), k)) * psi[idx[r]];
        total += std::norm(ov);
    }
    return total;
}

}  // namespace mqite
