#include "mqite/qse.hpp"

#include <stdexcept>

namespace mqite {

namespace {

// U_tau for the snapshot: this sweep's block plus every earlier block, in
// application order (newest first), under the run's prep.
Circuit snapshot_circuit(const RunRecord& rec, int sweep) {
    Circuit c(rec.n, rec.config.prep);
    std::vector<Layer> layers;
    for (int s = sweep; s >= 1; --s) {
        const auto& block = rec.sweeps[static_cast<std::size_t>(s)].appended_layers;
        layers.insert(layers.end(), block.begin(), block.end());
    }
    for (const auto& l : layers) c.append(l.angle, l.op);
    return c;
}

}  // namespace

SubspaceProblem build_subspace(const RunRecord& record, const Hamiltonian& h, int stride) {
    if (record.sweeps.size() < 2)
        throw std::invalid_argument("build_subspace: record holds no completed sweeps");
    if (stride < 1) throw std::invalid_argument("build_subspace: stride must be >= 1");
    const int last = record.sweeps.back().sweep;

    SubspaceProblem p;
    for (int s = 1; s <= last; s += stride) p.sweeps.push_back(s);
    if (p.sweeps.empty() || p.sweeps.back() != last) p.sweeps.push_back(last);
    for (int s : p.sweeps) p.taus.push_back(record.sweeps[static_cast<std::size_t>(s)].tau);

    const auto count = static_cast<Eigen::Index>(p.sweeps.size());
    std::vector<StateVector> states;
    std::vector<StateVector> h_states;
    states.reserve(p.sweeps.size());
    for (int s : p.sweeps) {
        states.push_back(run_circuit(snapshot_circuit(record, s)));
        h_states.push_back(apply_hamiltonian(states.back(), h));
    }

    p.overlap.resize(count, count);
    p.heff.resize(count, count);
    for (Eigen::Index a = 0; a < count; ++a) {
        for (Eigen::Index b = 0; b < count; ++b) {
            p.overlap(a, b) = inner(states[static_cast<std::size_t>(a)],
                                    states[static_cast<std::size_t>(b)]);
            p.heff(a, b) = inner(states[static_cast<std::size_t>(a)],
                                 h_states[static_cast<std::size_t>(b)]);
        }
    }
    // clean roundoff asymmetry
    p.overlap = 0.5 * (p.overlap + p.overlap.adjoint()).eval();
    p.heff = 0.5 * (p.heff + p.heff.adjoint()).eval();
    return p;
}

QSEResult solve_gev(const SubspaceProblem& p, double svd_cut) {
    if (p.overlap.rows() == 0) throw std::invalid_argument("solve_gev: empty subspace");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> cs(p.overlap);
    if (cs.info() != Eigen::Success)
        throw std::runtime_error("solve_gev: overlap eigensolve failed");
    if (cs.eigenvalues().minCoeff() < -1e-10)
        throw std::runtime_error("solve_gev: overlap matrix not positive semidefinite");

    std::vector<Eigen::Index> kept;
    for (Eigen::Index k = 0; k < cs.eigenvalues().size(); ++k)
        if (cs.eigenvalues()(k) >= svd_cut) kept.push_back(k);
    if (kept.empty())
        throw std::runtime_error("solve_gev: every overlap eigenvalue fell below the cut");

    Eigen::MatrixXcd basis(p.overlap.rows(), static_cast<Eigen::Index>(kept.size()));
    for (std::size_t i = 0; i < kept.size(); ++i)
        basis.col(static_cast<Eigen::Index>(i)) =
            cs.eigenvectors().col(kept[i]) / std::sqrt(cs.eigenvalues()(kept[i]));

    Eigen::MatrixXcd reduced = basis.adjoint() * p.heff * basis;
    reduced = 0.5 * (reduced + reduced.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(reduced);
    if (hs.info() != Eigen::Success)
        throw std::runtime_error("solve_gev: reduced eigensolve failed");

    QSEResult out;
    out.energy = hs.eigenvalues()(0);
    out.coefficients = basis * hs.eigenvectors().col(0);
    out.rank = static_cast<int>(kept.size());
    return out;
}

}  // namespace mqite
