#pragma once

#include <Eigen/Dense>
#include <vector>

#include "mqite/mqite.hpp"

namespace mqite {

struct SubspaceProblem {
    Eigen::MatrixXcd overlap;    // C_{tau,tau'}
    Eigen::MatrixXcd heff;       // H^eff_{tau,tau'}
    std::vector<double> taus;    // snapshot times
    std::vector<int> sweeps;     // snapshot sweep indices
};

// Replays the saved per-sweep circuits on |0...0> and fills both matrices.
// Snapshots are sweeps 1, 1+stride, ... plus the final sweep.
SubspaceProblem build_subspace(const RunRecord& record, const Hamiltonian& h, int stride = 1);

struct QSEResult {
    double energy = 0;
    Eigen::VectorXcd coefficients;
    int rank = 0;
};

// Projects onto overlap eigenvectors with eigenvalue >= svd_cut and solves the
// reduced ordinary eigenproblem; the lowest eigenvalue is variational.
QSEResult solve_gev(const SubspaceProblem& p, double svd_cut = 1e-8);

}  // namespace mqite
