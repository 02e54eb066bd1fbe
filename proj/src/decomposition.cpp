#include "mqite/decomposition.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mqite {

namespace {

constexpr double pi = std::numbers::pi;
using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::MatrixXcd;
using cplxd = std::complex<double>;

Matrix2cd rx(double t) {
    Matrix2cd m;
    m << std::cos(t / 2), cplxd(0, -std::sin(t / 2)), cplxd(0, -std::sin(t / 2)), std::cos(t / 2);
    return m;
}

Matrix2cd ry(double t) {
    Matrix2cd m;
    m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
    return m;
}

Matrix2cd rz(double t) {
    Matrix2cd m;
    m << std::exp(cplxd(0, -t / 2)), 0, 0, std::exp(cplxd(0, t / 2));
    return m;
}

}  // namespace

GateCount gate_count(const GateList& gl) {
    GateCount c;
    for (const auto& g : gl) {
        if (std::holds_alternative<UGate>(g))
            ++c.one_qubit;
        else
            ++c.two_qubit;
    }
    return c;
}

Eigen::Matrix2cd u_matrix(const UGate& g) {
    return rz(g.theta_z) * ry(g.theta_y) * rx(g.theta_x);
}

UGate u_from_matrix(int target, const Matrix2cd& m) {
    if ((m * m.adjoint() - Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("u_from_matrix: not unitary");
    // strip phase to SU(2), read the quaternion, extract ZYX Euler angles
    const cplxd det = m.determinant();
    const Matrix2cd v = m / std::sqrt(det);
    const double w = v(0, 0).real();
    const double z = -v(0, 0).imag();
    const double y = v(1, 0).real();
    const double x = -v(1, 0).imag();
    UGate g;
    g.target = target;
    double sp = 2 * (w * y - z * x);
    sp = std::clamp(sp, -1.0, 1.0);
    if (1.0 - std::abs(sp) < 1e-12) {
        // gimbal lock: fix theta_x = 0 and read theta_z off the lower-left entry
        g.theta_x = 0;
        g.theta_y = std::copysign(pi / 2, sp);
        const double s = std::sin(g.theta_y / 2);
        const cplxd e = v(1, 0) / s;
        g.theta_z = 2 * std::atan2(e.imag(), e.real());
    } else {
        g.theta_x = std::atan2(2 * (w * x + y * z), 1 - 2 * (x * x + y * y));
        g.theta_y = std::asin(sp);
        g.theta_z = std::atan2(2 * (w * z + x * y), 1 - 2 * (y * y + z * z));
    }
    const Matrix2cd rec = u_matrix(g);
    const cplxd align = (rec.adjoint() * m).trace();
    if ((m - (align / std::abs(align)) * rec).cwiseAbs().maxCoeff() > 1e-9)
        throw std::runtime_error("u_from_matrix: euler reconstruction failed");
    return g;
}

Matrix4cd r_gate_matrix() {
    Matrix4cd z2 = Matrix4cd::Zero(), xz = Matrix4cd::Zero();
    const double zs[2] = {1, -1};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            z2(2 * a + b, 2 * a + b) = zs[b];
            xz(2 * (1 - a) + b, 2 * a + b) = zs[b];  // X on qubit 1, Z on qubit 2
        }
    const Matrix4cd i4 = Matrix4cd::Identity();
    return 0.5 * (i4 + cplxd(0, 1) * z2) * (i4 - cplxd(0, 1) * xz);
}

GateList r_gate_gates(int a, int b) {
    // R = (Ry(pi/2) (x) I) . CZ . ((Rz(pi/2) Ry(-pi/2)) (x) I), with CZ spelled
    // as a CNOT conjugated by Ry(+/-pi/2) on the target.
    return {
        UGate{a, 0, -pi / 2, pi / 2},
        UGate{b, 0, pi / 2, 0},
        CnotGate{a, b},
        UGate{a, 0, pi / 2, 0},
        UGate{b, 0, -pi / 2, 0},
    };
}

GateList dagger(const GateList& gl) {
    GateList out;
    out.reserve(gl.size());
    for (auto it = gl.rbegin(); it != gl.rend(); ++it) {
        if (const auto* u = std::get_if<UGate>(&*it))
            out.push_back(u_from_matrix(u->target, u_matrix(*u).adjoint()));
        else if (const auto* c = std::get_if<CnotGate>(&*it))
            out.push_back(*c);
        else if (const auto* u2 = std::get_if<U2Gate>(&*it))
            out.push_back(U2Gate{u2->a, u2->b, -u2->alpha});
    }
    return out;
}

GateList decompose_rotation(const PauliString& p, double alpha) {
    if (p.is_identity())
        throw std::invalid_argument("decompose_rotation: identity string rejected");
    const int n = p.num_qubits();
    const auto support = p.support();
    const int m = static_cast<int>(support.size());

    GateList basis, basis_dag;
    for (int q : support) {
        const bool xb = p.x_mask() >> (n - q) & 1;
        const bool zb = p.z_mask() >> (n - q) & 1;
        if (xb && zb) {  // Y -> X via Rz(-pi/2)
            basis.push_back(UGate{q, 0, 0, -pi / 2});
            basis_dag.push_back(UGate{q, 0, 0, pi / 2});
        } else if (zb) {  // Z -> X via Ry(pi/2)
            basis.push_back(UGate{q, 0, pi / 2, 0});
            basis_dag.push_back(UGate{q, 0, -pi / 2, 0});
        }
    }

    GateList gl = basis;
    if (m == 1) {
        gl.push_back(UGate{support[0], -2 * alpha, 0, 0});  // Rx(-2a) = exp(i a X)
    } else {
        std::vector<GateList> ladder;
        for (int k = 0; k + 2 < m; ++k) ladder.push_back(r_gate_gates(support[k], support[k + 1]));
        for (const auto& r : ladder) gl.insert(gl.end(), r.begin(), r.end());
        gl.push_back(U2Gate{support[m - 2], support[m - 1], alpha});
        for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
            const GateList rd = dagger(*it);
            gl.insert(gl.end(), rd.begin(), rd.end());
        }
    }
    gl.insert(gl.end(), basis_dag.begin(), basis_dag.end());
    return gl;
}

namespace {

// left-multiplies the embedded gate into u (rows transform)
void apply_gate(MatrixXcd& u, const Gate& gate, int n) {
    const std::uint64_t dim = static_cast<std::uint64_t>(u.rows());
    if (const auto* g = std::get_if<UGate>(&gate)) {
        const Matrix2cd m = u_matrix(*g);
        const std::uint64_t bit = 1ULL << (n - g->target);
        for (std::uint64_t j = 0; j < dim; ++j) {
            if (j & bit) continue;
            const Eigen::RowVectorXcd r0 = u.row(static_cast<Eigen::Index>(j));
            const Eigen::RowVectorXcd r1 = u.row(static_cast<Eigen::Index>(j | bit));
            u.row(static_cast<Eigen::Index>(j)) = m(0, 0) * r0 + m(0, 1) * r1;
            u.row(static_cast<Eigen::Index>(j | bit)) = m(1, 0) * r0 + m(1, 1) * r1;
        }
    } else if (const auto* g = std::get_if<CnotGate>(&gate)) {
        const std::uint64_t cbit = 1ULL << (n - g->control);
        const std::uint64_t tbit = 1ULL << (n - g->target);
        for (std::uint64_t j = 0; j < dim; ++j)
            if ((j & cbit) && !(j & tbit))
                u.row(static_cast<Eigen::Index>(j))
                    .swap(u.row(static_cast<Eigen::Index>(j | tbit)));
    } else if (const auto* g = std::get_if<U2Gate>(&gate)) {
        const std::uint64_t mask = (1ULL << (n - g->a)) | (1ULL << (n - g->b));
        const cplxd c = std::cos(g->alpha), s = cplxd(0, std::sin(g->alpha));
        for (std::uint64_t j = 0; j < dim; ++j) {
            const std::uint64_t jp = j ^ mask;
            if (j > jp) continue;
            const Eigen::RowVectorXcd r0 = u.row(static_cast<Eigen::Index>(j));
            const Eigen::RowVectorXcd r1 = u.row(static_cast<Eigen::Index>(jp));
            u.row(static_cast<Eigen::Index>(j)) = c * r0 + s * r1;
            u.row(static_cast<Eigen::Index>(jp)) = c * r1 + s * r0;
        }
    }
}

}  // namespace

MatrixXcd build_unitary(const GateList& gl, int n) {
    if (n < 1 || n > 8)
        throw std::invalid_argument("build_unitary: n outside [1, 8]");
    const Eigen::Index dim = Eigen::Index(1) << n;
    MatrixXcd u = MatrixXcd::Identity(dim, dim);
    for (const auto& g : gl) apply_gate(u, g, n);
    return u;
}

GateCount rotation_gate_budget(const PauliString& p) {
    if (p.is_identity()) return {};
    const int n = p.num_qubits();
    const int m = p.weight();
    GateCount c;
    int basis = 0;
    for (int q : p.support())
        if (p.z_mask() >> (n - q) & 1) ++basis;  // Y and Z factors need basis changes
    c.one_qubit = 2 * static_cast<std::size_t>(basis);
    if (m == 1)
        c.one_qubit += 1;
    else
        c.two_qubit = 2 * static_cast<std::size_t>(m - 2) + 1;
    return c;
}

}  // namespace mqite
