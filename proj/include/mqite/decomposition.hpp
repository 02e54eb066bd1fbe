#pragma once

#include <Eigen/Dense>
#include <variant>
#include <vector>

#include "mqite/pauli.hpp"

namespace mqite {

// Elementary gates. UGate applies Rz(theta_z) * Ry(theta_y) * Rx(theta_x)
// (Rx first) on its target; U2Gate applies exp(i alpha X_a X_b). Qubits are
// 1-based, matching PauliString labels.
struct UGate {
    int target = 1;
    double theta_x = 0, theta_y = 0, theta_z = 0;
};
struct CnotGate {
    int control = 1, target = 2;
};
struct U2Gate {
    int a = 1, b = 2;
    double alpha = 0;
};
using Gate = std::variant<UGate, CnotGate, U2Gate>;
using GateList = std::vector<Gate>;

struct GateCount {
    std::size_t one_qubit = 0;
    std::size_t two_qubit = 0;
};

GateCount gate_count(const GateList& gl);

Eigen::Matrix2cd u_matrix(const UGate& g);
// ZYX Euler extraction, exact up to global phase; throws if m is not unitary.
UGate u_from_matrix(int target, const Eigen::Matrix2cd& m);

// R = (1/2)(I + i Z_2)(I - i X_1 Z_2) on a qubit pair (first qubit = more
// significant). Satisfies R (X (x) X) R^dag = I (x) X, the support-contraction
// step of the rotation ladder.
Eigen::Matrix4cd r_gate_matrix();
// R on qubits (a, b) as 4 u gates and one CNOT.
GateList r_gate_gates(int a, int b);

GateList dagger(const GateList& gl);

// exp(i alpha P) over basis changes, an R ladder contracting the support in
// ascending qubit order, and a final U2 core. Rejects the identity string.
GateList decompose_rotation(const PauliString& p, double alpha);

// Dense product of the embedded gates in application order; n <= 8.
Eigen::MatrixXcd build_unitary(const GateList& gl, int n);

// Ladder accounting with R and U2 as single two-qubit gates; this is the
// count the 4*eta*n budget bounds. The two-qubit column equals gate_count of
// the expanded list.
GateCount rotation_gate_budget(const PauliString& p);

}  // namespace mqite
