#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "mqite/ite.hpp"
#include "mqite/pauli.hpp"

namespace mqite {

struct MaxCutInstance {
    int n = 0;
    int k = 0;
    // (t, q, weight) with 1-based vertices, t < q, lexicographic order
    std::vector<std::tuple<int, int, double>> edges;
    Hamiltonian hamiltonian{1};
    std::uint64_t seed = 0;
    // pairing round that produced a simple k-regular graph (0 unless the
    // rejection cap forced an internal reseed)
    int reseed_round = 0;
};

// Random k-regular graph via stub pairing with rejection of loops and
// multi-edges; one X_t X_q term per edge, weights uniform on [0, j_scale].
MaxCutInstance maxcut(int n, int k, double j_scale, std::uint64_t seed);

// Open chain: -j sum Z_t Z_{t+1} + h_x sum X_t.
Hamiltonian tfim(int n, double j, double h_x);

// The fixed 6-qubit, 6-term 3-local {X,Y} benchmark (weights in units of J).
Hamiltonian validation_hamiltonian();

// n_terms distinct strings with exactly k non-identity factors drawn from
// op_set at random distinct positions; weights uniform on (0, 1].
Hamiltonian random_klocal(int n, int k, int n_terms, const std::string& op_set,
                          std::uint64_t seed);

struct NuclearPShell {
    Hamiltonian hamiltonian{6};  // 84 Jordan-Wigner terms, weights in MeV
    // z-projection carried by each qubit's single-particle state
    std::array<double, 6> m_values{};
    // two-neutron initial occupations (basis bitstrings)
    std::uint64_t m0_start = 0;  // m = +3/2, -3/2
    std::uint64_t m2_start = 0;  // m = +3/2, +1/2
    // fixed-M two-particle sector
    SectorFilter sector(double m_total) const;
};

// Bundled two-neutron 0p-shell Hamiltonian (Cohen-Kurath interaction).
// Throws if the embedded table fails its checksum.
NuclearPShell nuclear_pshell();

Hamiltonian load_hamiltonian(const std::string& path);
void save_hamiltonian(const std::string& path, const Hamiltonian& h);

namespace detail {
// embedded copy of data/nuclear_pshell.txt
extern const char* const kNuclearPShellTable;
extern const std::uint64_t kNuclearPShellFnv1a;
std::uint64_t fnv1a(std::string_view text);
}  // namespace detail

}  // namespace mqite
