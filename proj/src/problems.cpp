#include "mqite/problems.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mqite/statevector.hpp"

namespace mqite {

MaxCutInstance maxcut(int n, int k, double j_scale, std::uint64_t seed) {
    if (k >= n) throw std::invalid_argument("maxcut: need k < n");
    if (k < 1 || n < 2) throw std::invalid_argument("maxcut: degenerate parameters");
    if ((n * k) % 2 != 0)
        throw std::invalid_argument("maxcut: n*k odd, no k-regular graph exists");

    constexpr int kShufflesPerRound = 200;
    constexpr int kRounds = 100;
    for (int round = 0; round < kRounds; ++round) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(round)));
        for (int attempt = 0; attempt < kShufflesPerRound; ++attempt) {
            std::vector<int> stubs;
            stubs.reserve(static_cast<std::size_t>(n) * k);
            for (int v = 1; v <= n; ++v)
                for (int c = 0; c < k; ++c) stubs.push_back(v);
            std::shuffle(stubs.begin(), stubs.end(), rng);

            std::set<std::pair<int, int>> edges;
            bool ok = true;
            for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
                int a = stubs[i], b = stubs[i + 1];
                if (a == b) {
                    ok = false;
                    break;
                }
                if (a > b) std::swap(a, b);
                if (!edges.insert({a, b}).second) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;

            MaxCutInstance inst;
            inst.n = n;
            inst.k = k;
            inst.seed = seed;
            inst.reseed_round = round;
            inst.hamiltonian = Hamiltonian(n);
            std::uniform_real_distribution<double> w(0.0, j_scale);
            for (const auto& [a, b] : edges) {
                const double weight = w(rng);
                inst.edges.emplace_back(a, b, weight);
                const std::uint64_t x =
                    (1ULL << (n - a)) | (1ULL << (n - b));
                inst.hamiltonian.add_term(weight, PauliString(n, x, 0));
            }
            return inst;
        }
    }
    throw std::runtime_error("maxcut: pairing rejection cap exceeded");
}

Hamiltonian tfim(int n, double j, double h_x) {
    if (n < 2) throw std::invalid_argument("tfim: need n >= 2");
    Hamiltonian h(n);
    for (int t = 1; t < n; ++t) {
        const std::uint64_t z = (1ULL << (n - t)) | (1ULL << (n - t - 1));
        h.add_term(-j, PauliString(n, 0, z));
    }
    for (int t = 1; t <= n; ++t) h.add_term(h_x, PauliString(n, 1ULL << (n - t), 0));
    return h;
}

Hamiltonian validation_hamiltonian() {
    Hamiltonian h(6);
    h.add_term(0.961, PauliString::from_label("XXYIII"));
    h.add_term(0.853, PauliString::from_label("YIYIIY"));
    h.add_term(0.137, PauliString::from_label("YIXYII"));
    h.add_term(0.980, PauliString::from_label("XIIIXY"));
    h.add_term(0.712, PauliString::from_label("YIIIYX"));
    h.add_term(0.962, PauliString::from_label("XIYYII"));
    return h;
}

Hamiltonian random_klocal(int n, int k, int n_terms, const std::string& op_set,
                          std::uint64_t seed) {
    if (k > n) throw std::invalid_argument("random_klocal: k > n");
    if (op_set.empty()) throw std::invalid_argument("random_klocal: empty op set");
    for (char c : op_set)
        if (c != 'X' && c != 'Y' && c != 'Z')
            throw std::invalid_argument("random_klocal: op set must draw from {X,Y,Z}");

    std::mt19937_64 rng(seed);
    Hamiltonian h(n);
    std::set<std::string> seen;
    std::uniform_real_distribution<double> uw(0.0, 1.0);
    int attempts = 0;
    while (static_cast<int>(seen.size()) < n_terms) {
        if (++attempts > 1000)
            throw std::runtime_error("random_klocal: exceeded 1000 draws without a fresh string");
        std::vector<int> qubits(n);
        for (int q = 0; q < n; ++q) qubits[q] = q;
        std::shuffle(qubits.begin(), qubits.end(), rng);
        std::string label(static_cast<std::size_t>(n), 'I');
        for (int i = 0; i < k; ++i)
            label[static_cast<std::size_t>(qubits[i])] = op_set[rng() % op_set.size()];
        if (!seen.insert(label).second) continue;
        h.add_term(1.0 - uw(rng), PauliString::from_label(label));  // (0, 1]
    }
    return h;
}

SectorFilter NuclearPShell::sector(double m_total) const {
    const auto ms = m_values;
    return [ms, m_total](std::uint64_t j) {
        if (std::popcount(j) != 2) return false;
        double m = 0;
        for (int q = 1; q <= 6; ++q)
            if (j >> (6 - q) & 1) m += ms[static_cast<std::size_t>(q - 1)];
        return std::abs(m - m_total) < 1e-9;
    };
}

NuclearPShell nuclear_pshell() {
    const std::string text = detail::kNuclearPShellTable;
    if (detail::fnv1a(text) != detail::kNuclearPShellFnv1a)
        throw std::runtime_error("nuclear_pshell: embedded table failed its checksum");
    std::istringstream in(text);
    NuclearPShell shell;
    shell.hamiltonian = parse_hamiltonian(in, "nuclear_pshell");
    if (shell.hamiltonian.size() != 84 || shell.hamiltonian.num_qubits() != 6)
        throw std::runtime_error("nuclear_pshell: unexpected table shape");
    // qubits 1..6: 0p1/2 (m = +1/2, -1/2) then 0p3/2 (m = +3/2 ... -3/2); the
    // unique assignment (up to M -> -M) commuting with the table.
    shell.m_values = {0.5, -0.5, 1.5, 0.5, -0.5, -1.5};
    shell.m0_start = 0b001001;  // qubits (3,6): m = +3/2, -3/2
    shell.m2_start = 0b001100;  // qubits (3,4): m = +3/2, +1/2
    return shell;
}

Hamiltonian load_hamiltonian(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_hamiltonian: cannot open " + path);
    return parse_hamiltonian(in, path);
}

void save_hamiltonian(const std::string& path, const Hamiltonian& h) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_hamiltonian: cannot open " + path);
    write_hamiltonian(out, h);
}

}  // namespace mqite
