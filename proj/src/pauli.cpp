#include "mqite/pauli.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mqite {

namespace {

constexpr int kMaxQubits = 63;

std::uint64_t mask_of(int n) {
    return n == 64 ? ~0ULL : (1ULL << n) - 1;
}

std::complex<double> i_pow(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

int parity(std::uint64_t v) {
    return std::popcount(v) & 1;
}

}  // namespace

PauliString::PauliString(int n, std::uint64_t x_mask, std::uint64_t z_mask, int phase_exp)
    : n_(n), x_(x_mask), z_(z_mask), phase_(phase_exp & 3) {
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("pauli: qubit count " + std::to_string(n) + " out of range");
    if ((x_ | z_) & ~mask_of(n))
        throw std::invalid_argument("pauli: mask exceeds " + std::to_string(n) + " qubits");
}

PauliString PauliString::from_label(std::string_view label) {
    if (label.empty())
        throw std::invalid_argument("pauli label: empty");
    const int n = static_cast<int>(label.size());
    if (n > kMaxQubits)
        throw std::invalid_argument("pauli label: longer than " + std::to_string(kMaxQubits));
    std::uint64_t x = 0, z = 0;
    for (int q = 1; q <= n; ++q) {
        const std::uint64_t bit = 1ULL << (n - q);
        switch (label[q - 1]) {
            case 'I': break;
            case 'X': x |= bit; break;
            case 'Y': x |= bit; z |= bit; break;
            case 'Z': z |= bit; break;
            default:
                throw std::invalid_argument("pauli label: invalid character '" +
                                            std::string(1, label[q - 1]) + "' at position " +
                                            std::to_string(q));
        }
    }
    return PauliString(n, x, z, 0);
}

int PauliString::weight() const {
    return std::popcount(x_ | z_);
}

std::vector<int> PauliString::support() const {
    std::vector<int> qs;
    for (int q = 1; q <= n_; ++q)
        if ((x_ | z_) >> (n_ - q) & 1) qs.push_back(q);
    return qs;
}

std::string PauliString::label() const {
    std::string s(static_cast<std::size_t>(n_), 'I');
    for (int q = 1; q <= n_; ++q) {
        const bool xb = x_ >> (n_ - q) & 1;
        const bool zb = z_ >> (n_ - q) & 1;
        if (xb && zb) s[q - 1] = 'Y';
        else if (xb) s[q - 1] = 'X';
        else if (zb) s[q - 1] = 'Z';
    }
    return s;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
    if (n_ != rhs.n_)
        throw std::invalid_argument("pauli multiply: size mismatch (" + std::to_string(n_) +
                                    " vs " + std::to_string(rhs.n_) + ")");
    const std::uint64_t xc = x_ ^ rhs.x_;
    const std::uint64_t zc = z_ ^ rhs.z_;
    // Write each factor as i^e i^{|x&z|} X^x Z^z and commute Z^za past X^xb.
    int e = phase_ + rhs.phase_;
    e += std::popcount(x_ & z_) + std::popcount(rhs.x_ & rhs.z_);
    e += 2 * std::popcount(z_ & rhs.x_);
    e -= std::popcount(xc & zc);
    return PauliString(n_, xc, zc, ((e % 4) + 4) & 3);
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("pauli commutes: size mismatch");
    return (parity(x_ & other.z_) ^ parity(z_ & other.x_)) == 0;
}

int PauliString::basis_phase_pow(std::uint64_t j) const {
    return (phase_ + std::popcount(x_ & z_) + 2 * parity(z_ & j)) & 3;
}

std::pair<std::uint64_t, std::complex<double>> PauliString::apply_to_basis(std::uint64_t j) const {
    if (j & ~mask_of(n_))
        throw std::invalid_argument("pauli apply_to_basis: basis index out of range");
    return {j ^ x_, i_pow(basis_phase_pow(j))};
}

std::ostream& operator<<(std::ostream& os, const PauliString& p) {
    return os << p.label();
}

PauliString p_imag_for(int n, std::uint64_t j) {
    if (j == 0)
        throw std::invalid_argument("p_imag_for: j = 0 is excluded");
    if (j & ~mask_of(n))
        throw std::invalid_argument("p_imag_for: j exceeds " + std::to_string(n) + " bits");
    return PauliString(n, j, 0, 0);
}

PauliString p_real_for(int n, std::uint64_t j) {
    if (j == 0)
        throw std::invalid_argument("p_real_for: j = 0 is excluded");
    if (j & ~mask_of(n))
        throw std::invalid_argument("p_real_for: j exceeds " + std::to_string(n) + " bits");
    // Lowest qubit index = most significant set bit.
    const std::uint64_t y_bit = 1ULL << (63 - std::countl_zero(j));
    return PauliString(n, j, y_bit, 0);
}

Hamiltonian::Hamiltonian(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits)
        throw std::invalid_argument("hamiltonian: qubit count out of range");
}

void Hamiltonian::add_term(double weight, PauliString op, bool allow_identity) {
    if (op.num_qubits() != n_)
        throw std::invalid_argument("hamiltonian: term acts on " +
                                    std::to_string(op.num_qubits()) + " qubits, expected " +
                                    std::to_string(n_));
    if (op.is_identity() && !allow_identity)
        throw std::invalid_argument("hamiltonian: identity term requires allow_identity");
    terms_.push_back({weight, std::move(op)});
}

Hamiltonian parse_hamiltonian(std::istream& in, std::string_view source_name) {
    std::vector<std::pair<double, PauliString>> parsed;
    std::string line;
    int lineno = 0;
    int n = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error(std::string(source_name) + ":" + std::to_string(lineno) + ": " +
                                 what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string wtok, label, extra;
        if (!(ls >> wtok)) continue;  // blank
        if (!(ls >> label)) fail("expected 'weight label'");
        if (ls >> extra) fail("trailing token '" + extra + "'");
        double w = 0;
        try {
            std::size_t used = 0;
            w = std::stod(wtok, &used);
            if (used != wtok.size()) throw std::invalid_argument(wtok);
        } catch (const std::exception&) {
            fail("malformed weight '" + wtok + "'");
        }
        PauliString p;
        try {
            p = PauliString::from_label(label);
        } catch (const std::exception& e) {
            fail(e.what());
        }
        if (n == 0) n = p.num_qubits();
        if (p.num_qubits() != n)
            fail("label width " + std::to_string(p.num_qubits()) + " differs from first label (" +
                 std::to_string(n) + ")");
        parsed.emplace_back(w, std::move(p));
    }
    if (parsed.empty())
        throw std::runtime_error(std::string(source_name) + ": no Hamiltonian terms found");
    Hamiltonian h(n);
    for (auto& [w, p] : parsed) h.add_term(w, std::move(p));
    return h;
}

void write_hamiltonian(std::ostream& out, const Hamiltonian& h) {
    out.precision(17);
    for (const auto& t : h) out << t.weight << ' ' << t.op.label() << '\n';
}

}  // namespace mqite
