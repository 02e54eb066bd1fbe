#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dense_oracle.hpp"
#include "mqite/measurement.hpp"

using namespace mqite;

namespace {

Circuit small_circuit(int n, int layers, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(-0.6, 0.6);
    Circuit c(n);
    for (int l = 0; l < layers; ++l) c.append(ang(rng), oracle::random_pauli(n, rng));
    return c;
}

// low-weight layers keep the sandwich state sparse enough that a
// zero-amplitude reference string survives
Circuit sparse_circuit(int n, int layers, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ang(-0.5, 0.5);
    Circuit c(n);
    for (int l = 0; l < layers; ++l) {
        const int q1 = 1 + static_cast<int>(rng() % n);
        int q2 = 1 + static_cast<int>(rng() % n);
        if (q2 == q1) q2 = 1 + (q1 % n);
        std::string label(static_cast<std::size_t>(n), 'I');
        label[q1 - 1] = "XYZ"[rng() % 3];
        label[q2 - 1] = "XYZ"[rng() % 3];
        c.append(ang(rng), mqite::PauliString::from_label(label));
    }
    return c;
}

}  // namespace

TEST_CASE("amplitudes: identity circuit cases") {
    std::mt19937_64 rng(71);
    const int n = 4;
    Circuit id(n);
    auto ax = estimate_amplitudes(id, PauliString::from_label("XIII"), 100, 2,
                                  ReadoutMode::exact, rng);
    REQUIRE(ax.size() == 1);
    CHECK(ax.at(0b1000) == doctest::Approx(1.0));

    auto az = estimate_amplitudes(id, PauliString::from_label("ZIII"), 100, 2,
                                  ReadoutMode::exact, rng);
    REQUIRE(az.size() == 1);
    CHECK(az.at(0) == doctest::Approx(1.0));

    // shot mode concentrates all counts on the single component
    auto as = estimate_amplitudes(id, PauliString::from_label("XIII"), 500, 2, ReadoutMode::shot,
                                  rng);
    REQUIRE(as.size() == 1);
    CHECK(as.at(0b1000) == doctest::Approx(1.0));
}

TEST_CASE("exact amplitudes round and drop zeros") {
    std::mt19937_64 rng(73);
    const int n = 3;
    auto c = small_circuit(n, 6, rng);
    auto q = PauliString::from_label("XZY");
    auto amps = estimate_amplitudes(c, q, 1, 2, ReadoutMode::exact, rng);
    const StateVector psi = sandwich_state(c, q);
    for (const auto& [j, a] : amps) {
        CHECK(a == doctest::Approx(std::round(std::abs(psi[j]) * 100) / 100));
        CHECK(a >= 0.005);
    }
    for (std::size_t j = 0; j < psi.size(); ++j)
        if (std::abs(psi[j]) >= 0.005) CHECK(amps.count(j) == 1);
}

TEST_CASE("select_dominant ordering, cap and zero exclusion") {
    std::map<std::uint64_t, double> amps{{0b01, 0.9}, {0b10, 0.1}};
    CHECK(select_dominant(amps, 10) == std::vector<std::uint64_t>{0b01, 0b10});

    std::map<std::uint64_t, double> many;
    for (std::uint64_t j = 1; j <= 150; ++j) many[j] = 1.0 / static_cast<double>(j);
    auto top = select_dominant(many, 100);
    REQUIRE(top.size() == 100);
    CHECK(top.front() == 1);
    CHECK(top.back() == 100);

    std::map<std::uint64_t, double> ties{{5, 0.5}, {3, 0.5}, {9, 0.5}, {0, 0.9}};
    CHECK(select_dominant(ties, 2) == std::vector<std::uint64_t>{3, 5});
}

TEST_CASE("choose_j_ref") {
    CHECK(choose_j_ref({0b001}, 3) == 0b010);
    CHECK(choose_j_ref({0b001, 0b010}, 3) == 0b011);
    std::set<std::uint64_t> nearly;
    for (std::uint64_t j = 0; j < 7; ++j) nearly.insert(j);
    CHECK(choose_j_ref(nearly, 3) == 7);
    nearly.insert(7);
    CHECK_THROWS_AS(choose_j_ref(nearly, 3), std::runtime_error);
}

TEST_CASE("t_gate mapping") {
    auto [y1, p1] = t_gate(0b00, 0b01, 2);
    CHECK(y1 == doctest::Approx(std::acos(-1.0) / 4));
    CHECK(p1.label() == "IX");
    auto [y2, p2] = t_gate(0b01, 0b10, 2);
    CHECK(p2.label() == "XX");
    CHECK_THROWS_AS(t_gate(3, 3, 2), std::invalid_argument);

    // exp(i pi/4 P)|t> = (|t> + i|s>)/sqrt(2)
    auto psi = init_state(2, Prep::basis(0b01));
    apply_pauli_rotation(psi, p2, y2);
    CHECK(std::abs(psi[0b01] - oracle::cplx(1 / std::sqrt(2.0), 0)) < 1e-14);
    CHECK(std::abs(psi[0b10] - oracle::cplx(0, 1 / std::sqrt(2.0))) < 1e-14);
}

TEST_CASE("phase parts: known phases on trivial circuits") {
    std::mt19937_64 rng(75);
    const int n = 3;
    Circuit id(n);
    const double gamma = 1e-2;

    // c_j = 1 for Q = X on qubit 1
    auto q = PauliString::from_label("XII");
    auto parts = estimate_phase_parts(id, q, 0b100, choose_j_ref({0b100}, n), gamma, 2,
                                      ReadoutMode::exact, 1.0, 1, rng);
    CHECK(std::abs(parts.re - 1.0) <= 10 * gamma);
    CHECK(std::abs(parts.im - 0.0) <= 10 * gamma);

    // c_j = i for Q = Y on qubit 1
    auto qy = PauliString::from_label("YII");
    auto py = estimate_phase_parts(id, qy, 0b100, choose_j_ref({0b100}, n), gamma, 2,
                                   ReadoutMode::exact, 1.0, 1, rng);
    CHECK(std::abs(py.re - 0.0) <= 10 * gamma);
    CHECK(std::abs(py.im - 1.0) <= 10 * gamma);
}

TEST_CASE("phase parts recover statevector components on generic circuits") {
    std::mt19937_64 rng(77);
    for (int rep = 0; rep < 8; ++rep) {
        const int n = 3;
        auto c = small_circuit(n, 5, rng);
        auto q = oracle::random_pauli(n, rng);
        const int epsilon = 4;
        const double gamma = std::pow(10.0, -epsilon);
        const StateVector psi = sandwich_state(c, q);

        std::set<std::uint64_t> observed;
        for (std::size_t j = 0; j < psi.size(); ++j)
            if (std::abs(psi[j]) > 0.5 * gamma) observed.insert(j);
        if (observed.size() >= psi.size() - 1) continue;  // no free reference
        const std::uint64_t j_ref = choose_j_ref(observed, n);
        CHECK(std::abs(psi[j_ref]) <= std::pow(10.0, -epsilon));

        for (std::uint64_t j : observed) {
            if (j == 0 || j == j_ref) continue;
            const double amp = std::abs(psi[j]);
            if (amp < 10 * gamma) continue;
            auto parts = estimate_phase_parts(c, q, j, j_ref, gamma, epsilon, ReadoutMode::exact,
                                              amp, 1, rng);
            CHECK(std::abs(parts.re - psi[j].real()) <= 10 * gamma);
            CHECK(std::abs(parts.im - psi[j].imag()) <= 10 * gamma);
            CHECK(std::abs(std::hypot(parts.re, parts.im) - amp) <=
                  std::pow(10.0, -epsilon + 1));
        }
    }
}

TEST_CASE("relative phase") {
    std::mt19937_64 rng(79);
    const int n = 3;

    // equal-phase components -> 0
    Circuit id(n);
    // build a state with two equal-phase components via one rotation from |000>
    // U = exp(i y XII) gives c on 000 and 100 for Q = ZII; use a generic check instead
    for (int rep = 0; rep < 6; ++rep) {
        auto c = small_circuit(n, 5, rng);
        auto q = oracle::random_pauli(n, rng);
        const StateVector psi = sandwich_state(c, q);
        std::map<std::uint64_t, double> amps;
        for (std::size_t j = 0; j < psi.size(); ++j)
            if (std::abs(psi[j]) > 0.05) amps[j] = std::abs(psi[j]);
        if (amps.size() < 2) continue;
        auto it = amps.begin();
        const std::uint64_t j1 = it->first;
        const std::uint64_t j2 = std::next(it)->first;
        const double got =
            relative_phase(c, q, j1, j2, amps, ReadoutMode::exact, 6, 1, rng);
        const double want = std::arg(psi[j1]) - std::arg(psi[j2]);
        CHECK(std::abs(std::sin(got) - std::sin(want)) < 1e-9);
    }

    // c2 = i c1 with equal amplitudes -> -pi/2 under the sine convention
    // state (|001> + i|010>)/sqrt(2) produced by T on a basis state
    Circuit tprep(n);
    tprep.append(std::acos(-1.0) / 2, PauliString(n, 0b001, 0));  // |000> -> i|001>
    tprep.append(std::acos(-1.0) / 4, PauliString(n, 0b011, 0));  // -> i(|001> + i|010>)/sqrt2
    auto qz = PauliString::from_label("III");
    // use identity-like Q via a Z string that leaves both components' amps equal
    std::map<std::uint64_t, double> amps{{0b001, 1 / std::sqrt(2.0)}, {0b010, 1 / std::sqrt(2.0)}};
    // sandwich_state(tprep, Z..) would conjugate away the circuit; check the raw formula instead:
    // T_{j1 j2} on the prepared state, m = |<j1|.>|^2
    auto psi = run_circuit(tprep);
    auto [ty, tp] = t_gate(0b001, 0b010, n);
    apply_pauli_rotation(psi, tp, ty);
    const double m = std::norm(psi[0b001]);
    const double s = (2 * m - 0.5 - 0.5) / (2 * 0.5);
    CHECK(s == doctest::Approx(-1.0).epsilon(1e-9));

    CHECK_THROWS_AS(relative_phase(Circuit(n), PauliString::from_label("XII"), 0b100, 0b010,
                                   std::map<std::uint64_t, double>{{0b100, 1.0}, {0b010, 0.0}},
                                   ReadoutMode::exact, 2, 1, rng),
                    std::runtime_error);
}

TEST_CASE("component table assembly") {
    std::mt19937_64 rng(81);
    const int n = 5;
    auto c = sparse_circuit(n, 6, rng);
    auto q = oracle::random_pauli(n, rng);

    EstimationSettings s;
    s.chi = 1000;
    s.epsilon = 3;
    s.eta_cap = 6;
    s.mode = ReadoutMode::exact;
    auto table = build_component_table(c, q, s, rng);

    CHECK(table.entries.size() <= 6);
    for (std::size_t k = 1; k < table.entries.size(); ++k) {
        const auto& a = table.entries[k - 1];
        const auto& b = table.entries[k];
        CHECK((a.amp > b.amp || (a.amp == b.amp && a.j < b.j)));
    }
    const StateVector psi = sandwich_state(c, q);
    CHECK(table.c0 == doctest::Approx(psi[0].real()).epsilon(1e-2));
    for (const auto& e : table.entries) {
        CHECK(e.amp >= 0.0005);
        CHECK(std::abs(std::hypot(e.re, e.im) - e.amp) <= std::pow(10.0, -s.epsilon + 1));
        if (e.j != 0) {
            CHECK(std::abs(e.re - psi[e.j].real()) < 1e-3);
            CHECK(std::abs(e.im - psi[e.j].imag()) < 1e-3);
        }
    }
    auto sel = table.selected();
    for (const auto& e : sel) CHECK(e.j != 0);

    // phases routed through the ancilla circuits agree with direct readout
    EstimationSettings s2 = s;
    s2.phases_via_circuits = true;
    auto table2 = build_component_table(c, q, s2, rng);
    REQUIRE(table2.entries.size() == table.entries.size());
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
        CHECK(table2.entries[k].j == table.entries[k].j);
        CHECK(std::abs(table2.entries[k].re - table.entries[k].re) < 2e-3);
        CHECK(std::abs(table2.entries[k].im - table.entries[k].im) < 2e-3);
    }

    // shot-mode budget warning fires when chi is far below eta 10^(2 eps)
    EstimationSettings s3 = s;
    s3.mode = ReadoutMode::shot;
    s3.chi = 100;
    auto table3 = build_component_table(c, q, s3, rng);
    CHECK(table3.budget_warning);
}

TEST_CASE("precision law: vector error tracks sqrt(eta/chi)") {
    // uniform state over eta basis strings; RMS over seeds of the l2 amplitude
    // error should sit within a factor 3 of 10^-eps = sqrt(eta/chi)
    for (const auto& [chi, eta] : std::vector<std::pair<std::uint64_t, int>>{
             {400, 4}, {1600, 4}, {1000, 8}}) {
        const int n = 4;
        StateVector psi(n);
        psi[0] = 0;
        for (int k = 0; k < eta; ++k) psi[k] = 1.0 / std::sqrt(static_cast<double>(eta));
        double sq = 0;
        const int seeds = 50;
        for (int sd = 0; sd < seeds; ++sd) {
            std::mt19937_64 rng(1000 + sd);
            auto counts = sample(psi, chi, rng);
            double err2 = 0;
            for (int k = 0; k < eta; ++k) {
                const double est =
                    counts.count(k)
                        ? std::sqrt(static_cast<double>(counts[k]) / static_cast<double>(chi))
                        : 0.0;
                const double diff = est - 1.0 / std::sqrt(static_cast<double>(eta));
                err2 += diff * diff;
            }
            sq += err2;
        }
        const double rms = std::sqrt(sq / seeds);
        const double predicted = std::sqrt(static_cast<double>(eta) / static_cast<double>(chi));
        CHECK(rms > predicted / 3.0);
        CHECK(rms < predicted * 3.0);
    }
}
