#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "dense_oracle.hpp"
#include "mqite/pauli.hpp"

using mqite::Hamiltonian;
using mqite::PauliString;

TEST_CASE("label parsing and masks") {
    auto p = PauliString::from_label("XIZ");
    CHECK(p.num_qubits() == 3);
    CHECK(p.x_mask() == 0b100);
    CHECK(p.z_mask() == 0b001);
    CHECK(p.phase_exp() == 0);
    CHECK(p.label() == "XIZ");

    auto q = PauliString::from_label("YXYZZX");
    // Y at qubits 1 and 3 sets both masks there
    CHECK((q.x_mask() >> 5 & 1) == 1);
    CHECK((q.z_mask() >> 5 & 1) == 1);
    CHECK((q.x_mask() >> 3 & 1) == 1);
    CHECK((q.z_mask() >> 3 & 1) == 1);
    CHECK(q.x_mask() == 0b111001);
    CHECK(q.z_mask() == 0b101110);
    CHECK(q.label() == "YXYZZX");

    CHECK_THROWS_WITH_AS(PauliString::from_label("AZ"),
                         doctest::Contains("position 1"), std::invalid_argument);
    CHECK_THROWS_AS(PauliString::from_label(""), std::invalid_argument);
}

TEST_CASE("label round trip") {
    std::mt19937_64 rng(11);
    for (int n : {1, 2, 5, 8, 13}) {
        for (int rep = 0; rep < 50; ++rep) {
            auto p = oracle::random_pauli(n, rng, true);
            CHECK(PauliString::from_label(p.label()) == p);
        }
    }
}

TEST_CASE("single qubit products") {
    auto X = PauliString::from_label("X");
    auto Y = PauliString::from_label("Y");
    auto Z = PauliString::from_label("Z");
    auto XY = X * Y;
    CHECK(XY.label() == "Z");
    CHECK(XY.phase_exp() == 1);  // XY = iZ
    auto XX = X * X;
    CHECK(XX.is_identity());
    CHECK(XX.phase_exp() == 0);
    auto YX = Y * X;
    CHECK(YX.label() == "Z");
    CHECK(YX.phase_exp() == 3);  // YX = -iZ
    CHECK((Z * Y).label() == "X");
}

TEST_CASE("products against dense oracle") {
    auto a = PauliString::from_label("XZ");
    auto b = PauliString::from_label("ZX");
    CHECK(oracle::phase_dist(oracle::dense(a) * oracle::dense(b), oracle::dense(a * b)) < 1e-14);
    // exact equality including phase
    CHECK((oracle::dense(a) * oracle::dense(b) - oracle::dense(a * b)).cwiseAbs().maxCoeff() <
          1e-14);

    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 5);
        auto p = oracle::random_pauli(n, rng, true);
        auto q = oracle::random_pauli(n, rng, true);
        CHECK((oracle::dense(p) * oracle::dense(q) - oracle::dense(p * q)).cwiseAbs().maxCoeff() <
              1e-13);
    }
}

TEST_CASE("multiply is associative and self-inverse") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 8);
        auto a = oracle::random_pauli(n, rng, true);
        auto b = oracle::random_pauli(n, rng, true);
        auto c = oracle::random_pauli(n, rng, true);
        CHECK((a * b) * c == a * (b * c));
        auto sq = a * a;
        CHECK(sq.is_identity());
        CHECK(sq.phase_exp() == 0);
    }
    CHECK_THROWS_AS(PauliString::from_label("XX") * PauliString::from_label("X"),
                    std::invalid_argument);
}

TEST_CASE("commutation") {
    CHECK_FALSE(PauliString::from_label("X").commutes_with(PauliString::from_label("Z")));
    CHECK(PauliString::from_label("XI").commutes_with(PauliString::from_label("IZ")));

    // exhaustive n <= 4 against the dense commutator
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t count = 1ULL << (2 * n);
        for (std::uint64_t ia = 0; ia < count; ia += 7) {
            for (std::uint64_t ib = 0; ib < count; ib += 5) {
                PauliString a(n, ia & ((1ULL << n) - 1), ia >> n);
                PauliString b(n, ib & ((1ULL << n) - 1), ib >> n);
                auto da = oracle::dense(a);
                auto db = oracle::dense(b);
                const bool dense_commutes = (da * db - db * da).cwiseAbs().maxCoeff() < 1e-12;
                CHECK(a.commutes_with(b) == dense_commutes);
            }
        }
    }

    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        auto a = oracle::random_pauli(8, rng, true);
        auto b = oracle::random_pauli(8, rng, true);
        auto da = oracle::dense(a);
        auto db = oracle::dense(b);
        const bool dense_commutes = (da * db - db * da).cwiseAbs().maxCoeff() < 1e-12;
        CHECK(a.commutes_with(b) == dense_commutes);
    }
}

TEST_CASE("apply_to_basis") {
    auto [j1, c1] = PauliString::from_label("Z").apply_to_basis(0);
    CHECK(j1 == 0);
    CHECK(c1 == oracle::cplx(1, 0));
    auto [j2, c2] = PauliString::from_label("Y").apply_to_basis(1);
    CHECK(j2 == 0);
    CHECK(c2 == oracle::cplx(0, -1));

    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 100; ++rep) {
        const int n = 6;
        auto p = oracle::random_pauli(n, rng, true);
        const std::uint64_t j = rng() & 0x3f;
        auto [jp, c] = p.apply_to_basis(j);
        oracle::Vec in = oracle::Vec::Zero(64);
        in[static_cast<Eigen::Index>(j)] = 1.0;
        oracle::Vec out = oracle::dense(p) * in;
        for (Eigen::Index k = 0; k < 64; ++k) {
            const oracle::cplx want =
                (static_cast<std::uint64_t>(k) == jp) ? c : oracle::cplx(0, 0);
            CHECK(std::abs(out[k] - want) == 0.0);  // exact complex equality
        }
    }
}

TEST_CASE("bitstring generator strings") {
    CHECK(mqite::p_imag_for(3, 0b100).label() == "XII");
    CHECK(mqite::p_imag_for(3, 0b110).label() == "XXI");
    CHECK(mqite::p_real_for(3, 0b100).label() == "YII");
    CHECK(mqite::p_real_for(3, 0b110).label() == "YXI");
    CHECK_THROWS_AS(mqite::p_imag_for(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(mqite::p_real_for(3, 0), std::invalid_argument);

    auto [j, c] = mqite::p_imag_for(3, 0b110).apply_to_basis(0b110);
    CHECK(j == 0);
    CHECK(c == oracle::cplx(1, 0));

    // exhaustive n <= 6: P_i|0> = |j>, P_r|0> = i|j>
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t j = 1; j < (1ULL << n); ++j) {
            auto [ji, ci] = mqite::p_imag_for(n, j).apply_to_basis(0);
            CHECK(ji == j);
            CHECK(ci == oracle::cplx(1, 0));
            auto [jr, cr] = mqite::p_real_for(n, j).apply_to_basis(0);
            CHECK(jr == j);
            CHECK(cr == oracle::cplx(0, 1));
        }
    }
}

TEST_CASE("hamiltonian container") {
    Hamiltonian h(2);
    h.add_term(0.5, PauliString::from_label("XX"));
    h.add_term(-1.0, PauliString::from_label("ZI"));
    CHECK(h.size() == 2);
    CHECK(h.term(0).op.label() == "XX");
    CHECK_THROWS_AS(h.add_term(1.0, PauliString::from_label("X")), std::invalid_argument);
    CHECK_THROWS_AS(h.add_term(1.0, PauliString::from_label("II")), std::invalid_argument);
    h.add_term(2.0, PauliString::from_label("II"), true);
    CHECK(h.size() == 3);
}

TEST_CASE("hamiltonian text format") {
    std::istringstream in(
        "# comment line\n"
        "0.5  XX\n"
        "\n"
        "-1.25 ZI   # trailing comment\n");
    auto h = mqite::parse_hamiltonian(in, "inline");
    REQUIRE(h.size() == 2);
    CHECK(h.num_qubits() == 2);
    CHECK(h.term(1).weight == -1.25);
    CHECK(h.term(1).op.label() == "ZI");

    std::ostringstream out;
    mqite::write_hamiltonian(out, h);
    std::istringstream in2(out.str());
    auto h2 = mqite::parse_hamiltonian(in2, "roundtrip");
    REQUIRE(h2.size() == h.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
        CHECK(h2.term(k).weight == h.term(k).weight);
        CHECK(h2.term(k).op == h.term(k).op);
    }

    std::istringstream bad1("0.5 XX\n0.5 XXX\n");
    CHECK_THROWS_WITH_AS(mqite::parse_hamiltonian(bad1, "f"), doctest::Contains("f:2"),
                         std::runtime_error);
    std::istringstream bad2("0.5\n");
    CHECK_THROWS_WITH_AS(mqite::parse_hamiltonian(bad2, "f"), doctest::Contains("f:1"),
                         std::runtime_error);
    std::istringstream bad3("zz XX\n");
    CHECK_THROWS_WITH_AS(mqite::parse_hamiltonian(bad3, "f"), doctest::Contains("weight"),
                         std::runtime_error);
    std::istringstream empty("# nothing\n\n");
    CHECK_THROWS_AS(mqite::parse_hamiltonian(empty, "f"), std::runtime_error);
}
