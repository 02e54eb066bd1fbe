#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "dense_oracle.hpp"
#include "mqite/kernels.hpp"

namespace k = mqite::kernels;
using k::cplx;

namespace {

std::vector<cplx> random_amps(std::size_t size, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> v(size);
    for (auto& a : v) a = cplx(g(rng), g(rng));
    return v;
}

double max_dev(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

struct MaskCase {
    std::uint64_t x, z;
    int phase;
};

std::vector<MaskCase> mask_cases(int n, std::mt19937_64& rng) {
    const std::uint64_t full = (1ULL << n) - 1;
    std::vector<MaskCase> cases = {
        {0, 0, 0},            // identity
        {0, full, 0},         // all-Z
        {0, 1, 0},            // Z on last qubit
        {full, 0, 0},         // all-X
        {1, 0, 0},            // X on last qubit (shortest runs)
        {1ULL << (n - 1), 0, 0},
        {full, full, 1},
    };
    for (int rep = 0; rep < 10; ++rep)
        cases.push_back({rng() & full, rng() & full, static_cast<int>(rng() & 3)});
    return cases;
}

}  // namespace

TEST_CASE("scalar axpby matches dense application") {
    std::mt19937_64 rng(21);
    for (int n = 1; n <= 6; ++n) {
        const std::size_t size = 1ULL << n;
        for (int rep = 0; rep < 20; ++rep) {
            auto p = oracle::random_pauli(n, rng, true);
            auto amps = random_amps(size, rng);
            const cplx alpha(0.3, -0.1), beta(0.7, 0.4);

            oracle::Vec v(static_cast<Eigen::Index>(size));
            for (std::size_t i = 0; i < size; ++i) v[static_cast<Eigen::Index>(i)] = amps[i];
            oracle::Vec want = alpha * v + beta * (oracle::dense(p) * v);

            const int ph = (p.phase_exp() + std::popcount(p.x_mask() & p.z_mask())) & 3;
            k::scalar::pauli_axpby(amps.data(), size, p.x_mask(), p.z_mask(), ph, alpha, beta);
            double dev = 0.0;
            for (std::size_t i = 0; i < size; ++i)
                dev = std::max(dev, std::abs(want[static_cast<Eigen::Index>(i)] - amps[i]));
            CHECK(dev < 1e-13);
        }
    }
}

TEST_CASE("scalar bilinear matches dense quadratic form") {
    std::mt19937_64 rng(22);
    for (int n = 1; n <= 6; ++n) {
        const std::size_t size = 1ULL << n;
        for (int rep = 0; rep < 20; ++rep) {
            auto p = oracle::random_pauli(n, rng, true);
            auto bra = random_amps(size, rng);
            auto ket = random_amps(size, rng);
            oracle::Vec vb(static_cast<Eigen::Index>(size)), vk(static_cast<Eigen::Index>(size));
            for (std::size_t i = 0; i < size; ++i) {
                vb[static_cast<Eigen::Index>(i)] = bra[i];
                vk[static_cast<Eigen::Index>(i)] = ket[i];
            }
            const cplx want = vb.adjoint() * (oracle::dense(p) * vk);
            const int ph = (p.phase_exp() + std::popcount(p.x_mask() & p.z_mask())) & 3;
            const cplx got = k::scalar::pauli_bilinear(bra.data(), ket.data(), size, p.x_mask(),
                                                       p.z_mask(), ph);
            CHECK(std::abs(want - got) < 1e-12);
        }
    }
}

#if defined(MQITE_HAVE_AVX2_KERNELS)
TEST_CASE("avx2 kernels match scalar reference") {
    if (!k::backend_supported(k::Backend::avx2)) {
        MESSAGE("avx2 not supported on this host; skipping");
        return;
    }
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 10; ++n) {
        const std::size_t size = 1ULL << n;
        for (const auto& mc : mask_cases(n, rng)) {
            auto base = random_amps(size, rng);
            const cplx alpha(0.8, 0.05), beta(-0.2, 0.6);

            auto a_scalar = base;
            auto a_avx = base;
            k::scalar::pauli_axpby(a_scalar.data(), size, mc.x, mc.z, mc.phase, alpha, beta);
            k::avx2::pauli_axpby(a_avx.data(), size, mc.x, mc.z, mc.phase, alpha, beta);
            CHECK(max_dev(a_scalar, a_avx) < 1e-13);

            auto bra = random_amps(size, rng);
            const cplx bs =
                k::scalar::pauli_bilinear(bra.data(), base.data(), size, mc.x, mc.z, mc.phase);
            const cplx bv =
                k::avx2::pauli_bilinear(bra.data(), base.data(), size, mc.x, mc.z, mc.phase);
            CHECK(std::abs(bs - bv) < 1e-12 * (1.0 + std::abs(bs)));
        }

        auto a = random_amps(size, rng);
        auto b = random_amps(size, rng);
        CHECK(std::abs(k::scalar::inner(a.data(), b.data(), size) -
                       k::avx2::inner(a.data(), b.data(), size)) < 1e-12);
        CHECK(k::scalar::norm_sq(a.data(), size) ==
              doctest::Approx(k::avx2::norm_sq(a.data(), size)).epsilon(1e-13));
        auto s1 = a;
        auto s2 = a;
        k::scalar::scale(s1.data(), size, 0.731);
        k::avx2::scale(s2.data(), size, 0.731);
        CHECK(max_dev(s1, s2) < 1e-15);
    }
}
#endif

TEST_CASE("backend dispatch") {
    CHECK(k::backend_supported(k::Backend::scalar));
    const auto saved = k::active_backend();
    k::set_backend(k::Backend::scalar);
    CHECK(k::active_backend() == k::Backend::scalar);
    std::mt19937_64 rng(9);
    auto a = random_amps(64, rng);
    auto b = a;
    k::pauli_axpby(a.data(), a.size(), 0b101, 0b010, 0, 0.5, cplx(0, 0.5));
    k::scalar::pauli_axpby(b.data(), b.size(), 0b101, 0b010, 0, 0.5, cplx(0, 0.5));
    CHECK(max_dev(a, b) == 0.0);
    k::set_backend(saved);
}
