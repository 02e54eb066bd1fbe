#include <bit>

#include "mqite/kernels.hpp"

namespace mqite::kernels::scalar {

namespace {

cplx i_pow(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

inline double sign_of(std::uint64_t z, std::uint64_t k) {
    return (std::popcount(z & k) & 1) ? -1.0 : 1.0;
}

}  // namespace

void pauli_axpby(cplx* amps, std::size_t size, std::uint64_t x, std::uint64_t z, int phase_pow,
                 cplx alpha, cplx beta) {
    const cplx bp = beta * i_pow(phase_pow);
    if (x == 0) {
        const cplx plus = alpha + bp;
        const cplx minus = alpha - bp;
        for (std::size_t k = 0; k < size; ++k)
            amps[k] *= (std::popcount(z & k) & 1) ? minus : plus;
        return;
    }
    // Pair (a, b = a ^ x) visited once: a runs over indices with the top x bit clear.
    const std::uint64_t hval = 1ULL << (63 - std::countl_zero(x));
    for (std::size_t base = 0; base < size; base += 2 * hval) {
        for (std::size_t off = 0; off < hval; ++off) {
            const std::size_t a = base + off;
            const std::size_t b = a ^ x;
            const cplx va = amps[a], vb = amps[b];
            amps[a] = alpha * va + bp * sign_of(z, b) * vb;
            amps[b] = alpha * vb + bp * sign_of(z, a) * va;
        }
    }
}

cplx pauli_bilinear(const cplx* bra, const cplx* ket, std::size_t size, std::uint64_t x,
                    std::uint64_t z, int phase_pow) {
    cplx acc = 0.0;
    if (x == 0) {
        for (std::size_t k = 0; k < size; ++k)
            acc += std::conj(bra[k]) * (sign_of(z, k) * ket[k]);
        return acc * i_pow(phase_pow);
    }
    const std::uint64_t hval = 1ULL << (63 - std::countl_zero(x));
    for (std::size_t base = 0; base < size; base += 2 * hval) {
        for (std::size_t off = 0; off < hval; ++off) {
            const std::size_t a = base + off;
            const std::size_t b = a ^ x;
            acc += std::conj(bra[a]) * (sign_of(z, b) * ket[b]);
            acc += std::conj(bra[b]) * (sign_of(z, a) * ket[a]);
        }
    }
    return acc * i_pow(phase_pow);
}

cplx inner(const cplx* a, const cplx* b, std::size_t size) {
    cplx acc = 0.0;
    for (std::size_t k = 0; k < size; ++k) acc += std::conj(a[k]) * b[k];
    return acc;
}

double norm_sq(const cplx* a, std::size_t size) {
    double acc = 0.0;
    for (std::size_t k = 0; k < size; ++k) acc += std::norm(a[k]);
    return acc;
}

void scale(cplx* a, std::size_t size, double factor) {
    for (std::size_t k = 0; k < size; ++k) a[k] *= factor;
}

}  // namespace mqite::kernels::scalar
