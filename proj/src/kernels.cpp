#include "mqite/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace mqite::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(MQITE_HAVE_AVX2_KERNELS) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend pick_default() {
    if (const char* env = std::getenv("MQITE_KERNELS")) {
        const std::string v(env);
        if (v == "scalar") return Backend::scalar;
        if (v == "avx2" && cpu_has_avx2()) return Backend::avx2;
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

Backend& current() {
    static Backend b = pick_default();
    return b;
}

}  // namespace

Backend active_backend() {
    return current();
}

bool backend_supported(Backend b) {
    return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

void set_backend(Backend b) {
    if (!backend_supported(b))
        throw std::runtime_error("kernel backend '" + backend_name(b) +
                                 "' not supported on this CPU");
    current() = b;
}

std::string backend_name(Backend b) {
    return b == Backend::scalar ? "scalar" : "avx2";
}

void pauli_axpby(cplx* amps, std::size_t size, std::uint64_t x, std::uint64_t z, int phase_pow,
                 cplx alpha, cplx beta) {
#if defined(MQITE_HAVE_AVX2_KERNELS)
    if (current() == Backend::avx2)
        return avx2::pauli_axpby(amps, size, x, z, phase_pow, alpha, beta);
#endif
    scalar::pauli_axpby(amps, size, x, z, phase_pow, alpha, beta);
}

cplx pauli_bilinear(const cplx* bra, const cplx* ket, std::size_t size, std::uint64_t x,
                    std::uint64_t z, int phase_pow) {
#if defined(MQITE_HAVE_AVX2_KERNELS)
    if (current() == Backend::avx2)
        return avx2::pauli_bilinear(bra, ket, size, x, z, phase_pow);
#endif
    return scalar::pauli_bilinear(bra, ket, size, x, z, phase_pow);
}

cplx inner(const cplx* a, const cplx* b, std::size_t size) {
#if defined(MQITE_HAVE_AVX2_KERNELS)
    if (current() == Backend::avx2) return avx2::inner(a, b, size);
#endif
    return scalar::inner(a, b, size);
}

double norm_sq(const cplx* a, std::size_t size) {
#if defined(MQITE_HAVE_AVX2_KERNELS)
    if (current() == Backend::avx2) return avx2::norm_sq(a, size);
#endif
    return scalar::norm_sq(a, size);
}

void scale(cplx* a, std::size_t size, double factor) {
#if defined(MQITE_HAVE_AVX2_KERNELS)
    if (current() == Backend::avx2) return avx2::scale(a, size, factor);
#endif
    scalar::scale(a, size, factor);
}

}  // namespace mqite::kernels
