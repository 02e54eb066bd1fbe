#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>

namespace mqite::kernels {

using cplx = std::complex<double>;

// Inner loops over the amplitude array. P-hat below is the mask action
//   P|k> = i^phase_pow * (-1)^parity(z & k) |k XOR x>,
// i.e. the canonical PauliString matrix with the constant phase folded into
// phase_pow by the caller.

// amps <- alpha * amps + beta * (P amps), in place.
void pauli_axpby(cplx* amps, std::size_t size, std::uint64_t x, std::uint64_t z, int phase_pow,
                 cplx alpha, cplx beta);

// <bra| P |ket> = sum_t conj(bra[t]) * (P ket)[t].
cplx pauli_bilinear(const cplx* bra, const cplx* ket, std::size_t size, std::uint64_t x,
                    std::uint64_t z, int phase_pow);

// <a|b>
cplx inner(const cplx* a, const cplx* b, std::size_t size);

double norm_sq(const cplx* a, std::size_t size);

void scale(cplx* a, std::size_t size, double factor);

// Reference implementations; always available.
namespace scalar {
void pauli_axpby(cplx* amps, std::size_t size, std::uint64_t x, std::uint64_t z, int phase_pow,
                 cplx alpha, cplx beta);
cplx pauli_bilinear(const cplx* bra, const cplx* ket, std::size_t size, std::uint64_t x,
                    std::uint64_t z, int phase_pow);
cplx inner(const cplx* a, const cplx* b, std::size_t size);
double norm_sq(const cplx* a, std::size_t size);
void scale(cplx* a, std::size_t size, double factor);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define MQITE_HAVE_AVX2_KERNELS 1
namespace avx2 {
void pauli_axpby(cplx* amps, std::size_t size, std::uint64_t x, std::uint64_t z, int phase_pow,
                 cplx alpha, cplx beta);
cplx pauli_bilinear(const cplx* bra, const cplx* ket, std::size_t size, std::uint64_t x,
                    std::uint64_t z, int phase_pow);
cplx inner(const cplx* a, const cplx* b, std::size_t size);
double norm_sq(const cplx* a, std::size_t size);
void scale(cplx* a, std::size_t size, double factor);
}  // namespace avx2
#endif

enum class Backend { scalar, avx2 };

// Picked once at startup from CPU features; overridable for tests and via
// the MQITE_KERNELS environment variable (values: "scalar", "avx2").
Backend active_backend();
void set_backend(Backend b);  // throws std::runtime_error if unsupported
bool backend_supported(Backend b);
std::string backend_name(Backend b);

}  // namespace mqite::kernels
