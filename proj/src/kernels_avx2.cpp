#include "mqite/kernels.hpp"

#if defined(MQITE_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <bit>

// Each __m256d carries two interleaved complex doubles. Strided pair loads
// and stores go through loadu2/storeu2 so arbitrary x masks vectorize the
// same way (two pairs per iteration).

namespace mqite::kernels::avx2 {

namespace {

cplx i_pow(int k) {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

inline int par(std::uint64_t z, std::uint64_t k) {
    return std::popcount(z & k) & 1;
}

inline __m256d swap_ri(__m256d v) {
    return _mm256_permute_pd(v, 0b0101);
}

// v * c with c given as (re splat, alternating -im/+im)
inline __m256d cmul(__m256d v, __m256d cre, __m256d cim_alt) {
    return _mm256_add_pd(_mm256_mul_pd(v, cre), _mm256_mul_pd(swap_ri(v), cim_alt));
}

struct PairConst {
    // lut[s0 | s1<<1] = the constant with per-pair signs applied
    __m256d re[4];
    __m256d im[4];
};

PairConst make_pair_const(cplx c) {
    PairConst pc;
    for (int idx = 0; idx < 4; ++idx) {
        const double s0 = (idx & 1) ? -1.0 : 1.0;
        const double s1 = (idx & 2) ? -1.0 : 1.0;
        pc.re[idx] = _mm256_setr_pd(s0 * c.real(), s0 * c.real(), s1 * c.real(), s1 * c.real());
        pc.im[idx] = _mm256_setr_pd(-s0 * c.imag(), s0 * c.imag(), -s1 * c.imag(), s1 * c.imag());
    }
    return pc;
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline std::size_t insert_zero(std::size_t p, std::uint64_t hval) {
    const std::uint64_t low = hval - 1;
    return ((p & ~low) << 1) | (p & low);
}

}  // namespace

void pauli_axpby(cplx* amps, std::size_t size, std::uint64_t x, std::uint64_t z, int phase_pow,
                 cplx alpha, cplx beta) {
    const cplx bp = beta * i_pow(phase_pow);
    double* d = reinterpret_cast<double*>(amps);
    if (x == 0) {
        if (size < 2) return scalar::pauli_axpby(amps, size, x, z, phase_pow, alpha, beta);
        const cplx fplus = alpha + bp;
        const cplx fminus = alpha - bp;
        PairConst lut;
        for (int idx = 0; idx < 4; ++idx) {
            const cplx f0 = (idx & 1) ? fminus : fplus;
            const cplx f1 = (idx & 2) ? fminus : fplus;
            lut.re[idx] = _mm256_setr_pd(f0.real(), f0.real(), f1.real(), f1.real());
            lut.im[idx] = _mm256_setr_pd(-f0.imag(), f0.imag(), -f1.imag(), f1.imag());
        }
        std::size_t k = 0;
        for (; k + 2 <= size; k += 2) {
            const int idx = par(z, k) | (par(z, k + 1) << 1);
            const __m256d v = _mm256_loadu_pd(d + 2 * k);
            _mm256_storeu_pd(d + 2 * k, cmul(v, lut.re[idx], lut.im[idx]));
        }
        for (; k < size; ++k) amps[k] *= par(z, k) ? fminus : fplus;
        return;
    }
    const std::size_t npairs = size / 2;
    if (npairs < 2) return scalar::pauli_axpby(amps, size, x, z, phase_pow, alpha, beta);
    const std::uint64_t hval = 1ULL << (63 - std::countl_zero(x));
    const __m256d are = _mm256_set1_pd(alpha.real());
    const __m256d aim = _mm256_setr_pd(-alpha.imag(), alpha.imag(), -alpha.imag(), alpha.imag());
    const PairConst bl = make_pair_const(bp);
    std::size_t p = 0;
    for (; p + 2 <= npairs; p += 2) {
        const std::size_t a0 = insert_zero(p, hval), a1 = insert_zero(p + 1, hval);
        const std::size_t b0 = a0 ^ x, b1 = a1 ^ x;
        const __m256d va = _mm256_loadu2_m128d(d + 2 * a1, d + 2 * a0);
        const __m256d vb = _mm256_loadu2_m128d(d + 2 * b1, d + 2 * b0);
        const int ia = par(z, a0) | (par(z, a1) << 1);
        const int ib = par(z, b0) | (par(z, b1) << 1);
        const __m256d na = _mm256_add_pd(cmul(va, are, aim), cmul(vb, bl.re[ib], bl.im[ib]));
        const __m256d nb = _mm256_add_pd(cmul(vb, are, aim), cmul(va, bl.re[ia], bl.im[ia]));
        _mm256_storeu2_m128d(d + 2 * a1, d + 2 * a0, na);
        _mm256_storeu2_m128d(d + 2 * b1, d + 2 * b0, nb);
    }
    for (; p < npairs; ++p) {
        const std::size_t a = insert_zero(p, hval);
        const std::size_t b = a ^ x;
        const cplx va = amps[a], vb = amps[b];
        amps[a] = alpha * va + bp * (par(z, b) ? -1.0 : 1.0) * vb;
        amps[b] = alpha * vb + bp * (par(z, a) ? -1.0 : 1.0) * va;
    }
}

cplx pauli_bilinear(const cplx* bra, const cplx* ket, std::size_t size, std::uint64_t x,
                    std::uint64_t z, int phase_pow) {
    const double* db = reinterpret_cast<const double*>(bra);
    const double* dk = reinterpret_cast<const double*>(ket);
    // sign LUT applied to the ket side
    __m256d sgn[4];
    for (int idx = 0; idx < 4; ++idx) {
        const double s0 = (idx & 1) ? -1.0 : 1.0;
        const double s1 = (idx & 2) ? -1.0 : 1.0;
        sgn[idx] = _mm256_setr_pd(s0, s0, s1, s1);
    }
    const __m256d neg_alt = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    __m256d accre = _mm256_setzero_pd();
    __m256d accim = _mm256_setzero_pd();
    cplx tail = 0.0;
    auto accumulate = [&](__m256d u, __m256d w) {
        // conj(u) * w summed over lanes later
        accre = _mm256_add_pd(accre, _mm256_mul_pd(u, w));
        const __m256d wsw = _mm256_mul_pd(swap_ri(w), neg_alt);  // [wi, -wr, ...]
        accim = _mm256_add_pd(accim, _mm256_mul_pd(u, wsw));
    };
    if (x == 0) {
        std::size_t k = 0;
        for (; k + 2 <= size; k += 2) {
            const int idx = par(z, k) | (par(z, k + 1) << 1);
            const __m256d u = _mm256_loadu_pd(db + 2 * k);
            const __m256d w = _mm256_mul_pd(_mm256_loadu_pd(dk + 2 * k), sgn[idx]);
            accumulate(u, w);
        }
        for (; k < size; ++k)
            tail += std::conj(bra[k]) * ((par(z, k) ? -1.0 : 1.0) * ket[k]);
    } else {
        const std::size_t npairs = size / 2;
        if (npairs < 2) return scalar::pauli_bilinear(bra, ket, size, x, z, phase_pow);
        const std::uint64_t hval = 1ULL << (63 - std::countl_zero(x));
        std::size_t p = 0;
        for (; p + 2 <= npairs; p += 2) {
            const std::size_t a0 = insert_zero(p, hval), a1 = insert_zero(p + 1, hval);
            const std::size_t b0 = a0 ^ x, b1 = a1 ^ x;
            const int ia = par(z, a0) | (par(z, a1) << 1);
            const int ib = par(z, b0) | (par(z, b1) << 1);
            const __m256d ua = _mm256_loadu2_m128d(db + 2 * a1, db + 2 * a0);
            const __m256d ub = _mm256_loadu2_m128d(db + 2 * b1, db + 2 * b0);
            const __m256d wa = _mm256_mul_pd(_mm256_loadu2_m128d(dk + 2 * a1, dk + 2 * a0), sgn[ia]);
            const __m256d wb = _mm256_mul_pd(_mm256_loadu2_m128d(dk + 2 * b1, dk + 2 * b0), sgn[ib]);
            accumulate(ua, wb);
            accumulate(ub, wa);
        }
        for (; p < npairs; ++p) {
            const std::size_t a = insert_zero(p, hval);
            const std::size_t b = a ^ x;
            tail += std::conj(bra[a]) * ((par(z, b) ? -1.0 : 1.0) * ket[b]);
            tail += std::conj(bra[b]) * ((par(z, a) ? -1.0 : 1.0) * ket[a]);
        }
    }
    return (cplx(hsum(accre), hsum(accim)) + tail) * i_pow(phase_pow);
}

cplx inner(const cplx* a, const cplx* b, std::size_t size) {
    const double* da = reinterpret_cast<const double*>(a);
    const double* db = reinterpret_cast<const double*>(b);
    const __m256d neg_alt = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
    __m256d accre = _mm256_setzero_pd();
    __m256d accim = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= size; k += 2) {
        const __m256d u = _mm256_loadu_pd(da + 2 * k);
        const __m256d w = _mm256_loadu_pd(db + 2 * k);
        accre = _mm256_add_pd(accre, _mm256_mul_pd(u, w));
        accim = _mm256_add_pd(accim, _mm256_mul_pd(u, _mm256_mul_pd(swap_ri(w), neg_alt)));
    }
    cplx acc(hsum(accre), hsum(accim));
    for (; k < size; ++k) acc += std::conj(a[k]) * b[k];
    return acc;
}

double norm_sq(const cplx* a, std::size_t size) {
    const double* da = reinterpret_cast<const double*>(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= size; k += 2) {
        const __m256d v = _mm256_loadu_pd(da + 2 * k);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double s = hsum(acc);
    for (; k < size; ++k) s += std::norm(a[k]);
    return s;
}

void scale(cplx* a, std::size_t size, double factor) {
    double* da = reinterpret_cast<double*>(a);
    const __m256d f = _mm256_set1_pd(factor);
    std::size_t k = 0;
    for (; k + 2 <= size; k += 2)
        _mm256_storeu_pd(da + 2 * k, _mm256_mul_pd(_mm256_loadu_pd(da + 2 * k), f));
    for (; k < size; ++k) a[k] *= factor;
}

}  // namespace mqite::kernels::avx2

#endif  // MQITE_HAVE_AVX2_KERNELS
