// Compiled with -mavx2 -mfma; only reached when the CPU reports both.

#include <immintrin.h>

#include <cassert>
#include <cmath>
#include <vector>

#include "circleroots/kernels.hpp"

namespace circleroots::kernels {

namespace {

// Four interleaved complex numbers -> split real/imag lanes. The lane order
// comes out as (0, 2, 1, 3); store_split undoes it.
inline void load_split(const Coeff* p, __m256d& re, __m256d& im) {
    const double* d = reinterpret_cast<const double*>(p);
    const __m256d v0 = _mm256_loadu_pd(d);
    const __m256d v1 = _mm256_loadu_pd(d + 4);
    re = _mm256_unpacklo_pd(v0, v1);
    im = _mm256_unpackhi_pd(v0, v1);
}

inline void store_split(Coeff* p, __m256d re, __m256d im) {
    double* d = reinterpret_cast<double*>(p);
    _mm256_storeu_pd(d, _mm256_unpacklo_pd(re, im));
    _mm256_storeu_pd(d + 4, _mm256_unpackhi_pd(re, im));
}

// y <- y*z + (ar, ai)
inline void horner_step(__m256d& yr, __m256d& yi, __m256d zr, __m256d zi, __m256d ar, __m256d ai) {
    const __m256d tr = _mm256_fmadd_pd(yr, zr, _mm256_fnmadd_pd(yi, zi, ar));
    yi = _mm256_fmadd_pd(yr, zi, _mm256_fmadd_pd(yi, zr, ai));
    yr = tr;
}

}  // namespace

void evaluate_batch_avx2(std::span<const Coeff> coeffs, std::span<const Coeff> z, std::span<Coeff> out) {
    assert(!coeffs.empty() && out.size() == z.size());
    const std::size_t n = coeffs.size() - 1;
    const std::size_t full = z.size() - z.size() % 4;

    for (std::size_t i = 0; i < full; i += 4) {
        __m256d zr, zi;
        load_split(z.data() + i, zr, zi);
        __m256d yr = _mm256_set1_pd(coeffs[n].real());
        __m256d yi = _mm256_set1_pd(coeffs[n].imag());
        for (std::size_t k = n; k-- > 0;)
            horner_step(yr, yi, zr, zi, _mm256_set1_pd(coeffs[k].real()), _mm256_set1_pd(coeffs[k].imag()));
        store_split(out.data() + i, yr, yi);
    }
    if (full < z.size())
        evaluate_batch_scalar(coeffs, z.subspan(full), out.subspan(full));
}

void evaluate_with_derivative_avx2(std::span<const Coeff> coeffs, std::span<const Coeff> z,
                                   std::span<Coeff> value, std::span<Coeff> deriv,
                                   std::span<double> bound) {
    assert(!coeffs.empty());
    assert(value.size() == z.size() && deriv.size() == z.size() && bound.size() == z.size());
    const std::size_t n = coeffs.size() - 1;
    const std::size_t full = z.size() - z.size() % 4;

    std::vector<double> mag(coeffs.size());
    for (std::size_t k = 0; k <= n; ++k)
        mag[k] = std::abs(coeffs[k]);

    for (std::size_t i = 0; i < full; i += 4) {
        __m256d zr, zi;
        load_split(z.data() + i, zr, zi);
        const __m256d az = _mm256_sqrt_pd(_mm256_fmadd_pd(zr, zr, _mm256_mul_pd(zi, zi)));
        __m256d yr = _mm256_set1_pd(coeffs[n].real());
        __m256d yi = _mm256_set1_pd(coeffs[n].imag());
        __m256d dr = _mm256_setzero_pd();
        __m256d di = _mm256_setzero_pd();
        __m256d b = _mm256_set1_pd(mag[n]);
        for (std::size_t k = n; k-- > 0;) {
            horner_step(dr, di, zr, zi, yr, yi);
            horner_step(yr, yi, zr, zi, _mm256_set1_pd(coeffs[k].real()), _mm256_set1_pd(coeffs[k].imag()));
            b = _mm256_fmadd_pd(b, az, _mm256_set1_pd(mag[k]));
        }
        store_split(value.data() + i, yr, yi);
        store_split(deriv.data() + i, dr, di);
        // bound lanes are in (0, 2, 1, 3) order
        alignas(32) double tmp[4];
        _mm256_store_pd(tmp, b);
        bound[i] = tmp[0];
        bound[i + 1] = tmp[2];
        bound[i + 2] = tmp[1];
        bound[i + 3] = tmp[3];
    }
    if (full < z.size())
        evaluate_with_derivative_scalar(coeffs, z.subspan(full), value.subspan(full), deriv.subspan(full),
                                        bound.subspan(full));
}

}  // namespace circleroots::kernels
