// AVX2 + FMA variant of the DP row kernel. Compiled with -mavx2 -mfma in its
// own translation unit; callers reach it only after a cpuid check.

#include "hire/kernels/dp_kernel.hpp"

#if defined(HIRE_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace hire::kernels {

void dp_row_avx2(double p, double v, const double* prev_lm1, const double* prev_l,
                 double* out, uint8_t* take, int t) {
    const double pv_s = p * v;
    const double q_s = 1.0 - p;
    const __m256d pv = _mm256_set1_pd(pv_s);
    const __m256d vp = _mm256_set1_pd(p);
    const __m256d vq = _mm256_set1_pd(q_s);
    const __m256d eps = _mm256_set1_pd(tie_eps);

    int s = 1;
    for (; s + 3 <= t; s += 4) {
        const __m256d lm1 = _mm256_loadu_pd(prev_lm1 + s - 1);
        const __m256d l_prev = _mm256_loadu_pd(prev_l + s - 1);
        const __m256d skip = _mm256_loadu_pd(prev_l + s);
        const __m256d offer = _mm256_fmadd_pd(vq, l_prev, _mm256_fmadd_pd(vp, lm1, pv));
        const __m256d mask = _mm256_cmp_pd(offer, _mm256_sub_pd(skip, eps), _CMP_GE_OQ);
        _mm256_storeu_pd(out + s, _mm256_blendv_pd(skip, offer, mask));
        const int bits = _mm256_movemask_pd(mask);
        take[s] = bits & 1;
        take[s + 1] = (bits >> 1) & 1;
        take[s + 2] = (bits >> 2) & 1;
        take[s + 3] = (bits >> 3) & 1;
    }
    for (; s <= t; ++s) {
        const double offer = std::fma(q_s, prev_l[s - 1], std::fma(p, prev_lm1[s - 1], pv_s));
        const double skip = prev_l[s];
        const bool take_offer = offer >= skip - tie_eps;
        out[s] = take_offer ? offer : skip;
        take[s] = take_offer ? 1 : 0;
    }
}

}  // namespace hire::kernels

#endif  // HIRE_HAVE_AVX2
