// NEON variant of the DP row kernel (aarch64). Same fused-multiply-add
// association as the scalar and AVX2 paths, so results stay bit-identical.

#include "hire/kernels/dp_kernel.hpp"

#if defined(HIRE_HAVE_NEON)

#include <arm_neon.h>

#include <cmath>

namespace hire::kernels {

void dp_row_neon(double p, double v, const double* prev_lm1, const double* prev_l,
                 double* out, uint8_t* take, int t) {
    const double pv_s = p * v;
    const double q_s = 1.0 - p;
    const float64x2_t pv = vdupq_n_f64(pv_s);
    const float64x2_t vp = vdupq_n_f64(p);
    const float64x2_t vq = vdupq_n_f64(q_s);
    const float64x2_t eps = vdupq_n_f64(tie_eps);

    int s = 1;
    for (; s + 1 <= t; s += 2) {
        const float64x2_t lm1 = vld1q_f64(prev_lm1 + s - 1);
        const float64x2_t l_prev = vld1q_f64(prev_l + s - 1);
        const float64x2_t skip = vld1q_f64(prev_l + s);
        const float64x2_t offer = vfmaq_f64(vfmaq_f64(pv, vp, lm1), vq, l_prev);
        const uint64x2_t mask = vcgeq_f64(offer, vsubq_f64(skip, eps));
        vst1q_f64(out + s, vbslq_f64(mask, offer, skip));
        take[s] = vgetq_lane_u64(mask, 0) ? 1 : 0;
        take[s + 1] = vgetq_lane_u64(mask, 1) ? 1 : 0;
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

#endif  // HIRE_HAVE_NEON
