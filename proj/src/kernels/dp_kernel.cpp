#include "hire/kernels/dp_kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace hire::kernels {

namespace {

void dp_row_scalar(double p, double v, const double* prev_lm1,
                   const double* prev_l, double* out, uint8_t* take, int t) {
    const double pv = p * v;
    const double q = 1.0 - p;
    for (int s = 1; s <= t; ++s) {
        const double offer = std::fma(q, prev_l[s - 1], std::fma(p, prev_lm1[s - 1], pv));
        const double skip = prev_l[s];
        const bool take_offer = offer >= skip - tie_eps;
        out[s] = take_offer ? offer : skip;
        take[s] = take_offer ? 1 : 0;
    }
}

std::optional<Backend> g_forced;

}  // namespace

#if defined(HIRE_HAVE_AVX2)
void dp_row_avx2(double p, double v, const double* prev_lm1, const double* prev_l,
                 double* out, uint8_t* take, int t);
#endif
#if defined(HIRE_HAVE_NEON)
void dp_row_neon(double p, double v, const double* prev_lm1, const double* prev_l,
                 double* out, uint8_t* take, int t);
#endif

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
        case Backend::neon: return "neon";
    }
    return "?";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
#if defined(HIRE_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Backend::neon:
#if defined(HIRE_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend preferred_backend() {
    if (backend_available(Backend::avx2)) return Backend::avx2;
    if (backend_available(Backend::neon)) return Backend::neon;
    return Backend::scalar;
}

DpRowFn dp_row_fn(Backend b) {
    if (!backend_available(b))
        throw std::invalid_argument(std::string("kernel backend unavailable: ") + backend_name(b));
    switch (b) {
        case Backend::scalar:
            return &dp_row_scalar;
        case Backend::avx2:
#if defined(HIRE_HAVE_AVX2)
            return &dp_row_avx2;
#else
            break;
#endif
        case Backend::neon:
#if defined(HIRE_HAVE_NEON)
            return &dp_row_neon;
#else
            break;
#endif
    }
    throw std::invalid_argument("kernel backend unavailable");
}

void set_forced_backend(std::optional<Backend> b) {
    if (b) dp_row_fn(*b);  // validate availability eagerly
    g_forced = b;
}

std::optional<Backend> forced_backend() { return g_forced; }

void dp_row_update(double p, double v, const double* prev_lm1,
                   const double* prev_l, double* out, uint8_t* take, int t) {
    static const DpRowFn preferred = dp_row_fn(preferred_backend());
    const DpRowFn fn = g_forced ? dp_row_fn(*g_forced) : preferred;
    fn(p, v, prev_lm1, prev_l, out, take, t);
}

}  // namespace hire::kernels
