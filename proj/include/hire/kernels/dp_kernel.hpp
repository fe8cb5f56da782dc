#pragma once

#include <cstdint>
#include <optional>

namespace hire::kernels {

// Tie tolerance inside the DP maxima; the offer branch wins ties.
inline constexpr double tie_eps = 1e-12;

// One row of the offer/skip recurrence, for s in [1, t]:
//
//   offer[s] = fma(1-p, prev_l[s-1], fma(p, prev_lm1[s-1], p*v))
//   out[s]   = offer[s] >= prev_l[s] - tie_eps ? offer[s] : prev_l[s]
//   take[s]  = 1 iff the offer branch was chosen
//
// prev_lm1 / prev_l are the next candidate's rows at one slot fewer / the
// same slot count. Entries at s = 0 are left untouched. Every backend
// evaluates the exact expression above (fused multiply-adds in the same
// association), so results are bit-identical across backends.
using DpRowFn = void (*)(double p, double v, const double* prev_lm1,
                         const double* prev_l, double* out, uint8_t* take, int t);

enum class Backend { scalar, avx2, neon };

const char* backend_name(Backend b);
bool backend_available(Backend b);

// Best backend compiled in and supported by this CPU.
Backend preferred_backend();

// Throws std::invalid_argument if the backend is unavailable.
DpRowFn dp_row_fn(Backend b);

// Testing hook: route dp_row_update through a fixed backend
// (std::nullopt restores runtime selection). Not thread safe.
void set_forced_backend(std::optional<Backend> b);
std::optional<Backend> forced_backend();

// Row update via the forced or preferred backend.
void dp_row_update(double p, double v, const double* prev_lm1,
                   const double* prev_l, double* out, uint8_t* take, int t);

}  // namespace hire::kernels
