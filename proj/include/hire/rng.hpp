#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

#include "hire/core.hpp"

namespace hire {

// splitmix64 finalizer; used to derive independent stream seeds from
// (master seed, indices) so adding a stream never perturbs the others.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t mix_seed(std::initializer_list<uint64_t> words) {
    uint64_t h = 0x2545f4914f6cdd1dULL;
    for (uint64_t w : words) h = mix64(h ^ mix64(w));
    return h;
}

// mt19937_64 with hand-rolled real-valued draws. The standard pins the
// engine's integer stream but not the distribution adaptors, so the
// adaptors live here to keep instances and experiments bit-reproducible.
class Rng {
  public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t u64() { return engine_(); }

    // uniform on [0, 1), 53-bit resolution
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    // Box-Muller; one value per call
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    // Marsaglia-Tsang for shape >= 1, boosted by u^(1/shape) below 1.
    double gamma(double shape) {
        if (shape < 1.0) {
            const double u = 1.0 - uniform();
            return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, cube;
            do {
                x = normal();
                cube = 1.0 + c * x;
            } while (cube <= 0.0);
            const double v = cube * cube * cube;
            const double u = 1.0 - uniform();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

    double beta(double a, double b) {
        const double ga = gamma(a);
        const double gb = gamma(b);
        const double sum = ga + gb;
        if (sum <= 0.0) return a / (a + b);  // both shapes underflowed
        return ga / sum;
    }

    // Pareto(shape, scale xm) conditioned on the result lying in [xm, hi],
    // by inverse CDF.
    double pareto_truncated(double shape, double xm, double hi) {
        const double tail = 1.0 - std::pow(xm / hi, shape);
        const double u = uniform();
        return xm / std::pow(1.0 - u * tail, 1.0 / shape);
    }

  private:
    std::mt19937_64 engine_;
};

inline AcceptanceRealization sample_realization(const Instance& inst, Rng& rng) {
    AcceptanceRealization r;
    r.accepts.resize(inst.candidates.size());
    for (size_t i = 0; i < inst.candidates.size(); ++i)
        r.accepts[i] = rng.bernoulli(inst.candidates[i].p) ? 1 : 0;
    return r;
}

}  // namespace hire
