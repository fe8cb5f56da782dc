#include "hire/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hire::datagen {

GenMode parse_mode(const std::string& name) {
    if (name == "neg") return GenMode::neg_corr;
    if (name == "pos") return GenMode::pos_corr;
    if (name == "none") return GenMode::no_corr;
    if (name == "knapsack") return GenMode::knapsack;
    throw std::invalid_argument("unknown generator mode: " + name);
}

const char* mode_name(GenMode mode) {
    switch (mode) {
        case GenMode::neg_corr: return "neg";
        case GenMode::pos_corr: return "pos";
        case GenMode::no_corr: return "none";
        case GenMode::knapsack: return "knapsack";
    }
    return "?";
}

namespace {

// Keeps Beta shape parameters strictly positive.
double clamp_unit(double v) { return std::clamp(v, 1e-6, 1.0 - 1e-6); }

}  // namespace

std::vector<Candidate> gen_correlated(const GeneratorSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("n must be >= 1");
    if (spec.mode == GenMode::knapsack)
        throw std::invalid_argument("knapsack mode uses gen_knapsack");
    Rng rng(spec.seed);
    std::vector<Candidate> pool(spec.n);
    for (Candidate& c : pool) {
        c.v = rng.uniform();
        const double vc = clamp_unit(c.v);
        switch (spec.mode) {
            case GenMode::neg_corr: c.p = rng.beta(10.0 * (1.0 - vc), 10.0 * vc); break;
            case GenMode::pos_corr: c.p = rng.beta(10.0 * vc, 10.0 * (1.0 - vc)); break;
            default: c.p = rng.uniform(); break;
        }
    }
    return pool;
}

Instance gen_knapsack(const GeneratorSpec& spec, int t) {
    if (spec.n < 1) throw std::invalid_argument("n must be >= 1");
    Rng rng(spec.seed);
    Instance inst;
    inst.k = 1;
    inst.t = t;
    inst.budget = 1.0;
    inst.candidates.resize(spec.n);
    for (Candidate& c : inst.candidates) {
        const double s = std::clamp(
            rng.pareto_truncated(spec.pareto_shape, spec.pareto_scale, 1.0), spec.pareto_scale, 1.0);
        const double root = clamp_unit(std::sqrt(s));
        c.s = s;
        c.v = rng.beta(10.0 * root, 10.0 * (1.0 - root));
        c.p = rng.uniform();
    }
    return validate_instance(inst), inst;
}

Instance example1() {
    Instance inst;
    inst.k = 2;
    inst.t = 3;
    inst.candidates = {{1.0, 1.0, {}}, {0.5, 1.0, {}}, {0.5, 1.0, {}}, {0.1, 2.0, {}}};
    return inst;
}

Instance example2(int t) {
    if (t < 2) throw std::invalid_argument("example2 requires t >= 2");
    Instance inst;
    inst.k = 2;
    inst.t = t;
    const int low = 2 * t - 2;
    inst.candidates.assign(low, {1.0 / low, 1.0, {}});
    inst.candidates.push_back({1.0, 1.0, {}});
    return inst;
}

Instance gap_instance(double q, double v) {
    if (!(q > 0.0 && q < 1.0) || !(v > 1.0))
        throw std::invalid_argument("gap instance needs 0 < q < 1 and v > 1");
    Instance inst;
    inst.k = 2;
    inst.t = 3;
    inst.candidates = {{1.0, 1.0, {}}, {q, 1.0, {}}, {q, 1.0, {}}, {q * (1.0 - q) / (v - q), v, {}}};
    return inst;
}

Instance lp_star(int n) {
    if (n < 1) throw std::invalid_argument("lp_star requires n >= 1");
    Instance inst;
    inst.k = 1;
    inst.t = n;
    inst.candidates.assign(n, {1.0 / n, 1.0, {}});
    return inst;
}

Instance special_instance(const std::string& name, int param) {
    if (name == "example1") return example1();
    if (name == "example2") return example2(param > 0 ? param : 10);
    if (name == "gap") return gap_instance();
    if (name == "lp-star") return lp_star(param > 0 ? param : 100);
    throw std::invalid_argument("unknown special instance: " + name);
}

}  // namespace hire::datagen
