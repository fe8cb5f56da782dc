#include "hire/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hire/datagen.hpp"
#include "hire/knapsack.hpp"
#include "hire/lp_bound.hpp"
#include "hire/oracle.hpp"
#include "hire/parallel.hpp"
#include "hire/sequential_dp.hpp"

namespace hire::experiment {

namespace {

uint64_t fnv1a(const std::string& text) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

double run_fixed_sequence(const Instance& inst, const std::vector<int>& seq,
                          const AcceptanceRealization& real) {
    double value = 0.0;
    int hired = 0;
    for (int id : seq) {
        if (real.accepts[id]) {
            value += inst.candidates[id].v;
            if (++hired == inst.k) break;
        }
    }
    return value;
}

std::vector<int> truncated(std::vector<int> order, int t) {
    if (static_cast<int>(order.size()) > t) order.resize(t);
    return order;
}

}  // namespace

std::vector<int> greedy_baseline(const Instance& inst, GreedyKey key) {
    validate_instance(inst);
    std::vector<int> order(inst.n());
    std::iota(order.begin(), order.end(), 0);
    auto score = [&](int i) {
        const Candidate& c = inst.candidates[i];
        return key == GreedyKey::expected_value ? c.p * c.v : c.v;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return score(a) > score(b); });
    return order;
}

Strategy make_strategy(const std::string& name, const Instance& inst, Rng& build_rng,
                       const StrategyOptions& opts) {
    validate_instance(inst);
    Strategy strat;
    strat.name = name;

    if (name == "seqalg") {
        auto policy = std::make_shared<SequentialPolicy>(solve_sequential(inst));
        strat.exact_value = policy->value();
        strat.simulate = [policy](const Instance& in, Rng& rng) {
            return execute_policy(*policy, sample_realization(in, rng));
        };
    } else if (name == "GE" || name == "GV") {
        const GreedyKey key = name == "GE" ? GreedyKey::expected_value : GreedyKey::value;
        auto seq = std::make_shared<std::vector<int>>(truncated(greedy_baseline(inst, key), inst.t));
        strat.exact_value = oracle::eval_fixed_sequence(inst, *seq, inst.k);
        strat.simulate = [seq](const Instance& in, Rng& rng) {
            return run_fixed_sequence(in, *seq, sample_realization(in, rng));
        };
    } else if (name == "LP") {
        strat.exact_value =
            inst.has_budget() ? solve_knapsack_lp(inst).value : solve_hiring_lp(inst).value;
    } else if (name == "inf") {
        strat.exact_value = infinite_horizon_value(inst);
    } else if (name == "paralg") {
        auto result = std::make_shared<ParalgResult>(paralg(inst, opts.paralg_samples, build_rng));
        strat.exact_value = result->value;
        strat.simulate = [result](const Instance& in, Rng& rng) {
            return execute_parallel(result->schedule, sample_realization(in, rng), in).value;
        };
    } else if (name == "parheur") {
        auto result = std::make_shared<ParalgResult>(parheur(inst, build_rng));
        strat.exact_value = result->value;
        strat.simulate = [result](const Instance& in, Rng& rng) {
            return execute_parallel(result->schedule, sample_realization(in, rng), in).value;
        };
    } else if (name == "approx") {
        auto policy = std::make_shared<std::vector<int>>(
            knapsack_policy_simulated(inst, opts.mLstar_trials, build_rng).probe_order());
        strat.simulate = [policy](const Instance& in, Rng& rng) {
            return simulate_knapsack(*policy, sample_realization(in, rng), in);
        };
    } else if (name == "greedy") {
        auto order = std::make_shared<std::vector<int>>(greedy_density_baseline(inst));
        strat.simulate = [order](const Instance& in, Rng& rng) {
            return simulate_knapsack(*order, sample_realization(in, rng), in);
        };
    } else {
        throw std::invalid_argument("unknown algorithm: " + name);
    }
    return strat;
}

EvalResult mc_evaluate(const Strategy& strategy, const Instance& inst, long trials,
                       uint64_t master_seed) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    EvalResult res;
    if (strategy.exact_value) {
        res.mean = *strategy.exact_value;
        res.exact = true;
        return res;
    }
    if (!strategy.simulate)
        throw std::invalid_argument("strategy has neither closed form nor simulator");

    const uint64_t tag = fnv1a(strategy.name);
    double sum = 0.0, sumsq = 0.0;
    for (long trial = 0; trial < trials; ++trial) {
        Rng rng(mix_seed({master_seed, static_cast<uint64_t>(trial), tag}));
        const double x = strategy.simulate(inst, rng);
        sum += x;
        sumsq += x * x;
    }
    res.trials = trials;
    res.mean = sum / trials;
    if (trials > 1) {
        const double var = std::max(0.0, (sumsq - sum * sum / trials) / (trials - 1));
        res.stderr_ = std::sqrt(var / trials);
    }
    return res;
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
    if (spec.t_values.empty()) throw std::invalid_argument("t_values must be non-empty");
    if (spec.algorithms.empty()) throw std::invalid_argument("algorithm list must be non-empty");
    if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");

    std::vector<SweepRow> rows;
    for (int t : spec.t_values) {
        if (t < 1) throw std::invalid_argument("t values must be positive");
        Instance inst;
        inst.candidates = spec.candidates;
        inst.k = spec.k;
        inst.t = t;
        inst.budget = spec.budget;
        validate_instance(inst);

        for (const std::string& name : spec.algorithms) {
            const uint64_t seed =
                mix_seed({spec.master_seed, static_cast<uint64_t>(t), fnv1a(name)});
            Rng build_rng(mix_seed({seed, fnv1a("build")}));
            const Strategy strat = make_strategy(name, inst, build_rng, spec.options);
            const EvalResult res = mc_evaluate(strat, inst, spec.trials, seed);
            rows.push_back({name, t, res.mean, res.stderr_, res.trials, seed});
        }
    }
    return rows;
}

SweepSpec paper_figure_spec(const std::string& which, long trials, uint64_t master_seed) {
    SweepSpec spec;
    spec.trials = trials;
    spec.master_seed = master_seed;
    const uint64_t inst_seed = mix_seed({master_seed, fnv1a("instance"), fnv1a(which)});

    if (which == "knapsack") {
        datagen::GeneratorSpec gen{100, datagen::GenMode::knapsack, inst_seed, 1.5, 0.01};
        const Instance inst = datagen::gen_knapsack(gen);
        spec.candidates = inst.candidates;
        spec.k = 1;
        spec.budget = 1.0;
        spec.t_values = {1, 2, 3, 5, 10, 20, 30, 40, 50};
        spec.algorithms = {"approx", "greedy", "LP"};
        return spec;
    }

    datagen::GeneratorSpec gen{100, datagen::parse_mode(which), inst_seed, 1.5, 0.01};
    spec.candidates = datagen::gen_correlated(gen);
    spec.k = 20;
    spec.t_values = {20, 30, 40, 50, 60, 70, 80, 90, 100};
    spec.algorithms = {"seqalg", "paralg", "parheur", "GE", "GV", "LP", "inf"};
    return spec;
}

std::string emit_csv(const std::vector<SweepRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("no rows to emit");
    std::string out = "algorithm,t,mean,stderr,trials,seed\n";
    char buf[160];
    for (const SweepRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%s,%d,%.10g,%.10g,%ld,%llu\n", row.algorithm.c_str(),
                      row.t, row.mean, row.stderr_, row.trials,
                      static_cast<unsigned long long>(row.seed));
        out += buf;
    }
    return out;
}

std::vector<SweepRow> parse_csv(std::istream& in) {
    std::vector<SweepRow> rows;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
    if (line.rfind("algorithm,", 0) != 0)
        throw std::invalid_argument("unexpected CSV header: " + line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        SweepRow row;
        std::stringstream ss(line);
        std::string field;
        std::getline(ss, row.algorithm, ',');
        std::getline(ss, field, ',');
        row.t = std::stoi(field);
        std::getline(ss, field, ',');
        row.mean = std::stod(field);
        std::getline(ss, field, ',');
        row.stderr_ = std::stod(field);
        std::getline(ss, field, ',');
        row.trials = std::stol(field);
        std::getline(ss, field, ',');
        row.seed = std::stoull(field);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("no rows in CSV");
    return rows;
}

std::string emit_svg(const std::vector<SweepRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("no rows to plot");

    static const char* palette[10] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                      "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
    const double width = 800, height = 500;
    const double left = 60, right = 660, top = 20, bottom = 460;

    std::vector<std::string> names;
    for (const SweepRow& row : rows)
        if (std::find(names.begin(), names.end(), row.algorithm) == names.end())
            names.push_back(row.algorithm);

    double tmin = rows[0].t, tmax = rows[0].t, ymin = rows[0].mean, ymax = rows[0].mean;
    for (const SweepRow& row : rows) {
        tmin = std::min(tmin, double(row.t));
        tmax = std::max(tmax, double(row.t));
        ymin = std::min(ymin, row.mean);
        ymax = std::max(ymax, row.mean);
    }
    if (tmax == tmin) tmax = tmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    const double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto sx = [&](double t) { return left + (t - tmin) / (tmax - tmin) * (right - left); };
    auto sy = [&](double y) { return bottom - (y - ymin) / (ymax - ymin) * (bottom - top); };

    char buf[256];
    std::string svg;
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%g\" height=\"%g\" "
                  "viewBox=\"0 0 %g %g\">\n",
                  width, height, width, height);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", left,
                  bottom, right, bottom);
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"black\"/>\n", left,
                  bottom, left, top);
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%g\" y=\"%g\" font-size=\"12\" text-anchor=\"middle\">%g</text>\n",
                  left, bottom + 16, tmin);
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%g\" y=\"%g\" font-size=\"12\" text-anchor=\"middle\">%g</text>\n",
                  right, bottom + 16, tmax);
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%g\" y=\"%g\" font-size=\"12\" text-anchor=\"end\">%.4g</text>\n",
                  left - 6, bottom + 4, ymin);
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%g\" y=\"%g\" font-size=\"12\" text-anchor=\"end\">%.4g</text>\n",
                  left - 6, top + 4, ymax);
    svg += buf;
    std::snprintf(buf, sizeof buf,
                  "<text x=\"%g\" y=\"%g\" font-size=\"12\" text-anchor=\"middle\">t</text>\n",
                  (left + right) / 2, bottom + 32);
    svg += buf;

    for (size_t a = 0; a < names.size(); ++a) {
        const char* color = palette[a % 10];
        std::string points;
        std::map<int, double> series;  // ordered by t
        for (const SweepRow& row : rows)
            if (row.algorithm == names[a]) series[row.t] = row.mean;
        for (const auto& [t, mean] : series) {
            std::snprintf(buf, sizeof buf, "%.2f,%.2f ", sx(t), sy(mean));
            points += buf;
        }
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";

        const double ly = top + 16 + 18 * static_cast<double>(a);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%g\" y1=\"%g\" x2=\"%g\" y2=\"%g\" stroke=\"%s\" "
                      "stroke-width=\"1.5\"/>\n",
                      right + 16, ly - 4, right + 44, ly - 4, color);
        svg += buf;
        std::snprintf(buf, sizeof buf, "<text x=\"%g\" y=\"%g\" font-size=\"13\">%s</text>\n",
                      right + 50, ly, names[a].c_str());
        svg += buf;
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace hire::experiment
