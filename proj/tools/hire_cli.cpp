// Command-line front end: instance generation, solvers, exact oracles,
// LP bounds, Monte-Carlo evaluation, parameter sweeps and charts.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hire/core.hpp"
#include "hire/datagen.hpp"
#include "hire/experiment.hpp"
#include "hire/kernels/dp_kernel.hpp"
#include "hire/knapsack.hpp"
#include "hire/lp_bound.hpp"
#include "hire/oracle.hpp"
#include "hire/parallel.hpp"
#include "hire/sequential_dp.hpp"
#include "hire/tree.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

void emit(const std::string& format, const nlohmann::json& j, const std::string& plain) {
    if (format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << plain;
}

nlohmann::json eval_json(const hire::EvalResult& res) {
    return {{"mean", res.mean},
            {"stderr", res.stderr_},
            {"trials", res.trials},
            {"exact", res.exact}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hire: offer scheduling under acceptance uncertainty"};
    app.require_subcommand(1);

    std::string instance_path, out_path, format = "csv", special;
    uint64_t seed = 0;
    long trials = 2000;

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate an instance file");
    std::string mode = "none";
    int gen_n = 100, gen_k = 20, gen_t = 50, special_param = 0;
    double pareto_shape = 1.5;
    gen->add_option("--mode", mode, "neg|pos|none|knapsack")->capture_default_str();
    gen->add_option("--n", gen_n, "candidate count")->capture_default_str();
    gen->add_option("--k", gen_k, "slots")->capture_default_str();
    gen->add_option("--t", gen_t, "deadline")->capture_default_str();
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--pareto-shape", pareto_shape, "knapsack size distribution shape")
        ->capture_default_str();
    gen->add_option("--special", special, "example1|example2|gap|lp-star (overrides --mode)");
    gen->add_option("--param", special_param, "t for example2, n for lp-star");
    gen->add_option("--out", out_path, "output path")->required();

    // ---- solve-seq ----
    auto* sseq = app.add_subcommand("solve-seq", "value-ordered sequential policy");
    std::string policy_csv;
    sseq->add_option("--instance", instance_path)->required();
    sseq->add_option("--policy-csv", policy_csv, "dump the DP table");
    sseq->add_option("--format", format, "csv|json");

    // ---- solve-par ----
    auto* spar = app.add_subcommand("solve-par", "parallel-offer strategies");
    int samples = 100;
    bool use_parheur = false;
    spar->add_option("--instance", instance_path)->required();
    spar->add_option("--samples", samples, "paralg best-of sample count")->capture_default_str();
    spar->add_option("--seed", seed);
    spar->add_flag("--parheur", use_parheur, "random-partition heuristic instead of paralg");
    spar->add_option("--format", format, "csv|json");

    // ---- solve-knapsack ----
    auto* sknap = app.add_subcommand("solve-knapsack", "two-branch budgeted policy");
    bool simulated = false;
    long ml_trials = 1000;
    sknap->add_option("--instance", instance_path)->required();
    sknap->add_flag("--simulated", simulated, "compare against simulated m_L* instead of m_L");
    sknap->add_option("--trials", ml_trials, "m_L* simulation trials")->capture_default_str();
    sknap->add_option("--seed", seed);
    sknap->add_option("--format", format, "csv|json");

    // ---- oracle ----
    auto* orc = app.add_subcommand("oracle", "exact optima for small instances");
    std::string which = "all";
    orc->add_option("--instance", instance_path)->required();
    orc->add_option("--which", which, "seq|par|knap|nonadaptive|all")->capture_default_str();
    orc->add_option("--format", format, "csv|json");

    // ---- lp-bound ----
    auto* lpb = app.add_subcommand("lp-bound", "LP relaxation upper bound");
    lpb->add_option("--instance", instance_path)->required();
    lpb->add_option("--format", format, "csv|json");

    // ---- eval ----
    auto* ev = app.add_subcommand("eval", "evaluate one algorithm");
    std::string algo = "seqalg";
    ev->add_option("--instance", instance_path)->required();
    ev->add_option("--algo", algo, "seqalg|paralg|parheur|GE|GV|LP|inf|approx|greedy")
        ->capture_default_str();
    ev->add_option("--trials", trials)->capture_default_str();
    ev->add_option("--seed", seed);
    ev->add_option("--format", format, "csv|json");

    // ---- sweep ----
    auto* sw = app.add_subcommand("sweep", "evaluate algorithms across deadlines");
    std::string figure;
    std::vector<int> t_values;
    std::vector<std::string> algos;
    int sweep_k = 20;
    std::string svg_path;
    sw->add_option("--paper-figure", figure, "neg|pos|none|knapsack");
    sw->add_option("--instance", instance_path, "instance file (alternative to --paper-figure)");
    sw->add_option("--t-values", t_values, "deadlines to sweep")->delimiter(',');
    sw->add_option("--algos", algos, "algorithm list")->delimiter(',');
    sw->add_option("--k", sweep_k, "slots when sweeping an instance file")->capture_default_str();
    sw->add_option("--trials", trials)->capture_default_str();
    sw->add_option("--seed", seed);
    sw->add_option("--out", out_path, "CSV output path");
    sw->add_option("--svg", svg_path, "also write an SVG chart");
    sw->add_option("--format", format, "csv|json");

    // ---- plot ----
    auto* pl = app.add_subcommand("plot", "render a sweep CSV as SVG");
    std::string in_path;
    pl->add_option("--in", in_path, "sweep CSV")->required();
    pl->add_option("--out", out_path, "SVG output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            hire::Instance inst;
            if (!special.empty()) {
                inst = hire::datagen::special_instance(special, special_param);
            } else if (mode == "knapsack") {
                inst = hire::datagen::gen_knapsack(
                    {gen_n, hire::datagen::GenMode::knapsack, seed, pareto_shape, 0.01}, gen_t);
            } else {
                inst.candidates = hire::datagen::gen_correlated(
                    {gen_n, hire::datagen::parse_mode(mode), seed, pareto_shape, 0.01});
                inst.k = gen_k;
                inst.t = gen_t;
            }
            hire::validate_instance(inst);
            hire::save_instance(inst, out_path);
            std::cout << "wrote " << out_path << " (n=" << inst.n() << ")\n";
        } else if (sseq->parsed()) {
            const hire::Instance inst = hire::load_instance(instance_path);
            const hire::SequentialPolicy pol = hire::solve_sequential(inst);
            if (!policy_csv.empty()) {
                std::ostringstream ss;
                hire::export_policy_csv(pol, ss);
                write_text(policy_csv, ss.str());
            }
            std::ostringstream plain;
            plain << "seqalg value: " << pol.value() << "\n";
            emit(format, {{"value", pol.value()}, {"kernel", hire::kernels::backend_name(
                              hire::kernels::preferred_backend())}},
                 plain.str());
        } else if (spar->parsed()) {
            const hire::Instance inst = hire::load_instance(instance_path);
            hire::Rng rng(seed);
            const hire::ParalgResult res =
                use_parheur ? hire::parheur(inst, rng) : hire::paralg(inst, samples, rng);
            nlohmann::json lanes = nlohmann::json::array();
            for (const hire::Segment& lane : res.schedule.lanes) lanes.push_back(lane.members);
            std::ostringstream plain;
            plain << (use_parheur ? "parheur" : "paralg") << " value: " << res.value
                  << " (mean sample " << res.mean_sample_value << ", lanes "
                  << res.schedule.lanes.size() << ")\n";
            emit(format,
                 {{"value", res.value},
                  {"mean_sample_value", res.mean_sample_value},
                  {"lanes", lanes}},
                 plain.str());
        } else if (sknap->parsed()) {
            const hire::Instance inst = hire::load_instance(instance_path);
            hire::Rng rng(seed);
            const hire::KnapsackPolicy pol =
                simulated ? hire::knapsack_policy_simulated(inst, ml_trials, rng)
                          : hire::knapsack_policy(inst);
            std::ostringstream plain;
            plain << "branch: "
                  << (pol.branch == hire::KnapsackBranch::single_best ? "single-best"
                                                                      : "small-list")
                  << "  m1=" << pol.m1 << "  mL=" << pol.mL << "\n";
            emit(format,
                 {{"branch", pol.branch == hire::KnapsackBranch::single_best ? "single-best"
                                                                             : "small-list"},
                  {"m1", pol.m1},
                  {"mL", pol.mL},
                  {"probe_order", pol.probe_order()}},
                 plain.str());
        } else if (orc->parsed()) {
            const hire::Instance inst = hire::load_instance(instance_path);
            nlohmann::json j;
            std::ostringstream plain;
            if (inst.has_budget()) {
                if (which == "all" || which == "knap") {
                    const double v = hire::oracle::opt_knapsack(inst);
                    j["opt_knapsack"] = v;
                    plain << "opt_knapsack: " << v << "\n";
                }
            } else {
                if (which == "all" || which == "seq") {
                    const double v = hire::oracle::opt_sequential(inst);
                    j["opt_sequential"] = v;
                    j["first_offers"] = hire::oracle::opt_sequential_first_offers(inst);
                    plain << "opt_sequential: " << v << "\n";
                }
                if (which == "all" || which == "par") {
                    const double v = hire::oracle::opt_parallel(inst);
                    j["opt_parallel"] = v;
                    plain << "opt_parallel: " << v << "\n";
                }
                if (which == "all" || which == "nonadaptive") {
                    const hire::oracle::NonadaptiveResult r = hire::oracle::best_nonadaptive(inst);
                    j["best_nonadaptive"] = r.value;
                    j["sequence"] = r.sequence;
                    plain << "best_nonadaptive: " << r.value << "\n";
                }
            }
            emit(format, j, plain.str());
        } else if (lpb->parsed()) {
            const hire::Instance inst = hire::load_instance(instance_path);
            const hire::LpSolution sol = inst.has_budget() ? hire::solve_knapsack_lp(inst)
                                                           : hire::solve_hiring_lp(inst);
            std::ostringstream plain;
            plain << "LP bound: " << sol.value << "\n";
            emit(format, {{"value", sol.value}, {"x", sol.x}}, plain.str());
        } else if (ev->parsed()) {
            const hire::Instance inst = hire::load_instance(instance_path);
            hire::Rng build_rng(hire::mix_seed({seed, 0x6275696c64ULL}));
            const hire::experiment::Strategy strat =
                hire::experiment::make_strategy(algo, inst, build_rng);
            const hire::EvalResult res = hire::experiment::mc_evaluate(strat, inst, trials, seed);
            std::ostringstream plain;
            plain << algo << ": mean=" << res.mean << " stderr=" << res.stderr_
                  << (res.exact ? " (exact)" : "") << "\n";
            emit(format, eval_json(res), plain.str());
        } else if (sw->parsed()) {
            hire::experiment::SweepSpec spec;
            if (!figure.empty()) {
                spec = hire::experiment::paper_figure_spec(figure, trials, seed);
                if (!t_values.empty()) spec.t_values = t_values;
                if (!algos.empty()) spec.algorithms = algos;
            } else {
                const hire::Instance inst = hire::load_instance(instance_path);
                spec.candidates = inst.candidates;
                spec.budget = inst.budget;
                spec.k = inst.has_budget() ? inst.k : sweep_k;
                spec.t_values = t_values.empty() ? std::vector<int>{inst.t} : t_values;
                if (!algos.empty())
                    spec.algorithms = algos;
                else if (inst.has_budget())
                    spec.algorithms = {"approx", "greedy", "LP"};
                else
                    spec.algorithms = {"seqalg", "paralg", "parheur", "GE", "GV", "LP", "inf"};
                spec.trials = trials;
                spec.master_seed = seed;
            }
            const std::vector<hire::experiment::SweepRow> rows = hire::experiment::sweep(spec);
            const std::string csv = hire::experiment::emit_csv(rows);
            if (!out_path.empty())
                write_text(out_path, csv);
            else if (format != "json")
                std::cout << csv;
            if (format == "json") {
                nlohmann::json jr = nlohmann::json::array();
                for (const auto& row : rows)
                    jr.push_back({{"algorithm", row.algorithm},
                                  {"t", row.t},
                                  {"mean", row.mean},
                                  {"stderr", row.stderr_},
                                  {"trials", row.trials},
                                  {"seed", row.seed}});
                std::cout << jr.dump(2) << "\n";
            }
            if (!svg_path.empty()) write_text(svg_path, hire::experiment::emit_svg(rows));
        } else if (pl->parsed()) {
            std::ifstream in(in_path);
            if (!in) throw std::runtime_error("cannot open CSV: " + in_path);
            const std::vector<hire::experiment::SweepRow> rows = hire::experiment::parse_csv(in);
            write_text(out_path, hire::experiment::emit_svg(rows));
            std::cout << "wrote " << out_path << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
