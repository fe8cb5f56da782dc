#include "hire/core.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hire {

const Instance& validate_instance(const Instance& inst) {
    if (inst.candidates.empty())
        throw std::invalid_argument("candidate list empty");
    if (inst.k < 1) throw std::invalid_argument("k must be >= 1");
    if (inst.t < 1) throw std::invalid_argument("t must be >= 1");
    if (inst.budget && !(*inst.budget > 0.0))
        throw std::invalid_argument("budget must be positive");
    for (size_t i = 0; i < inst.candidates.size(); ++i) {
        const Candidate& c = inst.candidates[i];
        const std::string at = " (candidate " + std::to_string(i) + ")";
        if (!(c.p >= 0.0 && c.p <= 1.0))
            throw std::invalid_argument("probability out of range" + at);
        if (!std::isfinite(c.v) || c.v < 0.0)
            throw std::invalid_argument("value must be finite and nonnegative" + at);
        if (c.s) {
            if (!inst.budget)
                throw std::invalid_argument("size requires budget" + at);
            if (!(*c.s > 0.0 && *c.s <= 1.0))
                throw std::invalid_argument("size out of range" + at);
        } else if (inst.budget) {
            throw std::invalid_argument("budget requires a size on every candidate" + at);
        }
    }
    return inst;
}

std::vector<int> value_sort(const Instance& inst) {
    std::vector<int> order(inst.candidates.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.candidates[a].v > inst.candidates[b].v;
    });
    return order;
}

void normalize_budget(Instance& inst) {
    if (!inst.budget || *inst.budget == 1.0) return;
    const double b = *inst.budget;
    if (!(b > 0.0)) throw std::invalid_argument("budget must be positive");
    for (Candidate& c : inst.candidates)
        if (c.s) c.s = *c.s / b;
    inst.budget = 1.0;
}

Instance instance_from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Instance inst;
    inst.k = j.at("k").get<int>();
    inst.t = j.at("t").get<int>();
    if (j.contains("budget") && !j["budget"].is_null())
        inst.budget = j["budget"].get<double>();
    for (const auto& cj : j.at("candidates")) {
        Candidate c;
        c.p = cj.at("p").get<double>();
        c.v = cj.at("v").get<double>();
        if (cj.contains("s") && !cj["s"].is_null()) c.s = cj["s"].get<double>();
        inst.candidates.push_back(c);
    }
    normalize_budget(inst);
    validate_instance(inst);
    return inst;
}

std::string instance_to_json_text(const Instance& inst) {
    nlohmann::json j;
    j["k"] = inst.k;
    j["t"] = inst.t;
    if (inst.budget) j["budget"] = *inst.budget;
    j["candidates"] = nlohmann::json::array();
    for (const Candidate& c : inst.candidates) {
        nlohmann::json cj;
        cj["p"] = c.p;
        cj["v"] = c.v;
        if (c.s) cj["s"] = *c.s;
        j["candidates"].push_back(cj);
    }
    return j.dump(2) + "\n";
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return instance_from_json_text(ss.str());
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << instance_to_json_text(inst);
}

}  // namespace hire
