#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hire {

// One applicant: acceptance probability p, value v, optional size s
// (budgeted variant only, 0 < s <= 1 after the budget is normalized to 1).
struct Candidate {
    double p = 0.0;
    double v = 0.0;
    std::optional<double> s;
};

// A candidate pool plus constraints. Candidate index = candidate id.
// `budget` must be present iff every candidate carries a size; instances are
// normalized at load time so budget == 1.
struct Instance {
    std::vector<Candidate> candidates;
    int k = 1;  // slots to fill
    int t = 1;  // deadline: number of probe steps
    std::optional<double> budget;

    int n() const { return static_cast<int>(candidates.size()); }
    bool has_budget() const { return budget.has_value(); }
};

// Sampled outcome vector: accepts[i] = candidate i would accept an offer.
struct AcceptanceRealization {
    std::vector<uint8_t> accepts;
};

// Monte-Carlo (or closed-form) evaluation summary. exact implies stderr == 0.
struct EvalResult {
    double mean = 0.0;
    double stderr_ = 0.0;
    long trials = 0;
    bool exact = false;
};

// Throws std::invalid_argument naming the first violated invariant;
// returns the instance untouched otherwise.
const Instance& validate_instance(const Instance& inst);

// Indices ordered by non-increasing value, ties broken by lower index.
std::vector<int> value_sort(const Instance& inst);

// Rescales sizes so budget == 1 (no-op without a budget).
void normalize_budget(Instance& inst);

// JSON document {k, t, budget?, candidates: [{p, v, s?}, ...]}.
Instance instance_from_json_text(const std::string& text);
std::string instance_to_json_text(const Instance& inst);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

}  // namespace hire
