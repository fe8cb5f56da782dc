#include "hire/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hire {

double schedule_value(const ParallelSchedule& schedule, const Instance& inst) {
    double total = 0.0;
    for (const Segment& lane : schedule.lanes) total += segment_value(lane, inst);
    return total;
}

std::vector<Segment> split_segments(const std::vector<Segment>& segments, int t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    std::vector<Segment> pieces;
    for (const Segment& seg : segments) {
        for (size_t start = 0; start < seg.members.size(); start += t) {
            const size_t stop = std::min(seg.members.size(), start + t);
            pieces.push_back(Segment{{seg.members.begin() + start, seg.members.begin() + stop}});
        }
    }
    return pieces;
}

ParallelSchedule parallel_from_sequential(const SequentialPolicy& policy,
                                          const Instance& inst, Rng& rng) {
    const PathSample path = sample_path(policy, rng);
    std::vector<Segment> pieces = split_segments(decompose_segments(path), inst.t);

    std::vector<double> segvals(pieces.size());
    for (size_t j = 0; j < pieces.size(); ++j) {
        std::stable_sort(pieces[j].members.begin(), pieces[j].members.end(),
                         [&](int a, int b) { return inst.candidates[a].v > inst.candidates[b].v; });
        segvals[j] = segment_value(pieces[j], inst);
    }

    // k pieces with highest segval, ties by earlier piece index.
    std::vector<size_t> by_val(pieces.size());
    std::iota(by_val.begin(), by_val.end(), 0);
    std::stable_sort(by_val.begin(), by_val.end(),
                     [&](size_t a, size_t b) { return segvals[a] > segvals[b]; });
    by_val.resize(std::min<size_t>(by_val.size(), inst.k));
    std::sort(by_val.begin(), by_val.end());

    ParallelSchedule schedule;
    for (size_t j : by_val) schedule.lanes.push_back(std::move(pieces[j]));
    return schedule;
}

ParalgResult paralg(const Instance& inst, int num_samples, Rng& rng) {
    validate_instance(inst);
    if (inst.has_budget())
        throw std::invalid_argument("parallel solver does not take budgeted instances");
    if (num_samples < 1) throw std::invalid_argument("num_samples must be >= 1");

    const long long relaxed = static_cast<long long>(inst.k) * inst.t;
    const int horizon = static_cast<int>(std::min<long long>(relaxed, inst.n()));
    const SequentialPolicy policy = solve_value_ordered(inst, inst.k, horizon);

    ParalgResult result;
    result.samples = num_samples;
    double best = -1.0, sum = 0.0;
    for (int s = 0; s < num_samples; ++s) {
        ParallelSchedule schedule = parallel_from_sequential(policy, inst, rng);
        const double val = schedule_value(schedule, inst);
        sum += val;
        if (val > best) {
            best = val;
            result.schedule = std::move(schedule);
        }
    }
    result.value = best;
    result.mean_sample_value = sum / num_samples;
    return result;
}

ParalgResult parheur(const Instance& inst, Rng& rng) {
    validate_instance(inst);
    if (inst.has_budget())
        throw std::invalid_argument("parallel solver does not take budgeted instances");

    // Uniform assignment of candidates to k groups.
    std::vector<std::vector<int>> groups(inst.k);
    for (int i = 0; i < inst.n(); ++i) {
        int g = static_cast<int>(rng.uniform() * inst.k);
        if (g >= inst.k) g = inst.k - 1;
        groups[g].push_back(i);
    }

    ParalgResult result;
    result.samples = 1;
    for (const std::vector<int>& group : groups) {
        if (group.empty()) continue;
        Instance sub;
        sub.k = 1;
        sub.t = inst.t;
        for (int id : group) sub.candidates.push_back(inst.candidates[id]);
        const SequentialPolicy pol = solve_single_slot(sub);
        result.value += pol.value();

        // The k = 1 policy is one fixed offer list: trace the all-reject walk.
        Segment lane;
        PolicyState st{0, 1, pol.horizon};
        while (const std::optional<int> i = next_offer(pol, st)) {
            lane.members.push_back(group[pol.order[*i]]);
            st.pos = *i + 1;
            st.steps -= 1;
        }
        if (!lane.members.empty()) result.schedule.lanes.push_back(std::move(lane));
    }
    result.mean_sample_value = result.value;
    return result;
}

ParallelExecution execute_parallel(const ParallelSchedule& schedule,
                                   const AcceptanceRealization& real,
                                   const Instance& inst) {
    ParallelExecution exec;
    std::vector<uint8_t> active(schedule.lanes.size(), 1);
    int slots = inst.k;
    for (int step = 0; step < inst.t; ++step) {
        int offers = 0;
        exec.slots_before_step.push_back(slots);
        for (size_t j = 0; j < schedule.lanes.size(); ++j) {
            if (!active[j] || step >= static_cast<int>(schedule.lanes[j].members.size()))
                continue;
            const int cand = schedule.lanes[j].members[step];
            ++offers;
            if (real.accepts[cand]) {
                exec.hired.push_back(cand);
                exec.value += inst.candidates[cand].v;
                active[j] = 0;
                --slots;
            }
        }
        exec.offers_per_step.push_back(offers);
        if (offers == 0) break;
    }
    return exec;
}

}  // namespace hire
