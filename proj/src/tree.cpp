#include "hire/tree.hpp"

#include <algorithm>

namespace hire {

PathSample sample_path(const SequentialPolicy& policy, Rng& rng) {
    PathSample path;
    PolicyState st{0, policy.slots, policy.horizon};
    while (true) {
        const std::optional<int> i = next_offer(policy, st);
        if (!i) break;
        const bool accepted = rng.bernoulli(policy.p[*i]);
        path.steps.push_back({policy.order[*i], accepted});
        st.pos = *i + 1;
        st.steps -= 1;
        if (accepted) st.slots -= 1;
    }
    return path;
}

std::vector<Segment> decompose_segments(const PathSample& path) {
    std::vector<Segment> segments;
    Segment cur;
    for (const PathStep& step : path.steps) {
        cur.members.push_back(step.candidate);
        if (step.accepted) {
            segments.push_back(std::move(cur));
            cur = Segment{};
        }
    }
    if (!cur.members.empty()) segments.push_back(std::move(cur));
    return segments;
}

static void sort_by_value(std::vector<int>& ids, const Instance& inst) {
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) {
        return inst.candidates[a].v > inst.candidates[b].v;
    });
}

double segment_value(const Segment& seg, const Instance& inst) {
    std::vector<int> ids = seg.members;
    sort_by_value(ids, inst);
    double value = 0.0;
    double none_before = 1.0;
    for (int id : ids) {
        const Candidate& c = inst.candidates[id];
        value += none_before * c.p * c.v;
        none_before *= 1.0 - c.p;
    }
    return value;
}

TreeApproxRun approx_given_tree(const SequentialPolicy& policy, const Instance& inst, Rng& rng) {
    TreeApproxRun run;
    run.path = sample_path(policy, rng);
    run.segments = decompose_segments(run.path);
    for (Segment& seg : run.segments) {
        sort_by_value(seg.members, inst);
        run.expected_value += segment_value(seg, inst);
    }
    return run;
}

std::vector<int> nonadaptive_order(const PathSample& path, const Instance& inst) {
    std::vector<int> ids;
    ids.reserve(path.steps.size());
    for (const PathStep& step : path.steps) ids.push_back(step.candidate);
    sort_by_value(ids, inst);
    return ids;
}

}  // namespace hire
