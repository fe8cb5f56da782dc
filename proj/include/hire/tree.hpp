#pragma once

#include <vector>

#include "hire/core.hpp"
#include "hire/rng.hpp"
#include "hire/sequential_dp.hpp"

namespace hire {

struct PathStep {
    int candidate = -1;  // candidate id
    bool accepted = false;
};

// One root-to-leaf realization of a policy's implicit decision tree.
struct PathSample {
    std::vector<PathStep> steps;
};

// Maximal run of rejections, terminated by the acceptance that ends it
// (if any). Members are candidate ids in path order.
struct Segment {
    std::vector<int> members;
};

// Walks the policy from its root, flipping a p-biased coin at each offered
// candidate; the resulting path is distributed as the tree's natural
// root-to-leaf distribution. The tree itself is never materialized.
PathSample sample_path(const SequentialPolicy& policy, Rng& rng);

// Splits the step list at accepted steps; each acceptance closes its
// segment, a trailing run of rejects forms the final segment.
std::vector<Segment> decompose_segments(const PathSample& path);

// Expected value of the highest-valued active member when the segment is
// probed in decreasing value order:
//   segval = sum_i p_i v_i prod_{j earlier} (1 - p_j)
// Members are sorted internally, so input order does not matter.
double segment_value(const Segment& seg, const Instance& inst);

struct TreeApproxRun {
    PathSample path;
    std::vector<Segment> segments;  // each sorted in decreasing value order
    double expected_value = 0.0;    // sum of segment values, exact given the path
};

// Samples one path, probes each of its segments in decreasing value order
// until one acceptance per segment; yields at least half the tree's value
// in expectation over paths.
TreeApproxRun approx_given_tree(const SequentialPolicy& policy, const Instance& inst, Rng& rng);

// All candidates on the path merged into one value-sorted offer list; the
// non-adaptive strategy built from the sampled path.
std::vector<int> nonadaptive_order(const PathSample& path, const Instance& inst);

}  // namespace hire
