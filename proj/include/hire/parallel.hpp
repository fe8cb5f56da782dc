#pragma once

#include <vector>

#include "hire/core.hpp"
#include "hire/rng.hpp"
#include "hire/sequential_dp.hpp"
#include "hire/tree.hpp"

namespace hire {

// Up to k disjoint value-sorted offer lists probed simultaneously, one
// offer per lane per step; a lane retires on its first acceptance.
struct ParallelSchedule {
    std::vector<Segment> lanes;
};

// Exact expected value: lanes are disjoint, each contributes its segval.
double schedule_value(const ParallelSchedule& schedule, const Instance& inst);

// Splits each segment, in path order, into ceil(len/t) pieces with all but
// the last of length exactly t. Segments of a k-slot policy path split
// into at most 2k pieces.
std::vector<Segment> split_segments(const std::vector<Segment>& segments, int t);

// One draw of the sequential-to-parallel conversion: sample a path from a
// policy solved over k*t steps, split its segments to length <= t, sort
// each piece by value and keep the k pieces with highest segval.
ParallelSchedule parallel_from_sequential(const SequentialPolicy& policy,
                                          const Instance& inst, Rng& rng);

struct ParalgResult {
    ParallelSchedule schedule;      // best sampled schedule
    double value = 0.0;             // its exact expected value
    double mean_sample_value = 0.0; // mean over all samples (fresh-sample estimate)
    int samples = 0;
};

// paralg: best of num_samples draws of parallel_from_sequential over the
// seqalg policy with horizon k*t. Fresh-sample mean is reported alongside
// since the 1/8 guarantee speaks about a single random draw.
ParalgResult paralg(const Instance& inst, int num_samples, Rng& rng);

// parheur: random partition into k disjoint sets, each solved as an
// independent single-slot problem over t steps. Value is exact.
ParalgResult parheur(const Instance& inst, Rng& rng);

struct ParallelExecution {
    std::vector<int> hired;
    double value = 0.0;
    std::vector<int> offers_per_step;       // one entry per simulated step
    std::vector<int> slots_before_step;     // unfilled slots entering the step
};

// Simulates t steps against a fixed outcome vector: at step s every still
// active lane offers its s-th candidate; a lane retires once it hires.
ParallelExecution execute_parallel(const ParallelSchedule& schedule,
                                   const AcceptanceRealization& real,
                                   const Instance& inst);

}  // namespace hire
