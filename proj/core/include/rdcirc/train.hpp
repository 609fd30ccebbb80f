#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "rdcirc/dataset.hpp"
#include "rdcirc/model.hpp"

namespace rdcirc {

struct TrainConfig {
    int epochs = 1;
    std::uint64_t seed = 0;
    bool shuffle = true;
};

/// Every parameter vector the training fold passes through, theta_0 first.
using Trajectory = std::vector<BitVec>;

/// One parameter update: compute the prediction, XOR against the label to
/// get the output error, push the error through the reverse derivative and
/// apply the parameter component of the resulting input change. A correct
/// prediction leaves theta untouched.
BitVec rda_step(const ParamModel& model, const BitVec& theta, const BitVec& x, const BitVec& y);

/// epochs seeded permutations of the dataset, concatenated; shuffle = false
/// repeats the original order. Throws EmptyDataset.
std::vector<Example> make_schedule(const Dataset& dataset, const TrainConfig& cfg);

/// Left fold of rda_step over the schedule, recording every intermediate
/// parameter vector. Result length = schedule length + 1.
Trajectory rda(const ParamModel& model, BitVec theta0, std::span<const Example> schedule);

/// Fraction of examples whose prediction matches the label exactly (all
/// bits equal). Throws EmptyDataset.
double accuracy(const ParamModel& model, const BitVec& theta, const Dataset& dataset);

/// One hex-encoded theta per line, for regression diffing.
void dump_trajectory(std::ostream& os, const Trajectory& trajectory);

}  // namespace rdcirc
