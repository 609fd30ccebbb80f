#include "rdcirc/train.hpp"

#include <numeric>
#include <ostream>

#include "rdcirc/errors.hpp"
#include "rdcirc/rng.hpp"

namespace rdcirc {

BitVec rda_step(const ParamModel& model, const BitVec& theta, const BitVec& x, const BitVec& y) {
    if (theta.width() != model.params || x.width() != model.inputs ||
        y.width() != model.outputs)
        throw WidthMismatch("rda_step widths (" + std::to_string(theta.width()) + ", " +
                            std::to_string(x.width()) + ", " + std::to_string(y.width()) +
                            ") vs model (" + std::to_string(model.params) + ", " +
                            std::to_string(model.inputs) + ", " + std::to_string(model.outputs) +
                            ")");
    BitVec input = theta.concat(x);
    BitVec error = model.forward(input);
    error ^= y;
    if (error.is_zero()) return theta;

    BitVec change = model.reverse(input.concat(error));
    BitVec next = theta;
    for (int i = 0; i < model.params; ++i)
        if (change.get(i)) next.flip(i);
    return next;
}

std::vector<Example> make_schedule(const Dataset& dataset, const TrainConfig& cfg) {
    if (dataset.examples.empty()) throw EmptyDataset("scheduling an empty dataset");
    if (cfg.epochs < 1) throw RangeError("epochs must be >= 1");

    std::vector<Example> schedule;
    schedule.reserve(dataset.examples.size() * static_cast<std::size_t>(cfg.epochs));
    std::vector<std::size_t> order(dataset.examples.size());
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        if (cfg.shuffle) {
            std::mt19937_64 rng(
                splitmix64(cfg.seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(epoch) + 1)));
            deterministic_shuffle(order, rng);
        }
        for (std::size_t i : order) schedule.push_back(dataset.examples[i]);
    }
    return schedule;
}

Trajectory rda(const ParamModel& model, BitVec theta0, std::span<const Example> schedule) {
    Trajectory trajectory;
    trajectory.reserve(schedule.size() + 1);
    trajectory.push_back(std::move(theta0));
    for (const auto& example : schedule)
        trajectory.push_back(rda_step(model, trajectory.back(), example.x, example.y));
    return trajectory;
}

double accuracy(const ParamModel& model, const BitVec& theta, const Dataset& dataset) {
    if (dataset.examples.empty()) throw EmptyDataset("accuracy over an empty dataset");
    std::size_t hits = 0;
    for (const auto& example : dataset.examples)
        if (model.forward(theta.concat(example.x)) == example.y) ++hits;
    return static_cast<double>(hits) / static_cast<double>(dataset.examples.size());
}

void dump_trajectory(std::ostream& os, const Trajectory& trajectory) {
    for (const auto& theta : trajectory) os << theta.to_hex() << "\n";
}

}  // namespace rdcirc
