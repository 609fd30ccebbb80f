#pragma once

#include <cstdint>
#include <string>

#include "rdcirc/dataset.hpp"

namespace rdcirc {

/// Configuration for the named experiment presets. Values of -1 (epochs) or
/// 0 (subsample) pick the preset defaults.
struct ExperimentConfig {
    std::string dataset;  // "iris2" | "iris3" | "mnist01"
    LabelEncoding encoding = LabelEncoding::Binary;
    int epochs = -1;
    std::uint64_t seed = 2020;
    double test_fraction = 0.2;  // iris presets
    long subsample = 0;          // mnist01: cap on training examples, 0 = all
    bool random_init = false;    // theta0: all-zeros, or seeded uniform bits
    std::string iris_path;
    std::string mnist_dir;
    std::string trajectory_path;  // when set, dump the parameter trajectory
};

struct ExperimentReport {
    std::string dataset;
    std::string model;
    std::string encoding;
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
    int epochs = 0;
    std::uint64_t seed = 0;
    double seconds = 0.0;

    static std::string tsv_header();
    std::string tsv_row() const;
    std::string table_row() const;
};

/// Full pipeline for one preset: load, filter, split, binarize, encode,
/// train with reverse derivative ascent, evaluate train and held-out
/// accuracy. Deterministic given the config (wall time aside).
ExperimentReport run_experiment(const ExperimentConfig& config);

}  // namespace rdcirc
