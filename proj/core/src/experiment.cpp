#include "rdcirc/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <random>

#include "rdcirc/errors.hpp"
#include "rdcirc/model.hpp"
#include "rdcirc/rng.hpp"
#include "rdcirc/train.hpp"

namespace rdcirc {

namespace {

std::string format_fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

struct Prepared {
    ParamModel model;
    Dataset train, test;
    int epochs = 0;
};

Prepared prepare_iris(const ExperimentConfig& config, int class_count) {
    std::vector<std::string> classes{"Iris-setosa", "Iris-versicolor", "Iris-virginica"};
    classes.resize(class_count);

    auto records = load_iris_csv(config.iris_path);
    records = filter_classes(records, classes);
    auto [train_records, test_records] = split_records(records, config.test_fraction, config.seed);

    // Thresholds come from the training split only.
    auto thresholds = feature_means(train_records);
    auto train_x = binarize_features(train_records, thresholds);
    auto test_x = binarize_features(test_records, thresholds);
    auto train_y = encode_labels(train_records, config.encoding, classes);
    auto test_y = encode_labels(test_records, config.encoding, classes);

    Dataset train = make_dataset(std::move(train_x), std::move(train_y), config.encoding);
    Dataset test = make_dataset(std::move(test_x), std::move(test_y), config.encoding);

    int label_bits = encoded_label_width(config.encoding, class_count);
    Prepared p{build_eval(train.input_width, label_bits), std::move(train), std::move(test),
               config.epochs > 0 ? config.epochs : 16};
    return p;
}

Prepared prepare_mnist01(const ExperimentConfig& config) {
    std::string dir = config.mnist_dir;
    if (!dir.empty() && dir.back() != '/') dir += '/';
    auto train_records = load_mnist_idx(dir + "train-images-idx3-ubyte",
                                        dir + "train-labels-idx1-ubyte");
    auto test_records = load_mnist_idx(dir + "t10k-images-idx3-ubyte",
                                       dir + "t10k-labels-idx1-ubyte");
    std::vector<std::string> classes{"0", "1"};
    train_records = filter_classes(train_records, classes);
    test_records = filter_classes(test_records, classes);

    if (config.subsample > 0 && config.subsample < static_cast<long>(train_records.size())) {
        std::mt19937_64 rng(splitmix64(config.seed));
        deterministic_shuffle(train_records, rng);
        train_records.resize(static_cast<std::size_t>(config.subsample));
    }

    auto train_x = binarize_pixels(train_records);
    auto test_x = binarize_pixels(test_records);
    auto train_y = encode_labels(train_records, LabelEncoding::Binary, classes);
    auto test_y = encode_labels(test_records, LabelEncoding::Binary, classes);

    Dataset train = make_dataset(std::move(train_x), std::move(train_y), LabelEncoding::Binary);
    Dataset test = make_dataset(std::move(test_x), std::move(test_y), LabelEncoding::Binary);

    Prepared p{build_pseudo_linear(train.input_width), std::move(train), std::move(test),
               config.epochs > 0 ? config.epochs : 1};
    return p;
}

}  // namespace

std::string ExperimentReport::tsv_header() {
    return "dataset\tmodel\tencoding\ttrain_acc\ttest_acc\tepochs\tseed\tseconds";
}

std::string ExperimentReport::tsv_row() const {
    return dataset + "\t" + model + "\t" + encoding + "\t" + format_fixed(train_accuracy, 6) +
           "\t" + format_fixed(test_accuracy, 6) + "\t" + std::to_string(epochs) + "\t" +
           std::to_string(seed) + "\t" + format_fixed(seconds, 3);
}

std::string ExperimentReport::table_row() const {
    return dataset + "  " + model + "  " + encoding +
           "  train " + format_fixed(100.0 * train_accuracy, 1) + "%" +
           "  test " + format_fixed(100.0 * test_accuracy, 1) + "%";
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
    auto start = std::chrono::steady_clock::now();

    Prepared p = [&] {
        if (config.dataset == "iris2") return prepare_iris(config, 2);
        if (config.dataset == "iris3") return prepare_iris(config, 3);
        if (config.dataset == "mnist01") return prepare_mnist01(config);
        throw RangeError("unknown dataset preset '" + config.dataset + "'");
    }();

    TrainConfig train_config{p.epochs, config.seed, true};
    auto schedule = make_schedule(p.train, train_config);
    BitVec theta0(p.model.params);
    if (config.random_init) {
        std::mt19937_64 rng(splitmix64(config.seed ^ 0x7468657461303030ULL));
        for (int i = 0; i < p.model.params; ++i) theta0.set(i, rng() & 1);
    }
    Trajectory trajectory = rda(p.model, theta0, schedule);
    const BitVec& theta = trajectory.back();

    if (!config.trajectory_path.empty()) {
        std::ofstream out(config.trajectory_path);
        if (!out) throw IoError("cannot write " + config.trajectory_path);
        dump_trajectory(out, trajectory);
    }

    ExperimentReport report;
    report.dataset = config.dataset;
    report.model = p.model.name + ":" + std::to_string(p.model.params) + "+" +
                   std::to_string(p.model.inputs) + "->" + std::to_string(p.model.outputs);
    report.encoding = config.encoding == LabelEncoding::Binary ? "binary" : "one-hot";
    report.train_accuracy = accuracy(p.model, theta, p.train);
    report.test_accuracy = accuracy(p.model, theta, p.test);
    report.epochs = p.epochs;
    report.seed = config.seed;
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace rdcirc
