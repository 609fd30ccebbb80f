#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include "rdcirc/errors.hpp"
#include "rdcirc/experiment.hpp"
#include "rdcirc/rng.hpp"

using namespace rdcirc;

namespace {

std::string iris_path() {
    if (const char* p = std::getenv("IRIS_PATH")) return p;
    return "data/iris.data";
}

void put_be32(std::string& s, std::uint32_t v) {
    s.push_back(static_cast<char>((v >> 24) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>(v & 0xff));
}

/// Writes an MNIST-shaped IDX pair of 28x28 digit-ish images: class "0" is
/// a hollow ring, class "1" a center bar, with a little pixel noise. The
/// two classes overlap in almost no pixels, which is exactly the regime the
/// masked-overlap model handles.
void write_synthetic_mnist(const std::string& dir, const std::string& images_name,
                           const std::string& labels_name, int per_class, std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    std::string images, labels;
    int count = 2 * per_class;
    put_be32(images, 0x00000803);
    put_be32(images, static_cast<std::uint32_t>(count));
    put_be32(images, 28);
    put_be32(images, 28);
    put_be32(labels, 0x00000801);
    put_be32(labels, static_cast<std::uint32_t>(count));

    for (int i = 0; i < count; ++i) {
        int digit = i % 2;
        std::vector<unsigned char> img(28 * 28, 0);
        if (digit == 0) {
            for (int r = 0; r < 28; ++r)
                for (int c = 0; c < 28; ++c) {
                    double dr = r - 13.5, dc = c - 13.5;
                    double dist = std::sqrt(dr * dr + dc * dc);
                    if (dist > 6.0 && dist < 10.0) img[r * 28 + c] = 255;
                }
        } else {
            for (int r = 4; r < 24; ++r)
                for (int c = 12; c < 16; ++c) img[r * 28 + c] = 255;
        }
        for (int flips = 0; flips < 12; ++flips) {
            auto p = static_cast<std::size_t>(rng() % (28 * 28));
            img[p] = img[p] ? 0 : 255;
        }
        images.append(reinterpret_cast<const char*>(img.data()), img.size());
        labels.push_back(static_cast<char>(digit));
    }

    std::ofstream(dir + "/" + images_name, std::ios::binary) << images;
    std::ofstream(dir + "/" + labels_name, std::ios::binary) << labels;
}

}  // namespace

TEST_CASE("iris experiment report is complete and deterministic") {
    ExperimentConfig config;
    config.dataset = "iris2";
    config.iris_path = iris_path();

    ExperimentReport a = run_experiment(config);
    CHECK(a.dataset == "iris2");
    CHECK(a.model == "eval:16+4->1");
    CHECK(a.encoding == "binary");
    CHECK(a.epochs == 16);
    CHECK(a.seed == 2020);
    CHECK(a.train_accuracy >= 0.0);
    CHECK(a.train_accuracy <= 1.0);
    CHECK(a.test_accuracy >= 0.0);
    CHECK(a.test_accuracy <= 1.0);

    ExperimentReport b = run_experiment(config);
    CHECK(a.train_accuracy == b.train_accuracy);
    CHECK(a.test_accuracy == b.test_accuracy);

    // TSV row shape: 8 fixed columns
    std::string row = a.tsv_row();
    CHECK(std::count(row.begin(), row.end(), '\t') == 7);
    CHECK(ExperimentReport::tsv_header() ==
          "dataset\tmodel\tencoding\ttrain_acc\ttest_acc\tepochs\tseed\tseconds");
}

TEST_CASE("unknown preset is rejected") {
    ExperimentConfig config;
    config.dataset = "cifar";
    CHECK_THROWS_AS(run_experiment(config), RangeError);
}

TEST_CASE("random parameter initialization is seeded and converges the same") {
    ExperimentConfig config;
    config.dataset = "iris2";
    config.iris_path = iris_path();
    config.random_init = true;

    ExperimentReport a = run_experiment(config);
    ExperimentReport b = run_experiment(config);
    CHECK(a.test_accuracy == b.test_accuracy);
    // the eval table is fully overwritten by 16 epochs of presentations, so
    // the starting point cannot hurt separable 2-class accuracy
    CHECK(a.test_accuracy >= 0.94);
}

TEST_CASE("mnist01 pipeline end to end on synthetic IDX data") {
    std::string dir = "/tmp/rdcirc_mnist_" + std::to_string(::getpid());
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    write_synthetic_mnist(dir, "train-images-idx3-ubyte", "train-labels-idx1-ubyte", 150, 1);
    write_synthetic_mnist(dir, "t10k-images-idx3-ubyte", "t10k-labels-idx1-ubyte", 40, 2);

    ExperimentConfig config;
    config.dataset = "mnist01";
    config.mnist_dir = dir;
    ExperimentReport report = run_experiment(config);
    CHECK(report.model == "pseudoLinear:784+784->1");
    // near-disjoint classes: the mask model must separate them well
    CHECK(report.test_accuracy >= 0.9);

    // subsampling caps the schedule but keeps the pipeline deterministic
    config.subsample = 100;
    ExperimentReport small = run_experiment(config);
    ExperimentReport small_again = run_experiment(config);
    CHECK(small.test_accuracy == small_again.test_accuracy);

    std::system(("rm -rf " + dir).c_str());
}
