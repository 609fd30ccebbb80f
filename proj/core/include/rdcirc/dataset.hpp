#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rdcirc/bitvec.hpp"

namespace rdcirc {

/// A record as it comes off disk: real-valued features plus a class label.
struct RawRecord {
    std::vector<double> features;
    std::string label;
};

enum class LabelEncoding { Binary, OneHot };

struct Example {
    BitVec x, y;
};

/// Binarized, encoded examples ready for training.
struct Dataset {
    int input_width = 0;
    int label_width = 0;
    LabelEncoding encoding = LabelEncoding::Binary;
    std::vector<Example> examples;
};

/// UCI iris format: four decimal features and a class name per row, comma
/// separated, no header. Throws IoError, EmptyDataset, SchemaError (wrong
/// column count, with row number), ParseError (bad number, with row number).
std::vector<RawRecord> load_iris_csv(const std::string& path);

/// Per-feature arithmetic means.
std::vector<double> feature_means(std::span<const RawRecord> records);

/// Bit i = 1 iff feature i >= thresholds[i]. Throws WidthMismatch when
/// thresholds and features disagree in count.
std::vector<BitVec> binarize_features(std::span<const RawRecord> records,
                                      std::span<const double> thresholds);

int encoded_label_width(LabelEncoding encoding, int class_count);

/// One-hot: width = #classes, single 1 at the class index. Binary: width =
/// ceil(log2(#classes)), big-endian class index. Throws UnknownLabel.
std::vector<BitVec> encode_labels(std::span<const RawRecord> records, LabelEncoding encoding,
                                  std::span<const std::string> class_order);

/// Class index of an encoded label, or -1 when the pattern encodes none
/// (e.g. a non-one-hot vector).
int decode_label(const BitVec& y, LabelEncoding encoding, int class_count);

/// Order-preserving filter to the given class names.
std::vector<RawRecord> filter_classes(std::span<const RawRecord> records,
                                      std::span<const std::string> keep);

/// Deterministic stratified split: per class, a seeded shuffle sends
/// round(test_fraction * count) records to the test side; original record
/// order is preserved within each side. Throws EmptyDataset and RangeError
/// (test_fraction outside (0,1)).
std::pair<std::vector<RawRecord>, std::vector<RawRecord>> split_records(
    std::span<const RawRecord> records, double test_fraction, std::uint64_t seed);

/// IDX-format MNIST pair: images file (magic 0x00000803, then count, rows,
/// cols, then row-major unsigned bytes) and labels file (magic 0x00000801,
/// then count, then bytes). Features are pixel values in [0, 255], labels
/// "0".."9". Throws IoError, MagicMismatch, CountMismatch.
std::vector<RawRecord> load_mnist_idx(const std::string& images_path,
                                      const std::string& labels_path);

/// Pixel binarization by normalize-and-round: bit = 1 iff pixel/255 >= 0.5,
/// i.e. pixel >= 128. Throws RangeError on features outside [0, 255].
std::vector<BitVec> binarize_pixels(std::span<const RawRecord> records);

/// Zip feature and label vectors into a Dataset.
Dataset make_dataset(std::vector<BitVec> xs, std::vector<BitVec> ys, LabelEncoding encoding);

}  // namespace rdcirc
