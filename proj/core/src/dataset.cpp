#include "rdcirc/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

#include "rdcirc/errors.hpp"
#include "rdcirc/rng.hpp"

namespace rdcirc {

std::vector<RawRecord> load_iris_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::vector<RawRecord> records;
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        // Strip a trailing CR; the UCI file ends with blank lines.
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 5)
            throw SchemaError("row " + std::to_string(row) + ": expected 5 columns, got " +
                              std::to_string(fields.size()));
        RawRecord r;
        for (int i = 0; i < 4; ++i) {
            try {
                std::size_t used = 0;
                r.features.push_back(std::stod(fields[i], &used));
                if (used != fields[i].size()) throw std::invalid_argument(fields[i]);
            } catch (const std::exception&) {
                throw ParseError("row " + std::to_string(row) + ": bad number '" + fields[i] +
                                 "'");
            }
        }
        r.label = fields[4];
        records.push_back(std::move(r));
    }
    if (records.empty()) throw EmptyDataset("no records in " + path);
    return records;
}

std::vector<double> feature_means(std::span<const RawRecord> records) {
    if (records.empty()) throw EmptyDataset("means of zero records");
    std::vector<double> sums(records[0].features.size(), 0.0);
    for (const auto& r : records)
        for (std::size_t i = 0; i < sums.size(); ++i) sums[i] += r.features[i];
    for (auto& s : sums) s /= static_cast<double>(records.size());
    return sums;
}

std::vector<BitVec> binarize_features(std::span<const RawRecord> records,
                                      std::span<const double> thresholds) {
    std::vector<BitVec> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        if (r.features.size() != thresholds.size())
            throw WidthMismatch("record has " + std::to_string(r.features.size()) +
                                " features, " + std::to_string(thresholds.size()) +
                                " thresholds");
        BitVec v(static_cast<int>(thresholds.size()));
        for (std::size_t i = 0; i < thresholds.size(); ++i)
            v.set(static_cast<int>(i), r.features[i] >= thresholds[i]);
        out.push_back(std::move(v));
    }
    return out;
}

int encoded_label_width(LabelEncoding encoding, int class_count) {
    if (encoding == LabelEncoding::OneHot) return class_count;
    int width = 0;
    while ((1 << width) < class_count) ++width;
    return width;
}

std::vector<BitVec> encode_labels(std::span<const RawRecord> records, LabelEncoding encoding,
                                  std::span<const std::string> class_order) {
    int width = encoded_label_width(encoding, static_cast<int>(class_order.size()));
    std::vector<BitVec> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        auto it = std::find(class_order.begin(), class_order.end(), r.label);
        if (it == class_order.end()) throw UnknownLabel("label '" + r.label + "'");
        int index = static_cast<int>(it - class_order.begin());
        BitVec y(width);
        if (encoding == LabelEncoding::OneHot)
            y.set(index, true);
        else
            y = BitVec::from_index(width, static_cast<std::uint64_t>(index));
        out.push_back(std::move(y));
    }
    return out;
}

int decode_label(const BitVec& y, LabelEncoding encoding, int class_count) {
    if (encoding == LabelEncoding::OneHot) {
        if (y.popcount() != 1) return -1;
        for (int i = 0; i < y.width(); ++i)
            if (y.get(i)) return i < class_count ? i : -1;
        return -1;
    }
    auto index = static_cast<int>(y.to_index());
    return index < class_count ? index : -1;
}

std::vector<RawRecord> filter_classes(std::span<const RawRecord> records,
                                      std::span<const std::string> keep) {
    std::vector<RawRecord> out;
    for (const auto& r : records)
        if (std::find(keep.begin(), keep.end(), r.label) != keep.end()) out.push_back(r);
    return out;
}

std::pair<std::vector<RawRecord>, std::vector<RawRecord>> split_records(
    std::span<const RawRecord> records, double test_fraction, std::uint64_t seed) {
    if (records.empty()) throw EmptyDataset("splitting zero records");
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw RangeError("test_fraction must be in (0, 1)");

    // Classes in first-appearance order for determinism.
    std::vector<std::string> classes;
    std::vector<std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < records.size(); ++i) {
        auto it = std::find(classes.begin(), classes.end(), records[i].label);
        if (it == classes.end()) {
            classes.push_back(records[i].label);
            by_class.emplace_back();
            it = classes.end() - 1;
        }
        by_class[static_cast<std::size_t>(it - classes.begin())].push_back(i);
    }

    std::vector<bool> in_test(records.size(), false);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        auto indices = by_class[c];
        std::mt19937_64 rng(splitmix64(seed + 0x9e3779b97f4a7c15ULL * (c + 1)));
        deterministic_shuffle(indices, rng);
        auto n_test = static_cast<std::size_t>(
            std::llround(test_fraction * static_cast<double>(indices.size())));
        for (std::size_t k = 0; k < n_test; ++k) in_test[indices[k]] = true;
    }

    std::pair<std::vector<RawRecord>, std::vector<RawRecord>> out;
    for (std::size_t i = 0; i < records.size(); ++i)
        (in_test[i] ? out.second : out.first).push_back(records[i]);
    return out;
}

namespace {

std::uint32_t read_be32(std::ifstream& in, const std::string& path) {
    unsigned char bytes[4];
    if (!in.read(reinterpret_cast<char*>(bytes), 4))
        throw IoError("truncated header in " + path);
    return (std::uint32_t{bytes[0]} << 24) | (std::uint32_t{bytes[1]} << 16) |
           (std::uint32_t{bytes[2]} << 8) | std::uint32_t{bytes[3]};
}

}  // namespace

std::vector<RawRecord> load_mnist_idx(const std::string& images_path,
                                      const std::string& labels_path) {
    std::ifstream images(images_path, std::ios::binary);
    if (!images) throw IoError("cannot open " + images_path);
    std::ifstream labels(labels_path, std::ios::binary);
    if (!labels) throw IoError("cannot open " + labels_path);

    std::uint32_t image_magic = read_be32(images, images_path);
    if (image_magic != 0x00000803)
        throw MagicMismatch("bad image magic in " + images_path);
    std::uint32_t image_count = read_be32(images, images_path);
    std::uint32_t rows = read_be32(images, images_path);
    std::uint32_t cols = read_be32(images, images_path);

    std::uint32_t label_magic = read_be32(labels, labels_path);
    if (label_magic != 0x00000801)
        throw MagicMismatch("bad label magic in " + labels_path);
    std::uint32_t label_count = read_be32(labels, labels_path);

    if (image_count != label_count)
        throw CountMismatch(std::to_string(image_count) + " images vs " +
                            std::to_string(label_count) + " labels");

    std::size_t pixels = static_cast<std::size_t>(rows) * cols;
    std::vector<RawRecord> records;
    records.reserve(image_count);
    std::vector<unsigned char> buf(pixels);
    for (std::uint32_t i = 0; i < image_count; ++i) {
        if (!images.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(pixels)))
            throw IoError("truncated image data in " + images_path);
        char label = 0;
        if (!labels.read(&label, 1)) throw IoError("truncated label data in " + labels_path);
        RawRecord r;
        r.features.assign(buf.begin(), buf.end());
        r.label = std::to_string(static_cast<int>(static_cast<unsigned char>(label)));
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<BitVec> binarize_pixels(std::span<const RawRecord> records) {
    std::vector<BitVec> out;
    out.reserve(records.size());
    for (const auto& r : records) {
        BitVec v(static_cast<int>(r.features.size()));
        for (std::size_t i = 0; i < r.features.size(); ++i) {
            double pixel = r.features[i];
            if (pixel < 0.0 || pixel > 255.0)
                throw RangeError("pixel value " + std::to_string(pixel) + " outside [0, 255]");
            v.set(static_cast<int>(i), pixel >= 128.0);
        }
        out.push_back(std::move(v));
    }
    return out;
}

Dataset make_dataset(std::vector<BitVec> xs, std::vector<BitVec> ys, LabelEncoding encoding) {
    if (xs.size() != ys.size())
        throw CountMismatch(std::to_string(xs.size()) + " inputs vs " + std::to_string(ys.size()) +
                            " labels");
    Dataset d;
    d.encoding = encoding;
    if (!xs.empty()) {
        d.input_width = xs[0].width();
        d.label_width = ys[0].width();
    }
    d.examples.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        d.examples.push_back({std::move(xs[i]), std::move(ys[i])});
    return d;
}

}  // namespace rdcirc
