#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "obls/rng.hpp"

namespace obls {

struct Sample {
    std::vector<double> features;
    std::size_t label = 0;
};

/// A fully materialized, ordered stream of labeled samples.
struct Stream {
    std::vector<Sample> samples;
    std::size_t num_features = 0;
    std::size_t num_classes = 0;
    std::vector<std::string> class_names; ///< class index -> original label value

    std::size_t size() const noexcept { return samples.size(); }
};

/// Columns are referenced by header name or by 0-based index given as a
/// decimal string. Cells that are empty or "?" count as missing and drop
/// the whole row. A feature column whose remaining cells are not all
/// numeric is treated as categorical and encoded by first appearance.
struct CsvSchema {
    bool has_header = true;
    std::string label_column = "label";
    std::vector<std::string> drop_columns;
};

struct HyperplaneParams {
    std::size_t dims = 20;
    double noise = 0.01;           ///< label flip probability
    double drift_magnitude = 0.005;
    double sign_flip_prob = 0.1;   ///< chance a weight's drift direction reverses per step
};

struct SeaParams {
    double noise = 0.10;
    std::size_t segment_length = 25000;
    std::array<double, 4> thresholds{8.0, 9.0, 7.0, 9.5};
};

/// Stream construction recipe: a source plus the preprocessing applied in
/// make_stream, in order: normalize (statistics over the whole set),
/// shuffle, limit.
struct StreamSpec {
    enum class Source { Csv, Hyperplane, Sea };

    Source source = Source::Csv;

    std::string csv_path;
    CsvSchema schema;

    HyperplaneParams hyperplane;
    SeaParams sea;
    std::uint64_t generator_seed = 0;
    std::size_t generator_count = 0;

    bool normalize = false; ///< min-max to [0, 1] per attribute
    std::optional<std::uint64_t> shuffle_seed;
    std::optional<std::size_t> limit;
};

Stream load_csv(const std::string& path, const CsvSchema& schema);

/// Drifting-hyperplane binary stream: features i.i.d. uniform [0,1]^d,
/// hidden weights start uniform [0,1] and wander by a signed Gaussian step
/// of size drift_magnitude whose direction persists between steps. The
/// threshold tracks sum(w)/2 and labels flip with probability noise.
Stream hyperplane_stream(std::uint64_t seed, const HyperplaneParams& params, std::size_t count);

/// SEA binary stream: three features uniform [0,10], only the first two
/// relevant; label = (f1 + f2 > theta) with theta switching across the
/// four configured thresholds every segment_length samples, plus label
/// noise.
Stream sea_stream(std::uint64_t seed, const SeaParams& params, std::size_t count);

/// Step-wise hyperplane generator exposing the hidden weights, so tests
/// can recompute labels against the ground truth.
class HyperplaneGenerator {
public:
    HyperplaneGenerator(std::uint64_t seed, const HyperplaneParams& params);

    Sample next();
    const std::vector<double>& weights() const noexcept { return weights_; }
    double threshold() const noexcept;

private:
    HyperplaneParams params_;
    Rng rng_;
    std::vector<double> weights_;
    std::vector<double> drift_signs_;
};

Stream make_stream(const StreamSpec& spec);

void min_max_normalize(Stream& stream);
void shuffle_stream(Stream& stream, std::uint64_t seed);

/// Writes "f0,...,f{d-1},label" rows; loadable again via load_csv with
/// label column "label".
void write_stream_csv(const Stream& stream, const std::filesystem::path& path);

} // namespace obls
