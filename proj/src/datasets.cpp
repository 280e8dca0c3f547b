#include "obls/datasets.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

#include "obls/errors.hpp"

namespace obls {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return s.substr(begin, end - begin);
}

/// Splits one CSV line on commas, honoring double-quoted fields with ""
/// escapes.
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(ch);
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(trim(cur));
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

bool is_missing(const std::string& cell) {
    return cell.empty() || cell == "?";
}

/// Resolves a column reference (header name, else decimal index) to an
/// index into the header vector.
std::size_t resolve_column(const std::string& ref, const std::vector<std::string>& header,
                           const char* what) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == ref) {
            return i;
        }
    }
    if (!ref.empty() && std::all_of(ref.begin(), ref.end(), [](unsigned char ch) {
            return std::isdigit(ch);
        })) {
        const std::size_t idx = std::stoull(ref);
        if (idx < header.size()) {
            return idx;
        }
    }
    throw SchemaMismatch(std::string(what) + " column '" + ref + "' not found");
}

} // namespace

Stream load_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) {
        throw FileNotFound("load_csv: cannot open " + path);
    }

    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (trim(line).empty()) {
            continue;
        }
        rows.push_back(split_csv_line(line));
    }
    if (rows.empty()) {
        throw SchemaMismatch("load_csv: file has no rows");
    }

    std::vector<std::string> header;
    std::size_t first_data_row = 0;
    if (schema.has_header) {
        header = rows[0];
        first_data_row = 1;
    } else {
        header.resize(rows[0].size());
        for (std::size_t i = 0; i < header.size(); ++i) {
            header[i] = std::to_string(i);
        }
    }

    const std::size_t label_idx = resolve_column(schema.label_column, header, "label");
    std::vector<bool> dropped(header.size(), false);
    for (const std::string& ref : schema.drop_columns) {
        dropped[resolve_column(ref, header, "drop")] = true;
    }
    if (dropped[label_idx]) {
        throw SchemaMismatch("load_csv: label column is also listed as dropped");
    }

    std::vector<std::size_t> feature_cols;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i != label_idx && !dropped[i]) {
            feature_cols.push_back(i);
        }
    }
    if (feature_cols.empty()) {
        throw SchemaMismatch("load_csv: no feature columns remain");
    }

    // keep rows with the right arity and no missing cells
    std::vector<const std::vector<std::string>*> kept;
    for (std::size_t r = first_data_row; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != header.size()) {
            throw SchemaMismatch("load_csv: row " + std::to_string(r + 1) + " has " +
                                 std::to_string(row.size()) + " fields, expected " +
                                 std::to_string(header.size()));
        }
        bool missing = is_missing(row[label_idx]);
        for (std::size_t c : feature_cols) {
            missing = missing || is_missing(row[c]);
        }
        if (!missing) {
            kept.push_back(&row);
        }
    }
    if (kept.empty()) {
        throw EmptyAfterCleaning("load_csv: no rows left after dropping missing values");
    }

    // a feature column is numeric only if every kept cell parses
    std::vector<bool> numeric(feature_cols.size(), true);
    for (std::size_t ci = 0; ci < feature_cols.size(); ++ci) {
        for (const auto* row : kept) {
            double value;
            if (!parse_double((*row)[feature_cols[ci]], value)) {
                numeric[ci] = false;
                break;
            }
        }
    }

    // categorical codes by first appearance
    std::vector<std::unordered_map<std::string, double>> codes(feature_cols.size());
    for (std::size_t ci = 0; ci < feature_cols.size(); ++ci) {
        if (numeric[ci]) {
            continue;
        }
        auto& map = codes[ci];
        for (const auto* row : kept) {
            const std::string& cell = (*row)[feature_cols[ci]];
            map.emplace(cell, static_cast<double>(map.size()));
        }
    }

    // label classes: numeric labels sort by value, otherwise first appearance
    std::vector<std::string> class_names;
    std::unordered_map<std::string, std::size_t> class_index;
    {
        bool labels_numeric = true;
        for (const auto* row : kept) {
            double value;
            if (!parse_double((*row)[label_idx], value)) {
                labels_numeric = false;
                break;
            }
        }
        if (labels_numeric) {
            std::map<double, std::string> ordered;
            for (const auto* row : kept) {
                double value;
                parse_double((*row)[label_idx], value);
                ordered.emplace(value, (*row)[label_idx]);
            }
            for (const auto& [value, name] : ordered) {
                class_index.emplace(name, class_names.size());
                class_names.push_back(name);
            }
            // distinct strings mapping to the same numeric value share a class
            for (const auto* row : kept) {
                const std::string& cell = (*row)[label_idx];
                if (!class_index.contains(cell)) {
                    double value;
                    parse_double(cell, value);
                    class_index.emplace(cell, class_index.at(ordered.at(value)));
                }
            }
        } else {
            for (const auto* row : kept) {
                const std::string& cell = (*row)[label_idx];
                if (class_index.emplace(cell, class_names.size()).second) {
                    class_names.push_back(cell);
                }
            }
        }
    }

    Stream stream;
    stream.num_features = feature_cols.size();
    stream.num_classes = class_names.size();
    stream.class_names = std::move(class_names);
    stream.samples.reserve(kept.size());
    for (const auto* row : kept) {
        Sample sample;
        sample.features.resize(feature_cols.size());
        for (std::size_t ci = 0; ci < feature_cols.size(); ++ci) {
            const std::string& cell = (*row)[feature_cols[ci]];
            if (numeric[ci]) {
                parse_double(cell, sample.features[ci]);
            } else {
                sample.features[ci] = codes[ci].at(cell);
            }
        }
        sample.label = class_index.at((*row)[label_idx]);
        stream.samples.push_back(std::move(sample));
    }
    return stream;
}

HyperplaneGenerator::HyperplaneGenerator(std::uint64_t seed, const HyperplaneParams& params)
    : params_(params), rng_(seed) {
    if (params.dims == 0) {
        throw InvalidDimension("hyperplane: dims must be >= 1");
    }
    if (params.noise < 0.0 || params.noise >= 1.0) {
        throw InvalidArgument("hyperplane: noise must lie in [0, 1)");
    }
    weights_.resize(params.dims);
    drift_signs_.resize(params.dims);
    for (std::size_t i = 0; i < params.dims; ++i) {
        weights_[i] = rng_.uniform01();
    }
    for (std::size_t i = 0; i < params.dims; ++i) {
        drift_signs_[i] = rng_.uniform01() < 0.5 ? -1.0 : 1.0;
    }
}

double HyperplaneGenerator::threshold() const noexcept {
    double sum = 0.0;
    for (double w : weights_) {
        sum += w;
    }
    return sum / 2.0;
}

Sample HyperplaneGenerator::next() {
    Sample sample;
    sample.features.resize(params_.dims);
    for (double& f : sample.features) {
        f = rng_.uniform01();
    }

    double dot = 0.0;
    for (std::size_t i = 0; i < params_.dims; ++i) {
        dot += weights_[i] * sample.features[i];
    }
    bool positive = dot > threshold();
    if (rng_.uniform01() < params_.noise) {
        positive = !positive;
    }
    sample.label = positive ? 1 : 0;

    // weights wander after the sample is emitted
    if (params_.drift_magnitude != 0.0) {
        for (std::size_t i = 0; i < params_.dims; ++i) {
            weights_[i] += drift_signs_[i] * params_.drift_magnitude * std::abs(rng_.gaussian());
            if (rng_.uniform01() < params_.sign_flip_prob) {
                drift_signs_[i] = -drift_signs_[i];
            }
        }
    }
    return sample;
}

Stream hyperplane_stream(std::uint64_t seed, const HyperplaneParams& params, std::size_t count) {
    if (count == 0) {
        throw InvalidArgument("hyperplane_stream: count must be >= 1");
    }
    HyperplaneGenerator gen(seed, params);
    Stream stream;
    stream.num_features = params.dims;
    stream.num_classes = 2;
    stream.class_names = {"0", "1"};
    stream.samples.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        stream.samples.push_back(gen.next());
    }
    return stream;
}

Stream sea_stream(std::uint64_t seed, const SeaParams& params, std::size_t count) {
    if (count == 0) {
        throw InvalidArgument("sea_stream: count must be >= 1");
    }
    if (params.noise < 0.0 || params.noise >= 1.0) {
        throw InvalidArgument("sea_stream: noise must lie in [0, 1)");
    }
    if (params.segment_length == 0) {
        throw InvalidArgument("sea_stream: segment_length must be >= 1");
    }

    Rng rng(seed);
    Stream stream;
    stream.num_features = 3;
    stream.num_classes = 2;
    stream.class_names = {"0", "1"};
    stream.samples.reserve(count);
    for (std::size_t k = 0; k < count; ++k) {
        Sample sample;
        sample.features = {rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)};
        const std::size_t segment = std::min<std::size_t>(k / params.segment_length, 3);
        bool positive = sample.features[0] + sample.features[1] > params.thresholds[segment];
        if (rng.uniform01() < params.noise) {
            positive = !positive;
        }
        sample.label = positive ? 1 : 0;
        stream.samples.push_back(std::move(sample));
    }
    return stream;
}

void min_max_normalize(Stream& stream) {
    if (stream.samples.empty()) {
        return;
    }
    const std::size_t d = stream.num_features;
    std::vector<double> lo(d, std::numeric_limits<double>::infinity());
    std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
    for (const Sample& s : stream.samples) {
        for (std::size_t i = 0; i < d; ++i) {
            lo[i] = std::min(lo[i], s.features[i]);
            hi[i] = std::max(hi[i], s.features[i]);
        }
    }
    for (Sample& s : stream.samples) {
        for (std::size_t i = 0; i < d; ++i) {
            const double range = hi[i] - lo[i];
            s.features[i] = range > 0.0 ? (s.features[i] - lo[i]) / range : 0.0;
        }
    }
}

void shuffle_stream(Stream& stream, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = stream.samples.size(); i > 1; --i) {
        const std::size_t j = rng.below(i);
        std::swap(stream.samples[i - 1], stream.samples[j]);
    }
}

Stream make_stream(const StreamSpec& spec) {
    if (spec.limit && *spec.limit == 0) {
        throw InvalidArgument("make_stream: limit must be >= 1 when present");
    }

    Stream stream;
    switch (spec.source) {
    case StreamSpec::Source::Csv:
        stream = load_csv(spec.csv_path, spec.schema);
        break;
    case StreamSpec::Source::Hyperplane:
        stream = hyperplane_stream(spec.generator_seed, spec.hyperplane, spec.generator_count);
        break;
    case StreamSpec::Source::Sea:
        stream = sea_stream(spec.generator_seed, spec.sea, spec.generator_count);
        break;
    }

    if (spec.normalize) {
        min_max_normalize(stream);
    }
    if (spec.shuffle_seed) {
        shuffle_stream(stream, *spec.shuffle_seed);
    }
    if (spec.limit && stream.samples.size() > *spec.limit) {
        stream.samples.resize(*spec.limit);
    }
    return stream;
}

void write_stream_csv(const Stream& stream, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw FileNotFound("write_stream_csv: cannot open " + path.string());
    }
    for (std::size_t i = 0; i < stream.num_features; ++i) {
        out << 'f' << i << ',';
    }
    out << "label\n";
    char buf[40];
    for (const Sample& s : stream.samples) {
        for (double f : s.features) {
            std::snprintf(buf, sizeof buf, "%.17g", f);
            out << buf << ',';
        }
        const std::string& name =
            s.label < stream.class_names.size() ? stream.class_names[s.label] : std::to_string(s.label);
        out << name << '\n';
    }
}

} // namespace obls
