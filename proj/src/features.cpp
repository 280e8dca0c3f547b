#include "obls/features.hpp"

#include <cmath>
#include <utility>

#include "obls/errors.hpp"
#include "obls/rng.hpp"

namespace obls {

namespace {

void validate_dims(const MapperDims& dims) {
    if (dims.d == 0 || dims.n1 == 0 || dims.n2 == 0 || dims.n3 == 0 || dims.n4 == 0) {
        throw InvalidDimension("BroadMapper: all dimensions must be >= 1");
    }
}

DenseMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    DenseMatrix m(rows, cols);
    for (double& v : m.data()) {
        v = rng.uniform(-1.0, 1.0);
    }
    return m;
}

std::vector<double> random_vector(Rng& rng, std::size_t n) {
    std::vector<double> v(n);
    for (double& x : v) {
        x = rng.uniform(-1.0, 1.0);
    }
    return v;
}

} // namespace

BroadMapper::BroadMapper(MapperDims dims, std::uint64_t seed) {
    validate_dims(dims);
    dims_ = dims;
    seed_ = seed;

    // Fixed draw order: feature groups first (weights then bias), then
    // enhancement groups. Changing this order would break reproducibility
    // of serialized mappers.
    Rng rng(seed);
    feature_weights_.reserve(dims.n2);
    feature_biases_.reserve(dims.n2);
    for (std::size_t i = 0; i < dims.n2; ++i) {
        feature_weights_.push_back(random_matrix(rng, dims.d, dims.n1));
        feature_biases_.push_back(random_vector(rng, dims.n1));
    }
    enhancement_weights_.reserve(dims.n4);
    enhancement_biases_.reserve(dims.n4);
    for (std::size_t j = 0; j < dims.n4; ++j) {
        enhancement_weights_.push_back(random_matrix(rng, dims.n1 * dims.n2, dims.n3));
        enhancement_biases_.push_back(random_vector(rng, dims.n3));
    }
}

BroadMapper BroadMapper::from_weights(MapperDims dims,
                                      std::vector<DenseMatrix> feature_weights,
                                      std::vector<std::vector<double>> feature_biases,
                                      std::vector<DenseMatrix> enhancement_weights,
                                      std::vector<std::vector<double>> enhancement_biases) {
    validate_dims(dims);
    if (feature_weights.size() != dims.n2 || feature_biases.size() != dims.n2 ||
        enhancement_weights.size() != dims.n4 || enhancement_biases.size() != dims.n4) {
        throw DimensionMismatch("from_weights: group counts disagree with dims");
    }
    for (std::size_t i = 0; i < dims.n2; ++i) {
        if (feature_weights[i].rows() != dims.d || feature_weights[i].cols() != dims.n1 ||
            feature_biases[i].size() != dims.n1) {
            throw DimensionMismatch("from_weights: feature group shape mismatch");
        }
    }
    for (std::size_t j = 0; j < dims.n4; ++j) {
        if (enhancement_weights[j].rows() != dims.n1 * dims.n2 ||
            enhancement_weights[j].cols() != dims.n3 ||
            enhancement_biases[j].size() != dims.n3) {
            throw DimensionMismatch("from_weights: enhancement group shape mismatch");
        }
    }

    BroadMapper mapper;
    mapper.dims_ = dims;
    mapper.feature_weights_ = std::move(feature_weights);
    mapper.feature_biases_ = std::move(feature_biases);
    mapper.enhancement_weights_ = std::move(enhancement_weights);
    mapper.enhancement_biases_ = std::move(enhancement_biases);
    return mapper;
}

std::vector<double> BroadMapper::map(std::span<const double> x) const {
    if (x.size() != dims_.d) {
        throw DimensionMismatch("BroadMapper::map: input length != d");
    }
    require_finite(x, "BroadMapper::map");

    const std::size_t zlen = dims_.n1 * dims_.n2;
    std::vector<double> out(broad_dim(), 0.0);

    // z_i = x^T W_fi + b_fi, concatenated into out[0 .. n1*n2)
    for (std::size_t g = 0; g < dims_.n2; ++g) {
        const DenseMatrix& w = feature_weights_[g];
        const std::vector<double>& b = feature_biases_[g];
        double* z = out.data() + g * dims_.n1;
        for (std::size_t j = 0; j < dims_.n1; ++j) {
            z[j] = b[j];
        }
        for (std::size_t r = 0; r < dims_.d; ++r) {
            const double xr = x[r];
            if (xr == 0.0) {
                continue;
            }
            const double* wrow = w.row(r);
            for (std::size_t j = 0; j < dims_.n1; ++j) {
                z[j] += xr * wrow[j];
            }
        }
    }

    // h_j = tanh(z^T W_ej + b_ej), appended after the feature block
    std::span<const double> z(out.data(), zlen);
    for (std::size_t g = 0; g < dims_.n4; ++g) {
        const DenseMatrix& w = enhancement_weights_[g];
        const std::vector<double>& b = enhancement_biases_[g];
        double* h = out.data() + zlen + g * dims_.n3;
        for (std::size_t j = 0; j < dims_.n3; ++j) {
            h[j] = b[j];
        }
        for (std::size_t r = 0; r < zlen; ++r) {
            const double zr = z[r];
            if (zr == 0.0) {
                continue;
            }
            const double* wrow = w.row(r);
            for (std::size_t j = 0; j < dims_.n3; ++j) {
                h[j] += zr * wrow[j];
            }
        }
        for (std::size_t j = 0; j < dims_.n3; ++j) {
            h[j] = std::tanh(h[j]);
        }
    }
    return out;
}

nlohmann::json BroadMapper::to_json() const {
    if (!seed_) {
        throw InvalidArgument("BroadMapper::to_json: mapper built from explicit weights has no seed");
    }
    return nlohmann::json{
        {"format", "obls-mapper"},
        {"version", 1},
        {"d", dims_.d},
        {"n1", dims_.n1},
        {"n2", dims_.n2},
        {"n3", dims_.n3},
        {"n4", dims_.n4},
        {"seed", *seed_},
    };
}

BroadMapper BroadMapper::from_json(const nlohmann::json& j) {
    if (j.value("format", "") != "obls-mapper" || j.value("version", 0) != 1) {
        throw SchemaMismatch("BroadMapper::from_json: unrecognized mapper header");
    }
    MapperDims dims{j.at("d").get<std::size_t>(), j.at("n1").get<std::size_t>(),
                    j.at("n2").get<std::size_t>(), j.at("n3").get<std::size_t>(),
                    j.at("n4").get<std::size_t>()};
    return BroadMapper(dims, j.at("seed").get<std::uint64_t>());
}

} // namespace obls
