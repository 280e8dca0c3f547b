#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "obls/linalg.hpp"

namespace obls {

struct MapperDims {
    std::size_t d = 0;  ///< raw feature count
    std::size_t n1 = 0; ///< feature-node group width
    std::size_t n2 = 0; ///< number of feature-node groups
    std::size_t n3 = 0; ///< enhancement-node group width
    std::size_t n4 = 0; ///< number of enhancement-node groups

    std::size_t broad_dim() const noexcept { return n1 * n2 + n3 * n4; }

    bool operator==(const MapperDims&) const = default;
};

/// Frozen random broad feature mapping. Feature nodes are linear
/// (z_i = x^T W_fi + b_fi); enhancement nodes apply tanh to projections of
/// the concatenated feature-node vector z. The broad feature is
/// a = [z_1 .. z_n2, h_1 .. h_n4] of length n1*n2 + n3*n4.
///
/// All weights and biases are drawn i.i.d. uniform on [-1, 1] from the
/// seed, so equal (dims, seed) always reproduce the identical mapper.
class BroadMapper {
public:
    BroadMapper(MapperDims dims, std::uint64_t seed);

    /// Construction from explicit weights, mainly for tests. The result
    /// has no seed and cannot be serialized.
    static BroadMapper from_weights(MapperDims dims,
                                    std::vector<DenseMatrix> feature_weights,
                                    std::vector<std::vector<double>> feature_biases,
                                    std::vector<DenseMatrix> enhancement_weights,
                                    std::vector<std::vector<double>> enhancement_biases);

    std::vector<double> map(std::span<const double> x) const;

    const MapperDims& dims() const noexcept { return dims_; }
    std::size_t broad_dim() const noexcept { return dims_.broad_dim(); }
    std::optional<std::uint64_t> seed() const noexcept { return seed_; }

    const DenseMatrix& feature_weight(std::size_t i) const { return feature_weights_[i]; }
    std::span<const double> feature_bias(std::size_t i) const { return feature_biases_[i]; }
    const DenseMatrix& enhancement_weight(std::size_t j) const { return enhancement_weights_[j]; }
    std::span<const double> enhancement_bias(std::size_t j) const { return enhancement_biases_[j]; }

    /// Dimensions + seed; enough to rebuild the mapper exactly.
    nlohmann::json to_json() const;
    static BroadMapper from_json(const nlohmann::json& j);

private:
    BroadMapper() = default;

    MapperDims dims_;
    std::optional<std::uint64_t> seed_;
    std::vector<DenseMatrix> feature_weights_;
    std::vector<std::vector<double>> feature_biases_;
    std::vector<DenseMatrix> enhancement_weights_;
    std::vector<std::vector<double>> enhancement_biases_;
};

} // namespace obls
