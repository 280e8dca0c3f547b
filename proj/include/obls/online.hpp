#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "obls/linalg.hpp"

namespace obls {

/// Online-BLS model state: current weights W and the Cholesky factor L of
/// the regularized scatter K = lambda*I + sum a_i a_i^T. K itself is never
/// materialized; each sample advances L by a rank-one factor update and
/// the weight increment comes from two triangular solves. No matrix is
/// ever inverted on this path.
class OnlineBls {
public:
    OnlineBls(std::size_t broad_dim, std::size_t num_classes, double lambda);

    /// Scores a^T W; the predicted class is argmax with lowest-index ties.
    std::vector<double> predict(std::span<const double> a) const;

    /// Consumes one (broad feature, one-hot target) pair. After the call,
    /// W is the exact ridge solution over all samples seen so far.
    void update(std::span<const double> a, std::span<const double> y_one_hot);

    std::size_t broad_dim() const noexcept { return weights_.rows(); }
    std::size_t num_classes() const noexcept { return weights_.cols(); }
    double lambda() const noexcept { return lambda_; }
    std::size_t samples_seen() const noexcept { return samples_seen_; }

    const DenseMatrix& weights() const noexcept { return weights_; }
    const LowerTriangularFactor& factor() const noexcept { return factor_; }

private:
    DenseMatrix weights_;
    LowerTriangularFactor factor_;
    double lambda_;
    std::size_t samples_seen_ = 0;

    friend struct OnlineSnapshot;
};

/// Checkpoint of an OnlineBls state plus the seed of the mapper that feeds
/// it. File layout: one-line JSON header, then W and L as raw
/// little-endian doubles in row-major order.
struct OnlineSnapshot {
    OnlineBls state;
    std::uint64_t mapper_seed;

    static OnlineSnapshot load(const std::filesystem::path& path);
};

void save_snapshot(const OnlineBls& state, std::uint64_t mapper_seed,
                   const std::filesystem::path& path);

} // namespace obls
