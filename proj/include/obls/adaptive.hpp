#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "obls/linalg.hpp"

namespace obls {

/// Concept-drift variant of Online-BLS. Keeps an exponentially decayed
/// scatter matrix P (P <- mu*P + a a^T) and refactors Chol(P + lambda*I)
/// from scratch on every update, exactly as the decayed recursion is
/// written. At mu = 1 the weight trajectory coincides with OnlineBls.
/// Cost per update is O(m^3), dominated by the factorization; fidelity to
/// the recursion takes priority over speed here.
class AdaptiveBls {
public:
    AdaptiveBls(std::size_t broad_dim, std::size_t num_classes, double lambda, double mu);

    std::vector<double> predict(std::span<const double> a) const;
    void update(std::span<const double> a, std::span<const double> y_one_hot);

    std::size_t broad_dim() const noexcept { return weights_.rows(); }
    std::size_t num_classes() const noexcept { return weights_.cols(); }
    double lambda() const noexcept { return lambda_; }
    double mu() const noexcept { return mu_; }
    std::size_t samples_seen() const noexcept { return samples_seen_; }

    const DenseMatrix& weights() const noexcept { return weights_; }
    const DenseMatrix& scatter() const noexcept { return scatter_; }

private:
    DenseMatrix weights_;
    DenseMatrix scatter_;
    double lambda_;
    double mu_;
    std::size_t samples_seen_ = 0;

    friend struct AdaptiveSnapshot;
};

/// Same layout as the online snapshot with mu in the header and the
/// scatter matrix P appended after W.
struct AdaptiveSnapshot {
    AdaptiveBls state;
    std::uint64_t mapper_seed;

    static AdaptiveSnapshot load(const std::filesystem::path& path);
};

void save_snapshot(const AdaptiveBls& state, std::uint64_t mapper_seed,
                   const std::filesystem::path& path);

} // namespace obls
