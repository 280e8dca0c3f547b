#pragma once

#include <span>
#include <vector>

#include "obls/linalg.hpp"

namespace obls {

/// I-BLS: Greville pseudoinverse recursion. Keeps every broad feature row
/// seen so far plus the current pseudoinverse, both growing with k, so the
/// per-update cost and memory grow with the stream; this is the point of
/// contrast with OnlineBls and is deliberately not optimized away. Routes
/// through an explicit inverse once, for the first sample.
class IBls {
public:
    IBls(std::size_t broad_dim, std::size_t num_classes, double lambda);

    std::vector<double> predict(std::span<const double> a) const;
    void update(std::span<const double> a, std::span<const double> y_one_hot);

    std::size_t broad_dim() const noexcept { return broad_dim_; }
    std::size_t num_classes() const noexcept { return num_classes_; }
    std::size_t samples_seen() const noexcept { return features_.size(); }
    const DenseMatrix& weights() const noexcept { return weights_; }

private:
    std::size_t broad_dim_;
    std::size_t num_classes_;
    double lambda_;
    DenseMatrix weights_;
    std::vector<std::vector<double>> features_;   // rows a_1^T .. a_k^T
    std::vector<std::vector<double>> pinv_rows_;  // pseudoinverse stored transposed, k rows of length m
    std::vector<std::vector<double>> targets_;    // rows y_1^T .. y_k^T
};

/// RI-BLS: recursive memory matrices U = sum a a^T and V = sum a y^T with
/// W = (U + lambda*I)^{-1} V recomputed through an explicit inverse on
/// every update.
class RiBls {
public:
    RiBls(std::size_t broad_dim, std::size_t num_classes, double lambda);

    std::vector<double> predict(std::span<const double> a) const;
    void update(std::span<const double> a, std::span<const double> y_one_hot);

    std::size_t broad_dim() const noexcept { return scatter_.rows(); }
    std::size_t num_classes() const noexcept { return weights_.cols(); }
    std::size_t samples_seen() const noexcept { return samples_seen_; }
    const DenseMatrix& weights() const noexcept { return weights_; }
    const DenseMatrix& scatter() const noexcept { return scatter_; }

private:
    DenseMatrix scatter_;      // U
    DenseMatrix cross_;        // V
    DenseMatrix weights_;
    double lambda_;
    std::size_t samples_seen_ = 0;
};

/// BLS-CIL: class-correlation regularized recursion. The first sample
/// initializes K = I + a a^T (no ridge term); afterwards K grows by the
/// correlation increment H whose sign depends on whether consecutive
/// labels agree (+lambda2) or differ (-lambda1).
class BlsCil {
public:
    BlsCil(std::size_t broad_dim, std::size_t num_classes, double lambda1, double lambda2);

    std::vector<double> predict(std::span<const double> a) const;
    void update(std::span<const double> a, std::span<const double> y_one_hot);

    std::size_t broad_dim() const noexcept { return broad_dim_; }
    std::size_t num_classes() const noexcept { return weights_.cols(); }
    std::size_t samples_seen() const noexcept { return samples_seen_; }
    const DenseMatrix& weights() const noexcept { return weights_; }
    const DenseMatrix& correlation() const noexcept { return correlation_; }

private:
    std::size_t broad_dim_;
    double lambda1_;
    double lambda2_;
    DenseMatrix correlation_;  // K
    DenseMatrix weights_;
    std::vector<double> prev_feature_;
    std::vector<double> prev_target_;
    std::size_t samples_seen_ = 0;
};

} // namespace obls
