#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace obls {

/// Dense row-major real matrix in double precision. The universal carrier
/// for weights, factors and right-hand sides throughout the library.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    double* row(std::size_t r) { return data_.data() + r * cols_; }
    const double* row(std::size_t r) const { return data_.data() + r * cols_; }

    std::span<const double> data() const noexcept { return data_; }
    std::span<double> data() noexcept { return data_; }

    bool operator==(const DenseMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
void add_in_place(DenseMatrix& target, const DenseMatrix& other);
void scale_in_place(DenseMatrix& target, double factor);

/// u * v^T as a rows=|u| by cols=|v| matrix.
DenseMatrix outer_product(std::span<const double> u, std::span<const double> v);

/// x^T * W, i.e. the length-cols row vector of a linear model's scores.
std::vector<double> left_multiply(std::span<const double> x, const DenseMatrix& w);

double frobenius_norm(const DenseMatrix& a);
double max_abs(const DenseMatrix& a);
bool all_finite(const DenseMatrix& a);
bool all_finite(std::span<const double> v);

/// Throws NonFiniteInput when any entry is NaN or infinite.
void require_finite(const DenseMatrix& a, const char* what);
void require_finite(std::span<const double> v, const char* what);

/// Lower triangular Cholesky factor: strictly-upper entries are exactly
/// zero and every diagonal entry is strictly positive.
class LowerTriangularFactor {
public:
    /// Validates triangularity and diagonal positivity of `m`.
    explicit LowerTriangularFactor(DenseMatrix m);

    /// diag(value, ..., value) of size dim; value must be > 0.
    static LowerTriangularFactor scaled_identity(std::size_t dim, double value);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    double operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }
    const DenseMatrix& matrix() const noexcept { return matrix_; }

    bool operator==(const LowerTriangularFactor& other) const = default;

private:
    struct unchecked_tag {};
    LowerTriangularFactor(DenseMatrix m, unchecked_tag) : matrix_(std::move(m)) {}

    DenseMatrix matrix_;

    friend LowerTriangularFactor cholesky(const DenseMatrix&);
    friend void rank_one_update_in_place(LowerTriangularFactor&, std::span<const double>);
};

/// Cholesky factorization of a symmetric positive definite matrix.
/// The input is symmetrized as (M + M^T)/2 before factoring to absorb
/// accumulation drift; asymmetry beyond 1e-10 relative is rejected.
LowerTriangularFactor cholesky(const DenseMatrix& spd);

/// Solves L * C = B for C, one RHS column per column of B.
DenseMatrix forward_substitute(const LowerTriangularFactor& factor, const DenseMatrix& rhs);

/// Solves L^T * X = C for X.
DenseMatrix backward_substitute(const LowerTriangularFactor& factor, const DenseMatrix& rhs);

/// Replaces L by the factor of L*L^T + a*a^T.
///
/// This is the Givens-rotation update applied as a row sweep: row i of L
/// receives the previously computed rotations (c_j, s_j), j < i, then its
/// diagonal defines rotation i with c_i = l_ii/r, s_i = a_i/r,
/// r = sqrt(l_ii^2 + a_i^2). Cost is O(m^2) scalars; no rotation matrix is
/// ever materialized. With r >= l_ii > 0 the diagonal can never come out
/// negative, so the sign flip of c_i/s_i survives only as a post-check.
void rank_one_update_in_place(LowerTriangularFactor& factor, std::span<const double> a);

/// Copying variant of rank_one_update_in_place.
LowerTriangularFactor rank_one_update(const LowerTriangularFactor& factor, std::span<const double> a);

/// M^{-1} by Gauss-Jordan elimination with partial pivoting. Used only by
/// the inverse-based baseline models, never on the Online-BLS path.
DenseMatrix invert(const DenseMatrix& m);

} // namespace obls
