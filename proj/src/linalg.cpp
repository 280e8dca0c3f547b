#include "obls/linalg.hpp"

#include <cmath>
#include <utility>

#include "obls/errors.hpp"

namespace obls {

namespace {

constexpr double kSymmetryTolerance = 1e-10;
constexpr double kPivotFloor = 1e-300;

} // namespace

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("multiply: inner dimensions disagree");
    }
    DenseMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* arow = a.row(i);
        double* orow = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = arow[k];
            if (aik == 0.0) {
                continue;
            }
            const double* brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                orow[j] += aik * brow[j];
            }
        }
    }
    return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
    DenseMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = a(i, j);
        }
    }
    return out;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix out = a;
    add_in_place(out, b);
    return out;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("subtract: shapes disagree");
    }
    DenseMatrix out = a;
    auto o = out.data();
    auto bd = b.data();
    for (std::size_t i = 0; i < o.size(); ++i) {
        o[i] -= bd[i];
    }
    return out;
}

void add_in_place(DenseMatrix& target, const DenseMatrix& other) {
    if (target.rows() != other.rows() || target.cols() != other.cols()) {
        throw DimensionMismatch("add: shapes disagree");
    }
    auto t = target.data();
    auto o = other.data();
    for (std::size_t i = 0; i < t.size(); ++i) {
        t[i] += o[i];
    }
}

void scale_in_place(DenseMatrix& target, double factor) {
    for (double& v : target.data()) {
        v *= factor;
    }
}

DenseMatrix outer_product(std::span<const double> u, std::span<const double> v) {
    DenseMatrix out(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double ui = u[i];
        double* row = out.row(i);
        for (std::size_t j = 0; j < v.size(); ++j) {
            row[j] = ui * v[j];
        }
    }
    return out;
}

std::vector<double> left_multiply(std::span<const double> x, const DenseMatrix& w) {
    if (x.size() != w.rows()) {
        throw DimensionMismatch("left_multiply: vector length != matrix rows");
    }
    std::vector<double> out(w.cols(), 0.0);
    for (std::size_t i = 0; i < w.rows(); ++i) {
        const double xi = x[i];
        if (xi == 0.0) {
            continue;
        }
        const double* row = w.row(i);
        for (std::size_t j = 0; j < w.cols(); ++j) {
            out[j] += xi * row[j];
        }
    }
    return out;
}

double frobenius_norm(const DenseMatrix& a) {
    double sum = 0.0;
    for (double v : a.data()) {
        sum += v * v;
    }
    return std::sqrt(sum);
}

double max_abs(const DenseMatrix& a) {
    double best = 0.0;
    for (double v : a.data()) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

bool all_finite(const DenseMatrix& a) {
    return all_finite(a.data());
}

bool all_finite(std::span<const double> v) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            return false;
        }
    }
    return true;
}

void require_finite(const DenseMatrix& a, const char* what) {
    if (!all_finite(a)) {
        throw NonFiniteInput(std::string(what) + ": non-finite entry");
    }
}

void require_finite(std::span<const double> v, const char* what) {
    if (!all_finite(v)) {
        throw NonFiniteInput(std::string(what) + ": non-finite entry");
    }
}

LowerTriangularFactor::LowerTriangularFactor(DenseMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols()) {
        throw DimensionMismatch("LowerTriangularFactor: matrix not square");
    }
    require_finite(matrix_, "LowerTriangularFactor");
    for (std::size_t i = 0; i < matrix_.rows(); ++i) {
        if (!(matrix_(i, i) > 0.0)) {
            throw NotPositiveDefinite("LowerTriangularFactor: non-positive diagonal entry");
        }
        for (std::size_t j = i + 1; j < matrix_.cols(); ++j) {
            if (matrix_(i, j) != 0.0) {
                throw InvalidArgument("LowerTriangularFactor: nonzero entry above the diagonal");
            }
        }
    }
}

LowerTriangularFactor LowerTriangularFactor::scaled_identity(std::size_t dim, double value) {
    if (!(value > 0.0)) {
        throw NotPositiveDefinite("scaled_identity: value must be positive");
    }
    DenseMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = value;
    }
    return LowerTriangularFactor(std::move(m), unchecked_tag{});
}

LowerTriangularFactor cholesky(const DenseMatrix& spd) {
    if (spd.rows() != spd.cols()) {
        throw DimensionMismatch("cholesky: matrix not square");
    }
    require_finite(spd, "cholesky");

    const std::size_t m = spd.rows();
    const double scale = max_abs(spd);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (std::abs(spd(i, j) - spd(j, i)) > kSymmetryTolerance * scale) {
                throw InvalidArgument("cholesky: matrix not symmetric within tolerance");
            }
        }
    }

    // Work on the symmetrized input, overwriting the lower triangle with L.
    DenseMatrix l(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            l(i, j) = 0.5 * (spd(i, j) + spd(j, i));
        }
    }

    for (std::size_t i = 0; i < m; ++i) {
        double* li = l.row(i);
        for (std::size_t j = 0; j <= i; ++j) {
            const double* lj = l.row(j);
            double sum = li[j];
            for (std::size_t d = 0; d < j; ++d) {
                sum -= li[d] * lj[d];
            }
            if (j < i) {
                li[j] = sum / lj[j];
            } else {
                if (!(sum > 0.0) || !std::isfinite(sum)) {
                    throw NotPositiveDefinite("cholesky: non-positive pivot");
                }
                li[j] = std::sqrt(sum);
            }
        }
    }
    return LowerTriangularFactor(std::move(l), LowerTriangularFactor::unchecked_tag{});
}

DenseMatrix forward_substitute(const LowerTriangularFactor& factor, const DenseMatrix& rhs) {
    const DenseMatrix& l = factor.matrix();
    if (factor.dim() != rhs.rows()) {
        throw DimensionMismatch("forward_substitute: factor dim != rhs rows");
    }
    const std::size_t m = factor.dim();
    const std::size_t c = rhs.cols();
    DenseMatrix out = rhs;
    for (std::size_t i = 0; i < m; ++i) {
        const double* li = l.row(i);
        double* oi = out.row(i);
        for (std::size_t d = 0; d < i; ++d) {
            const double lid = li[d];
            if (lid == 0.0) {
                continue;
            }
            const double* od = out.row(d);
            for (std::size_t j = 0; j < c; ++j) {
                oi[j] -= lid * od[j];
            }
        }
        const double diag = li[i];
        if (std::abs(diag) < kPivotFloor) {
            throw SingularFactor("forward_substitute: diagonal entry below 1e-300");
        }
        for (std::size_t j = 0; j < c; ++j) {
            oi[j] /= diag;
        }
    }
    return out;
}

DenseMatrix backward_substitute(const LowerTriangularFactor& factor, const DenseMatrix& rhs) {
    const DenseMatrix& l = factor.matrix();
    if (factor.dim() != rhs.rows()) {
        throw DimensionMismatch("backward_substitute: factor dim != rhs rows");
    }
    const std::size_t m = factor.dim();
    const std::size_t c = rhs.cols();
    DenseMatrix out = rhs;
    for (std::size_t ip = m; ip > 0; --ip) {
        const std::size_t i = ip - 1;
        double* oi = out.row(i);
        for (std::size_t d = i + 1; d < m; ++d) {
            const double ldi = l(d, i); // coefficient of L^T at (i, d)
            if (ldi == 0.0) {
                continue;
            }
            const double* od = out.row(d);
            for (std::size_t j = 0; j < c; ++j) {
                oi[j] -= ldi * od[j];
            }
        }
        const double diag = l(i, i);
        if (std::abs(diag) < kPivotFloor) {
            throw SingularFactor("backward_substitute: diagonal entry below 1e-300");
        }
        for (std::size_t j = 0; j < c; ++j) {
            oi[j] /= diag;
        }
    }
    return out;
}

void rank_one_update_in_place(LowerTriangularFactor& factor, std::span<const double> a) {
    if (factor.dim() != a.size()) {
        throw DimensionMismatch("rank_one_update: factor dim != vector length");
    }
    require_finite(a, "rank_one_update");

    DenseMatrix& l = factor.matrix_;
    const std::size_t m = factor.dim();
    std::vector<double> cs(m), sn(m);
    for (std::size_t i = 0; i < m; ++i) {
        double* li = l.row(i);
        double vi = a[i];
        for (std::size_t j = 0; j < i; ++j) {
            const double lij = li[j];
            li[j] = cs[j] * lij + sn[j] * vi;
            vi = cs[j] * vi - sn[j] * lij;
        }
        const double lii = li[i];
        const double r = std::sqrt(lii * lii + vi * vi);
        // r >= lii > 0, so the Givens pair never needs its sign flipped;
        // keep the diagonal check as an assertion of that invariant.
        if (!(r > 0.0) || !std::isfinite(r)) {
            throw NotPositiveDefinite("rank_one_update: diagonal left the positive range");
        }
        cs[i] = lii / r;
        sn[i] = vi / r;
        li[i] = r;
    }
}

LowerTriangularFactor rank_one_update(const LowerTriangularFactor& factor, std::span<const double> a) {
    LowerTriangularFactor out = factor;
    rank_one_update_in_place(out, a);
    return out;
}

DenseMatrix invert(const DenseMatrix& m) {
    if (m.rows() != m.cols()) {
        throw DimensionMismatch("invert: matrix not square");
    }
    require_finite(m, "invert");

    const std::size_t n = m.rows();
    DenseMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        double* row = aug.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            row[j] = m(i, j);
        }
        row[n + i] = 1.0;
    }

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot_row = col;
        double pivot_mag = std::abs(aug(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double mag = std::abs(aug(r, col));
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = r;
            }
        }
        if (pivot_mag < kPivotFloor) {
            throw SingularMatrix("invert: pivot magnitude below 1e-300");
        }
        if (pivot_row != col) {
            double* a = aug.row(col);
            double* b = aug.row(pivot_row);
            for (std::size_t j = 0; j < 2 * n; ++j) {
                std::swap(a[j], b[j]);
            }
        }

        double* prow = aug.row(col);
        const double inv_pivot = 1.0 / prow[col];
        // columns left of the pivot are already exactly zero in every row
        prow[col] = 1.0;
        for (std::size_t j = col + 1; j < 2 * n; ++j) {
            prow[j] *= inv_pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) {
                continue;
            }
            double* row = aug.row(r);
            const double f = row[col];
            if (f == 0.0) {
                continue;
            }
            row[col] = 0.0;
            for (std::size_t j = col + 1; j < 2 * n; ++j) {
                row[j] -= f * prow[j];
            }
        }
    }

    DenseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double* row = aug.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = row[n + j];
        }
    }
    return out;
}

} // namespace obls
