#include "obls/baselines.hpp"

#include <cmath>

#include "obls/errors.hpp"
#include "obls/labels.hpp"

namespace obls {

namespace {

void check_update_inputs(std::span<const double> a, std::span<const double> y,
                         std::size_t m, std::size_t c, const char* who) {
    if (a.size() != m || y.size() != c) {
        throw DimensionMismatch(std::string(who) + ": input lengths disagree with state");
    }
    require_finite(a, who);
    if (!is_one_hot(y)) {
        throw InvalidLabel(std::string(who) + ": target must be strictly one-hot");
    }
}

double max_abs_value(std::span<const double> v) {
    double best = 0.0;
    for (double x : v) {
        best = std::max(best, std::abs(x));
    }
    return best;
}

} // namespace

// ---------------------------------------------------------------------------
// I-BLS
// ---------------------------------------------------------------------------

IBls::IBls(std::size_t broad_dim, std::size_t num_classes, double lambda)
    : broad_dim_(broad_dim),
      num_classes_(num_classes),
      lambda_(lambda),
      weights_(broad_dim, num_classes) {
    if (broad_dim == 0 || num_classes == 0) {
        throw InvalidDimension("IBls: dimensions must be >= 1");
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidLambda("IBls: lambda must be a positive finite real");
    }
}

std::vector<double> IBls::predict(std::span<const double> a) const {
    return left_multiply(a, weights_);
}

void IBls::update(std::span<const double> a, std::span<const double> y_one_hot) {
    check_update_inputs(a, y_one_hot, broad_dim_, num_classes_, "IBls::update");
    const std::size_t m = broad_dim_;

    if (features_.empty()) {
        // (a^T)^+ = (a a^T + lambda I)^{-1} a = a / (a^T a + lambda); the
        // Sherman-Morrison form of the same expression stays accurate even
        // when lambda is tiny, where a dense inverse of the rank-one-plus-
        // ridge matrix would lose most of its digits
        double gram = lambda_;
        for (double x : a) {
            gram += x * x;
        }
        std::vector<double> pinv_col(a.begin(), a.end());
        for (double& x : pinv_col) {
            x /= gram;
        }
        pinv_rows_.push_back(std::move(pinv_col));
    } else {
        const std::size_t k_prev = features_.size();

        // D = pinv^T a  (one entry per previous sample)
        std::vector<double> d(k_prev, 0.0);
        for (std::size_t j = 0; j < k_prev; ++j) {
            const std::vector<double>& prow = pinv_rows_[j];
            double sum = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                sum += prow[i] * a[i];
            }
            d[j] = sum;
        }

        // Q^T = a - A^T D, the part of a outside the span of earlier rows
        std::vector<double> q(a.begin(), a.end());
        for (std::size_t j = 0; j < k_prev; ++j) {
            const double dj = d[j];
            if (dj == 0.0) {
                continue;
            }
            const std::vector<double>& arow = features_[j];
            for (std::size_t i = 0; i < m; ++i) {
                q[i] -= dj * arow[i];
            }
        }

        const double q_tol = 1e-10 * (1.0 + max_abs_value(a));
        std::vector<double> f(m, 0.0);
        if (max_abs_value(q) > q_tol) {
            // Q^+ of a row vector is Q^T / (Q Q^T)
            double qq = 0.0;
            for (double x : q) {
                qq += x * x;
            }
            for (std::size_t i = 0; i < m; ++i) {
                f[i] = q[i] / qq;
            }
        } else {
            // F = pinv D (1 + D^T D)^{-1}; scalar denominator for a
            // single-sample increment
            double dd = 0.0;
            for (double x : d) {
                dd += x * x;
            }
            for (std::size_t j = 0; j < k_prev; ++j) {
                const double dj = d[j];
                if (dj == 0.0) {
                    continue;
                }
                const std::vector<double>& prow = pinv_rows_[j];
                for (std::size_t i = 0; i < m; ++i) {
                    f[i] += dj * prow[i];
                }
            }
            const double denom = 1.0 + dd;
            for (std::size_t i = 0; i < m; ++i) {
                f[i] /= denom;
            }
        }

        // pinv <- [pinv - F D^T | F]
        for (std::size_t j = 0; j < k_prev; ++j) {
            const double dj = d[j];
            if (dj == 0.0) {
                continue;
            }
            std::vector<double>& prow = pinv_rows_[j];
            for (std::size_t i = 0; i < m; ++i) {
                prow[i] -= dj * f[i];
            }
        }
        pinv_rows_.push_back(std::move(f));
    }

    features_.emplace_back(a.begin(), a.end());
    targets_.emplace_back(y_one_hot.begin(), y_one_hot.end());

    // W = pinv Y, recomputed over the whole history (cost grows with k)
    DenseMatrix w(m, num_classes_);
    for (std::size_t j = 0; j < pinv_rows_.size(); ++j) {
        const std::vector<double>& prow = pinv_rows_[j];
        const std::vector<double>& yrow = targets_[j];
        for (std::size_t i = 0; i < m; ++i) {
            const double p = prow[i];
            if (p == 0.0) {
                continue;
            }
            double* wrow = w.row(i);
            for (std::size_t cidx = 0; cidx < num_classes_; ++cidx) {
                wrow[cidx] += p * yrow[cidx];
            }
        }
    }
    weights_ = std::move(w);
}

// ---------------------------------------------------------------------------
// RI-BLS
// ---------------------------------------------------------------------------

RiBls::RiBls(std::size_t broad_dim, std::size_t num_classes, double lambda)
    : scatter_(broad_dim, broad_dim),
      cross_(broad_dim, num_classes),
      weights_(broad_dim, num_classes),
      lambda_(lambda) {
    if (broad_dim == 0 || num_classes == 0) {
        throw InvalidDimension("RiBls: dimensions must be >= 1");
    }
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InvalidLambda("RiBls: lambda must be a positive finite real");
    }
}

std::vector<double> RiBls::predict(std::span<const double> a) const {
    return left_multiply(a, weights_);
}

void RiBls::update(std::span<const double> a, std::span<const double> y_one_hot) {
    check_update_inputs(a, y_one_hot, broad_dim(), num_classes(), "RiBls::update");
    const std::size_t m = broad_dim();

    for (std::size_t i = 0; i < m; ++i) {
        const double ai = a[i];
        double* urow = scatter_.row(i);
        for (std::size_t j = 0; j < m; ++j) {
            urow[j] += ai * a[j];
        }
        double* vrow = cross_.row(i);
        for (std::size_t cidx = 0; cidx < num_classes(); ++cidx) {
            vrow[cidx] += ai * y_one_hot[cidx];
        }
    }

    DenseMatrix regularized = scatter_;
    for (std::size_t i = 0; i < m; ++i) {
        regularized(i, i) += lambda_;
    }
    weights_ = multiply(invert(regularized), cross_);
    ++samples_seen_;
}

// ---------------------------------------------------------------------------
// BLS-CIL
// ---------------------------------------------------------------------------

BlsCil::BlsCil(std::size_t broad_dim, std::size_t num_classes, double lambda1, double lambda2)
    : broad_dim_(broad_dim),
      lambda1_(lambda1),
      lambda2_(lambda2),
      correlation_(broad_dim, broad_dim),
      weights_(broad_dim, num_classes) {
    if (broad_dim == 0 || num_classes == 0) {
        throw InvalidDimension("BlsCil: dimensions must be >= 1");
    }
    if (!(lambda1 >= 0.0) || !(lambda2 >= 0.0) || !std::isfinite(lambda1) || !std::isfinite(lambda2)) {
        throw InvalidLambda("BlsCil: lambda1/lambda2 must be nonnegative finite reals");
    }
}

std::vector<double> BlsCil::predict(std::span<const double> a) const {
    return left_multiply(a, weights_);
}

void BlsCil::update(std::span<const double> a, std::span<const double> y_one_hot) {
    check_update_inputs(a, y_one_hot, broad_dim_, num_classes(), "BlsCil::update");
    const std::size_t m = broad_dim_;

    if (samples_seen_ == 0) {
        correlation_ = outer_product(a, a);
        for (std::size_t i = 0; i < m; ++i) {
            correlation_(i, i) += 1.0;
        }
        weights_ = multiply(invert(correlation_), outer_product(a, y_one_hot));
    } else {
        const bool same_class = argmax(y_one_hot) == argmax(prev_target_);
        const double lam = same_class ? lambda2_ : -lambda1_;

        // H = a a^T + lam (p p^T - a p^T + a a^T - p a^T); grouped so the
        // (i,j) and (j,i) evaluations share operands, keeping K exactly
        // symmetric in floating point
        DenseMatrix h(m, m);
        const std::vector<double>& p = prev_feature_;
        for (std::size_t i = 0; i < m; ++i) {
            const double ai = a[i];
            const double pi = p[i];
            for (std::size_t j = i; j < m; ++j) {
                const double aa = ai * a[j];
                const double cross = ai * p[j] + pi * a[j];
                const double value = aa + lam * (pi * p[j] + aa - cross);
                h(i, j) = value;
                h(j, i) = value;
            }
        }

        add_in_place(correlation_, h);
        DenseMatrix inv = invert(correlation_);
        // W <- W + K^{-1} (a y^T - H W)
        DenseMatrix gain = subtract(outer_product(a, y_one_hot), multiply(h, weights_));
        add_in_place(weights_, multiply(inv, gain));
    }

    prev_feature_.assign(a.begin(), a.end());
    prev_target_.assign(y_one_hot.begin(), y_one_hot.end());
    ++samples_seen_;
}

} // namespace obls
