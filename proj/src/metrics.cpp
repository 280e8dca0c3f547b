#include "obls/metrics.hpp"

#include <cmath>

#include "obls/errors.hpp"

namespace obls {

ConfusionMatrix::ConfusionMatrix(std::size_t num_classes)
    : num_classes_(num_classes), counts_(num_classes * num_classes, 0) {
    if (num_classes == 0) {
        throw InvalidDimension("ConfusionMatrix: need at least one class");
    }
}

void ConfusionMatrix::record(std::size_t true_label, std::size_t predicted_label) {
    if (true_label >= num_classes_ || predicted_label >= num_classes_) {
        throw InvalidLabel("ConfusionMatrix::record: label out of range");
    }
    ++counts_[true_label * num_classes_ + predicted_label];
    ++total_;
}

namespace {

void require_scored(const ConfusionMatrix& cm, const char* who) {
    if (cm.total() == 0) {
        throw EmptyMatrix(std::string(who) + ": no samples recorded");
    }
}

} // namespace

double oca(const ConfusionMatrix& cm) {
    require_scored(cm, "oca");
    std::uint64_t trace = 0;
    for (std::size_t i = 0; i < cm.num_classes(); ++i) {
        trace += cm.count(i, i);
    }
    return static_cast<double>(trace) / static_cast<double>(cm.total());
}

double oce(const ConfusionMatrix& cm) {
    return 1.0 - oca(cm);
}

double bacc(const ConfusionMatrix& cm) {
    require_scored(cm, "bacc");
    double sum = 0.0;
    std::size_t supported = 0;
    for (std::size_t i = 0; i < cm.num_classes(); ++i) {
        std::uint64_t row = 0;
        for (std::size_t j = 0; j < cm.num_classes(); ++j) {
            row += cm.count(i, j);
        }
        if (row == 0) {
            continue;
        }
        sum += static_cast<double>(cm.count(i, i)) / static_cast<double>(row);
        ++supported;
    }
    return sum / static_cast<double>(supported);
}

double macro_f1(const ConfusionMatrix& cm) {
    require_scored(cm, "macro_f1");
    double sum = 0.0;
    std::size_t included = 0;
    for (std::size_t i = 0; i < cm.num_classes(); ++i) {
        std::uint64_t row = 0;
        std::uint64_t col = 0;
        for (std::size_t j = 0; j < cm.num_classes(); ++j) {
            row += cm.count(i, j);
            col += cm.count(j, i);
        }
        if (row == 0 && col == 0) {
            continue;
        }
        ++included;
        const double tp = static_cast<double>(cm.count(i, i));
        const double recall = row > 0 ? tp / static_cast<double>(row) : 0.0;
        const double precision = col > 0 ? tp / static_cast<double>(col) : 0.0;
        if (recall + precision > 0.0) {
            sum += 2.0 * recall * precision / (recall + precision);
        }
    }
    return sum / static_cast<double>(included);
}

double mcc(const ConfusionMatrix& cm) {
    require_scored(cm, "mcc");
    const std::size_t c = cm.num_classes();
    const double n = static_cast<double>(cm.total());

    double trace = 0.0;
    double tp_dot = 0.0; // sum_k true_k * pred_k
    double tt_sq = 0.0;
    double pp_sq = 0.0;
    for (std::size_t i = 0; i < c; ++i) {
        trace += static_cast<double>(cm.count(i, i));
        double row = 0.0;
        double col = 0.0;
        for (std::size_t j = 0; j < c; ++j) {
            row += static_cast<double>(cm.count(i, j));
            col += static_cast<double>(cm.count(j, i));
        }
        tp_dot += row * col;
        tt_sq += row * row;
        pp_sq += col * col;
    }

    const double cov_xy = n * trace - tp_dot;
    const double cov_xx = n * n - pp_sq;
    const double cov_yy = n * n - tt_sq;
    if (cov_xx <= 0.0 || cov_yy <= 0.0) {
        return 0.0;
    }
    return cov_xy / std::sqrt(cov_xx * cov_yy);
}

double avrbacc(std::span<const double> bacc_history) {
    if (bacc_history.empty()) {
        throw EmptyHistory("avrbacc: empty balanced-accuracy history");
    }
    double sum = 0.0;
    for (double v : bacc_history) {
        sum += v;
    }
    return sum / static_cast<double>(bacc_history.size());
}

} // namespace obls
