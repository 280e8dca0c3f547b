#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace obls {

/// Running c-by-c confusion matrix, counts[true][predicted].
class ConfusionMatrix {
public:
    explicit ConfusionMatrix(std::size_t num_classes);

    void record(std::size_t true_label, std::size_t predicted_label);

    std::size_t num_classes() const noexcept { return num_classes_; }
    std::uint64_t total() const noexcept { return total_; }
    std::uint64_t count(std::size_t true_label, std::size_t predicted_label) const {
        return counts_[true_label * num_classes_ + predicted_label];
    }

private:
    std::size_t num_classes_;
    std::vector<std::uint64_t> counts_;
    std::uint64_t total_ = 0;
};

/// Online cumulative accuracy: trace / total.
double oca(const ConfusionMatrix& cm);

/// Online cumulative error; oca + oce == 1 exactly.
double oce(const ConfusionMatrix& cm);

/// Balanced accuracy: mean per-class recall. Classes with no support yet
/// are excluded from the mean.
double bacc(const ConfusionMatrix& cm);

/// Macro F1. A class with neither support nor predictions is excluded;
/// a class where recall+precision is zero contributes 0.
double macro_f1(const ConfusionMatrix& cm);

/// Matthews correlation coefficient. Binary case follows the textbook
/// TP/TN/FP/FN formula; the multiclass case is the correlation form
/// computed from the full matrix, which reduces to the binary formula at
/// c = 2. Returns 0 when the denominator vanishes.
double mcc(const ConfusionMatrix& cm);

/// Mean of the per-step balanced accuracies.
double avrbacc(std::span<const double> bacc_history);

} // namespace obls
