#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "obls/errors.hpp"

namespace obls {

/// One-hot target vector for a class index.
inline std::vector<double> one_hot(std::size_t label, std::size_t num_classes) {
    if (label >= num_classes) {
        throw InvalidLabel("one_hot: label index out of range");
    }
    std::vector<double> y(num_classes, 0.0);
    y[label] = 1.0;
    return y;
}

/// Index of the largest score; ties break to the lowest index.
inline std::size_t argmax(std::span<const double> scores) {
    if (scores.empty()) {
        throw InvalidArgument("argmax: empty score vector");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] > scores[best]) {
            best = i;
        }
    }
    return best;
}

/// True when y has exactly one entry equal to 1 and the rest equal to 0.
inline bool is_one_hot(std::span<const double> y) {
    std::size_t ones = 0;
    for (double v : y) {
        if (v == 1.0) {
            ++ones;
        } else if (v != 0.0) {
            return false;
        }
    }
    return ones == 1;
}

} // namespace obls
