#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mcua/error.hpp"

namespace mcua {

/// Row-major feature matrix with binary labels.
class TrainingSet {
public:
    TrainingSet() = default;
    explicit TrainingSet(std::size_t n_features) : n_features_(n_features) {}

    void add_row(std::span<const double> x, int label) {
        if (n_features_ == 0) n_features_ = x.size();
        if (x.size() != n_features_)
            throw DimensionMismatchError("row width mismatch in training set");
        data_.insert(data_.end(), x.begin(), x.end());
        labels_.push_back(label);
    }

    std::size_t size() const { return labels_.size(); }
    std::size_t n_features() const { return n_features_; }
    const double* row(std::size_t i) const { return data_.data() + i * n_features_; }
    int label(std::size_t i) const { return labels_[i]; }
    const std::vector<int>& labels() const { return labels_; }

    std::size_t count_label(int v) const {
        std::size_t c = 0;
        for (int y : labels_)
            if (y == v) ++c;
        return c;
    }
    bool has_both_labels() const {
        return count_label(0) > 0 && count_label(1) > 0;
    }

private:
    std::size_t n_features_ = 0;
    std::vector<double> data_;
    std::vector<int> labels_;
};

}  // namespace mcua
