#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcua/models/dataset.hpp"

namespace mcua {

struct TreeParams {
    int max_depth = 0;  // 0: unlimited
    int min_leaf = 1;
};

/// CART with Gini impurity splits. Nodes live in a flat array; node 0 is
/// the root.
struct TreeModel {
    struct Node {
        int feature = -1;       // -1 for leaves
        double threshold = 0.0;  // goes left when x[feature] <= threshold
        int left = -1;
        int right = -1;
        std::int64_t n_pos = 0;
        std::int64_t n_neg = 0;
    };
    std::vector<Node> nodes;
    std::size_t n_features = 0;
    // Per-feature sum of weighted Gini decreases collected while growing.
    std::vector<double> impurity_decrease;

    const Node& leaf_for(std::span<const double> x) const;
    double leaf_frequency(std::span<const double> x) const;
    /// Positive vote iff the leaf positive frequency is >= 0.5.
    int predict(std::span<const double> x) const;
    int max_depth() const;
    int min_leaf_size() const;
};

TreeModel train_cart(const TrainingSet& data, const TreeParams& p);

struct ForestParams {
    int n_trees = 100;
    int mtry = 0;  // 0: ceil(sqrt(d))
    int max_depth = 0;
    int min_leaf = 1;
    bool bootstrap = true;
    std::uint64_t seed = 0;
};

struct ForestModel {
    std::vector<TreeModel> trees;
    std::size_t n_features = 0;
    ForestParams params;
    // in_bag[t][i]: row i was drawn into tree t's bootstrap sample.
    // Training artifact for out-of-bag accounting; not serialized.
    std::vector<std::vector<std::uint8_t>> in_bag;

    /// Fraction of trees voting positive.
    double predict_proba(std::span<const double> x) const;
    int predict(std::span<const double> x) const;
};

ForestModel train_random_forest(const TrainingSet& data, const ForestParams& p);

/// Accuracy over rows using only trees that did not see them in-bag; rows
/// seen by every tree are skipped.
double oob_accuracy(const ForestModel& forest, const TrainingSet& data);

/// Mean-decrease-impurity importances, normalized to sum 1 (all zero when
/// no split exists anywhere in the forest).
std::vector<double> mean_decrease_impurity(const ForestModel& forest);

}  // namespace mcua
