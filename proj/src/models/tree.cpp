#include "mcua/models/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mcua/rng.hpp"

namespace mcua {

namespace {

inline double gini(std::int64_t pos, std::int64_t neg) {
    const double n = static_cast<double>(pos + neg);
    if (n == 0.0) return 0.0;
    const double p = static_cast<double>(pos) / n;
    return 2.0 * p * (1.0 - p);
}

struct SplitChoice {
    int feature = -1;
    double threshold = 0.0;
    double decrease = 0.0;  // parent-weighted Gini decrease, already scaled
    bool found = false;
};

class CartBuilder {
public:
    CartBuilder(const TrainingSet& data, const TreeParams& params,
                const std::vector<std::size_t>& rows, int mtry, Rng* rng)
        : data_(data), params_(params), mtry_(mtry), rng_(rng) {
        rows_ = rows;
        model_.n_features = data.n_features();
        model_.impurity_decrease.assign(data.n_features(), 0.0);
        n_root_ = static_cast<double>(rows_.size());
    }

    TreeModel build() {
        grow(0, rows_.size(), 1);
        return std::move(model_);
    }

private:
    // Grows the subtree over rows_[begin, end); returns its node index.
    int grow(std::size_t begin, std::size_t end, int depth) {
        std::int64_t pos = 0;
        for (std::size_t i = begin; i < end; ++i)
            pos += data_.label(rows_[i]);
        const std::int64_t total = static_cast<std::int64_t>(end - begin);
        const std::int64_t neg = total - pos;

        const int node_index = static_cast<int>(model_.nodes.size());
        model_.nodes.emplace_back();
        model_.nodes[node_index].n_pos = pos;
        model_.nodes[node_index].n_neg = neg;

        const bool depth_ok =
            params_.max_depth == 0 || depth <= params_.max_depth;
        if (pos == 0 || neg == 0 || !depth_ok ||
            total < 2 * params_.min_leaf)
            return node_index;

        const SplitChoice split = best_split(begin, end, pos, neg);
        if (!split.found) return node_index;

        model_.impurity_decrease[split.feature] += split.decrease;

        const auto mid = std::stable_partition(
            rows_.begin() + begin, rows_.begin() + end, [&](std::size_t r) {
                return data_.row(r)[split.feature] <= split.threshold;
            });
        const std::size_t m = static_cast<std::size_t>(mid - rows_.begin());

        model_.nodes[node_index].feature = split.feature;
        model_.nodes[node_index].threshold = split.threshold;
        const int left = grow(begin, m, depth + 1);
        model_.nodes[node_index].left = left;
        const int right = grow(m, end, depth + 1);
        model_.nodes[node_index].right = right;
        return node_index;
    }

    SplitChoice best_split(std::size_t begin, std::size_t end,
                           std::int64_t pos, std::int64_t neg) {
        const std::int64_t total = pos + neg;
        const double parent_gini = gini(pos, neg);
        const double node_weight = static_cast<double>(total) / n_root_;

        std::vector<int> features(data_.n_features());
        std::iota(features.begin(), features.end(), 0);
        if (rng_ != nullptr &&
            mtry_ < static_cast<int>(data_.n_features())) {
            // Fisher-Yates prefix, then sorted so the scan order (and the
            // lowest-index tie-break) stays deterministic.
            for (int k = 0; k < mtry_; ++k) {
                const std::size_t j =
                    k + static_cast<std::size_t>(
                            rand_below(*rng_, features.size() - k));
                std::swap(features[k], features[j]);
            }
            features.resize(mtry_);
            std::sort(features.begin(), features.end());
        }

        SplitChoice best;
        std::vector<std::pair<double, int>> vals(end - begin);
        for (int f : features) {
            for (std::size_t i = begin; i < end; ++i) {
                vals[i - begin] = {data_.row(rows_[i])[f],
                                   data_.label(rows_[i])};
            }
            std::sort(vals.begin(), vals.end());
            std::int64_t lp = 0, ln = 0;
            for (std::size_t k = 0; k + 1 < vals.size(); ++k) {
                lp += vals[k].second;
                ln += 1 - vals[k].second;
                if (vals[k].first == vals[k + 1].first) continue;
                const std::int64_t left_n = lp + ln;
                const std::int64_t right_n = total - left_n;
                if (left_n < params_.min_leaf || right_n < params_.min_leaf)
                    continue;
                const double child =
                    (static_cast<double>(left_n) * gini(lp, ln) +
                     static_cast<double>(right_n) * gini(pos - lp, neg - ln)) /
                    static_cast<double>(total);
                const double decrease = parent_gini - child;
                if (decrease > best.decrease + 1e-15 ||
                    (!best.found && decrease > 1e-15)) {
                    best.found = true;
                    best.feature = f;
                    best.threshold =
                        vals[k].first +
                        (vals[k + 1].first - vals[k].first) / 2.0;
                    best.decrease = decrease;
                }
            }
        }
        if (best.found) best.decrease *= node_weight;
        return best;
    }

    const TrainingSet& data_;
    const TreeParams& params_;
    std::vector<std::size_t> rows_;
    TreeModel model_;
    double n_root_ = 0.0;
    int mtry_ = 0;
    Rng* rng_ = nullptr;
};

}  // namespace

const TreeModel::Node& TreeModel::leaf_for(std::span<const double> x) const {
    if (x.size() != n_features)
        throw DimensionMismatchError("feature vector width mismatch");
    int idx = 0;
    while (nodes[idx].feature >= 0) {
        idx = x[nodes[idx].feature] <= nodes[idx].threshold ? nodes[idx].left
                                                            : nodes[idx].right;
    }
    return nodes[idx];
}

double TreeModel::leaf_frequency(std::span<const double> x) const {
    const Node& leaf = leaf_for(x);
    const double n = static_cast<double>(leaf.n_pos + leaf.n_neg);
    return n == 0.0 ? 0.0 : static_cast<double>(leaf.n_pos) / n;
}

int TreeModel::predict(std::span<const double> x) const {
    return leaf_frequency(x) >= 0.5 ? 1 : 0;
}

int TreeModel::max_depth() const {
    // depth via iterative walk
    int best = 0;
    std::vector<std::pair<int, int>> stack{{0, 1}};
    while (!stack.empty()) {
        const auto [idx, depth] = stack.back();
        stack.pop_back();
        best = std::max(best, depth);
        if (nodes[idx].feature >= 0) {
            stack.push_back({nodes[idx].left, depth + 1});
            stack.push_back({nodes[idx].right, depth + 1});
        }
    }
    return best;
}

int TreeModel::min_leaf_size() const {
    std::int64_t best = -1;
    for (const Node& n : nodes) {
        if (n.feature >= 0) continue;
        const std::int64_t sz = n.n_pos + n.n_neg;
        if (best < 0 || sz < best) best = sz;
    }
    return static_cast<int>(best);
}

TreeModel train_cart(const TrainingSet& data, const TreeParams& p) {
    if (data.size() == 0)
        throw DegenerateLabelsError("empty training set for CART");
    std::vector<std::size_t> rows(data.size());
    std::iota(rows.begin(), rows.end(), 0);
    CartBuilder builder(data, p, rows, static_cast<int>(data.n_features()),
                        nullptr);
    return builder.build();
}

ForestModel train_random_forest(const TrainingSet& data,
                                const ForestParams& p) {
    if (data.size() == 0)
        throw DegenerateLabelsError("empty training set for forest");
    ForestModel forest;
    forest.n_features = data.n_features();
    forest.params = p;
    const int d = static_cast<int>(data.n_features());
    const int mtry =
        p.mtry > 0 ? std::min(p.mtry, d)
                   : static_cast<int>(std::ceil(std::sqrt(double(d))));
    TreeParams tp{p.max_depth, p.min_leaf};
    for (int t = 0; t < p.n_trees; ++t) {
        Rng rng(derive_seed(p.seed, static_cast<std::uint64_t>(t)));
        std::vector<std::size_t> rows;
        std::vector<std::uint8_t> bag(data.size(), 0);
        rows.reserve(data.size());
        if (p.bootstrap) {
            for (std::size_t i = 0; i < data.size(); ++i) {
                const std::size_t r =
                    static_cast<std::size_t>(rand_below(rng, data.size()));
                rows.push_back(r);
                bag[r] = 1;
            }
        } else {
            rows.resize(data.size());
            std::iota(rows.begin(), rows.end(), 0);
            std::fill(bag.begin(), bag.end(), 1);
        }
        CartBuilder builder(data, tp, rows, mtry,
                            mtry < d ? &rng : nullptr);
        forest.trees.push_back(builder.build());
        forest.in_bag.push_back(std::move(bag));
    }
    return forest;
}

double ForestModel::predict_proba(std::span<const double> x) const {
    if (trees.empty()) return 0.0;
    int votes = 0;
    for (const TreeModel& t : trees) votes += t.predict(x);
    return static_cast<double>(votes) / static_cast<double>(trees.size());
}

int ForestModel::predict(std::span<const double> x) const {
    return predict_proba(x) >= 0.5 ? 1 : 0;
}

double oob_accuracy(const ForestModel& forest, const TrainingSet& data) {
    std::size_t used = 0, correct = 0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        int votes = 0, voters = 0;
        for (std::size_t t = 0; t < forest.trees.size(); ++t) {
            if (t < forest.in_bag.size() && forest.in_bag[t][i]) continue;
            votes += forest.trees[t].predict(
                std::span<const double>(data.row(i), data.n_features()));
            ++voters;
        }
        if (voters == 0) continue;
        ++used;
        const int pred = 2 * votes >= voters ? 1 : 0;
        if (pred == data.label(i)) ++correct;
    }
    return used == 0 ? 0.0
                     : static_cast<double>(correct) / static_cast<double>(used);
}

std::vector<double> mean_decrease_impurity(const ForestModel& forest) {
    std::vector<double> importance(forest.n_features, 0.0);
    for (const TreeModel& t : forest.trees)
        for (std::size_t f = 0; f < t.impurity_decrease.size(); ++f)
            importance[f] += t.impurity_decrease[f];
    const double total =
        std::accumulate(importance.begin(), importance.end(), 0.0);
    if (total > 0.0)
        for (double& v : importance) v /= total;
    return importance;
}

}  // namespace mcua
