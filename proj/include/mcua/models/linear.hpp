#pragma once

#include <span>
#include <vector>

#include "mcua/models/dataset.hpp"

namespace mcua {

enum class LinearLoss { Logistic, SquaredHinge };
enum class Penalty { L1, L2 };

struct LinearParams {
    Penalty penalty = Penalty::L2;
    double C = 1.0;
    double tol = 1e-6;
    int max_iter = 2000;
};

/// min_w  C * sum_i loss(y_i (w.x_i + b)) + R(w), bias unpenalized.
struct LinearModel {
    std::vector<double> weights;
    double bias = 0.0;
    LinearLoss loss = LinearLoss::Logistic;
    Penalty penalty = Penalty::L2;
    double C = 1.0;

    double decision(std::span<const double> x) const;
    double predict_proba(std::span<const double> x) const;  // sigmoid link
};

/// Smooth part of the objective and its gradient at (w, b); grad has
/// n_features + 1 entries, bias derivative last. Exposed for the
/// finite-difference oracle tests.
double linear_objective_smooth(const TrainingSet& data, LinearLoss loss,
                               Penalty penalty, double C,
                               std::span<const double> w, double b,
                               std::vector<double>* grad = nullptr);

LinearModel train_logistic(const TrainingSet& data, const LinearParams& p);
LinearModel train_linear_svm(const TrainingSet& data, const LinearParams& p);

double sigmoid(double z);

}  // namespace mcua
