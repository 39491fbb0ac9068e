#include "mcua/models/linear.hpp"

#include <algorithm>
#include <cmath>

#include "mcua/simd/kernels.hpp"

namespace mcua {

double sigmoid(double z) {
    if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double LinearModel::decision(std::span<const double> x) const {
    if (x.size() != weights.size())
        throw DimensionMismatchError("feature vector width mismatch");
    return simd::dot(weights.data(), x.data(), x.size()) + bias;
}

double LinearModel::predict_proba(std::span<const double> x) const {
    return sigmoid(decision(x));
}

namespace {

// log(1 + exp(-m)) without overflow
inline double log1p_exp_neg(double m) {
    return m > 0.0 ? std::log1p(std::exp(-m)) : -m + std::log1p(std::exp(m));
}

inline double label_sign(int y) { return y > 0 ? 1.0 : -1.0; }

}  // namespace

double linear_objective_smooth(const TrainingSet& data, LinearLoss loss,
                               Penalty penalty, double C,
                               std::span<const double> w, double b,
                               std::vector<double>* grad) {
    const std::size_t n = data.size(), d = data.n_features();
    double obj = 0.0;
    if (grad) grad->assign(d + 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const double* x = data.row(i);
        const double y = label_sign(data.label(i));
        const double z = simd::dot(w.data(), x, d) + b;
        const double m = y * z;
        double dldz = 0.0;
        if (loss == LinearLoss::Logistic) {
            obj += C * log1p_exp_neg(m);
            dldz = -y * sigmoid(-m);
        } else {
            const double gap = 1.0 - m;
            if (gap > 0.0) {
                obj += C * gap * gap;
                dldz = -2.0 * y * gap;
            }
        }
        if (grad && dldz != 0.0) {
            simd::axpy(C * dldz, x, grad->data(), d);
            (*grad)[d] += C * dldz;
        }
    }
    if (penalty == Penalty::L2) {
        obj += 0.5 * simd::sumsq(w.data(), d);
        if (grad)
            for (std::size_t j = 0; j < d; ++j) (*grad)[j] += w[j];
    }
    return obj;
}

namespace {

inline double soft_threshold(double v, double lambda) {
    if (v > lambda) return v - lambda;
    if (v < -lambda) return v + lambda;
    return 0.0;
}

// Proximal gradient with backtracking line search. The L2 penalty is part
// of the smooth term; the L1 penalty enters through the prox step.
LinearModel train_linear(const TrainingSet& data, LinearLoss loss,
                         const LinearParams& p) {
    if (!data.has_both_labels())
        throw DegenerateLabelsError(
            "training set must contain both classes");
    const std::size_t d = data.n_features();

    LinearModel model;
    model.loss = loss;
    model.penalty = p.penalty;
    model.C = p.C;
    model.weights.assign(d, 0.0);
    model.bias = 0.0;

    std::vector<double> grad;
    std::vector<double> w_new(d);
    double step = 1.0;
    double obj = linear_objective_smooth(data, loss, p.penalty, p.C,
                                         model.weights, model.bias, &grad);
    for (int iter = 0; iter < p.max_iter; ++iter) {
        double b_new = 0.0;
        double obj_new = 0.0;
        while (true) {
            for (std::size_t j = 0; j < d; ++j) {
                const double v = model.weights[j] - step * grad[j];
                w_new[j] = p.penalty == Penalty::L1 ? soft_threshold(v, step)
                                                    : v;
            }
            b_new = model.bias - step * grad[d];
            obj_new = linear_objective_smooth(data, loss, p.penalty, p.C,
                                              w_new, b_new, nullptr);
            double gdelta = 0.0, sqdelta = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double delta = w_new[j] - model.weights[j];
                gdelta += grad[j] * delta;
                sqdelta += delta * delta;
            }
            const double db = b_new - model.bias;
            gdelta += grad[d] * db;
            sqdelta += db * db;
            if (obj_new <= obj + gdelta + sqdelta / (2.0 * step) + 1e-14)
                break;
            step *= 0.5;
            if (step < 1e-18) break;
        }
        double move = 0.0;
        for (std::size_t j = 0; j < d; ++j)
            move = std::max(move, std::abs(w_new[j] - model.weights[j]));
        move = std::max(move, std::abs(b_new - model.bias));
        std::copy(w_new.begin(), w_new.end(), model.weights.begin());
        model.bias = b_new;
        if (move / step <= p.tol || step < 1e-18) break;
        obj = linear_objective_smooth(data, loss, p.penalty, p.C,
                                      model.weights, model.bias, &grad);
        step = std::min(step * 1.3, 1e6);
    }
    return model;
}

}  // namespace

LinearModel train_logistic(const TrainingSet& data, const LinearParams& p) {
    return train_linear(data, LinearLoss::Logistic, p);
}

LinearModel train_linear_svm(const TrainingSet& data, const LinearParams& p) {
    return train_linear(data, LinearLoss::SquaredHinge, p);
}

}  // namespace mcua
