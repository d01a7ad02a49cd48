#include "ytcc/linear.hpp"

#include <algorithm>
#include <cmath>

#include "ytcc/rng.hpp"

namespace ytcc::linear {
namespace {

// log(1 + exp(-t)) without overflow.
double log1p_exp_neg(double t) {
    if (t > 0) return std::log1p(std::exp(-t));
    return -t + std::log1p(std::exp(t));
}

// 1 / (1 + exp(t)) = sigma(-t), stable on both tails.
double sigmoid_neg(double t) {
    if (t > 0) {
        const double e = std::exp(-t);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(t));
}

}  // namespace

double logistic_objective(const SparseMatrix& X, const DenseVector& y, const DenseVector& w,
                          Real intercept, double C, bool penalize) {
    DenseVector z = X * w;
    z.array() += intercept;
    double loss = 0.0;
    for (Index i = 0; i < z.size(); ++i) loss += log1p_exp_neg(y[i] * z[i]);
    if (penalize) loss += 0.5 / C * w.squaredNorm();
    return loss;
}

void logistic_gradient(const SparseMatrix& X, const DenseVector& y, const DenseVector& w,
                       Real intercept, double C, bool penalize, DenseVector& grad_w, Real& grad_b) {
    DenseVector z = X * w;
    z.array() += intercept;
    DenseVector s(z.size());
    for (Index i = 0; i < z.size(); ++i) s[i] = -y[i] * sigmoid_neg(y[i] * z[i]);
    grad_w = X.transpose() * s;
    if (penalize) grad_w += w / C;
    grad_b = s.sum();
}

BinaryFit fit_logistic_binary(const SparseMatrix& X, const DenseVector& y, double C, bool penalize,
                              double tol, int max_iter) {
    const Index n_features = X.cols();
    BinaryFit fit;
    fit.weights = DenseVector::Zero(n_features);
    fit.intercept = 0.0;

    double objective = logistic_objective(X, y, fit.weights, fit.intercept, C, penalize);
    fit.trace.objectives.push_back(objective);

    DenseVector grad_w(n_features);
    Real grad_b = 0.0;
    for (int iter = 0; iter < max_iter; ++iter) {
        logistic_gradient(X, y, fit.weights, fit.intercept, C, penalize, grad_w, grad_b);
        const double grad_norm = std::sqrt(grad_w.squaredNorm() + grad_b * grad_b);
        fit.trace.final_grad_norm = grad_norm;
        if (grad_norm <= tol) {
            fit.trace.converged = true;
            break;
        }
        fit.trace.iterations = iter + 1;

        // Hessian diagonal weights at the current point.
        DenseVector z = X * fit.weights;
        z.array() += fit.intercept;
        DenseVector d(z.size());
        for (Index i = 0; i < z.size(); ++i) {
            const double s = sigmoid_neg(y[i] * z[i]);
            d[i] = std::max(s * (1.0 - s), 1e-12);
        }

        auto hessian_vec = [&](const DenseVector& vw, Real vb, DenseVector& out_w, Real& out_b) {
            DenseVector t = X * vw;
            t.array() += vb;
            t.array() *= d.array();
            out_w = X.transpose() * t;
            if (penalize) out_w += vw / C;
            out_b = t.sum();
        };

        // Truncated conjugate gradient on H p = -g.
        DenseVector pw = DenseVector::Zero(n_features);
        Real pb = 0.0;
        DenseVector rw = -grad_w;
        Real rb = -grad_b;
        DenseVector qw = rw;
        Real qb = rb;
        double r2 = rw.squaredNorm() + rb * rb;
        const double forcing = std::min(0.5, std::sqrt(grad_norm));
        const double cg_target = (forcing * grad_norm) * (forcing * grad_norm);
        DenseVector hw(n_features);
        Real hb = 0.0;
        const int max_cg = static_cast<int>(std::min<Index>(n_features + 1, 200));
        for (int cg = 0; cg < max_cg && r2 > cg_target; ++cg) {
            hessian_vec(qw, qb, hw, hb);
            const double qhq = qw.dot(hw) + qb * hb;
            if (qhq <= 0) break;  // numerical guard; d > 0 keeps H positive definite
            const double alpha = r2 / qhq;
            pw += alpha * qw;
            pb += alpha * qb;
            rw -= alpha * hw;
            rb -= alpha * hb;
            const double r2_new = rw.squaredNorm() + rb * rb;
            const double beta = r2_new / r2;
            qw = rw + beta * qw;
            qb = rb + beta * qb;
            r2 = r2_new;
        }
        if (pw.squaredNorm() + pb * pb == 0.0) break;

        // Armijo backtracking on the step.
        const double directional = grad_w.dot(pw) + grad_b * pb;
        double step = 1.0;
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls) {
            const DenseVector w_next = fit.weights + step * pw;
            const Real b_next = fit.intercept + step * pb;
            const double obj_next = logistic_objective(X, y, w_next, b_next, C, penalize);
            if (obj_next <= objective + 1e-4 * step * directional) {
                fit.weights = w_next;
                fit.intercept = b_next;
                objective = obj_next;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break;
        fit.trace.objectives.push_back(objective);
    }
    return fit;
}

double svc_primal_objective(const SparseMatrix& X, const DenseVector& y, const DenseVector& w_aug,
                            double C) {
    const Index n_features = X.cols();
    DenseVector z = X * w_aug.head(n_features);
    z.array() += w_aug[n_features];
    double hinge = 0.0;
    for (Index i = 0; i < z.size(); ++i) hinge += std::max(0.0, 1.0 - y[i] * z[i]);
    return 0.5 * w_aug.squaredNorm() + C * hinge;
}

BinaryFit fit_svc_binary(const SparseMatrix& X, const DenseVector& y, double C, double tol,
                         int max_epochs, std::uint64_t seed) {
    const Index n = X.rows();
    const Index n_features = X.cols();
    // Bias handled as an extra always-one feature, regularised with the rest.
    DenseVector w = DenseVector::Zero(n_features + 1);
    DenseVector alpha = DenseVector::Zero(n);

    DenseVector q_diag(n);
    // Row norms: iterate the CSC storage once.
    q_diag.setZero();
    for (Index j = 0; j < X.outerSize(); ++j) {
        for (SparseMatrix::InnerIterator it(X, j); it; ++it) {
            q_diag[it.row()] += it.value() * it.value();
        }
    }
    q_diag.array() += 1.0;  // bias feature

    std::vector<Index> order(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    Rng rng(seed);

    // Row access needs row-major storage for the update loop.
    Eigen::SparseMatrix<Real, Eigen::RowMajor> Xr = X;

    BinaryFit fit;
    double best_objective = svc_primal_objective(X, y, w, C);
    DenseVector best_w = w;
    fit.trace.objectives.push_back(best_objective);

    for (int epoch = 0; epoch < max_epochs; ++epoch) {
        rng.shuffle(order);
        double pg_max = -std::numeric_limits<double>::infinity();
        double pg_min = std::numeric_limits<double>::infinity();
        for (Index i : order) {
            double zi = w[n_features];
            for (Eigen::SparseMatrix<Real, Eigen::RowMajor>::InnerIterator it(Xr, i); it; ++it) {
                zi += w[it.col()] * it.value();
            }
            const double g = y[i] * zi - 1.0;
            double pg = g;
            if (alpha[i] <= 0.0) pg = std::min(g, 0.0);
            else if (alpha[i] >= C) pg = std::max(g, 0.0);
            pg_max = std::max(pg_max, pg);
            pg_min = std::min(pg_min, pg);
            if (std::abs(pg) > 1e-12) {
                const double a_new = std::clamp(alpha[i] - g / q_diag[i], 0.0, C);
                const double delta = (a_new - alpha[i]) * y[i];
                if (delta != 0.0) {
                    for (Eigen::SparseMatrix<Real, Eigen::RowMajor>::InnerIterator it(Xr, i); it; ++it) {
                        w[it.col()] += delta * it.value();
                    }
                    w[n_features] += delta;
                    alpha[i] = a_new;
                }
            }
        }
        fit.trace.iterations = epoch + 1;
        const double objective = svc_primal_objective(X, y, w, C);
        if (objective <= best_objective) {
            best_objective = objective;
            best_w = w;
            fit.trace.objectives.push_back(objective);
        }
        fit.trace.final_grad_norm = pg_max - pg_min;
        if (pg_max - pg_min < tol) {
            fit.trace.converged = true;
            break;
        }
    }
    fit.weights = best_w.head(n_features);
    fit.intercept = best_w[n_features];
    return fit;
}

}  // namespace ytcc::linear
