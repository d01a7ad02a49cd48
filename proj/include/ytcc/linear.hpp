#pragma once

#include <cstdint>
#include <vector>

#include "ytcc/types.hpp"

namespace ytcc::linear {

/// Objective values of the accepted iterates; non-increasing by
/// construction for both optimizers.
struct OptimizerTrace {
    std::vector<double> objectives;
    bool converged = false;
    int iterations = 0;
    double final_grad_norm = 0.0;
};

struct BinaryFit {
    DenseVector weights;  // n_features
    Real intercept = 0.0;
    OptimizerTrace trace;
};

/// L2-regularised logistic regression on ±1 labels, truncated-Newton
/// with Armijo line search. Objective: sum of log-losses plus
/// 0.5/C * |w|^2 (intercept unpenalised); penalty disabled for
/// penalty="none". Converged when the gradient 2-norm drops to `tol`.
BinaryFit fit_logistic_binary(const SparseMatrix& X, const DenseVector& y, double C, bool penalize,
                              double tol, int max_iter);

/// Hinge-loss SVC on ±1 labels via dual coordinate descent with a
/// regularised bias feature. The primal objective
/// 0.5 |w|^2 + C * sum hinge is evaluated once per epoch and only
/// improving iterates are accepted, so the reported trace is monotone and
/// the returned weights are the best iterate.
BinaryFit fit_svc_binary(const SparseMatrix& X, const DenseVector& y, double C, double tol,
                         int max_epochs, std::uint64_t seed);

/// Objective/gradient evaluation used by the optimizer and by tests.
double logistic_objective(const SparseMatrix& X, const DenseVector& y, const DenseVector& w,
                          Real intercept, double C, bool penalize);
void logistic_gradient(const SparseMatrix& X, const DenseVector& y, const DenseVector& w,
                       Real intercept, double C, bool penalize, DenseVector& grad_w, Real& grad_b);

double svc_primal_objective(const SparseMatrix& X, const DenseVector& y, const DenseVector& w_aug,
                            double C);

}  // namespace ytcc::linear
