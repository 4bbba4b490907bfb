#pragma once

#include <Eigen/Dense>

#include <functional>

namespace rfs {

/// Objective callback. Returns the value at x; when grad is non-null it
/// must be filled with the gradient. Line searches call with grad == nullptr.
using Objective = std::function<double(const Eigen::VectorXd& x, Eigen::VectorXd* grad)>;

struct OptimizerConfig {
    double grad_tol = 1e-6;        // terminate when the gradient inf-norm drops below this
    int max_iters = 200;
    double armijo_c = 1e-4;        // sufficient-decrease constant, in (0,1)
    double backtrack_factor = 0.5; // step shrink per backtrack, in (0,1)
    double initial_step = 1.0;
};

struct OptimizerResult {
    Eigen::VectorXd x_opt;
    double f_opt = 0.0;
    double grad_norm = 0.0;  // inf-norm at x_opt
    int iterations = 0;
    bool converged = false;
};

/// BFGS with Armijo backtracking. The inverse-Hessian update is skipped
/// when the curvature pair is degenerate (s^T y <= 1e-10 |s||y|), and the
/// search direction falls back to steepest descent whenever it fails to be
/// a descent direction. Accepted iterates have strictly nonincreasing
/// objective values.
///
/// Throws std::invalid_argument if the objective or gradient is non-finite
/// at x0, and std::runtime_error if a line search finds no finite value at
/// any step length above 1e-16.
OptimizerResult minimize(const Objective& objective, const Eigen::VectorXd& x0,
                         const OptimizerConfig& cfg = {});

/// Central finite differences with step 1e-6*(1+|x|_inf), intended for
/// gradient checks in tests.
Eigen::VectorXd finite_difference_gradient(const Objective& objective, const Eigen::VectorXd& x);

}  // namespace rfs
