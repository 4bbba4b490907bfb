#include "rfs/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace rfs {

namespace {

void check_config(const OptimizerConfig& cfg) {
    if (cfg.grad_tol <= 0.0) throw std::invalid_argument("OptimizerConfig: grad_tol must be > 0");
    if (cfg.max_iters <= 0) throw std::invalid_argument("OptimizerConfig: max_iters must be > 0");
    if (cfg.armijo_c <= 0.0 || cfg.armijo_c >= 1.0) {
        throw std::invalid_argument("OptimizerConfig: armijo_c must be in (0,1)");
    }
    if (cfg.backtrack_factor <= 0.0 || cfg.backtrack_factor >= 1.0) {
        throw std::invalid_argument("OptimizerConfig: backtrack_factor must be in (0,1)");
    }
    if (cfg.initial_step <= 0.0) {
        throw std::invalid_argument("OptimizerConfig: initial_step must be > 0");
    }
}

}  // namespace

OptimizerResult minimize(const Objective& objective, const Eigen::VectorXd& x0,
                         const OptimizerConfig& cfg) {
    check_config(cfg);
    const Eigen::Index n = x0.size();

    Eigen::VectorXd x = x0;
    Eigen::VectorXd g(n);
    double fx = objective(x, &g);
    if (!std::isfinite(fx) || !g.allFinite()) {
        throw std::invalid_argument("minimize: objective or gradient not finite at x0");
    }

    Eigen::MatrixXd H = Eigen::MatrixXd::Identity(n, n);
    OptimizerResult result;
    result.iterations = 0;

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        if (g.lpNorm<Eigen::Infinity>() <= cfg.grad_tol) break;

        Eigen::VectorXd p = -(H * g);
        double gtp = g.dot(p);
        if (gtp >= -1e-16) {
            // Quasi-Newton direction lost descent; restart from steepest descent.
            H.setIdentity();
            p = -g;
            gtp = g.dot(p);
            if (gtp >= 0.0) break;  // gradient numerically zero
        }

        // Armijo backtracking; non-finite trial values are treated as rejections.
        double alpha = cfg.initial_step;
        double f_new = fx;
        Eigen::VectorXd x_new = x;
        bool accepted = false;
        bool saw_finite = false;
        while (alpha >= 1e-16) {
            x_new = x + alpha * p;
            f_new = objective(x_new, nullptr);
            if (std::isfinite(f_new)) {
                saw_finite = true;
                if (f_new <= fx + cfg.armijo_c * alpha * gtp) {
                    accepted = true;
                    break;
                }
            }
            alpha *= cfg.backtrack_factor;
        }
        if (!accepted) {
            if (!saw_finite) {
                throw std::runtime_error("minimize: no finite objective value along the search "
                                         "direction above step 1e-16");
            }
            break;  // finite but no sufficient decrease; keep the current iterate
        }

        Eigen::VectorXd g_new(n);
        objective(x_new, &g_new);
        if (!g_new.allFinite()) {
            break;  // cannot trust further steps from here
        }

        const Eigen::VectorXd s = x_new - x;
        const Eigen::VectorXd y = g_new - g;
        const double sy = s.dot(y);
        if (sy > 1e-10 * s.norm() * y.norm()) {
            const double rho = 1.0 / sy;
            const Eigen::VectorXd Hy = H * y;
            const double yHy = y.dot(Hy);
            H.noalias() -= rho * (s * Hy.transpose() + Hy * s.transpose());
            H.noalias() += (rho * rho * yHy + rho) * (s * s.transpose());
        }
        // else: degenerate curvature pair, keep the previous inverse Hessian

        x = x_new;
        fx = f_new;
        g = g_new;
        result.iterations = iter + 1;
    }

    result.x_opt = x;
    result.f_opt = fx;
    result.grad_norm = g.lpNorm<Eigen::Infinity>();
    result.converged = result.grad_norm <= cfg.grad_tol;
    return result;
}

Eigen::VectorXd finite_difference_gradient(const Objective& objective, const Eigen::VectorXd& x) {
    const double h = 1e-6 * (1.0 + x.lpNorm<Eigen::Infinity>());
    Eigen::VectorXd grad(x.size());
    Eigen::VectorXd p = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        p(i) = x(i) + h;
        const double fp = objective(p, nullptr);
        p(i) = x(i) - h;
        const double fm = objective(p, nullptr);
        p(i) = x(i);
        grad(i) = (fp - fm) / (2.0 * h);
    }
    return grad;
}

}  // namespace rfs
