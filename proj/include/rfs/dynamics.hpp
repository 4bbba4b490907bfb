#pragma once

#include <Eigen/Dense>

namespace rfs {

/// Discrete-time linear plant x_{k+1} = A x_k + B u_k with per-step process
/// noise covariance Q. Time-invariant; dt records the step length in
/// seconds. Q must be symmetric positive semidefinite.
class LinearDynamics {
public:
    LinearDynamics(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::MatrixXd Q, double dt);

    const Eigen::MatrixXd& A() const { return A_; }
    const Eigen::MatrixXd& B() const { return B_; }
    const Eigen::MatrixXd& Q() const { return Q_; }
    double dt() const { return dt_; }
    Eigen::Index state_dim() const { return A_.rows(); }
    Eigen::Index control_dim() const { return B_.cols(); }

private:
    Eigen::MatrixXd A_, B_, Q_;
    double dt_;
};

/// Planar double integrator with state (x, y, vx, vy) and a 2-D
/// acceleration input. Q defaults to zero.
LinearDynamics double_integrator_2d(double dt);

/// A*m + B*u.
Eigen::VectorXd propagate_mean(const LinearDynamics& dyn, const Eigen::VectorXd& m,
                               const Eigen::VectorXd& u);

/// A*P*A^T + Q, symmetrized as (M + M^T)/2.
Eigen::MatrixXd propagate_cov(const LinearDynamics& dyn, const Eigen::MatrixXd& P);

}  // namespace rfs
