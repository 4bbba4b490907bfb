#include "rfs/dynamics.hpp"

#include <stdexcept>
#include <string>

namespace rfs {

LinearDynamics::LinearDynamics(Eigen::MatrixXd A, Eigen::MatrixXd B, Eigen::MatrixXd Q, double dt)
    : A_(std::move(A)), B_(std::move(B)), Q_(std::move(Q)), dt_(dt) {
    if (dt_ <= 0.0) {
        throw std::invalid_argument("LinearDynamics: dt must be positive, got " +
                                    std::to_string(dt_));
    }
    const Eigen::Index d = A_.rows();
    if (A_.cols() != d) {
        throw std::invalid_argument("LinearDynamics: A must be square");
    }
    if (B_.rows() != d) {
        throw std::invalid_argument("LinearDynamics: B must have as many rows as A");
    }
    if (Q_.rows() != d || Q_.cols() != d) {
        throw std::invalid_argument("LinearDynamics: Q must match the state dimension");
    }
    if ((Q_ - Q_.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
        throw std::invalid_argument("LinearDynamics: Q must be symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -1e-12) {
        throw std::invalid_argument("LinearDynamics: Q must be positive semidefinite");
    }
}

LinearDynamics double_integrator_2d(double dt) {
    if (dt <= 0.0) {
        throw std::invalid_argument("double_integrator_2d: dt must be positive");
    }
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(4, 4);
    A(0, 2) = dt;
    A(1, 3) = dt;
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(4, 2);
    B(0, 0) = 0.5 * dt * dt;
    B(1, 1) = 0.5 * dt * dt;
    B(2, 0) = dt;
    B(3, 1) = dt;
    return LinearDynamics(A, B, Eigen::MatrixXd::Zero(4, 4), dt);
}

Eigen::VectorXd propagate_mean(const LinearDynamics& dyn, const Eigen::VectorXd& m,
                               const Eigen::VectorXd& u) {
    if (m.size() != dyn.state_dim()) {
        throw std::invalid_argument("propagate_mean: state has dimension " +
                                    std::to_string(m.size()) + ", plant expects " +
                                    std::to_string(dyn.state_dim()));
    }
    if (u.size() != dyn.control_dim()) {
        throw std::invalid_argument("propagate_mean: control has dimension " +
                                    std::to_string(u.size()) + ", plant expects " +
                                    std::to_string(dyn.control_dim()));
    }
    return dyn.A() * m + dyn.B() * u;
}

Eigen::MatrixXd propagate_cov(const LinearDynamics& dyn, const Eigen::MatrixXd& P) {
    if (P.rows() != dyn.state_dim() || P.cols() != dyn.state_dim()) {
        throw std::invalid_argument("propagate_cov: covariance does not match the state dimension");
    }
    Eigen::MatrixXd M = dyn.A() * P * dyn.A().transpose() + dyn.Q();
    return 0.5 * (M + M.transpose());
}

}  // namespace rfs
