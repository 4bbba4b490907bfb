#pragma once

#include <Eigen/Dense>

#include <vector>

namespace rfs {

/// One weighted term of a Gaussian mixture intensity.
///
/// The weight is an expected agent-count contribution, not a probability;
/// mixture weights therefore need not sum to one. Construction validates
/// that the weight is nonnegative and the covariance is symmetric (to
/// 1e-12 elementwise) and positive definite, so downstream code can rely
/// on a usable Cholesky factorization.
class GaussianComponent {
public:
    GaussianComponent(double weight, Eigen::VectorXd mean, Eigen::MatrixXd cov);

    double weight() const { return weight_; }
    const Eigen::VectorXd& mean() const { return mean_; }
    const Eigen::MatrixXd& cov() const { return cov_; }
    Eigen::Index dim() const { return mean_.size(); }

private:
    double weight_;
    Eigen::VectorXd mean_;
    Eigen::MatrixXd cov_;
};

/// Ordered list of Gaussian components sharing one state dimension.
/// Represents an intensity function: the integral over a region is the
/// expected number of agents there, and total_weight() is the expected
/// count over the whole space.
class GaussianMixture {
public:
    /// Empty mixture of a fixed dimension. Distances require a nonempty
    /// mixture; emptiness is legitimate for PHD birth models.
    explicit GaussianMixture(Eigen::Index dim);
    explicit GaussianMixture(std::vector<GaussianComponent> components);

    Eigen::Index dim() const { return dim_; }
    std::size_t size() const { return components_.size(); }
    bool empty() const { return components_.empty(); }
    const GaussianComponent& operator[](std::size_t i) const { return components_[i]; }
    const std::vector<GaussianComponent>& components() const { return components_; }

    void add(GaussianComponent component);

    double total_weight() const;

private:
    Eigen::Index dim_;
    std::vector<GaussianComponent> components_;
};

/// Multivariate normal density N(x; m, P). Computed through a Cholesky
/// factorization of P with the determinant and quadratic form accumulated
/// in the log domain and exponentiated once, so distant x underflow to
/// zero instead of producing NaN.
double eval_density(const Eigen::VectorXd& x, const Eigen::VectorXd& m,
                    const Eigen::MatrixXd& P);

/// log N(x; m, P). Stays finite where eval_density underflows.
double log_density(const Eigen::VectorXd& x, const Eigen::VectorXd& m,
                   const Eigen::MatrixXd& P);

/// Closed form of w1*w2*integral N(x;m1,P1) N(x;m2,P2) dx, which equals
/// w1*w2*N(m1; m2, P1+P2). This is the pairwise kernel behind every
/// mixture distance.
double product_integral(const GaussianComponent& c1, const GaussianComponent& c2);

/// sqrt((x-m)^T P^{-1} (x-m)).
double mahalanobis(const Eigen::VectorXd& x, const Eigen::VectorXd& m,
                   const Eigen::MatrixXd& P);

}  // namespace rfs
