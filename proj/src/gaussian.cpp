#include "rfs/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rfs {

namespace {

std::string describe_matrix(const Eigen::MatrixXd& P) {
    std::ostringstream os;
    os << P.rows() << "x" << P.cols() << " matrix";
    if (P.rows() <= 6) {
        os << " [";
        for (Eigen::Index r = 0; r < P.rows(); ++r) {
            if (r > 0) os << "; ";
            for (Eigen::Index c = 0; c < P.cols(); ++c) {
                if (c > 0) os << " ";
                os << P(r, c);
            }
        }
        os << "]";
    }
    return os.str();
}

// Cholesky factor of a covariance, or throw naming the offending matrix.
Eigen::LLT<Eigen::MatrixXd> checked_llt(const Eigen::MatrixXd& P, const char* context) {
    if (P.rows() != P.cols()) {
        throw std::invalid_argument(std::string(context) + ": covariance must be square, got " +
                                    describe_matrix(P));
    }
    Eigen::LLT<Eigen::MatrixXd> llt(P);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument(std::string(context) +
                                    ": covariance is not positive definite: " + describe_matrix(P));
    }
    return llt;
}

double log_density_impl(const Eigen::VectorXd& x, const Eigen::VectorXd& m,
                        const Eigen::LLT<Eigen::MatrixXd>& llt) {
    const Eigen::Index d = x.size();
    const Eigen::MatrixXd& L = llt.matrixLLT();
    double half_log_det = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
        half_log_det += std::log(L(i, i));
    }
    // Quadratic form via one triangular solve: |L^{-1}(x-m)|^2.
    Eigen::VectorXd y = x - m;
    llt.matrixL().solveInPlace(y);
    constexpr double log_two_pi = 1.8378770664093454836;
    return -0.5 * (static_cast<double>(d) * log_two_pi + y.squaredNorm()) - half_log_det;
}

}  // namespace

GaussianComponent::GaussianComponent(double weight, Eigen::VectorXd mean, Eigen::MatrixXd cov)
    : weight_(weight), mean_(std::move(mean)), cov_(std::move(cov)) {
    if (!std::isfinite(weight_) || weight_ < 0.0) {
        throw std::invalid_argument("GaussianComponent: weight must be finite and >= 0, got " +
                                    std::to_string(weight_));
    }
    if (!mean_.allFinite()) {
        throw std::invalid_argument("GaussianComponent: mean has non-finite entries");
    }
    if (cov_.rows() != mean_.size() || cov_.cols() != mean_.size()) {
        throw std::invalid_argument("GaussianComponent: covariance is " + describe_matrix(cov_) +
                                    " but mean has dimension " + std::to_string(mean_.size()));
    }
    if (!cov_.allFinite()) {
        throw std::invalid_argument("GaussianComponent: covariance has non-finite entries");
    }
    const double asym = (cov_ - cov_.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-12) {
        std::ostringstream os;
        os << "GaussianComponent: covariance not symmetric (max asymmetry " << asym
           << "): " << describe_matrix(cov_);
        throw std::invalid_argument(os.str());
    }
    checked_llt(cov_, "GaussianComponent");
}

GaussianMixture::GaussianMixture(Eigen::Index dim) : dim_(dim) {
    if (dim_ <= 0) {
        throw std::invalid_argument("GaussianMixture: dimension must be positive");
    }
}

GaussianMixture::GaussianMixture(std::vector<GaussianComponent> components)
    : dim_(0), components_(std::move(components)) {
    if (components_.empty()) {
        throw std::invalid_argument(
            "GaussianMixture: cannot infer dimension from an empty component list");
    }
    dim_ = components_.front().dim();
    for (const auto& c : components_) {
        if (c.dim() != dim_) {
            throw std::invalid_argument("GaussianMixture: component dimension " +
                                        std::to_string(c.dim()) + " does not match mixture dimension " +
                                        std::to_string(dim_));
        }
    }
}

void GaussianMixture::add(GaussianComponent component) {
    if (component.dim() != dim_) {
        throw std::invalid_argument("GaussianMixture::add: component dimension " +
                                    std::to_string(component.dim()) +
                                    " does not match mixture dimension " + std::to_string(dim_));
    }
    components_.push_back(std::move(component));
}

double GaussianMixture::total_weight() const {
    double w = 0.0;
    for (const auto& c : components_) w += c.weight();
    return w;
}

double eval_density(const Eigen::VectorXd& x, const Eigen::VectorXd& m,
                    const Eigen::MatrixXd& P) {
    return std::exp(log_density(x, m, P));
}

double log_density(const Eigen::VectorXd& x, const Eigen::VectorXd& m,
                   const Eigen::MatrixXd& P) {
    if (x.size() != m.size() || P.rows() != x.size()) {
        throw std::invalid_argument("log_density: dimension mismatch between x, m, P");
    }
    return log_density_impl(x, m, checked_llt(P, "log_density"));
}

double product_integral(const GaussianComponent& c1, const GaussianComponent& c2) {
    if (c1.dim() != c2.dim()) {
        throw std::invalid_argument("product_integral: component dimensions differ (" +
                                    std::to_string(c1.dim()) + " vs " + std::to_string(c2.dim()) +
                                    ")");
    }
    const Eigen::MatrixXd S = c1.cov() + c2.cov();
    return c1.weight() * c2.weight() *
           std::exp(log_density_impl(c1.mean(), c2.mean(), checked_llt(S, "product_integral")));
}

double mahalanobis(const Eigen::VectorXd& x, const Eigen::VectorXd& m,
                   const Eigen::MatrixXd& P) {
    if (x.size() != m.size() || P.rows() != x.size()) {
        throw std::invalid_argument("mahalanobis: dimension mismatch between x, m, P");
    }
    auto llt = checked_llt(P, "mahalanobis");
    Eigen::VectorXd y = x - m;
    llt.matrixL().solveInPlace(y);
    return y.norm();
}

}  // namespace rfs
