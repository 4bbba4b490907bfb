#include "rfs/divergence.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace rfs {

namespace {

// Kernels smaller than this are treated as exactly zero. The quadratic
// term never goes through this path; its logs stay in the log domain.
constexpr double kKernelFloor = 1e-300;

struct PairKernel {
    double log_kappa;             // log N(mb; ma, Pa+Pb)
    double kappa;                 // N(mb; ma, Pa+Pb), floored to zero
    Eigen::VectorXd sinv_b_minus_a;  // (Pa+Pb)^{-1} (mb - ma)
};

PairKernel pair_kernel(const GaussianComponent& a, const GaussianComponent& b) {
    const Eigen::Index d = a.dim();
    const Eigen::MatrixXd S = a.cov() + b.cov();
    Eigen::LLT<Eigen::MatrixXd> llt(S);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("divergence: pairwise covariance sum is not positive definite");
    }
    const Eigen::MatrixXd& L = llt.matrixLLT();
    double half_log_det = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) half_log_det += std::log(L(i, i));

    const Eigen::VectorXd diff = b.mean() - a.mean();
    Eigen::VectorXd y = diff;
    llt.matrixL().solveInPlace(y);
    constexpr double log_two_pi = 1.8378770664093454836;
    PairKernel k;
    k.log_kappa = -0.5 * (static_cast<double>(d) * log_two_pi + y.squaredNorm()) - half_log_det;
    k.kappa = std::exp(k.log_kappa);
    if (k.kappa < kKernelFloor) k.kappa = 0.0;
    k.sinv_b_minus_a = llt.solve(diff);
    return k;
}

void check_pair(const GaussianMixture& f, const GaussianMixture& g) {
    if (f.dim() != g.dim()) {
        throw std::invalid_argument("divergence: mixture dimensions differ (" +
                                    std::to_string(f.dim()) + " vs " + std::to_string(g.dim()) + ")");
    }
    if (f.empty() || g.empty()) {
        throw std::invalid_argument("divergence: mixtures must be nonempty");
    }
}

struct Sums {
    double ff = 0.0;
    double gg = 0.0;
    double fg = 0.0;
    double log_fg = 0.0;  // sum of wg wf log-kernels (quadratic term source)
    // d(ff)/d(mf_i), d(fg)/d(mf_i), d(-log_fg)/d(mf_i)
    std::vector<Eigen::VectorXd> dff, dfg, dquad;
};

// One pass over the pairwise kernels. Gradient accumulation is skipped
// entirely when grads is false.
Sums accumulate(const GaussianMixture& f, const GaussianMixture& g, bool grads) {
    const Eigen::Index d = f.dim();
    const std::size_t nf = f.size();
    Sums s;
    if (grads) {
        s.dff.assign(nf, Eigen::VectorXd::Zero(d));
        s.dfg.assign(nf, Eigen::VectorXd::Zero(d));
        s.dquad.assign(nf, Eigen::VectorXd::Zero(d));
    }

    // f-f terms: symmetric, so visit unordered pairs once.
    for (std::size_t i = 0; i < nf; ++i) {
        for (std::size_t j = i; j < nf; ++j) {
            const PairKernel k = pair_kernel(f[i], f[j]);
            const double w = f[i].weight() * f[j].weight();
            if (i == j) {
                s.ff += w * k.kappa;  // constant in m_i, no gradient
            } else {
                s.ff += 2.0 * w * k.kappa;
                if (grads && k.kappa > 0.0) {
                    // Both ordered orientations of the pair.
                    s.dff[i] += 2.0 * w * k.kappa * k.sinv_b_minus_a;
                    s.dff[j] -= 2.0 * w * k.kappa * k.sinv_b_minus_a;
                }
            }
        }
    }

    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i; j < g.size(); ++j) {
            const double w = g[i].weight() * g[j].weight();
            s.gg += (i == j ? 1.0 : 2.0) * w * pair_kernel(g[i], g[j]).kappa;
        }
    }

    for (std::size_t i = 0; i < nf; ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            const PairKernel k = pair_kernel(f[i], g[j]);  // sinv_b_minus_a = S^{-1}(mg_j - mf_i)
            const double w = f[i].weight() * g[j].weight();
            s.fg += w * k.kappa;
            s.log_fg += w * k.log_kappa;
            if (grads) {
                if (k.kappa > 0.0) s.dfg[i] += w * k.kappa * k.sinv_b_minus_a;
                s.dquad[i] += w * k.sinv_b_minus_a;  // sign flipped below with the term
            }
        }
    }
    return s;
}

}  // namespace

std::string to_string(CostKind kind) {
    switch (kind) {
        case CostKind::CauchySchwarz: return "cs";
        case CostKind::L2: return "l2";
        case CostKind::L2Quadratic: return "l2quad";
    }
    return "?";
}

CostKind parse_cost_kind(const std::string& text) {
    std::string t;
    for (char c : text) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "cs" || t == "cauchy-schwarz" || t == "cauchyschwarz") return CostKind::CauchySchwarz;
    if (t == "l2") return CostKind::L2;
    if (t == "l2quad" || t == "l2-quadratic" || t == "l2quadratic") return CostKind::L2Quadratic;
    throw std::invalid_argument("unknown cost kind '" + text + "' (expected cs, l2 or l2quad)");
}

CostBreakdown l2_distance(const GaussianMixture& f, const GaussianMixture& g) {
    return evaluate_cost(CostKind::L2, f, g);
}

double cauchy_schwarz(const GaussianMixture& f, const GaussianMixture& g) {
    return evaluate_cost(CostKind::CauchySchwarz, f, g).total;
}

CostBreakdown l2_quadratic(const GaussianMixture& f, const GaussianMixture& g) {
    return evaluate_cost(CostKind::L2Quadratic, f, g);
}

namespace {

CostBreakdown cost_impl(CostKind kind, const GaussianMixture& f, const GaussianMixture& g,
                        std::vector<Eigen::VectorXd>* grad) {
    check_pair(f, g);
    Sums s = accumulate(f, g, grad != nullptr);

    CostBreakdown bd;
    bd.ff_term = s.ff;
    bd.gg_term = s.gg;
    bd.fg_term = s.fg;

    const std::size_t nf = f.size();
    if (grad) grad->assign(nf, Eigen::VectorXd::Zero(f.dim()));

    switch (kind) {
        case CostKind::L2: {
            bd.total = s.ff + s.gg - 2.0 * s.fg;
            if (grad) {
                for (std::size_t i = 0; i < nf; ++i) (*grad)[i] = s.dff[i] - 2.0 * s.dfg[i];
            }
            break;
        }
        case CostKind::L2Quadratic: {
            bd.quad_term = -s.log_fg;
            bd.total = s.ff + s.gg - 2.0 * s.fg + bd.quad_term;
            if (grad) {
                for (std::size_t i = 0; i < nf; ++i) {
                    (*grad)[i] = s.dff[i] - 2.0 * s.dfg[i] - s.dquad[i];
                }
            }
            break;
        }
        case CostKind::CauchySchwarz: {
            if (s.ff <= 0.0 || s.gg <= 0.0) {
                throw std::invalid_argument("cauchy_schwarz: mixture with zero norm");
            }
            bd.total = -std::log(s.fg) + 0.5 * std::log(s.ff) + 0.5 * std::log(s.gg);
            if (grad) {
                for (std::size_t i = 0; i < nf; ++i) {
                    (*grad)[i] = 0.5 / s.ff * s.dff[i];
                    if (s.fg > 0.0) (*grad)[i] -= s.dfg[i] / s.fg;
                }
            }
            break;
        }
    }
    return bd;
}

}  // namespace

CostBreakdown evaluate_cost(CostKind kind, const GaussianMixture& f, const GaussianMixture& g) {
    return cost_impl(kind, f, g, nullptr);
}

std::vector<Eigen::VectorXd> cost_gradient(CostKind kind, const GaussianMixture& f,
                                           const GaussianMixture& g) {
    std::vector<Eigen::VectorXd> grad;
    cost_impl(kind, f, g, &grad);
    return grad;
}

CostBreakdown cost_with_gradient(CostKind kind, const GaussianMixture& f, const GaussianMixture& g,
                                 std::vector<Eigen::VectorXd>& grad) {
    return cost_impl(kind, f, g, &grad);
}

Eigen::MatrixXd surface_grid(CostKind kind, const GaussianMixture& f, const GaussianMixture& g,
                             std::size_t probe_index, const std::vector<double>& xs,
                             const std::vector<double>& ys) {
    check_pair(f, g);
    if (probe_index >= f.size()) {
        throw std::invalid_argument("surface_grid: probe index " + std::to_string(probe_index) +
                                    " out of range for " + std::to_string(f.size()) + " components");
    }
    if (f.dim() < 2) {
        throw std::invalid_argument("surface_grid: state dimension must be at least 2");
    }

    Eigen::MatrixXd out(static_cast<Eigen::Index>(ys.size()), static_cast<Eigen::Index>(xs.size()));
    std::vector<GaussianComponent> comps = f.components();
    for (std::size_t iy = 0; iy < ys.size(); ++iy) {
        for (std::size_t ix = 0; ix < xs.size(); ++ix) {
            Eigen::VectorXd m = f[probe_index].mean();
            m(0) = xs[ix];
            m(1) = ys[iy];
            comps[probe_index] = GaussianComponent(f[probe_index].weight(), m,
                                                   f[probe_index].cov());
            out(static_cast<Eigen::Index>(iy), static_cast<Eigen::Index>(ix)) =
                evaluate_cost(kind, GaussianMixture(comps), g).total;
        }
    }
    return out;
}

}  // namespace rfs
