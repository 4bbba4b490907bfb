#pragma once

#include "rfs/gaussian.hpp"

#include <string>
#include <vector>

namespace rfs {

/// Choice of distributional distance between the swarm intensity f and the
/// desired intensity g.
enum class CostKind {
    CauchySchwarz,
    L2,
    L2Quadratic,
};

std::string to_string(CostKind kind);

/// Parses "cs", "l2", "l2quad" (case-insensitive). Throws on anything else.
CostKind parse_cost_kind(const std::string& text);

/// Value of a distance plus the double-sum terms it was assembled from.
///
/// For L2 and L2Quadratic the terms are the raw pairwise Gaussian sums and
/// total = ff - 2*fg + gg (+ quad for L2Quadratic). For CauchySchwarz the
/// three sums are reported unscaled and total = -ln(fg / sqrt(ff*gg)).
/// Terms not used by the chosen kind are zero.
struct CostBreakdown {
    double total = 0.0;
    double ff_term = 0.0;
    double gg_term = 0.0;
    double fg_term = 0.0;
    double quad_term = 0.0;
};

/// L2^2 distance between mixture intensities:
///   sum_ij wf_i wf_j N(mf_j; mf_i, Pf_i+Pf_j)
/// + sum_ij wg_i wg_j N(mg_j; mg_i, Pg_i+Pg_j)
/// - 2 sum_ji wg_j wf_i N(mg_j; mf_i, Pg_j+Pf_i)
CostBreakdown l2_distance(const GaussianMixture& f, const GaussianMixture& g);

/// Cauchy-Schwarz divergence -ln(<f,g> / (||f|| ||g||)), nonnegative and
/// zero iff f is proportional to g. The sign makes it a divergence to be
/// minimized; the inner products come from the same pairwise kernels as
/// the L2 distance.
double cauchy_schwarz(const GaussianMixture& f, const GaussianMixture& g);

/// L2^2 distance plus the quadratic shaping term
///   - sum_ji wg_j wf_i ln N(mg_j; mf_i, Pg_j+Pf_i),
/// which keeps the cost landscape sloped toward the targets when the
/// mixtures no longer overlap. quad_term holds the log sum; the logs are
/// evaluated directly from Cholesky factors, never as ln(eval_density).
CostBreakdown l2_quadratic(const GaussianMixture& f, const GaussianMixture& g);

/// Dispatches to the distance named by kind, reporting the full breakdown.
CostBreakdown evaluate_cost(CostKind kind, const GaussianMixture& f, const GaussianMixture& g);

/// Analytic gradient of the chosen distance with respect to each f-component
/// mean (covariances and weights are not decision variables). One vector of
/// length f.dim() per f-component.
std::vector<Eigen::VectorXd> cost_gradient(CostKind kind, const GaussianMixture& f,
                                           const GaussianMixture& g);

/// Value and f-mean gradients in one pass over the pairwise kernels.
CostBreakdown cost_with_gradient(CostKind kind, const GaussianMixture& f, const GaussianMixture& g,
                                 std::vector<Eigen::VectorXd>& grad);

/// Cost evaluated with f-component probe_index's position swept over the
/// (xs, ys) grid, velocities and every other component held fixed. Entry
/// (iy, ix) is the cost with the probe mean's first two coordinates set to
/// (xs[ix], ys[iy]). Requires dim >= 2.
Eigen::MatrixXd surface_grid(CostKind kind, const GaussianMixture& f, const GaussianMixture& g,
                             std::size_t probe_index, const std::vector<double>& xs,
                             const std::vector<double>& ys);

}  // namespace rfs
