#pragma once

#include "gencorr/dataset.hpp"
#include "gencorr/moments.hpp"
#include "gencorr/norm.hpp"
#include "gencorr/report.hpp"

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace gencorr {

struct ScreenOptions {
  int threads = 0;  // 0 = hardware concurrency
  // screen_interactions warns on stderr when the candidate count exceeds
  // this budget; the scan still runs.
  std::uint64_t enumeration_warn_budget = 1'000'000'000ull;
};

// Block covariance matrix of (X_j, Y^(1), ..., Y^(q)): top-left var(X_j),
// first row/column the covariances of X_j with each response component,
// lower-right block the response covariance matrix. Throws degenerate_error
// for a degenerate predictor.
Eigen::MatrixXd build_sigma_marginal(Index j, const MomentCache& cache,
                                     const Dataset& data);

// Interaction analogue for a strictly increasing r-tuple (r >= 2): top-left
// the product of the predictor variances, first row/column the (r+1)-way
// joint cumulants with each response component.
Eigen::MatrixXd build_sigma_interaction(const std::vector<Index>& tuple,
                                        const MomentCache& cache,
                                        const Dataset& data);

// Generalized correlation: D^{-1/2} Sigma D^{-1/2} with D = diag(Sigma).
// The diagonal of the result is exactly 1. Throws degenerate_error when a
// diagonal entry is not strictly positive.
Eigen::MatrixXd h_matrix(const Eigen::Ref<const Eigen::MatrixXd>& sigma);

// Entrywise l_p norm of a matrix.
double utility(const Eigen::Ref<const Eigen::MatrixXd>& h, NormSpec norm);

// One utility per non-degenerate predictor, fully sorted. Throws
// degenerate_error when every predictor is degenerate.
ScreenReport screen_marginal(const Dataset& data, NormSpec norm,
                             const ScreenOptions& options = {});
ScreenReport screen_marginal(const Dataset& data, const MomentCache& cache,
                             NormSpec norm, const ScreenOptions& options = {});

// Streaming top-k scan over all strictly increasing r-tuples of
// non-degenerate predictors. Memory is bounded by O(workers * top_k)
// candidate entries; the report is identical for any worker count. When
// top_k is at least the candidate count the report is the full sorted
// enumeration.
ScreenReport screen_interactions(const Dataset& data, int r, NormSpec norm,
                                 std::uint64_t top_k,
                                 const ScreenOptions& options = {});
ScreenReport screen_interactions(const Dataset& data, const MomentCache& cache,
                                 int r, NormSpec norm, std::uint64_t top_k,
                                 const ScreenOptions& options = {});

}  // namespace gencorr
