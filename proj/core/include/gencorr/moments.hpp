#pragma once

#include "gencorr/dataset.hpp"

#include <Eigen/Core>
#include <vector>

namespace gencorr {

inline constexpr double kDefaultVarTolerance = 1e-12;

// Immutable precomputation shared by every screen over one dataset.
// Construction may run in parallel over columns; the stored values are
// bit-identical for any worker count.
struct MomentCache {
  Eigen::VectorXd x_means;    // p
  Eigen::VectorXd x_vars;     // p, divisor n-1
  Eigen::VectorXd y_means;    // q
  Eigen::VectorXd y_vars;     // q, divisor n-1
  Eigen::MatrixXd x_centered; // n x p
  Eigen::MatrixXd y_centered; // n x q
  Eigen::MatrixXd y_cov;      // q x q, symmetric
  Eigen::MatrixXd y_corr;     // q x q, unit diagonal by construction
  double gamma_hat = 0.0;     // (q+1) + sum_{l != m} rho_lm^2
  double var_tolerance = 0.0; // relative tolerance the cache was built with
  std::vector<Index> degenerate_columns;  // ascending predictor indices
  std::vector<char> degenerate_mask;      // size p

  Index n() const { return x_centered.rows(); }
  Index p() const { return x_centered.cols(); }
  Index q() const { return y_centered.cols(); }
  bool is_degenerate(Index j) const { return degenerate_mask[static_cast<size_t>(j)] != 0; }
  Index active_count() const { return p() - static_cast<Index>(degenerate_columns.size()); }
};

// Sample variance with divisor n-1. Throws invalid_input_error for n < 2.
double sample_variance(const Eigen::Ref<const Eigen::VectorXd>& column);

// Sample covariance with divisor n-1; symmetric in its arguments.
// Throws invalid_input_error on length mismatch or n < 2.
double sample_covariance(const Eigen::Ref<const Eigen::VectorXd>& a,
                         const Eigen::Ref<const Eigen::VectorXd>& b);

// q x q matrix of pairwise sample covariances of the columns of y.
Eigen::MatrixXd y_covariance_matrix(const Eigen::Ref<const Eigen::MatrixXd>& y);

// (r+1)-way joint cumulant estimate with divisor n:
//   (1/n) sum_i [ prod_s (x_s[i] - mean(x_s)) ] (y[i] - mean(y)).
// Throws invalid_input_error for empty x_cols or length mismatches.
double joint_cumulant_hat(const Eigen::Ref<const Eigen::VectorXd>& y_col,
                          const std::vector<Eigen::VectorXd>& x_cols);

// gamma estimate from a correlation matrix with unit diagonal:
//   (q+1) + sum over both-ordered off-diagonal pairs of rho^2.
// Equals 1 + squared Frobenius norm of y_corr; never below q+1.
double gamma_hat(const Eigen::Ref<const Eigen::MatrixXd>& y_corr);

// Builds the full cache. A predictor column j is flagged degenerate when
// var(x_j) <= var_tolerance * mean(x_j^2); a response component failing the
// same bound is fatal (degenerate_error).
MomentCache build_moment_cache(const Dataset& data,
                               double var_tolerance = kDefaultVarTolerance,
                               int threads = 1);

}  // namespace gencorr
