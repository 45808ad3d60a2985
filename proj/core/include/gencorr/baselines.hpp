#pragma once

#include "gencorr/dataset.hpp"
#include "gencorr/moments.hpp"
#include "gencorr/screen.hpp"

namespace gencorr {

// Squared sample distance correlation between each predictor and the
// q-variate response (V-statistic double centering). The response distance
// matrix is centered once and reused across predictors. Requires n >= 4;
// a constant response is fatal (degenerate_error).
ScreenReport dcsis_screen(const Dataset& data, const ScreenOptions& options = {});
ScreenReport dcsis_screen(const Dataset& data, const MomentCache& cache,
                          const ScreenOptions& options = {});

// Rank-based utility: with z_j the standardized predictor and the strict
// componentwise order on response rows,
//   omega_j = (1/n) sum_k [ (1/n) sum_i z_ij 1{Y_i < Y_k} ]^2.
// Requires n >= 4. Degenerate predictors are skipped with a metadata note.
ScreenReport sirs_screen(const Dataset& data, const ScreenOptions& options = {});
ScreenReport sirs_screen(const Dataset& data, const MomentCache& cache,
                         const ScreenOptions& options = {});

// The multivariate indicator used by sirs_screen, isolated so an
// alternative response ordering can be swapped in: true when every
// component of row i is strictly below the corresponding component of
// row k.
bool response_strictly_less(const Eigen::Ref<const Eigen::MatrixXd>& y,
                            Index i, Index k);

}  // namespace gencorr
