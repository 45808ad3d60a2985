#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace gencorr {

using Index = Eigen::Index;

// A complete observation matrix pair. Rows are observations; the columns of
// x are the p predictors and the columns of y the q response components.
struct Dataset {
  Eigen::MatrixXd x;  // n x p
  Eigen::MatrixXd y;  // n x q
  std::vector<std::string> feature_names;   // empty, or exactly p entries
  std::vector<std::string> response_names;  // empty, or exactly q entries

  Index n() const { return x.rows(); }
  Index p() const { return x.cols(); }
  Index q() const { return y.cols(); }

  // Throws invalid_input_error unless: row counts agree, n >= 3, p >= 1,
  // q >= 1, every entry is finite, and name lists (when present) match the
  // corresponding dimension.
  void validate() const;
};

}  // namespace gencorr
