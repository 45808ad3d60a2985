#pragma once

#include "gencorr/errors.hpp"

#include <cmath>
#include <string>

namespace gencorr {

// Entrywise matrix l_p norm descriptor, 1 <= p < infinity. The sup norm is
// excluded: on a generalized correlation matrix it is identically one.
struct NormSpec {
  double exponent = 2.0;

  static NormSpec taxicab() { return NormSpec{1.0}; }
  static NormSpec frobenius() { return NormSpec{2.0}; }
  static NormSpec lp(double exponent) {
    if (!(exponent >= 1.0) || !std::isfinite(exponent)) {
      throw invalid_input_error("NormSpec: exponent must satisfy 1 <= p < inf, got " +
                                std::to_string(exponent));
    }
    return NormSpec{exponent};
  }

  bool is_taxicab() const { return exponent == 1.0; }
  bool is_frobenius() const { return exponent == 2.0; }

  // "taxicab", "frobenius", or "lp:<value>".
  std::string label() const;
};

}  // namespace gencorr
