#pragma once

#include <stdexcept>
#include <string>

namespace gencorr {

// Failure classes the library distinguishes. The CLI maps them onto exit
// codes: config_error -> 2, data_error / invalid_input_error -> 3,
// degenerate_error -> 4.

// Malformed arguments to a numerical routine (length mismatch, n too small,
// non-finite entries, undefined penalty term, ...).
class invalid_input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// File-level problems: unreadable paths, ragged rows, non-numeric cells,
// row-count mismatches between predictor and response files.
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical degeneracy: a predictor or response component with (near-)zero
// variance where positive variance is required, or an empty candidate set.
class degenerate_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid configuration of a simulation or pipeline run.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Lookup of a tuple that is not present in a report.
class not_found_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gencorr
