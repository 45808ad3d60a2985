#pragma once

#include "gencorr/dataset.hpp"
#include "gencorr/norm.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace gencorr {

// One scored candidate: a strictly increasing tuple of 0-based predictor
// indices (size 1 for marginal screens) and its nonnegative utility.
struct UtilityScore {
  std::vector<Index> indices;
  double value = 0.0;
};

// Ranked screening output. Scores are sorted by value descending; ties are
// broken by lexicographically ascending index tuples, so the ordering is a
// total order and reports are reproducible. Stored as structure-of-arrays to
// keep full interaction reports cheap.
struct ScreenReport {
  std::string method;  // "gencorr", "sirs", "dcsis"
  NormSpec norm;       // meaningful for method == "gencorr"
  int order_r = 1;

  std::vector<double> values;       // sorted per the report ordering
  std::vector<Index> index_flat;    // size() * order_r, 0-based

  struct Meta {
    Index n = 0, p = 0, q = 0;
    std::uint64_t candidates_scanned = 0;
    std::vector<Index> degenerate_skipped;
    bool truncated = false;            // top-k cut off part of the candidate space
    std::uint64_t peak_buffered = 0;   // scan buffer entries held across workers
    std::vector<std::string> feature_names;  // empty or p entries
  } meta;

  std::size_t size() const { return values.size(); }
  bool empty() const { return values.empty(); }

  std::span<const Index> indices_at(std::size_t i) const {
    return {index_flat.data() + i * static_cast<std::size_t>(order_r),
            static_cast<std::size_t>(order_r)};
  }
  UtilityScore score_at(std::size_t i) const {
    auto idx = indices_at(i);
    return UtilityScore{{idx.begin(), idx.end()}, values[i]};
  }
};

// Total order used everywhere a report is sorted or merged.
bool report_order_before(double value_a, std::span<const Index> idx_a,
                         double value_b, std::span<const Index> idx_b);

// 1-based position of a tuple under the report ordering. Throws
// not_found_error when the tuple was not scored.
std::size_t rank_of(const ScreenReport& report, std::span<const Index> tuple);

// Model selected by thresholding a report at cutoff c.
struct ModelSet {
  std::vector<std::vector<Index>> tuples;
  double cutoff = 0.0;
};

// All tuples with utility strictly greater than c. Warns on stderr when the
// report was top-k truncated, since candidates beyond the cut may also clear
// the threshold.
ModelSet threshold_select(const ScreenReport& report, double c);

}  // namespace gencorr
