#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sturmian/exact_angle.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// Half-open arc [left, right) of the circle whose points all start the same
/// length-n word.
struct ComponentInterval {
  QuadIrrational left;
  QuadIrrational right;
  std::string word;

  QuadIrrational length() const { return right - left; }
};

struct ComponentIntervals {
  std::size_t n = 0;
  std::vector<QuadIrrational> cuts;  // ascending, cuts.front() == 0
  std::vector<ComponentInterval> intervals;

  /// nullptr when `word` labels no interval (it is not a factor).
  const ComponentInterval* find(const std::string& word) const;
};

/// Cuts the circle at frac(-k*gamma) for k = -1 .. n-1, i.e. at every
/// rotation preimage of the arc boundaries {0, gamma} for offsets 0..n-1,
/// and labels each arc by coding one interior point. Always n + 1 arcs;
/// throws ErrorKind::invalid_rotation on coinciding cuts and
/// ErrorKind::internal_consistency if two arcs carry the same word.
ComponentIntervals component_intervals(const RotationParams& params, std::size_t n);

/// Exact frequency of w: the length of its arc, zero for non-factors.
QuadIrrational frequency(const RotationParams& params, const Word& w);

/// Overlapping occurrences of w in x. Zero when w is longer than x.
std::size_t count_occurrences(const Word& x, const Word& w);

struct DiscrepancyReport {
  Word word;
  QuadIrrational frequency;
  std::int64_t max_len = 0;     // segments of length <= max_len
  std::int64_t window_len = 0;  // each trial window has 2 * max_len symbols
  std::vector<std::int64_t> offsets;
  /// max |n_w(X(A)) - xi_w |A|| over segments A with |A| <= max_len.
  QuadIrrational max_dev;
  /// ceil(max_dev): the integer bound C_w observed at this horizon.
  BigInt c_w_estimate;
  /// The same two quantities with segments up to 2 * max_len.
  QuadIrrational max_dev_doubled;
  BigInt c_w_doubled;
  /// c_w_estimate == c_w_doubled.
  bool stabilized = false;
};

/// Checks every segment inside `trials` windows of length 2*max_len placed
/// at deterministic offsets (t * 7919 for t = 0..trials-1).
DiscrepancyReport strict_boundary_check(const RotationParams& params, const Word& w, std::int64_t max_len,
                                        std::size_t trials = 1);

}  // namespace sturmian
