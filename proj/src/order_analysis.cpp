#include "sturmian/order_analysis.hpp"

#include <algorithm>
#include <set>

#include "sturmian/sturmian_gen.hpp"

namespace sturmian {

FactorSet factor_set(const Word& w, std::size_t n) {
  if (n == 0 || n > w.size()) {
    throw Error(ErrorKind::empty_window,
                "factor length " + std::to_string(n) + " does not fit a window of length " + std::to_string(w.size()));
  }
  const std::string text = w.str();
  FactorSet out;
  for (std::size_t s = 0; s + n <= text.size(); ++s) out.insert(text.substr(s, n));
  return out;
}

StableFactors stable_factor_set(const RotationParams& params, std::size_t n, std::size_t window_cap) {
  std::size_t window = std::max<std::size_t>(64, 4 * n);
  FactorSet current = factor_set(generate(params, 0, static_cast<std::int64_t>(window) - 1), n);
  while (2 * window <= window_cap) {
    FactorSet next = factor_set(generate(params, 0, static_cast<std::int64_t>(2 * window) - 1), n);
    if (next == current) return {std::move(current), 2 * window};
    current = std::move(next);
    window *= 2;
  }
  throw Error(ErrorKind::inconclusive, "factor set of length " + std::to_string(n) +
                                           " did not stabilize below window " + std::to_string(window_cap));
}

ComplexityReport factor_complexity(const RotationParams& params, std::size_t n_max, std::size_t window_cap) {
  if (n_max == 0) throw Error(ErrorKind::invalid_argument, "n_max must be >= 1");
  ComplexityReport report;
  for (std::size_t n = 1; n <= n_max; ++n) {
    StableFactors stable = stable_factor_set(params, n, window_cap);
    report.p[n] = stable.factors.size();
    report.window_len = std::max(report.window_len, stable.window_len);
  }
  return report;
}

BalanceVerdict is_balanced(const Word& w) {
  auto witness = kernels::omp::balance_scan(w.symbols());
  return BalanceVerdict{!witness.has_value(), witness};
}

HomogeneityVerdict is_most_homogeneous(const Word& w, bool count_edges) {
  const std::vector<std::size_t> ones = w.ones();
  if (ones.size() < 2) {
    throw Error(ErrorKind::undecidable, "need at least two 1's to measure gaps, window has " +
                                            std::to_string(ones.size()));
  }
  HomogeneityVerdict verdict;
  const auto ranges = kernels::omp::gap_ranges(ones);
  for (std::size_t j = 1; j <= ranges.size(); ++j) {
    const auto [lo, inner_hi] = ranges[j - 1];
    std::int64_t hi = inner_hi;
    bool from_edge = false;
    if (count_edges) {
      const auto k = ones.size();
      const auto edge = std::max<std::int64_t>(static_cast<std::int64_t>(ones[j - 1]) + 1,
                                               static_cast<std::int64_t>(w.size() - ones[k - j]));
      if (edge > hi) {
        hi = edge;
        from_edge = true;
      }
    }
    if (hi - lo >= 2) {
      verdict.homogeneous = false;
      verdict.gap_floor.clear();
      verdict.witness = HomogeneityWitness{j, lo, hi, from_edge};
      return verdict;
    }
    verdict.gap_floor.push_back(lo);
  }
  return verdict;
}

DistanceProfile DistanceProfile::from_distances(std::vector<std::int64_t> d, std::int64_t horizon,
                                                std::optional<QuadIrrational> gamma) {
  if (horizon < 1) throw Error(ErrorKind::invalid_argument, "profile horizon must be >= 1");
  DistanceProfile p;
  p.horizon_ = horizon;
  p.forbidden_.assign(static_cast<std::size_t>(horizon) + 1, 1);
  p.forbidden_[0] = 0;
  for (std::int64_t x : d) {
    for (std::int64_t a : {x, x + 1}) {
      if (a >= 1 && a <= horizon) p.forbidden_[static_cast<std::size_t>(a)] = 0;
    }
  }
  p.d_ = std::move(d);
  p.gamma_ = std::move(gamma);
  return p;
}

DistanceProfile DistanceProfile::from_sets(std::vector<std::int64_t> d, std::int64_t horizon,
                                           const std::vector<std::int64_t>& forbidden,
                                           std::optional<QuadIrrational> gamma) {
  if (horizon < 1) throw Error(ErrorKind::invalid_argument, "profile horizon must be >= 1");
  DistanceProfile p;
  p.horizon_ = horizon;
  p.forbidden_.assign(static_cast<std::size_t>(horizon) + 1, 0);
  for (std::int64_t f : forbidden) {
    if (f < 1 || f > horizon) {
      throw Error(ErrorKind::invalid_argument, "forbidden distance " + std::to_string(f) + " outside [1, horizon]");
    }
    p.forbidden_[static_cast<std::size_t>(f)] = 1;
  }
  p.d_ = std::move(d);
  p.gamma_ = std::move(gamma);
  return p;
}

std::int64_t DistanceProfile::d1() const {
  if (d_.empty()) throw Error(ErrorKind::insufficient_profile, "profile lists no distances");
  return d_.front();
}

bool DistanceProfile::is_forbidden(std::int64_t distance) const {
  if (distance < 1 || distance > horizon_) {
    throw Error(ErrorKind::insufficient_profile,
                "distance " + std::to_string(distance) + " outside profile horizon " + std::to_string(horizon_));
  }
  return forbidden_[static_cast<std::size_t>(distance)] != 0;
}

std::vector<std::int64_t> DistanceProfile::allowed() const {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= horizon_; ++k) {
    if (!forbidden_[static_cast<std::size_t>(k)]) out.push_back(k);
  }
  return out;
}

std::vector<std::int64_t> DistanceProfile::forbidden() const {
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= horizon_; ++k) {
    if (forbidden_[static_cast<std::size_t>(k)]) out.push_back(k);
  }
  return out;
}

std::optional<std::size_t> DistanceProfile::order_of(std::int64_t distance) const {
  auto it = std::lower_bound(d_.begin(), d_.end(), distance);
  if (it != d_.end() && *it == distance) return static_cast<std::size_t>(it - d_.begin()) + 1;
  if (it != d_.begin() && *(it - 1) + 1 == distance) return static_cast<std::size_t>(it - d_.begin());
  return std::nullopt;
}

std::optional<std::string> DistanceProfile::structure_violation() const {
  if (d_.empty()) return std::nullopt;
  if (d_.front() < 2) return "d_1 = " + std::to_string(d_.front()) + " < 2";
  for (std::size_t j = 0; j < d_.size(); ++j) {
    if (d_[j] > horizon_) return "d_" + std::to_string(j + 1) + " exceeds the horizon";
    if (j == 0) continue;
    const std::int64_t step = d_[j] - d_[j - 1];
    if (step != d_.front() && step != d_.front() + 1) {
      return "increment d_" + std::to_string(j + 1) + " - d_" + std::to_string(j) + " = " + std::to_string(step) +
             " not in {d_1, d_1 + 1}";
    }
  }
  const DistanceProfile derived = from_distances(d_, horizon_);
  for (std::int64_t k = 1; k <= horizon_; ++k) {
    if (derived.is_forbidden(k) != is_forbidden(k)) {
      return "distance " + std::to_string(k) + " is " + (is_forbidden(k) ? "forbidden" : "allowed") +
             " but the d_j list says otherwise";
    }
  }
  return std::nullopt;
}

DistanceProfile distance_profile(const QuadIrrational& gamma, std::int64_t horizon) {
  if (horizon < 2) throw Error(ErrorKind::invalid_argument, "distance horizon must be >= 2");
  const RotationParams x0 = RotationParams::make(gamma, QuadIrrational());
  const Word window = generate(x0, 1, horizon + 1);
  if (window[0] != 1) {
    throw Error(ErrorKind::internal_consistency, "X_0(1) must be 1 under the half-open coding");
  }
  std::vector<std::int64_t> d;
  for (std::size_t k = 1; k < window.size(); ++k) {
    if (window[k]) d.push_back(static_cast<std::int64_t>(k));
  }
  DistanceProfile profile = DistanceProfile::from_distances(std::move(d), horizon, gamma);
  if (auto bad = profile.structure_violation()) {
    throw Error(ErrorKind::internal_consistency, "distance profile of " + gamma.to_string() + ": " + *bad);
  }
  return profile;
}

DistanceProfile extend_profile(const DistanceProfile& profile, std::int64_t horizon) {
  if (horizon <= profile.horizon()) return profile;
  if (!profile.gamma()) {
    throw Error(ErrorKind::insufficient_profile, "profile horizon " + std::to_string(profile.horizon()) +
                                                     " is too small and its rotation angle is unknown");
  }
  return distance_profile(*profile.gamma(), horizon);
}

StructureReport profile_structure(const DistanceProfile& profile) {
  StructureReport report;
  const auto& d = profile.d();
  if (d.empty()) return report;
  if (auto bad = profile.structure_violation()) throw Error(ErrorKind::internal_consistency, *bad);

  const std::int64_t d1 = d.front();
  std::vector<std::vector<std::int64_t>> blocks{{d.front()}};
  for (std::size_t j = 1; j < d.size(); ++j) {
    if (d[j] - d[j - 1] == 2) {
      blocks.back().push_back(d[j]);
    } else {
      blocks.push_back({d[j]});
    }
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    report.block_sizes.push_back(blocks[b].size());
    for (std::int64_t x : blocks[b]) {
      report.entries.push_back({x, blocks[b].size() == 1 ? DistanceRole::singleton : DistanceRole::block, b});
    }
  }

  const auto fail = [](const std::string& what) { throw Error(ErrorKind::internal_consistency, what); };
  if (d1 > 2) {
    if (blocks.size() != d.size()) fail("d_1 > 2 but some d_j lie in a block");
    for (std::size_t j = 1; j < d.size(); ++j) {
      std::int64_t gap_forbidden = 0;
      for (std::int64_t x = d[j - 1] + 1; x < d[j]; ++x) gap_forbidden += profile.is_forbidden(x) ? 1 : 0;
      if (gap_forbidden != d1 - 2 && gap_forbidden != d1 - 1) {
        fail("between d_" + std::to_string(j) + " and d_" + std::to_string(j + 1) + " lie " +
             std::to_string(gap_forbidden) + " forbidden distances");
      }
    }
    return report;
  }

  // d_1 = 2: one forbidden distance between neighbouring blocks.
  for (std::size_t b = 1; b < blocks.size(); ++b) {
    std::int64_t gap_forbidden = 0;
    for (std::int64_t x = blocks[b - 1].back() + 1; x < blocks[b].front(); ++x) {
      gap_forbidden += profile.is_forbidden(x) ? 1 : 0;
    }
    if (gap_forbidden != 1) {
      fail("blocks ending at " + std::to_string(blocks[b - 1].back()) + " and starting at " +
           std::to_string(blocks[b].front()) + " are separated by " + std::to_string(gap_forbidden) +
           " forbidden distances");
    }
  }
  // The last block may be cut by the horizon; it is complete only once the
  // distance two past its end is known not to be a d_j.
  std::size_t complete = blocks.size();
  if (blocks.back().back() + 2 > profile.horizon()) --complete;
  std::set<std::size_t> sizes;
  for (std::size_t b = 0; b < complete; ++b) sizes.insert(blocks[b].size());
  if (sizes.size() > 2 || (sizes.size() == 2 && *sizes.rbegin() != *sizes.begin() + 1)) {
    fail("block sizes are not two consecutive values");
  }
  if (!sizes.empty() && *sizes.rbegin() <= 2) {
    report.neighbour_rule_checked = true;
    for (std::int64_t x : d) {
      const bool below = x - 1 >= 1 && profile.is_forbidden(x - 1);
      if (below || x + 2 > profile.horizon()) continue;
      if (!profile.is_forbidden(x + 2)) {
        fail("neither " + std::to_string(x - 1) + " nor " + std::to_string(x + 2) + " is forbidden");
      }
    }
  }
  return report;
}

}  // namespace sturmian
