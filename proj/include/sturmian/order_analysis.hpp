#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sturmian/exact_angle.hpp"
#include "sturmian/kernels.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// Distinct length-n factors of w. Throws ErrorKind::empty_window when n is
/// zero or longer than w.
FactorSet factor_set(const Word& w, std::size_t n);

struct StableFactors {
  FactorSet factors;
  std::size_t window_len = 0;
};

/// Factor set of the coding of `params` over [0, W) with W doubled until the
/// set is unchanged under one more doubling. Throws ErrorKind::inconclusive
/// if `window_cap` is reached first.
StableFactors stable_factor_set(const RotationParams& params, std::size_t n, std::size_t window_cap = 1 << 20);

struct ComplexityReport {
  std::map<std::size_t, std::size_t> p;  // n -> p_n
  std::size_t window_len = 0;            // largest window used
};

ComplexityReport factor_complexity(const RotationParams& params, std::size_t n_max,
                                   std::size_t window_cap = 1 << 20);

struct BalanceVerdict {
  bool balanced = true;
  std::optional<kernels::ImbalanceWitness> witness;
};

BalanceVerdict is_balanced(const Word& w);

struct HomogeneityWitness {
  std::size_t j = 0;
  std::int64_t min_gap = 0;
  std::int64_t max_gap = 0;
  bool from_edge = false;  // max_gap is a lower bound implied by a boundary zero run
};

struct HomogeneityVerdict {
  bool homogeneous = true;
  std::vector<std::int64_t> gap_floor;  // m_j for j = 1.. (index j-1)
  std::optional<HomogeneityWitness> witness;
};

/// G_j must lie in {m_j, m_j + 1} for every j. With `count_edges`, the zero
/// runs at either end of the window also count: a 1 outside the window sits
/// at least that far away, so x_(j-1) + 1 and |w| - x_(k-j) are lower bounds
/// on some gap of order j. This makes the verdict agree with is_balanced on
/// every finite window. Throws ErrorKind::undecidable when w has fewer than
/// two 1's.
HomogeneityVerdict is_most_homogeneous(const Word& w, bool count_edges = true);

/// d_j together with the allowed distances {d_j, d_j + 1} and the forbidden
/// remainder of [1, horizon].
class DistanceProfile {
 public:
  DistanceProfile() = default;

  /// Allowed set derived from d. `gamma`, when known, lets callers regrow the
  /// profile to a larger horizon.
  static DistanceProfile from_distances(std::vector<std::int64_t> d, std::int64_t horizon,
                                        std::optional<QuadIrrational> gamma = std::nullopt);
  /// Takes the forbidden set verbatim, without checking it against d. Used for
  /// fixtures loaded from disk.
  static DistanceProfile from_sets(std::vector<std::int64_t> d, std::int64_t horizon,
                                   const std::vector<std::int64_t>& forbidden,
                                   std::optional<QuadIrrational> gamma = std::nullopt);

  const std::vector<std::int64_t>& d() const { return d_; }
  std::int64_t horizon() const { return horizon_; }
  const std::optional<QuadIrrational>& gamma() const { return gamma_; }

  /// Throws ErrorKind::insufficient_profile when d is empty.
  std::int64_t d1() const;
  /// Throws ErrorKind::insufficient_profile outside [1, horizon].
  bool is_forbidden(std::int64_t distance) const;
  bool is_allowed(std::int64_t distance) const { return !is_forbidden(distance); }
  std::vector<std::int64_t> allowed() const;
  std::vector<std::int64_t> forbidden() const;
  /// The j (1-based) with distance in {d_j, d_j + 1}, if any.
  std::optional<std::size_t> order_of(std::int64_t distance) const;

  /// Description of the first violated structural invariant, if any:
  /// d_1 >= 2, increments in {d_1, d_1 + 1}, allowed set = {d_j, d_j+1} within range.
  std::optional<std::string> structure_violation() const;

  friend bool operator==(const DistanceProfile&, const DistanceProfile&) = default;

 private:
  std::vector<std::int64_t> d_;
  std::int64_t horizon_ = 0;
  std::vector<std::uint8_t> forbidden_;  // index = distance
  std::optional<QuadIrrational> gamma_;
};

/// d_j read off X_0 (psi = 0): the distances from the 1 at position 1 to
/// the following 1's, for all d_j <= horizon. Throws
/// ErrorKind::internal_consistency if the increments break the expected structure.
DistanceProfile distance_profile(const QuadIrrational& gamma, std::int64_t horizon);
inline DistanceProfile distance_profile(const RotationParams& params, std::int64_t horizon) {
  return distance_profile(params.gamma(), horizon);
}
/// Same gamma, larger horizon. Throws ErrorKind::insufficient_profile when
/// the profile does not know its gamma.
DistanceProfile extend_profile(const DistanceProfile& profile, std::int64_t horizon);

enum class DistanceRole { singleton, block };

struct StructureEntry {
  std::int64_t d = 0;
  DistanceRole role = DistanceRole::singleton;
  std::size_t block = 0;  // index of the block this d_j belongs to
};

struct StructureReport {
  std::vector<StructureEntry> entries;
  std::vector<std::size_t> block_sizes;
  /// Whether the "d_j - 1 or d_j + 2 is forbidden" rule applied (d_1 = 2 with
  /// blocks of at most two members) and was verified.
  bool neighbour_rule_checked = false;
};

/// Groups d_j into blocks d_k, d_k + 2, ..., d_k + 2n and checks:
///  - d_1 > 2: every d_j is a singleton, with d_1 - 2 or d_1 - 1 forbidden
///    distances between consecutive ones;
///  - d_1 = 2: consecutive blocks are separated by exactly one forbidden
///    distance and complete blocks take at most two sizes, differing by one.
/// Throws ErrorKind::internal_consistency on any violation.
StructureReport profile_structure(const DistanceProfile& profile);

}  // namespace sturmian
