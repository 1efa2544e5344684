#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sturmian/order_analysis.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

enum class ViolationKind { zero_run, forbidden_pair };

struct Violation {
  ViolationKind kind = ViolationKind::zero_run;
  std::size_t position = 0;  // 0-based offset in the word: run start, or left 1 of the pair
  std::optional<std::int64_t> distance;
};

struct LegalityVerdict {
  bool legal = true;
  std::optional<Violation> violation;
};

/// Legal iff w has no run of d_1 + 1 zeros and no two 1's at a forbidden
/// distance. Pairs are reported before runs. Throws
/// ErrorKind::insufficient_profile when |w| - 1 exceeds the profile horizon.
LegalityVerdict is_locally_legal(const Word& w, const DistanceProfile& profile);

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Length-n words sitting in the middle (offset floor((M - n)/2)) of at least
/// one legal word of length M, sorted. Throws ErrorKind::budget_exceeded
/// (naming M) when the pruned search visits more than `node_budget` nodes.
FactorSet enumerate_legal(std::size_t n, std::size_t m, const DistanceProfile& profile,
                          std::uint64_t node_budget = kDefaultNodeBudget);

struct StableEnumeration {
  FactorSet words;
  std::size_t m_used = 0;  // the M at which the set was confirmed
};

/// Doubles M (starting at n + 2) until the set is unchanged across two
/// doublings. Regrows the profile when its horizon is too small. Throws
/// ErrorKind::inconclusive once M would exceed `m_cap`.
StableEnumeration enumerate_legal_stable(std::size_t n, const DistanceProfile& profile, std::size_t m_cap = 512,
                                         std::uint64_t node_budget = kDefaultNodeBudget);

/// Smallest i >= 1 with i*p forbidden. Grows the profile geometrically up to
/// `horizon_cap`, then throws ErrorKind::inconclusive.
std::int64_t periodic_exclusion(std::int64_t p, const DistanceProfile& profile, std::int64_t horizon_cap = 100'000);

struct LemmaWitness {
  std::size_t left = 0;   // offsets of the 1's involved
  std::size_t right = 0;
  std::size_t order = 0;  // the j of d_j
  std::int64_t observed = 0;
};

struct LemmaVerdict {
  bool precondition_ok = true;  // the word was legal
  bool holds = true;
  std::size_t checked = 0;
  std::vector<LemmaWitness> witnesses;  // first few counterexamples
};

/// Every pair of 1's at distance d_i or d_i + 1 has exactly i - 1 ones between
/// them. `observed` in a witness is the actual count.
LemmaVerdict check_fact1(const Word& w, const DistanceProfile& profile);

/// Every 1 at offset i has a 1 at i + d_j or i + d_j + 1, for each j with
/// i + d_j + 1 inside the window (and j <= max_order when given).
/// `observed` in a witness is d_j.
LemmaVerdict check_fact2(const Word& w, const DistanceProfile& profile,
                         std::optional<std::size_t> max_order = std::nullopt);

}  // namespace sturmian
