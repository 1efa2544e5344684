#pragma once

#include <cstdint>
#include <vector>

#include "sturmian/exact_angle.hpp"
#include "sturmian/order_analysis.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// Pair couplings J(j) = lambda^j on forbidden distances (zero on allowed
/// ones) plus a penalty beta on every run of d_1 + 1 consecutive zeros.
/// Every term is non-negative and vanishes on legal configurations, so the
/// Hamiltonian is frustration-free by construction.
struct InteractionSpec {
  DistanceProfile profile;
  Rational lambda;
  Rational beta;
  std::vector<Rational> coupling;  // index = distance, [0] unused, up to the horizon
  std::int64_t zero_run_len = 0;

  /// Throws ErrorKind::insufficient_profile beyond the horizon.
  const Rational& J(std::int64_t distance) const;
};

/// Throws ErrorKind::invalid_argument unless 0 < lambda < 1 and beta > 0.
InteractionSpec build_interaction(DistanceProfile profile, Rational lambda = Rational(1, 2),
                                  Rational beta = Rational(1));

struct PairViolation {
  std::size_t left = 0;
  std::size_t right = 0;
  std::int64_t distance = 0;
};

struct EnergyBreakdown {
  Rational total;
  Rational pair_part;
  Rational zero_run_part;
  std::vector<PairViolation> violating_pairs;
  std::vector<std::size_t> violating_runs;  // start offsets
};

/// Energy of w with free boundaries: every pair of 1's inside w at distance
/// j contributes J(j), every window of zero_run_len zeros contributes beta.
EnergyBreakdown energy_open(const Word& w, const InteractionSpec& spec);

inline constexpr std::size_t kMaxExhaustiveLength = 24;

struct GroundStateResult {
  std::size_t length = 0;
  Rational min_energy;
  FactorSet argmin;
  /// The legal words of this length, found independently by the pruned
  /// search, and whether the ground states coincide with them.
  FactorSet legal;
  bool min_is_zero = false;
  bool argmin_is_legal_set = false;
};

/// Exhaustive scan of all 2^L words. Throws ErrorKind::budget_exceeded for
/// L > 24 (use enumerate_legal instead) and ErrorKind::insufficient_profile
/// when L - 1 exceeds the horizon.
GroundStateResult ground_state_search(std::size_t length, const InteractionSpec& spec);

struct PeriodicDensity {
  Rational lower_bound;     // truncated sum; all dropped terms are >= 0
  Rational value_estimate;  // lower_bound + bound on the dropped tail
  std::int64_t cutoff = 0;  // largest pair distance summed
};

/// Energy per site of the bi-infinite repetition of `period_word`. Pair sums
/// stop at the first cutoff T whose geometric tail lambda^(T+1)/(1-lambda) is
/// below tail_tol, or at the profile horizon, whichever is smaller. The
/// cutoff is raised to the first forbidden multiple of the period when that
/// lies within the horizon.
PeriodicDensity periodic_energy_density(const Word& period_word, const InteractionSpec& spec,
                                        const Rational& tail_tol);

}  // namespace sturmian
