#pragma once

// Data-parallel inner loops. Every kernel exists twice: a plain serial
// reference in `kernels::serial` and an OpenMP version in `kernels::omp`.
// Both return identical results (ordering included); the test suite checks
// that and bench/ compares their speed.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sturmian/exact_angle.hpp"
#include "sturmian/word.hpp"

namespace sturmian::kernels {

struct ImbalanceWitness {
  std::size_t length = 0;      // factor length m
  std::size_t low_offset = 0;  // first factor with the minimal 1-count
  std::size_t high_offset = 0; // first factor with the maximal 1-count
  std::size_t low_count = 0;
  std::size_t high_count = 0;
};

/// Per gap order j (index j-1): smallest and largest x_{i+j} - x_i.
using GapRange = std::pair<std::int64_t, std::int64_t>;

/// Per segment length L (index L-1): min and max occurrence counts over all
/// segments of that length inside the window.
using CountRange = std::pair<std::int64_t, std::int64_t>;

struct EnergyScan {
  std::int64_t min_energy = 0;      // scaled integer units
  std::vector<std::uint32_t> argmin; // ascending bit masks, bit k = symbol k
};

/// Integer form of an open-boundary lattice-gas energy on words of length L.
struct ScaledHamiltonian {
  std::size_t length = 0;
  std::vector<std::int64_t> pair_weight;  // index = distance, [0] unused
  std::size_t zero_run_len = 0;
  std::int64_t zero_run_weight = 0;
};

/// Forbidden-pattern data for the legal-word search.
struct LegalityRules {
  std::vector<std::uint8_t> forbidden;  // index = distance; 1 when forbidden
  std::size_t zero_run_len = 0;         // runs of this many zeros are illegal
};

struct LegalCenters {
  FactorSet centers;
  std::uint64_t nodes = 0;
};

namespace serial {

std::vector<std::uint8_t> code_window(const RotationParams& params, std::int64_t from, std::size_t count,
                                      EndpointPolicy policy);
std::optional<ImbalanceWitness> balance_scan(std::span<const std::uint8_t> symbols);
std::vector<GapRange> gap_ranges(std::span<const std::size_t> ones);
std::vector<CountRange> segment_extrema(std::span<const std::uint8_t> occurs, std::size_t pattern_len,
                                        std::size_t window_len);
EnergyScan energy_scan(const ScaledHamiltonian& h);
/// Throws ErrorKind::budget_exceeded once more than `node_budget` nodes are visited.
LegalCenters legal_centers(std::size_t n, std::size_t m, const LegalityRules& rules, std::uint64_t node_budget);

}  // namespace serial

namespace omp {

std::vector<std::uint8_t> code_window(const RotationParams& params, std::int64_t from, std::size_t count,
                                      EndpointPolicy policy);
std::optional<ImbalanceWitness> balance_scan(std::span<const std::uint8_t> symbols);
std::vector<GapRange> gap_ranges(std::span<const std::size_t> ones);
std::vector<CountRange> segment_extrema(std::span<const std::uint8_t> occurs, std::size_t pattern_len,
                                        std::size_t window_len);
EnergyScan energy_scan(const ScaledHamiltonian& h);
LegalCenters legal_centers(std::size_t n, std::size_t m, const LegalityRules& rules, std::uint64_t node_budget);

}  // namespace omp

}  // namespace sturmian::kernels
