// Straightforward reference versions of the kernels. These follow the
// definitions directly and are kept for cross-checking the OpenMP versions.

#include <algorithm>
#include <functional>
#include <limits>

#include "sturmian/kernels.hpp"
#include "sturmian/sturmian_gen.hpp"

namespace sturmian::kernels::serial {

std::vector<std::uint8_t> code_window(const RotationParams& params, std::int64_t from, std::size_t count,
                                      EndpointPolicy policy) {
  std::vector<std::uint8_t> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = symbol_at(params, BigInt(from) + k, policy);
  }
  return out;
}

std::optional<ImbalanceWitness> balance_scan(std::span<const std::uint8_t> symbols) {
  const std::size_t n = symbols.size();
  for (std::size_t m = 1; m <= n; ++m) {
    ImbalanceWitness w{m, 0, 0, std::numeric_limits<std::size_t>::max(), 0};
    for (std::size_t s = 0; s + m <= n; ++s) {
      std::size_t ones = 0;
      for (std::size_t k = s; k < s + m; ++k) ones += symbols[k];
      if (ones < w.low_count) {
        w.low_count = ones;
        w.low_offset = s;
      }
      if (ones > w.high_count || s == 0) {
        w.high_count = ones;
        w.high_offset = s;
      }
    }
    if (w.high_count >= w.low_count + 2) return w;
  }
  return std::nullopt;
}

std::vector<GapRange> gap_ranges(std::span<const std::size_t> ones) {
  std::vector<GapRange> out;
  for (std::size_t j = 1; j < ones.size(); ++j) {
    GapRange r{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::min()};
    for (std::size_t i = 0; i + j < ones.size(); ++i) {
      const auto gap = static_cast<std::int64_t>(ones[i + j] - ones[i]);
      r.first = std::min(r.first, gap);
      r.second = std::max(r.second, gap);
    }
    out.push_back(r);
  }
  return out;
}

std::vector<CountRange> segment_extrema(std::span<const std::uint8_t> occurs, std::size_t pattern_len,
                                        std::size_t window_len) {
  // occurs[s] = 1 when the pattern starts at s; a segment [s, s+L) contains
  // the occurrences starting in [s, s+L-pattern_len].
  std::vector<std::int64_t> prefix(occurs.size() + 1, 0);
  for (std::size_t t = 0; t < occurs.size(); ++t) prefix[t + 1] = prefix[t] + occurs[t];
  std::vector<CountRange> out;
  out.reserve(window_len);
  for (std::size_t len = 1; len <= window_len; ++len) {
    CountRange r{std::numeric_limits<std::int64_t>::max(), 0};
    for (std::size_t s = 0; s + len <= window_len; ++s) {
      const std::int64_t count = len < pattern_len ? 0 : prefix[s + len - pattern_len + 1] - prefix[s];
      r.first = std::min(r.first, count);
      r.second = std::max(r.second, count);
    }
    out.push_back(r);
  }
  return out;
}

EnergyScan energy_scan(const ScaledHamiltonian& h) {
  const std::size_t L = h.length;
  EnergyScan result{std::numeric_limits<std::int64_t>::max(), {}};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L); ++mask) {
    auto bit = [&](std::size_t k) { return (mask >> k) & 1U; };
    std::int64_t energy = 0;
    for (std::size_t i = 0; i < L; ++i) {
      for (std::size_t j = i + 1; j < L; ++j) {
        if (bit(i) && bit(j)) energy += h.pair_weight[j - i];
      }
    }
    for (std::size_t s = 0; s + h.zero_run_len <= L; ++s) {
      bool zeros = true;
      for (std::size_t k = s; k < s + h.zero_run_len; ++k) zeros = zeros && !bit(k);
      if (zeros) energy += h.zero_run_weight;
    }
    if (energy < result.min_energy) {
      result.min_energy = energy;
      result.argmin.clear();
    }
    if (energy == result.min_energy) result.argmin.push_back(static_cast<std::uint32_t>(mask));
  }
  return result;
}

LegalCenters legal_centers(std::size_t n, std::size_t m, const LegalityRules& rules, std::uint64_t node_budget) {
  LegalCenters result;
  std::string word;
  const std::size_t center = (m - n) / 2;

  std::function<void()> extend = [&] {
    if (++result.nodes > node_budget) {
      throw Error(ErrorKind::budget_exceeded, "legal-word search exceeded " + std::to_string(node_budget) + " nodes");
    }
    if (word.size() == m) {
      result.centers.insert(word.substr(center, n));
      return;
    }
    const std::size_t k = word.size();
    std::size_t run = 0;
    while (run < k && word[k - 1 - run] == '0') ++run;
    if (run + 1 < rules.zero_run_len || rules.zero_run_len == 0) {
      word.push_back('0');
      extend();
      word.pop_back();
    }
    bool ok = true;
    for (std::size_t o = 0; o < k && ok; ++o) {
      if (word[o] == '1' && rules.forbidden[k - o]) ok = false;
    }
    if (ok) {
      word.push_back('1');
      extend();
      word.pop_back();
    }
  };
  extend();
  return result;
}

}  // namespace sturmian::kernels::serial
