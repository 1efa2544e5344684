#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <limits>

#include "sturmian/kernels.hpp"

namespace sturmian::kernels::omp {

namespace {

constexpr std::size_t kCodingChunk = 2048;

// Walks x_i = psi + i*gamma over a common denominator, tracking floor(x_i)
// so each step costs two exact sign tests and no square root.
class CodingCursor {
 public:
  CodingCursor(const RotationParams& params, const BigInt& start) : d_(params.gamma().d()) {
    const QuadIrrational& g = params.gamma();
    const QuadIrrational& p = params.psi();
    den_ = boost::multiprecision::lcm(g.c(), p.c());
    step_a_ = g.a() * (den_ / g.c());
    step_b_ = g.b() * (den_ / g.c());
    a_ = p.a() * (den_ / p.c()) + step_a_ * start;
    b_ = p.b() * (den_ / p.c()) + step_b_ * start;
    floor_ = qi_floor(p + g * start);
  }

  std::uint8_t symbol() const {
    // frac(x) < gamma  <=>  x - gamma - floor(x) < 0
    return surd_sign(a_ - step_a_ - floor_ * den_, b_ - step_b_, d_) < 0 ? 0 : 1;
  }

  void advance() {
    a_ += step_a_;
    b_ += step_b_;
    if (surd_sign(a_ - (floor_ + 1) * den_, b_, d_) >= 0) ++floor_;
  }

 private:
  BigInt d_;
  BigInt den_;
  BigInt step_a_, step_b_;
  BigInt a_, b_;
  BigInt floor_;
};

}  // namespace

std::vector<std::uint8_t> code_window(const RotationParams& params, std::int64_t from, std::size_t count,
                                      EndpointPolicy policy) {
  if (policy == EndpointPolicy::strict) {
    for (const BigInt& hit : params.endpoint_hits()) {
      if (hit >= from && hit < BigInt(from) + count) {
        throw Error(ErrorKind::ambiguous_coding,
                    "orbit point at index " + hit.str() + " lies on an arc boundary");
      }
    }
  }
  std::vector<std::uint8_t> out(count);
  const auto chunks = static_cast<std::int64_t>((count + kCodingChunk - 1) / kCodingChunk);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::size_t begin = static_cast<std::size_t>(c) * kCodingChunk;
    const std::size_t end = std::min(count, begin + kCodingChunk);
    CodingCursor cursor(params, BigInt(from) + begin);
    for (std::size_t k = begin; k < end; ++k) {
      out[k] = cursor.symbol();
      cursor.advance();
    }
  }
  return out;
}

std::optional<ImbalanceWitness> balance_scan(std::span<const std::uint8_t> symbols) {
  const std::size_t n = symbols.size();
  std::vector<std::size_t> prefix(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) prefix[k + 1] = prefix[k] + symbols[k];

  const auto spread_of = [&](std::size_t m) {
    ImbalanceWitness w{m, 0, 0, std::numeric_limits<std::size_t>::max(), 0};
    for (std::size_t s = 0; s + m <= n; ++s) {
      const std::size_t ones = prefix[s + m] - prefix[s];
      if (ones < w.low_count) {
        w.low_count = ones;
        w.low_offset = s;
      }
      if (ones > w.high_count || s == 0) {
        w.high_count = ones;
        w.high_offset = s;
      }
    }
    return w;
  };

  std::size_t first_bad = std::numeric_limits<std::size_t>::max();
  const auto lengths = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 16) reduction(min : first_bad)
  for (std::int64_t m = 1; m <= lengths; ++m) {
    const ImbalanceWitness w = spread_of(static_cast<std::size_t>(m));
    if (w.high_count >= w.low_count + 2) first_bad = std::min(first_bad, static_cast<std::size_t>(m));
  }
  if (first_bad == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return spread_of(first_bad);
}

std::vector<GapRange> gap_ranges(std::span<const std::size_t> ones) {
  if (ones.size() < 2) return {};
  std::vector<GapRange> out(ones.size() - 1);
  const auto orders = static_cast<std::int64_t>(ones.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t j = 1; j < orders; ++j) {
    GapRange r{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::min()};
    for (std::size_t i = 0; i + static_cast<std::size_t>(j) < ones.size(); ++i) {
      const auto gap = static_cast<std::int64_t>(ones[i + static_cast<std::size_t>(j)] - ones[i]);
      r.first = std::min(r.first, gap);
      r.second = std::max(r.second, gap);
    }
    out[static_cast<std::size_t>(j - 1)] = r;
  }
  return out;
}

std::vector<CountRange> segment_extrema(std::span<const std::uint8_t> occurs, std::size_t pattern_len,
                                        std::size_t window_len) {
  std::vector<std::int64_t> prefix(occurs.size() + 1, 0);
  for (std::size_t t = 0; t < occurs.size(); ++t) prefix[t + 1] = prefix[t] + occurs[t];
  std::vector<CountRange> out(window_len);
  const auto lengths = static_cast<std::int64_t>(window_len);
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t l = 1; l <= lengths; ++l) {
    const auto len = static_cast<std::size_t>(l);
    CountRange r{0, 0};
    if (len >= pattern_len) {
      const std::size_t span = len - pattern_len + 1;
      r = {std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::min()};
      for (std::size_t s = 0; s + len <= window_len; ++s) {
        const std::int64_t count = prefix[s + span] - prefix[s];
        r.first = std::min(r.first, count);
        r.second = std::max(r.second, count);
      }
    }
    out[len - 1] = r;
  }
  return out;
}

EnergyScan energy_scan(const ScaledHamiltonian& h) {
  const std::size_t L = h.length;
  const std::uint64_t full = (std::uint64_t{1} << L) - 1;
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << L);

  std::vector<std::size_t> active;
  for (std::size_t delta = 1; delta < L && delta < h.pair_weight.size(); ++delta) {
    if (h.pair_weight[delta] != 0) active.push_back(delta);
  }

  EnergyScan result{std::numeric_limits<std::int64_t>::max(), {}};
#pragma omp parallel
  {
    EnergyScan local{std::numeric_limits<std::int64_t>::max(), {}};
#pragma omp for schedule(static) nowait
    for (std::int64_t m = 0; m < total; ++m) {
      const auto mask = static_cast<std::uint64_t>(m);
      std::int64_t energy = 0;
      for (std::size_t delta : active) {
        energy += h.pair_weight[delta] * std::popcount(mask & (mask >> delta));
      }
      if (h.zero_run_len > 0 && h.zero_run_len <= L) {
        const std::uint64_t zeros = ~mask & full;
        std::uint64_t runs = zeros;
        for (std::size_t k = 1; k < h.zero_run_len; ++k) runs &= zeros >> k;
        energy += h.zero_run_weight * std::popcount(runs);
      }
      if (energy < local.min_energy) {
        local.min_energy = energy;
        local.argmin.clear();
      }
      if (energy == local.min_energy) local.argmin.push_back(static_cast<std::uint32_t>(mask));
    }
#pragma omp critical
    {
      if (local.min_energy < result.min_energy) {
        result.min_energy = local.min_energy;
        result.argmin.clear();
      }
      if (local.min_energy == result.min_energy) {
        result.argmin.insert(result.argmin.end(), local.argmin.begin(), local.argmin.end());
      }
    }
  }
  std::sort(result.argmin.begin(), result.argmin.end());
  return result;
}

namespace {

struct SearchState {
  std::string word;
  std::vector<std::size_t> ones;
};

bool can_append_zero(const SearchState& st, const LegalityRules& rules) {
  if (rules.zero_run_len == 0) return true;
  const std::size_t k = st.word.size();
  const std::size_t last_one = st.ones.empty() ? 0 : st.ones.back() + 1;
  return (k - last_one) + 1 < rules.zero_run_len;
}

bool can_append_one(const SearchState& st, const LegalityRules& rules) {
  const std::size_t k = st.word.size();
  return std::none_of(st.ones.begin(), st.ones.end(), [&](std::size_t o) { return rules.forbidden[k - o] != 0; });
}

}  // namespace

LegalCenters legal_centers(std::size_t n, std::size_t m, const LegalityRules& rules, std::uint64_t node_budget) {
  const std::size_t center = (m - n) / 2;
  const std::size_t split_depth = std::min<std::size_t>(m, 12);

  // Breadth-first expansion of the legal prefixes up to split_depth.
  LegalCenters result;
  std::vector<SearchState> frontier{SearchState{}};
  for (std::size_t depth = 0; depth < split_depth; ++depth) {
    result.nodes += frontier.size();
    std::vector<SearchState> next;
    for (const SearchState& st : frontier) {
      if (can_append_zero(st, rules)) {
        SearchState s = st;
        s.word.push_back('0');
        next.push_back(std::move(s));
      }
      if (can_append_one(st, rules)) {
        SearchState s = st;
        s.ones.push_back(s.word.size());
        s.word.push_back('1');
        next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }
  if (result.nodes > node_budget) {
    throw Error(ErrorKind::budget_exceeded, "legal-word search exceeded " + std::to_string(node_budget) + " nodes");
  }

  std::atomic<std::uint64_t> nodes{result.nodes};
  std::atomic<bool> over_budget{false};
  std::vector<FactorSet> found(frontier.size());
  const auto roots = static_cast<std::int64_t>(frontier.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t r = 0; r < roots; ++r) {
    SearchState st = frontier[static_cast<std::size_t>(r)];
    FactorSet& sink = found[static_cast<std::size_t>(r)];
    std::uint64_t pending = 0;
    // explicit stack of choices: 0 = try zero next, 1 = try one next, 2 = done
    std::vector<std::uint8_t> choice{0};
    const std::size_t base = st.word.size();
    ++pending;
    if (st.word.size() == m) {
      sink.insert(st.word.substr(center, n));
      choice.clear();
    }
    while (!choice.empty() && !over_budget.load(std::memory_order_relaxed)) {
      std::uint8_t& c = choice.back();
      bool descended = false;
      while (c < 2 && !descended) {
        const std::uint8_t symbol = c++;
        if (symbol == 0 ? can_append_zero(st, rules) : can_append_one(st, rules)) {
          if (symbol == 1) st.ones.push_back(st.word.size());
          st.word.push_back(static_cast<char>('0' + symbol));
          descended = true;
        }
      }
      if (descended) {
        if (++pending >= 4096) {
          if (nodes.fetch_add(pending) + pending > node_budget) over_budget = true;
          pending = 0;
        }
        if (st.word.size() == m) {
          sink.insert(st.word.substr(center, n));
          if (st.word.back() == '1') st.ones.pop_back();
          st.word.pop_back();
        } else {
          choice.push_back(0);
        }
        continue;
      }
      choice.pop_back();
      if (st.word.size() > base) {
        if (st.word.back() == '1') st.ones.pop_back();
        st.word.pop_back();
      }
    }
    if (nodes.fetch_add(pending) + pending > node_budget) over_budget = true;
  }

  result.nodes = nodes.load();
  if (over_budget || result.nodes > node_budget) {
    throw Error(ErrorKind::budget_exceeded, "legal-word search exceeded " + std::to_string(node_budget) + " nodes");
  }
  for (FactorSet& part : found) result.centers.merge(part);
  return result;
}

}  // namespace sturmian::kernels::omp
