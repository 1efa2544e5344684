#include "sturmian/discrepancy.hpp"

#include <algorithm>
#include <set>

#include "sturmian/kernels.hpp"
#include "sturmian/sturmian_gen.hpp"

namespace sturmian {

const ComponentInterval* ComponentIntervals::find(const std::string& word) const {
  for (const ComponentInterval& c : intervals) {
    if (c.word == word) return &c;
  }
  return nullptr;
}

ComponentIntervals component_intervals(const RotationParams& params, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "word length must be >= 1");
  const QuadIrrational& gamma = params.gamma();

  ComponentIntervals out;
  out.n = n;
  for (std::int64_t k = -1; k < static_cast<std::int64_t>(n); ++k) {
    out.cuts.push_back(rotate(QuadIrrational(), gamma, BigInt(-k)));
  }
  std::sort(out.cuts.begin(), out.cuts.end(),
            [](const QuadIrrational& x, const QuadIrrational& y) { return x < y; });
  for (std::size_t k = 1; k < out.cuts.size(); ++k) {
    if (out.cuts[k] == out.cuts[k - 1]) {
      throw Error(ErrorKind::invalid_rotation, "coinciding cut points " + out.cuts[k].to_string());
    }
  }

  const QuadIrrational one = QuadIrrational::integer(1);
  std::set<std::string> seen;
  for (std::size_t k = 0; k < out.cuts.size(); ++k) {
    const QuadIrrational& left = out.cuts[k];
    const QuadIrrational right = k + 1 < out.cuts.size() ? out.cuts[k + 1] : one;
    const QuadIrrational sample = (left + right) / BigInt(2);
    const Word word = generate(RotationParams::make(gamma, sample), 0, static_cast<std::int64_t>(n) - 1);
    if (!seen.insert(word.str()).second) {
      throw Error(ErrorKind::internal_consistency, "two arcs code the same word " + word.str());
    }
    out.intervals.push_back({left, right, word.str()});
  }
  if (out.intervals.size() != n + 1) {
    throw Error(ErrorKind::internal_consistency, "expected n + 1 arcs");
  }
  return out;
}

QuadIrrational frequency(const RotationParams& params, const Word& w) {
  if (w.empty()) throw Error(ErrorKind::invalid_argument, "frequency of the empty word");
  const ComponentIntervals arcs = component_intervals(params, w.size());
  const ComponentInterval* arc = arcs.find(w.str());
  return arc ? arc->length() : QuadIrrational();
}

std::size_t count_occurrences(const Word& x, const Word& w) {
  if (w.empty() || w.size() > x.size()) return 0;
  const auto& xs = x.symbols();
  const auto& ws = w.symbols();
  std::size_t count = 0;
  for (std::size_t s = 0; s + ws.size() <= xs.size(); ++s) {
    if (std::equal(ws.begin(), ws.end(), xs.begin() + static_cast<std::ptrdiff_t>(s))) ++count;
  }
  return count;
}

DiscrepancyReport strict_boundary_check(const RotationParams& params, const Word& w, std::int64_t max_len,
                                        std::size_t trials) {
  if (w.empty()) throw Error(ErrorKind::invalid_argument, "empty pattern");
  if (max_len < static_cast<std::int64_t>(w.size())) {
    throw Error(ErrorKind::invalid_argument, "max_len must be at least the pattern length");
  }
  if (trials == 0) throw Error(ErrorKind::invalid_argument, "need at least one trial window");

  DiscrepancyReport report;
  report.word = w;
  report.frequency = frequency(params, w);
  report.max_len = max_len;
  report.window_len = 2 * max_len;

  const auto window = static_cast<std::size_t>(report.window_len);
  const auto& pattern = w.symbols();
  bool first = true;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto offset = static_cast<std::int64_t>(t) * 7919;
    report.offsets.push_back(offset);
    const Word x = generate(params, offset, offset + report.window_len - 1);
    std::vector<std::uint8_t> occurs(window - pattern.size() + 1, 0);
    for (std::size_t s = 0; s < occurs.size(); ++s) {
      occurs[s] = std::equal(pattern.begin(), pattern.end(), x.symbols().begin() + static_cast<std::ptrdiff_t>(s));
    }
    const auto extrema = kernels::omp::segment_extrema(occurs, pattern.size(), window);
    for (std::size_t len = 1; len <= window; ++len) {
      const QuadIrrational expected = report.frequency * BigInt(len);
      const auto [lo, hi] = extrema[len - 1];
      const QuadIrrational over = QuadIrrational::integer(hi) - expected;
      const QuadIrrational under = expected - QuadIrrational::integer(lo);
      const QuadIrrational dev = over > under ? over : under;
      if (first || dev > report.max_dev_doubled) report.max_dev_doubled = dev;
      if (len <= static_cast<std::size_t>(max_len) && (first || dev > report.max_dev)) report.max_dev = dev;
      first = false;
    }
  }
  report.c_w_estimate = qi_ceil(report.max_dev);
  report.c_w_doubled = qi_ceil(report.max_dev_doubled);
  report.stabilized = report.c_w_estimate == report.c_w_doubled;
  return report;
}

}  // namespace sturmian
