#pragma once

// Seeded generators for property tests. Every test draws from its own
// fixed seed so failures reproduce exactly.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sturmian/exact_angle.hpp"
#include "sturmian/word.hpp"

namespace testing {

using namespace sturmian;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return integer(0, 1) == 1; }

  /// (a + b sqrt(d)) / c with small random coefficients in Q(sqrt(d)).
  QuadIrrational in_field(std::int64_t d, std::int64_t range = 1000) {
    const std::int64_t c = integer(1, range);
    return QuadIrrational::make(integer(-range, range), integer(-range, range), c, d);
  }

  /// A point of [0, 1) in Q(sqrt(d)).
  QuadIrrational unit_point(std::int64_t d) { return frac(in_field(d)); }

  /// Irrational gamma in (1/2, 1) from Q(sqrt(d)), d square-free and not 1.
  QuadIrrational gamma(std::int64_t d) {
    while (true) {
      const QuadIrrational g = unit_point(d);
      if (!g.is_rational() && g > QuadIrrational::rational(1, 2)) return g;
    }
  }

  std::string bits(std::size_t len) {
    std::string s(len, '0');
    for (auto& ch : s) ch = coin() ? '1' : '0';
    return s;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Square-free radicands used across property tests.
inline const std::vector<std::int64_t>& radicands() {
  static const std::vector<std::int64_t> ds{2, 3, 5, 6, 7, 10, 13, 19, 21};
  return ds;
}

}  // namespace testing
