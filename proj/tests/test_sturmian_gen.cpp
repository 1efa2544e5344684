#include "doctest.h"
#include "support.hpp"
#include "sturmian/sturmian_gen.hpp"

using namespace sturmian;
using testing::Gen;

namespace {

const QuadIrrational& fib() {
  static const QuadIrrational g = fibonacci_gamma();
  return g;
}

// Independent oracle: X(i) = 0 iff frac(psi + i*gamma) < gamma, straight
// from the exact arithmetic without the incremental cursor.
std::string oracle(const QuadIrrational& gamma, const QuadIrrational& psi, std::int64_t from, std::int64_t to) {
  std::string s;
  for (std::int64_t i = from; i <= to; ++i) s += rotate(psi, gamma, i) < gamma ? '0' : '1';
  return s;
}

}  // namespace

TEST_CASE("symbol_at examples") {
  const RotationParams zero = RotationParams::make(fib(), QuadIrrational());
  CHECK(symbol_at(zero, 0) == 0);
  CHECK(symbol_at(zero, 1) == 1);
  const RotationParams at_gamma = RotationParams::make(fib(), fib());
  std::string s;
  for (int i = 1; i <= 13; ++i) s += static_cast<char>('0' + symbol_at(at_gamma, i));
  CHECK(s == "0100101001001");
  Gen gen(21);
  for (const std::int64_t d : testing::radicands()) {
    CHECK(symbol_at(RotationParams::make(gen.gamma(d), QuadIrrational()), 0) == 0);
  }
}

TEST_CASE("generate examples") {
  CHECK(generate(RotationParams::make(fib(), fib()), 1, 13).str() == "0100101001001");
  const Word w = generate(RotationParams::make(fib(), QuadIrrational()), 0, 1);
  CHECK(w.str() == "01");
  CHECK(w.origin() == 0);
  const RotationParams p = RotationParams::make(fib(), QuadIrrational::rational(1, 7));
  for (std::int64_t i = -5; i <= 5; ++i) {
    const Word one = generate(p, i, i);
    CHECK(one.size() == 1);
    CHECK(one[0] == symbol_at(p, i));
  }
  try {
    generate(p, 5, 4);
    FAIL("reversed window accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_argument);
  }
}

TEST_CASE("generate matches the direct oracle on random parameters") {
  Gen gen(22);
  for (int t = 0; t < 60; ++t) {
    const std::int64_t d = testing::radicands()[static_cast<std::size_t>(gen.integer(0, 8))];
    const QuadIrrational gamma = gen.gamma(d);
    const QuadIrrational psi = gen.coin() ? gen.unit_point(d) : frac(gamma * BigInt(gen.integer(-20, 20)));
    const std::int64_t from = gen.integer(-3000, 3000);
    const std::int64_t to = from + gen.integer(0, 300);
    CHECK(generate(RotationParams::make(gamma, psi), from, to).str() == oracle(gamma, psi, from, to));
  }
}

TEST_CASE("shift equivariance: X_{T^k psi}(i) = X_psi(i + k)") {
  Gen gen(23);
  for (int t = 0; t < 40; ++t) {
    const QuadIrrational gamma = gen.gamma(5);
    const QuadIrrational psi = gen.unit_point(5);
    const std::int64_t k = gen.integer(-500, 500);
    const RotationParams p = RotationParams::make(gamma, psi);
    const RotationParams shifted = RotationParams::make(gamma, rotate(psi, gamma, k));
    CHECK(generate(shifted, 0, 199).str() == generate(p, k, k + 199).str());
  }
}

TEST_CASE("substitution oracle") {
  CHECK(fibonacci_substitution(1).str() == "01");
  CHECK(fibonacci_substitution(5).str().substr(0, 13) == "0100101001001");
  const RotationParams p = RotationParams::make(fib(), fib());
  for (unsigned n = 1; n <= 15; ++n) {
    const Word s = fibonacci_substitution(n);
    CAPTURE(n);
    CHECK(generate(p, 1, static_cast<std::int64_t>(s.size())) == s);
  }
  CHECK(fibonacci_substitution(15).size() == 1597);
  CHECK_THROWS_AS(fibonacci_substitution(0), Error);
}

TEST_CASE("strict endpoint policy") {
  const RotationParams p = RotationParams::make(fib(), QuadIrrational());
  // psi = 0 hits the arc endpoint 0 at i = 0 and gamma at i = 1.
  for (std::int64_t i : {0, 1}) {
    try {
      symbol_at(p, i, EndpointPolicy::strict);
      FAIL("endpoint hit not reported");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ambiguous_coding);
    }
  }
  CHECK(symbol_at(p, 2, EndpointPolicy::strict) == symbol_at(p, 2));
  CHECK_THROWS_AS(generate(p, -3, 3, EndpointPolicy::strict), Error);
  CHECK(generate(p, 2, 50, EndpointPolicy::strict) == generate(p, 2, 50));
}

TEST_CASE("continued-fraction convergents") {
  const auto cv = convergents(fib(), 8);
  // (sqrt 5 - 1)/2 = [0; 1, 1, 1, ...]: ratios of consecutive Fibonacci numbers.
  const std::vector<std::pair<int, int>> expected{{0, 1}, {1, 1}, {1, 2}, {2, 3}, {3, 5}, {5, 8}, {8, 13}, {13, 21}};
  REQUIRE(cv.size() == expected.size());
  for (std::size_t k = 0; k < cv.size(); ++k) {
    CHECK(cv[k].first == expected[k].first);
    CHECK(cv[k].second == expected[k].second);
  }
  const ApproxRotation a = convergent_approximation(fib(), 21);
  CHECK(a.p == 13);
  CHECK(a.q == 21);
  CHECK(a.err_bound == Rational(1, 21 * 34));
  // The bound is honest: |gamma - p/q| <= err_bound.
  const QuadIrrational gap = abs(fib() - QuadIrrational::rational(a.p, a.q));
  CHECK(gap <= QuadIrrational::from_rational(a.err_bound));
}

TEST_CASE("approximate generation against the exact word") {
  const Word exact = generate(RotationParams::make(fib(), QuadIrrational()), 0, 40);
  // 13/21 with the 1/q^2 default bound certifies [0, 20] and fails at 21.
  const ApproxRotation a = ApproxRotation::make(13, 21, Rational(1, 441));
  CHECK(generate_approx(a, 0, 0, 20).str() == exact.str().substr(0, 21));
  CHECK(generate_approx(a, 0, 0, 0).str() == "0");
  try {
    generate_approx(a, 0, 0, 21);
    FAIL("uncertified index accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::horizon_exceeded);
    CHECK(std::string(e.what()).find("21") != std::string::npos);
  }
  // A huge bound cannot certify anything beyond the trivially exact index.
  CHECK_THROWS_AS(generate_approx(ApproxRotation::make(13, 21, Rational(1, 10)), 0, 0, 3), Error);
}

TEST_CASE("approximate generation never disagrees with exact generation") {
  Gen gen(24);
  for (int t = 0; t < 40; ++t) {
    const std::int64_t d = testing::radicands()[static_cast<std::size_t>(gen.integer(0, 8))];
    const QuadIrrational gamma = gen.gamma(d);
    const ApproxRotation a = convergent_approximation(gamma, gen.integer(50, 100000));
    const Rational psi(gen.integer(0, 996), 997);
    const RotationParams p = RotationParams::make(gamma, QuadIrrational::from_rational(psi));
    const std::int64_t from = gen.integer(-200, 200);
    // Extend the window while it stays certified, then compare.
    std::int64_t to = from;
    for (std::int64_t len = 1; len <= 4096; len *= 2) {
      try {
        generate_approx(a, psi, from, from + len - 1);
        to = from + len - 1;
      } catch (const Error&) {
        break;
      }
    }
    CHECK(generate_approx(a, psi, from, to) == generate(p, from, to));
  }
}

TEST_CASE("approximation parameters are validated") {
  CHECK_THROWS_AS(ApproxRotation::make(2, 4, Rational(1, 100)), Error);   // not reduced
  CHECK_THROWS_AS(ApproxRotation::make(1, 3, Rational(1, 100)), Error);   // below 1/2
  CHECK_THROWS_AS(ApproxRotation::make(3, 5, Rational(-1, 100)), Error);  // negative bound
}
