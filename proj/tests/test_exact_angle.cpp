#include <cmath>

#include "doctest.h"
#include "support.hpp"

using namespace sturmian;
using testing::Gen;

namespace {

QuadIrrational q(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return qi_make(a, b, c, d); }

}  // namespace

TEST_CASE("canonical form") {
  const QuadIrrational g = q(-1, 1, 2, 5);
  CHECK(g.to_string() == "-1,1,2,5");
  CHECK(g == fibonacci_gamma());
  CHECK(q(3, 0, 6, 0).to_string() == "1,0,2,0");
  CHECK(q(1, 2, 1, 8).to_string() == "1,4,1,2");
  CHECK(q(2, 4, -6, 3).to_string() == "-1,-2,3,3");
  CHECK(q(5, 3, 1, 9).to_string() == "14,0,1,0");  // perfect square radicand
  CHECK(q(4, 0, 2, 7).to_string() == "2,0,1,0");    // b = 0 drops the radicand
  CHECK(q(1, 1, 1, 1).to_string() == "2,0,1,0");
}

TEST_CASE("qi_make errors") {
  CHECK_THROWS_AS(q(1, 1, 0, 5), Error);
  try {
    q(1, 1, 0, 5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::invalid_denominator);
  }
  try {
    q(1, 1, 1, -3);
    FAIL("negative radicand accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported);
  }
}

TEST_CASE("compare examples") {
  const QuadIrrational g = fibonacci_gamma();
  CHECK(qi_compare(g, QuadIrrational::rational(1, 2)) == std::strong_ordering::greater);
  CHECK(qi_compare(g, g) == std::strong_ordering::equal);
  CHECK(qi_compare(g * BigInt(2) - QuadIrrational::integer(1), g) == std::strong_ordering::less);
  try {
    (void)qi_compare(q(0, 1, 1, 2), q(0, 1, 1, 3));
    FAIL("mixed surds compared");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::unsupported);
  }
  // A rational compares against any field.
  CHECK(q(0, 1, 1, 2) > QuadIrrational::rational(141, 100));
  CHECK(q(0, 1, 1, 2) < QuadIrrational::rational(142, 100));
}

TEST_CASE("floor examples") {
  const QuadIrrational g = fibonacci_gamma();
  const QuadIrrational two_plus = QuadIrrational::integer(2) + g;
  CHECK(qi_floor(two_plus * BigInt(3)) == 7);
  CHECK(qi_floor(g) == 0);
  CHECK(qi_floor(two_plus) == 2);
  CHECK(qi_floor(-g) == -1);
  CHECK(qi_ceil(g) == 1);
  CHECK(qi_floor(QuadIrrational::integer(-3)) == -3);
  CHECK(qi_floor(QuadIrrational::rational(-7, 2)) == -4);
}

TEST_CASE("rotate examples") {
  const QuadIrrational g = fibonacci_gamma();
  const QuadIrrational zero;
  CHECK(rotate(zero, g, 1) == g);
  CHECK(rotate(g, g, 1) == g * BigInt(2) - QuadIrrational::integer(1));
  CHECK(rotate(zero, g, -1) == QuadIrrational::integer(1) - g);
}

TEST_CASE("parse and print") {
  CHECK(parse_quad("fib") == fibonacci_gamma());
  CHECK(parse_quad("-1,1,2,5") == fibonacci_gamma());
  CHECK(parse_quad("3/6") == QuadIrrational::rational(1, 2));
  CHECK(parse_quad("0,0,1,0") == QuadIrrational());
  for (const char* bad : {"", "1,2", "a,b,c,d", "1,1,1", "1/0", "fibonacci"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_quad(bad), Error);
  }
  CHECK(rational_to_string(parse_rational("6/4")) == "3/2");
  CHECK(rational_to_string(parse_rational("5")) == "5/1");
  CHECK(fibonacci_gamma().to_decimal(10) == "0.6180339887");
  CHECK((-fibonacci_gamma()).to_decimal(4) == "-0.6180");
  CHECK(QuadIrrational::rational(1, 20).to_decimal(3) == "0.050");
}

TEST_CASE("field axioms on random elements") {
  Gen gen(11);
  for (int t = 0; t < 2000; ++t) {
    const std::int64_t d = testing::radicands()[static_cast<std::size_t>(gen.integer(0, 8))];
    const QuadIrrational x = gen.in_field(d), y = gen.in_field(d), z = gen.in_field(d);
    CHECK((x + y) - y == x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    if (x != QuadIrrational()) CHECK(x * x.reciprocal() == QuadIrrational::integer(1));
    const QuadIrrational f = frac(x);
    CHECK(f >= QuadIrrational());
    CHECK(f < QuadIrrational::integer(1));
    CHECK(QuadIrrational::integer(qi_floor(x)) + f == x);
  }
}

TEST_CASE("compare is a total order consistent with subtraction") {
  Gen gen(12);
  for (int t = 0; t < 2000; ++t) {
    const std::int64_t d = testing::radicands()[static_cast<std::size_t>(gen.integer(0, 8))];
    const QuadIrrational x = gen.in_field(d), y = gen.in_field(d), z = gen.in_field(d);
    CHECK(qi_compare(x, y) == qi_compare(x - y, QuadIrrational()));
    CHECK((qi_compare(x, y) < 0) == (qi_compare(y, x) > 0));
    if (x < y && y < z) CHECK(x < z);
    CHECK(qi_compare(x + z, y + z) == qi_compare(x, y));
  }
}

TEST_CASE("floating-point cross-check on 10^4 elements") {
  // The exact value and an independent long double evaluation agree to 1e-12
  // relative, and the exact order agrees with the float order whenever the
  // float gap is clearly resolved.
  Gen gen(13);
  for (int t = 0; t < 10000; ++t) {
    const std::int64_t d = testing::radicands()[static_cast<std::size_t>(gen.integer(0, 8))];
    const QuadIrrational x = gen.in_field(d), y = gen.in_field(d);
    const long double ref = (x.a().convert_to<long double>() +
                             x.b().convert_to<long double>() * std::sqrt(x.d().convert_to<long double>())) /
                            x.c().convert_to<long double>();
    const double v = x.to_double();
    CHECK(std::fabs(static_cast<long double>(v) - ref) <= 1e-12L * std::max(1.0L, std::fabs(ref)));
    const double gap = x.to_double() - y.to_double();
    if (std::fabs(gap) > 1e-9) CHECK((gap < 0) == (x < y));
  }
}

TEST_CASE("rotate is a group action of Z") {
  Gen gen(14);
  const QuadIrrational g = fibonacci_gamma();
  for (int t = 0; t < 500; ++t) {
    const QuadIrrational theta = gen.unit_point(5);
    const BigInt j = gen.integer(-1000, 1000), k = gen.integer(-1000, 1000);
    CHECK(rotate(rotate(theta, g, j), g, k) == rotate(theta, g, j + k));
    CHECK(rotate(theta, g, 0) == theta);
    const QuadIrrational r = rotate(theta, g, k);
    CHECK(r >= QuadIrrational());
    CHECK(r < QuadIrrational::integer(1));
  }
}

TEST_CASE("huge multipliers stay exact") {
  const QuadIrrational g = fibonacci_gamma();
  BigInt big = 1;
  for (int k = 0; k < 40; ++k) big *= 1000;  // 10^120
  const QuadIrrational r = rotate(QuadIrrational(), g, big);
  CHECK(r >= QuadIrrational());
  CHECK(r < QuadIrrational::integer(1));
  CHECK(rotate(r, g, -big) == QuadIrrational());
}

TEST_CASE("rotation parameters") {
  const QuadIrrational g = fibonacci_gamma();
  const RotationParams p = RotationParams::make(g, g);
  REQUIRE(p.lattice_shift());
  CHECK(*p.lattice_shift() == 1);
  CHECK(p.hits_endpoint(-1));  // psi - gamma = 0
  CHECK(p.hits_endpoint(0));   // psi = gamma
  CHECK_FALSE(p.hits_endpoint(5));
  CHECK_FALSE(RotationParams::make(g, QuadIrrational::rational(1, 3)).lattice_shift());

  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::internal_consistency;  // sentinel: nothing thrown
  };
  CHECK(kind_of([] { RotationParams::make(QuadIrrational::rational(2, 3), QuadIrrational()); }) ==
        ErrorKind::invalid_rotation);
  CHECK(kind_of([&] { RotationParams::make(QuadIrrational::integer(1) - g, QuadIrrational()); }) ==
        ErrorKind::invalid_rotation);
  CHECK(kind_of([&] { RotationParams::make(g, q(0, 1, 2, 2)); }) == ErrorKind::unsupported);
  CHECK(kind_of([&] { RotationParams::make(g, QuadIrrational::integer(1)); }) == ErrorKind::invalid_argument);
}
