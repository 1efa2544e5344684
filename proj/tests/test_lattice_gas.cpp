#include "doctest.h"
#include "support.hpp"
#include "sturmian/characterization.hpp"
#include "sturmian/lattice_gas.hpp"

using namespace sturmian;
using testing::Gen;

namespace {

const DistanceProfile& fib_profile() {
  static const DistanceProfile p = distance_profile(fibonacci_gamma(), 200);
  return p;
}

}  // namespace

TEST_CASE("interaction examples") {
  const InteractionSpec spec = build_interaction(fib_profile());
  CHECK(spec.J(1) == Rational(1, 2));
  CHECK(spec.J(4) == Rational(1, 16));
  CHECK(spec.J(2) == 0);
  CHECK(spec.J(3) == 0);
  CHECK(spec.J(fib_profile().d1()) == 0);
  CHECK(spec.zero_run_len == 3);
  Rational sum = 0;
  for (std::int64_t j = 1; j <= fib_profile().horizon(); ++j) sum += spec.J(j);
  CHECK(sum < 1);
  CHECK_THROWS_AS((void)spec.J(201), Error);

  for (const auto& [lambda, beta] : std::vector<std::pair<Rational, Rational>>{{0, 1}, {1, 1}, {Rational(1, 2), 0}}) {
    try {
      build_interaction(fib_profile(), lambda, beta);
      FAIL("bad parameters accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::invalid_argument);
    }
  }
}

TEST_CASE("open-boundary energy examples") {
  const InteractionSpec spec = build_interaction(fib_profile());
  CHECK(energy_open(Word::parse("0100101001001"), spec).total == 0);
  const EnergyBreakdown pair = energy_open(Word::parse("11"), spec);
  CHECK(pair.total == Rational(1, 2));
  REQUIRE(pair.violating_pairs.size() == 1);
  CHECK(pair.violating_pairs[0].distance == 1);
  const EnergyBreakdown run = energy_open(Word::parse("000"), spec);
  CHECK(run.total == 1);
  CHECK(run.violating_runs == std::vector<std::size_t>{0});
  CHECK(energy_open(Word::parse("0000"), spec).zero_run_part == 2);
  CHECK(energy_open(Word::parse("10001"), spec).pair_part == Rational(1, 16));
}

TEST_CASE("energy is zero exactly on legal words") {
  Gen gen(71);
  const InteractionSpec spec = build_interaction(fib_profile(), Rational(1, 3), Rational(5, 7));
  for (int t = 0; t < 3000; ++t) {
    const Word w = Word::parse(gen.bits(static_cast<std::size_t>(gen.integer(1, 30))));
    const EnergyBreakdown e = energy_open(w, spec);
    CHECK(e.total >= 0);
    CHECK((e.total == 0) == is_locally_legal(w, fib_profile()).legal);
  }
}

TEST_CASE("ground state examples") {
  const InteractionSpec spec = build_interaction(fib_profile());
  const GroundStateResult two = ground_state_search(2, spec);
  CHECK(two.min_energy == 0);
  CHECK(two.argmin == FactorSet{"00", "01", "10"});
  const GroundStateResult one = ground_state_search(1, spec);
  CHECK(one.min_energy == 0);
  CHECK(one.argmin == FactorSet{"0", "1"});
  const GroundStateResult twelve = ground_state_search(12, spec);
  CHECK(twelve.min_is_zero);
  CHECK(twelve.argmin.size() == enumerate_legal(12, 12, fib_profile()).size());
  CHECK(twelve.argmin_is_legal_set);

  try {
    ground_state_search(25, spec);
    FAIL("oversized scan accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::budget_exceeded);
  }
  CHECK_THROWS_AS(ground_state_search(0, spec), Error);
}

TEST_CASE("ground states do not depend on lambda or beta") {
  const InteractionSpec a = build_interaction(fib_profile());
  for (const auto& [lambda, beta] :
       std::vector<std::pair<Rational, Rational>>{{Rational(1, 4), 1}, {Rational(9, 10), Rational(1, 100)}}) {
    const InteractionSpec b = build_interaction(fib_profile(), lambda, beta);
    for (std::size_t len = 2; len <= 11; ++len) CHECK(ground_state_search(len, a).argmin == ground_state_search(len, b).argmin);
  }
}

TEST_CASE("exact fallback path agrees with the integer scan") {
  // lambda = 1/1000 makes the common denominator overflow 64 bits at L = 10.
  const InteractionSpec tiny = build_interaction(fib_profile(), Rational(1, 1000));
  const GroundStateResult r = ground_state_search(10, tiny);
  CHECK(r.min_is_zero);
  CHECK(r.argmin_is_legal_set);
}

TEST_CASE("periodic densities") {
  const InteractionSpec spec = build_interaction(fib_profile());
  const Rational tol(1, 1'000'000);
  CHECK(periodic_energy_density(Word::parse("0"), spec, tol).lower_bound == 1);
  CHECK(periodic_energy_density(Word::parse("000000"), spec, tol).lower_bound == 1);
  CHECK(periodic_energy_density(Word::parse("1"), spec, tol).lower_bound >= Rational(1, 2));
  CHECK(periodic_energy_density(Word::parse("10"), spec, tol).lower_bound >= Rational(1, 32));

  const InteractionSpec heavy = build_interaction(fib_profile(), Rational(1, 2), Rational(7, 3));
  CHECK(periodic_energy_density(Word::parse("0"), heavy, tol).lower_bound == Rational(7, 3));

  // value_estimate brackets the density from above; it shrinks to the lower
  // bound as the tolerance does.
  const PeriodicDensity loose = periodic_energy_density(Word::parse("100"), spec, Rational(1, 10));
  const PeriodicDensity tight = periodic_energy_density(Word::parse("100"), spec, Rational(1, 1'000'000'000));
  CHECK(loose.lower_bound <= tight.lower_bound);
  CHECK(tight.value_estimate <= loose.value_estimate);
  CHECK(tight.lower_bound <= tight.value_estimate);

  // A periodic word reaches its first forbidden multiple even under a loose
  // tolerance, so the bound stays positive.
  const PeriodicDensity p8 = periodic_energy_density(Word::parse("10100100"), spec, Rational(1, 10));
  CHECK(p8.lower_bound > 0);
  CHECK(p8.cutoff >= 56);

  CHECK_THROWS_AS(periodic_energy_density(Word(), spec, tol), Error);
  CHECK_THROWS_AS(periodic_energy_density(Word::parse("1"), spec, 0), Error);
}

TEST_CASE("periodic density matches a long finite average") {
  // Energy per site of a long repetition converges to the truncated density
  // from above (boundary terms drop, tail terms were cut).
  const InteractionSpec spec = build_interaction(fib_profile());
  for (const char* period : {"1", "10", "110", "10010", "1001010"}) {
    const Word pw = Word::parse(period);
    const PeriodicDensity d = periodic_energy_density(pw, spec, Rational(1, 1'000'000));
    std::string longer;
    while (longer.size() < 190) longer += period;
    const Rational total = energy_open(Word::parse(longer), spec).total;
    const double per_site = total.convert_to<double>() / static_cast<double>(longer.size());
    CHECK(per_site == doctest::Approx(d.lower_bound.convert_to<double>()).epsilon(0.2));
  }
}
