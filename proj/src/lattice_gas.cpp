#include "sturmian/lattice_gas.hpp"

#include <limits>

#include "sturmian/characterization.hpp"
#include "sturmian/kernels.hpp"

namespace sturmian {

namespace {

std::string mask_to_word(std::uint32_t mask, std::size_t length) {
  std::string out(length, '0');
  for (std::size_t k = 0; k < length; ++k) {
    if ((mask >> k) & 1U) out[k] = '1';
  }
  return out;
}

BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }
BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }

}  // namespace

const Rational& InteractionSpec::J(std::int64_t distance) const {
  if (distance < 1 || distance >= static_cast<std::int64_t>(coupling.size())) {
    throw Error(ErrorKind::insufficient_profile,
                "no coupling for distance " + std::to_string(distance) + " (horizon " +
                    std::to_string(profile.horizon()) + ")");
  }
  return coupling[static_cast<std::size_t>(distance)];
}

InteractionSpec build_interaction(DistanceProfile profile, Rational lambda, Rational beta) {
  if (lambda <= 0 || lambda >= 1) {
    throw Error(ErrorKind::invalid_argument, "lambda must lie in (0, 1), got " + rational_to_string(lambda));
  }
  if (beta <= 0) throw Error(ErrorKind::invalid_argument, "beta must be positive, got " + rational_to_string(beta));

  InteractionSpec spec;
  spec.zero_run_len = profile.d1() + 1;
  spec.coupling.assign(static_cast<std::size_t>(profile.horizon()) + 1, Rational(0));
  Rational power = 1;
  for (std::int64_t j = 1; j <= profile.horizon(); ++j) {
    power *= lambda;
    if (profile.is_forbidden(j)) spec.coupling[static_cast<std::size_t>(j)] = power;
  }
  spec.profile = std::move(profile);
  spec.lambda = std::move(lambda);
  spec.beta = std::move(beta);
  return spec;
}

EnergyBreakdown energy_open(const Word& w, const InteractionSpec& spec) {
  if (static_cast<std::int64_t>(w.size()) - 1 > spec.profile.horizon()) {
    throw Error(ErrorKind::insufficient_profile, "word of length " + std::to_string(w.size()) +
                                                     " exceeds the interaction horizon " +
                                                     std::to_string(spec.profile.horizon()));
  }
  EnergyBreakdown e;
  const std::vector<std::size_t> ones = w.ones();
  for (std::size_t a = 0; a < ones.size(); ++a) {
    for (std::size_t b = a + 1; b < ones.size(); ++b) {
      const auto distance = static_cast<std::int64_t>(ones[b] - ones[a]);
      const Rational& j = spec.J(distance);
      if (j != 0) {
        e.pair_part += j;
        e.violating_pairs.push_back({ones[a], ones[b], distance});
      }
    }
  }
  const auto run_len = static_cast<std::size_t>(spec.zero_run_len);
  std::size_t run = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    run = w[k] ? 0 : run + 1;
    if (run >= run_len) {
      e.zero_run_part += spec.beta;
      e.violating_runs.push_back(k + 1 - run_len);
    }
  }
  e.total = e.pair_part + e.zero_run_part;
  return e;
}

GroundStateResult ground_state_search(std::size_t length, const InteractionSpec& spec) {
  if (length == 0) throw Error(ErrorKind::invalid_argument, "length must be >= 1");
  if (length > kMaxExhaustiveLength) {
    throw Error(ErrorKind::budget_exceeded, "exhaustive search is limited to L <= 24; use enumerate_legal for L = " +
                                                std::to_string(length));
  }
  if (static_cast<std::int64_t>(length) - 1 > spec.profile.horizon()) {
    throw Error(ErrorKind::insufficient_profile, "L = " + std::to_string(length) + " exceeds the interaction horizon");
  }

  // Common denominator so that every energy is an integer multiple of 1/scale.
  BigInt scale = den(spec.beta);
  for (std::size_t delta = 1; delta < length; ++delta) {
    scale = boost::multiprecision::lcm(scale, den(spec.J(static_cast<std::int64_t>(delta))));
  }
  kernels::ScaledHamiltonian h;
  h.length = length;
  h.zero_run_len = static_cast<std::size_t>(spec.zero_run_len);
  h.pair_weight.assign(length, 0);
  BigInt worst = 0;
  std::vector<BigInt> weights(length, 0);
  for (std::size_t delta = 1; delta < length; ++delta) {
    const Rational& j = spec.J(static_cast<std::int64_t>(delta));
    weights[delta] = num(j) * (scale / den(j));
    worst += weights[delta] * (length - delta);
  }
  const BigInt run_weight = num(spec.beta) * (scale / den(spec.beta));
  worst += run_weight * length;

  GroundStateResult result;
  result.length = length;
  if (worst < BigInt(std::numeric_limits<std::int64_t>::max() / 2)) {
    for (std::size_t delta = 1; delta < length; ++delta) h.pair_weight[delta] = weights[delta].convert_to<std::int64_t>();
    h.zero_run_weight = run_weight.convert_to<std::int64_t>();
    const kernels::EnergyScan scan = kernels::omp::energy_scan(h);
    result.min_energy = Rational(BigInt(scan.min_energy), scale);
    for (std::uint32_t mask : scan.argmin) result.argmin.insert(mask_to_word(mask, length));
  } else {
    // Weights too large for 64-bit accumulation: fall back to exact energies.
    bool first = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
      const std::string text = mask_to_word(static_cast<std::uint32_t>(mask), length);
      const Rational e = energy_open(Word::parse(text), spec).total;
      if (first || e < result.min_energy) {
        result.min_energy = e;
        result.argmin.clear();
        first = false;
      }
      if (e == result.min_energy) result.argmin.insert(text);
    }
  }

  result.legal = enumerate_legal(length, length, spec.profile);
  result.min_is_zero = result.min_energy == 0;
  result.argmin_is_legal_set = result.argmin == result.legal;
  return result;
}

PeriodicDensity periodic_energy_density(const Word& period_word, const InteractionSpec& spec,
                                        const Rational& tail_tol) {
  if (period_word.empty()) throw Error(ErrorKind::invalid_argument, "period word must be non-empty");
  if (tail_tol <= 0) throw Error(ErrorKind::invalid_argument, "tail tolerance must be positive");
  const std::size_t p = period_word.size();
  const Rational tail_factor = 1 / (1 - spec.lambda);

  // Smallest cutoff T with lambda^(T+1)/(1-lambda) < tail_tol, capped by the horizon.
  std::int64_t cutoff = 1;
  Rational tail = spec.lambda * spec.lambda * tail_factor;
  while (tail >= tail_tol && cutoff < spec.profile.horizon()) {
    ++cutoff;
    tail *= spec.lambda;
  }
  // Every 1 of a p-periodic word pairs with its own copy at each multiple of
  // p, so reaching the first forbidden multiple makes the bound strictly
  // positive for any word containing a 1.
  for (std::int64_t m = static_cast<std::int64_t>(p); m <= spec.profile.horizon(); m += static_cast<std::int64_t>(p)) {
    if (spec.profile.is_forbidden(m)) {
      while (cutoff < m) {
        ++cutoff;
        tail *= spec.lambda;
      }
      break;
    }
  }

  // Couplings folded by residue class: folded[r] = sum of J(j), j = r mod p, j <= cutoff.
  std::vector<Rational> folded(p, Rational(0));
  for (std::int64_t j = 1; j <= cutoff; ++j) folded[static_cast<std::size_t>(j) % p] += spec.J(j);

  Rational pairs = 0;
  std::size_t ones = 0;
  for (std::size_t i = 0; i < p; ++i) {
    if (!period_word[i]) continue;
    ++ones;
    for (std::size_t r = 0; r < p; ++r) {
      if (period_word[(i + r) % p]) pairs += folded[r];
    }
  }
  std::size_t runs = 0;
  for (std::size_t i = 0; i < p; ++i) {
    bool zeros = true;
    for (std::int64_t k = 0; k < spec.zero_run_len && zeros; ++k) zeros = !period_word[(i + static_cast<std::size_t>(k)) % p];
    if (zeros) ++runs;
  }

  PeriodicDensity out;
  out.cutoff = cutoff;
  out.lower_bound = (pairs + spec.beta * runs) / p;
  out.value_estimate = out.lower_bound + tail * ones / p;
  return out;
}

}  // namespace sturmian
