#include "sturmian/sturmian_gen.hpp"

#include <string>

#include "sturmian/kernels.hpp"

namespace sturmian {

std::uint8_t symbol_at(const RotationParams& params, const BigInt& i, EndpointPolicy policy) {
  if (policy == EndpointPolicy::strict && params.hits_endpoint(i)) {
    throw Error(ErrorKind::ambiguous_coding, "orbit point at index " + i.str() + " lies on an arc boundary");
  }
  const QuadIrrational point = rotate(params.psi(), params.gamma(), i);
  return point < params.gamma() ? 0 : 1;
}

Word generate(const RotationParams& params, std::int64_t from, std::int64_t to, EndpointPolicy policy) {
  if (from > to) {
    throw Error(ErrorKind::invalid_argument,
                "empty index range [" + std::to_string(from) + ", " + std::to_string(to) + "]");
  }
  const auto count = static_cast<std::size_t>(to - from + 1);
  return Word(kernels::omp::code_window(params, from, count, policy), from);
}

ApproxRotation ApproxRotation::make(BigInt p, BigInt q, Rational err_bound) {
  if (q <= 0) throw Error(ErrorKind::invalid_denominator, "approximation denominator must be positive");
  if (boost::multiprecision::gcd(p, q) != 1) {
    throw Error(ErrorKind::invalid_argument, "p/q must be in lowest terms");
  }
  if (2 * p <= q || p >= q) throw Error(ErrorKind::invalid_rotation, "p/q must lie in (1/2, 1)");
  if (err_bound < 0) throw Error(ErrorKind::invalid_argument, "error bound must be non-negative");
  return ApproxRotation{std::move(p), std::move(q), std::move(err_bound)};
}

std::vector<std::pair<BigInt, BigInt>> convergents(const QuadIrrational& x, std::size_t count) {
  std::vector<std::pair<BigInt, BigInt>> out;
  BigInt p_prev = 1, q_prev = 0, p_prev2 = 0, q_prev2 = 1;
  QuadIrrational rest = x;
  while (out.size() < count) {
    const BigInt a = qi_floor(rest);
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    out.emplace_back(p, q);
    p_prev2 = std::exchange(p_prev, std::move(p));
    q_prev2 = std::exchange(q_prev, std::move(q));
    const QuadIrrational tail = rest - QuadIrrational::integer(a);
    if (tail == QuadIrrational()) break;
    rest = tail.reciprocal();
  }
  return out;
}

ApproxRotation convergent_approximation(const QuadIrrational& gamma, const BigInt& max_q) {
  std::size_t count = 4;
  while (true) {
    const auto cf = convergents(gamma, count);
    if (cf.size() < count || cf.back().second > max_q) {
      std::optional<std::size_t> best;
      for (std::size_t k = 0; k + 1 < cf.size(); ++k) {
        const auto& [p, q] = cf[k];
        if (q <= max_q && 2 * p > q && p < q) best = k;
      }
      if (!best) throw Error(ErrorKind::invalid_argument, "no convergent in (1/2, 1) with q <= " + max_q.str());
      const auto& [p, q] = cf[*best];
      return ApproxRotation::make(p, q, Rational(1, q * cf[*best + 1].second));
    }
    count *= 2;
  }
}

namespace {

// floor(y) for the true value, known only within +-uncertainty of the estimate.
std::optional<BigInt> certified_floor(const Rational& estimate, const Rational& uncertainty) {
  const BigInt f = floor_div(boost::multiprecision::numerator(estimate), boost::multiprecision::denominator(estimate));
  if (uncertainty == 0) return f;
  const Rational below = estimate - Rational(f);
  const Rational above = Rational(f + 1) - estimate;
  if (below > uncertainty && above > uncertainty) return f;
  return std::nullopt;
}

}  // namespace

Word generate_approx(const ApproxRotation& approx, const Rational& psi, std::int64_t from, std::int64_t to) {
  if (from > to) {
    throw Error(ErrorKind::invalid_argument,
                "empty index range [" + std::to_string(from) + ", " + std::to_string(to) + "]");
  }
  if (psi < 0 || psi >= 1) throw Error(ErrorKind::invalid_argument, "psi must lie in [0, 1)");
  const Rational ratio(approx.p, approx.q);
  std::vector<std::uint8_t> symbols;
  symbols.reserve(static_cast<std::size_t>(to - from + 1));
  for (std::int64_t i = from; i <= to; ++i) {
    // y = psi + i*gamma and y - gamma = psi + (i-1)*gamma, each estimated with p/q.
    const Rational y = psi + ratio * i;
    const Rational y_shift = y - ratio;
    const auto f = certified_floor(y, approx.err_bound * (i < 0 ? -i : i));
    const auto f_shift = certified_floor(y_shift, approx.err_bound * (i < 1 ? 1 - i : i - 1));
    if (!f || !f_shift) {
      throw Error(ErrorKind::horizon_exceeded,
                  "approximation " + approx.p.str() + "/" + approx.q.str() + " cannot certify index " +
                      std::to_string(i));
    }
    // frac(y) >= gamma  <=>  no integer in (y - gamma, y]
    symbols.push_back(*f == *f_shift ? 1 : 0);
  }
  return Word(std::move(symbols), from);
}

Word fibonacci_substitution(unsigned n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "substitution depth must be >= 1");
  std::string word = "0";
  for (unsigned k = 0; k < n; ++k) {
    std::string next;
    next.reserve(word.size() * 2);
    for (char ch : word) next += (ch == '0') ? "01" : "0";
    word = std::move(next);
  }
  return Word::parse(word, 1);
}

}  // namespace sturmian
