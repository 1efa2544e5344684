#pragma once

#include <cstdint>
#include <vector>

#include "sturmian/exact_angle.hpp"
#include "sturmian/word.hpp"

namespace sturmian {

/// X_psi(i) = 0 iff frac(psi + i*gamma) lies in [0, gamma).
/// Under EndpointPolicy::strict an orbit point equal to 0 or gamma raises
/// ErrorKind::ambiguous_coding instead of being resolved by the half-open arc.
std::uint8_t symbol_at(const RotationParams& params, const BigInt& i,
                       EndpointPolicy policy = EndpointPolicy::half_open);

/// Symbols for the closed index range [from, to], origin = from.
Word generate(const RotationParams& params, std::int64_t from, std::int64_t to,
              EndpointPolicy policy = EndpointPolicy::half_open);

/// Rational stand-in p/q for gamma with |gamma - p/q| <= err_bound.
struct ApproxRotation {
  BigInt p;
  BigInt q;
  Rational err_bound;

  static ApproxRotation make(BigInt p, BigInt q, Rational err_bound);
};

/// Leading continued-fraction convergents p_k/q_k of x (k = 0, 1, ...).
std::vector<std::pair<BigInt, BigInt>> convergents(const QuadIrrational& x, std::size_t count);

/// Deepest convergent p/q of gamma with q <= max_q and 1/2 < p/q < 1, with
/// err_bound = 1/(q * q_next).
ApproxRotation convergent_approximation(const QuadIrrational& gamma, const BigInt& max_q);

/// Codes the orbit of psi under the unknown true gamma, using only p/q and the
/// error bound. Each symbol is emitted only when the margin to the nearest
/// arc boundary exceeds the accumulated error; otherwise throws
/// ErrorKind::horizon_exceeded naming the first uncertified index.
Word generate_approx(const ApproxRotation& approx, const Rational& psi, std::int64_t from, std::int64_t to);

/// n-fold iterate of 0 -> 01, 1 -> 0 applied to "0"; origin 1.
Word fibonacci_substitution(unsigned n);

}  // namespace sturmian
