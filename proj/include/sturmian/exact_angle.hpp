#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sturmian/error.hpp"

namespace sturmian {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/*
 * Exact elements of Q(sqrt d), stored as (a + b*sqrt(d)) / c.
 *
 * Canonical form:
 *   c > 0, gcd(a, b, c) = 1,
 *   d square-free, d != 1,
 *   b == 0  <=>  d == 0.
 *
 * Two values are equal iff their canonical fields are equal, so operator==
 * compares fields directly. Ordering needs the surd parts to agree (or one
 * side to be rational); mixing two different irrational fields throws.
 *
 * Points on the circle are represented in [0, 1): the circumference is
 * normalized to 1, so a rotation by gamma is x -> frac(x + gamma).
 */
class QuadIrrational {
 public:
  QuadIrrational() = default;

  /// Canonicalizing constructor. Throws on c == 0 or d < 0.
  static QuadIrrational make(BigInt a, BigInt b, BigInt c, BigInt d);
  static QuadIrrational integer(BigInt n);
  static QuadIrrational rational(BigInt num, BigInt den);
  static QuadIrrational from_rational(const Rational& q);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }
  const BigInt& c() const { return c_; }
  const BigInt& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  /// Only meaningful when is_rational().
  Rational to_rational() const;

  double to_double() const;
  /// "a,b,c,d"
  std::string to_string() const;
  /// Decimal rendering with the given number of fractional digits (truncated).
  std::string to_decimal(unsigned digits = 12) const;

  QuadIrrational operator-() const;
  friend QuadIrrational operator+(const QuadIrrational& x, const QuadIrrational& y);
  friend QuadIrrational operator-(const QuadIrrational& x, const QuadIrrational& y);
  friend QuadIrrational operator*(const QuadIrrational& x, const QuadIrrational& y);
  friend QuadIrrational operator*(const QuadIrrational& x, const BigInt& k);
  friend QuadIrrational operator*(const BigInt& k, const QuadIrrational& x) { return x * k; }
  friend QuadIrrational operator/(const QuadIrrational& x, const BigInt& k);
  QuadIrrational reciprocal() const;

  friend bool operator==(const QuadIrrational&, const QuadIrrational&) = default;

 private:
  QuadIrrational(BigInt a, BigInt b, BigInt c, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  BigInt a_ = 0;
  BigInt b_ = 0;
  BigInt c_ = 1;
  BigInt d_ = 0;
};

QuadIrrational qi_make(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d);

/// Exact sign of x - y. Throws ErrorKind::unsupported for two different surds.
std::strong_ordering qi_compare(const QuadIrrational& x, const QuadIrrational& y);

inline bool operator<(const QuadIrrational& x, const QuadIrrational& y) { return qi_compare(x, y) < 0; }
inline bool operator<=(const QuadIrrational& x, const QuadIrrational& y) { return qi_compare(x, y) <= 0; }
inline bool operator>(const QuadIrrational& x, const QuadIrrational& y) { return qi_compare(x, y) > 0; }
inline bool operator>=(const QuadIrrational& x, const QuadIrrational& y) { return qi_compare(x, y) >= 0; }

BigInt qi_floor(const QuadIrrational& x);
BigInt qi_ceil(const QuadIrrational& x);
/// x - floor(x), in [0, 1).
QuadIrrational frac(const QuadIrrational& x);
QuadIrrational abs(const QuadIrrational& x);
/// frac(theta + k * gamma).
QuadIrrational rotate(const QuadIrrational& theta, const QuadIrrational& gamma, const BigInt& k);

/// Exact sign of a + b*sqrt(d), d square-free (or b == 0).
int surd_sign(const BigInt& a, const BigInt& b, const BigInt& d);

/// Floor division for signed big integers (rounds toward -inf).
BigInt floor_div(const BigInt& num, const BigInt& den);
/// Integer square root, floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

/// Accepts "fib" (the inverse golden ratio), "a,b,c,d", or a rational "p/q".
QuadIrrational parse_quad(std::string_view text);
/// Accepts "p/q" or "p".
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

/// (sqrt(5) - 1) / 2
QuadIrrational fibonacci_gamma();

/// Whether a comparison against the coding arc boundaries may resolve an
/// exact hit by the half-open convention [0, gamma), or must refuse.
enum class EndpointPolicy { half_open, strict };

/// Rotation angle gamma in (1/2, 1), irrational, and starting phase psi in
/// [0, 1) taken from the same quadratic field (or rational).
class RotationParams {
 public:
  static RotationParams make(QuadIrrational gamma, QuadIrrational psi);

  const QuadIrrational& gamma() const { return gamma_; }
  const QuadIrrational& psi() const { return psi_; }

  /// If psi = m*gamma + n for integers m, n then the orbit meets 0 at index
  /// -m and gamma at index 1 - m. Empty when the orbit avoids both.
  const std::optional<BigInt>& lattice_shift() const { return shift_; }
  std::vector<BigInt> endpoint_hits() const;
  bool hits_endpoint(const BigInt& i) const;

  RotationParams with_psi(QuadIrrational psi) const { return make(gamma_, std::move(psi)); }

 private:
  RotationParams(QuadIrrational gamma, QuadIrrational psi, std::optional<BigInt> shift)
      : gamma_(std::move(gamma)), psi_(std::move(psi)), shift_(std::move(shift)) {}

  QuadIrrational gamma_;
  QuadIrrational psi_;
  std::optional<BigInt> shift_;
};

}  // namespace sturmian
