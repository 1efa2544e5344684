#include "sturmian/exact_angle.hpp"

#include <charconv>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sturmian {

namespace {

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
  BigInt g = boost::multiprecision::gcd(abs(a), abs(b));
  return boost::multiprecision::gcd(g, abs(c));
}

// d = s^2 * r with r square-free.
std::pair<BigInt, BigInt> split_square(const BigInt& d) {
  if (d > BigInt(std::numeric_limits<std::uint64_t>::max() >> 2)) {
    throw Error(ErrorKind::unsupported, "surd radicand too large: " + d.str());
  }
  auto r = d.convert_to<std::uint64_t>();
  std::uint64_t s = 1;
  for (std::uint64_t p = 2; p * p <= r; ++p) {
    while (r % (p * p) == 0) {
      r /= p * p;
      s *= p;
    }
  }
  return {BigInt(s), BigInt(r)};
}

int sign_of(const BigInt& x) { return x.sign(); }

}  // namespace

int surd_sign(const BigInt& a, const BigInt& b, const BigInt& d) {
  const int sa = sign_of(a);
  const int sb = sign_of(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with b^2 d, never equal since sqrt(d) is irrational
  const BigInt lhs = a * a;
  const BigInt rhs = b * b * d;
  if (sa > 0) return lhs > rhs ? 1 : -1;
  return rhs > lhs ? 1 : -1;
}

namespace {

BigInt common_surd(const QuadIrrational& x, const QuadIrrational& y) {
  if (x.is_rational()) return y.d();
  if (y.is_rational()) return x.d();
  if (x.d() != y.d()) {
    throw Error(ErrorKind::unsupported,
                "values from different quadratic fields: sqrt(" + x.d().str() + ") vs sqrt(" +
                    y.d().str() + ")");
  }
  return x.d();
}

BigInt parse_bigint(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw Error(ErrorKind::invalid_argument, "empty integer in '" + std::string(text) + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(ErrorKind::invalid_argument, "not an integer: '" + std::string(text) + "'");
    }
  }
  if (s[0] == '+') s.erase(s.begin());
  return BigInt(s);
}

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::invalid_denominator: return "invalid-denominator";
    case ErrorKind::unsupported: return "unsupported";
    case ErrorKind::ambiguous_coding: return "ambiguous-coding";
    case ErrorKind::horizon_exceeded: return "horizon-exceeded";
    case ErrorKind::empty_window: return "empty-window";
    case ErrorKind::inconclusive: return "inconclusive";
    case ErrorKind::undecidable: return "undecidable-on-window";
    case ErrorKind::insufficient_profile: return "insufficient-profile";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::invalid_rotation: return "invalid-rotation";
    case ErrorKind::internal_consistency: return "internal-consistency";
  }
  return "unknown";
}

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorKind::invalid_argument, "isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

QuadIrrational QuadIrrational::make(BigInt a, BigInt b, BigInt c, BigInt d) {
  if (c == 0) throw Error(ErrorKind::invalid_denominator, "denominator must be non-zero");
  if (d < 0) throw Error(ErrorKind::unsupported, "negative radicand (complex values unsupported)");
  if (d == 0 || b == 0) {
    b = 0;
    d = 0;
  } else {
    auto [s, r] = split_square(d);
    b *= s;
    d = r;
    if (d == 1) {
      a += b;
      b = 0;
      d = 0;
    }
  }
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  const BigInt g = gcd3(a, b, c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  return QuadIrrational(std::move(a), std::move(b), std::move(c), std::move(d));
}

QuadIrrational QuadIrrational::integer(BigInt n) { return make(std::move(n), 0, 1, 0); }

QuadIrrational QuadIrrational::rational(BigInt num, BigInt den) { return make(std::move(num), 0, std::move(den), 0); }

QuadIrrational QuadIrrational::from_rational(const Rational& q) {
  return rational(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Rational QuadIrrational::to_rational() const {
  if (!is_rational()) throw Error(ErrorKind::unsupported, "value is irrational");
  return Rational(a_, c_);
}

double QuadIrrational::to_double() const {
  using Float = boost::multiprecision::cpp_bin_float_50;
  Float v = Float(a_) + Float(b_) * boost::multiprecision::sqrt(Float(d_));
  v /= Float(c_);
  return v.convert_to<double>();
}

std::string QuadIrrational::to_string() const {
  return a_.str() + "," + b_.str() + "," + c_.str() + "," + d_.str();
}

std::string QuadIrrational::to_decimal(unsigned digits) const {
  if (qi_compare(*this, QuadIrrational()) < 0) return "-" + (-*this).to_decimal(digits);
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  const BigInt v = qi_floor(*this * scale);
  const BigInt whole = v / scale;
  std::string out = whole.str();
  if (digits == 0) return out;
  const BigInt frac_part = v - whole * scale;
  std::string rest = frac_part.str();
  out += ".";
  out += std::string(digits - rest.size(), '0');
  out += rest;
  return out;
}

QuadIrrational QuadIrrational::operator-() const { return QuadIrrational(-a_, -b_, c_, d_); }

QuadIrrational operator+(const QuadIrrational& x, const QuadIrrational& y) {
  const BigInt d = common_surd(x, y);
  return QuadIrrational::make(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
}

QuadIrrational operator-(const QuadIrrational& x, const QuadIrrational& y) { return x + (-y); }

QuadIrrational operator*(const QuadIrrational& x, const QuadIrrational& y) {
  const BigInt d = common_surd(x, y);
  return QuadIrrational::make(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + x.b_ * y.a_, x.c_ * y.c_, d);
}

QuadIrrational operator*(const QuadIrrational& x, const BigInt& k) {
  return QuadIrrational::make(x.a_ * k, x.b_ * k, x.c_, x.d_);
}

QuadIrrational operator/(const QuadIrrational& x, const BigInt& k) {
  if (k == 0) throw Error(ErrorKind::invalid_denominator, "division by zero");
  return QuadIrrational::make(x.a_, x.b_, x.c_ * k, x.d_);
}

QuadIrrational QuadIrrational::reciprocal() const {
  // c / (a + b r) = c (a - b r) / (a^2 - b^2 d)
  const BigInt norm = a_ * a_ - b_ * b_ * d_;
  if (norm == 0) throw Error(ErrorKind::invalid_denominator, "reciprocal of zero");
  return make(c_ * a_, -c_ * b_, norm, d_);
}

QuadIrrational qi_make(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  return QuadIrrational::make(a, b, c, d);
}

std::strong_ordering qi_compare(const QuadIrrational& x, const QuadIrrational& y) {
  const BigInt d = common_surd(x, y);
  // sign((x.a + x.b r)/x.c - (y.a + y.b r)/y.c), denominators positive
  const int s = surd_sign(x.a() * y.c() - y.a() * x.c(), x.b() * y.c() - y.b() * x.c(), d);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt qi_floor(const QuadIrrational& x) {
  if (x.is_rational()) return floor_div(x.a(), x.c());
  // b*sqrt(d) is never an integer here, so floor((a + t)/c) = floor((a + floor(t))/c).
  const BigInt n = x.b() * x.b() * x.d();
  const BigInt root = isqrt(n);
  const BigInt floor_t = x.b() > 0 ? root : -(root + 1);
  return floor_div(x.a() + floor_t, x.c());
}

BigInt qi_ceil(const QuadIrrational& x) { return -qi_floor(-x); }

QuadIrrational frac(const QuadIrrational& x) { return x - QuadIrrational::integer(qi_floor(x)); }

QuadIrrational abs(const QuadIrrational& x) { return qi_compare(x, QuadIrrational()) < 0 ? -x : x; }

QuadIrrational rotate(const QuadIrrational& theta, const QuadIrrational& gamma, const BigInt& k) {
  return frac(theta + gamma * k);
}

QuadIrrational fibonacci_gamma() { return QuadIrrational::make(-1, 1, 2, 5); }

QuadIrrational parse_quad(std::string_view text) {
  if (text == "fib") return fibonacci_gamma();
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() == 4) {
    return QuadIrrational::make(parse_bigint(parts[0]), parse_bigint(parts[1]), parse_bigint(parts[2]),
                                parse_bigint(parts[3]));
  }
  if (parts.size() == 1) return QuadIrrational::from_rational(parse_rational(text));
  throw Error(ErrorKind::invalid_argument, "expected 'fib', 'a,b,c,d' or 'p/q', got '" + std::string(text) + "'");
}

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  const BigInt den = parse_bigint(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::invalid_denominator, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_bigint(text.substr(0, slash)), den);
}

std::string rational_to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

RotationParams RotationParams::make(QuadIrrational gamma, QuadIrrational psi) {
  if (gamma.is_rational()) {
    throw Error(ErrorKind::invalid_rotation, "gamma must be irrational, got " + gamma.to_string());
  }
  if (gamma <= QuadIrrational::rational(1, 2) || gamma >= QuadIrrational::integer(1)) {
    throw Error(ErrorKind::invalid_rotation, "gamma must lie in (1/2, 1), got " + gamma.to_decimal());
  }
  if (!psi.is_rational() && psi.d() != gamma.d()) {
    throw Error(ErrorKind::unsupported, "psi must be rational or lie in Q(sqrt(" + gamma.d().str() + "))");
  }
  if (psi < QuadIrrational() || psi >= QuadIrrational::integer(1)) {
    throw Error(ErrorKind::invalid_argument, "psi must lie in [0, 1), got " + psi.to_decimal());
  }
  // psi = m*gamma + n  =>  m = (psi.b / psi.c) / (gamma.b / gamma.c)
  std::optional<BigInt> shift;
  const BigInt num = psi.b() * gamma.c();
  const BigInt den = psi.c() * gamma.b();
  if (num % den == 0) {
    const BigInt m = num / den;
    const QuadIrrational n = psi - gamma * m;
    if (n.is_rational() && n.c() == 1) shift = m;
  }
  return RotationParams(std::move(gamma), std::move(psi), std::move(shift));
}

std::vector<BigInt> RotationParams::endpoint_hits() const {
  if (!shift_) return {};
  return {-*shift_, 1 - *shift_};
}

bool RotationParams::hits_endpoint(const BigInt& i) const {
  return shift_ && (i == -*shift_ || i == 1 - *shift_);
}

}  // namespace sturmian
