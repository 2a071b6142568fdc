#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <variant>

#include "subsum/errors.hpp"

namespace subsum {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Dual-mode scalar: exact rational or IEEE double. Arithmetic between two
// exact values stays exact; any operation touching a double yields a double.
// Exact values are kept in lowest terms with a positive denominator (the
// underlying rational type normalizes on every operation).
class Scalar {
public:
  Scalar() : v_(BigRational(0)) {}
  Scalar(int n) : v_(BigRational(n)) {}
  Scalar(long n) : v_(BigRational(n)) {}
  Scalar(long long n) : v_(BigRational(n)) {}
  Scalar(const BigInt& n) : v_(BigRational(n)) {}
  Scalar(const BigRational& r) : v_(r) {}
  explicit Scalar(double d) : v_(d) {}

  static Scalar ratio(const BigInt& p, const BigInt& q) {
    if (q == 0) fail(Errc::InvalidArgument, "zero denominator");
    return Scalar(BigRational(p, q));
  }
  static Scalar ratio(long long p, long long q) { return ratio(BigInt(p), BigInt(q)); }

  // p / 2^k
  static Scalar dyadic(long long p, long long k) {
    return ratio(BigInt(p), pow2(k));
  }
  static BigInt pow2(long long k) {
    if (k < 0) fail(Errc::InvalidArgument, "negative power");
    return BigInt(1) << static_cast<unsigned>(k);
  }
  static Scalar pow_int(const BigRational& base, long long e);

  bool is_exact() const { return std::holds_alternative<BigRational>(v_); }
  const BigRational& rational() const { return std::get<BigRational>(v_); }
  double to_double() const;

  // Exact total order; doubles are compared as the rationals they denote.
  BigRational as_rational() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  int sign() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  friend int compare(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return compare(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return compare(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return compare(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return compare(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return compare(a, b) >= 0; }

  // Rationals render as "p/q" ("p" when q == 1); doubles as the shortest
  // round-trip decimal.
  std::string str() const;
  static Scalar parse(const std::string& s);

private:
  std::variant<BigRational, double> v_;
};

inline Scalar min(const Scalar& a, const Scalar& b) { return a <= b ? a : b; }
inline Scalar max(const Scalar& a, const Scalar& b) { return a >= b ? a : b; }

}  // namespace subsum
