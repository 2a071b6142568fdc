#include "subsum/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace subsum {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::MissingBound: return "MissingBound";
    case Errc::UnknownEntry: return "UnknownEntry";
    case Errc::LimitExceeded: return "LimitExceeded";
    case Errc::ZeroTermPresent: return "ZeroTermPresent";
    case Errc::NotOneDimensional: return "NotOneDimensional";
    case Errc::UndecidableComparison: return "UndecidableComparison";
    case Errc::InsufficientMetadata: return "InsufficientMetadata";
    case Errc::UnsupportedPattern: return "UnsupportedPattern";
    case Errc::InsufficientTerms: return "InsufficientTerms";
    case Errc::NoDeclaredTags: return "NoDeclaredTags";
    case Errc::HeuristicGammaRejected: return "HeuristicGammaRejected";
    case Errc::YNotApproximable: return "YNotApproximable";
    case Errc::TargetOnBoundary: return "TargetOnBoundary";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::GapTooSmall: return "GapTooSmall";
    case Errc::SelectionNotPotentiallyConditional: return "SelectionNotPotentiallyConditional";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

Scalar Scalar::pow_int(const BigRational& base, long long e) {
  BigRational r(1);
  BigRational b = base;
  bool inv = e < 0;
  unsigned long long n = inv ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  while (n) {
    if (n & 1) r *= b;
    b *= b;
    n >>= 1;
  }
  if (inv) {
    if (r == 0) fail(Errc::InvalidArgument, "inverse of zero");
    r = BigRational(denominator(r), numerator(r));
  }
  return Scalar(r);
}

double Scalar::to_double() const {
  if (is_exact()) return static_cast<double>(rational());
  return std::get<double>(v_);
}

BigRational Scalar::as_rational() const {
  if (is_exact()) return rational();
  double d = std::get<double>(v_);
  if (!std::isfinite(d)) fail(Errc::InvalidArgument, "non-finite float has no rational value");
  return BigRational(d);  // exact binary expansion of the double
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(BigRational(-rational()));
  return Scalar(-std::get<double>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    v_ = BigRational(rational() + o.rational());
  } else {
    v_ = to_double() + o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    v_ = BigRational(rational() - o.rational());
  } else {
    v_ = to_double() - o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    v_ = BigRational(rational() * o.rational());
  } else {
    v_ = to_double() * o.to_double();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_exact() && o.is_exact()) {
    if (o.rational() == 0) fail(Errc::InvalidArgument, "division by zero");
    v_ = BigRational(rational() / o.rational());
  } else {
    v_ = to_double() / o.to_double();
  }
  return *this;
}

int Scalar::sign() const {
  if (is_exact()) {
    const BigRational& r = rational();
    return r == 0 ? 0 : (r < 0 ? -1 : 1);
  }
  double d = std::get<double>(v_);
  return d == 0 ? 0 : (d < 0 ? -1 : 1);
}

int compare(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) {
    const BigRational &x = a.rational(), &y = b.rational();
    return x == y ? 0 : (x < y ? -1 : 1);
  }
  if (!a.is_exact() && !b.is_exact()) {
    double x = a.to_double(), y = b.to_double();
    return x == y ? 0 : (x < y ? -1 : 1);
  }
  BigRational x = a.as_rational(), y = b.as_rational();
  return x == y ? 0 : (x < y ? -1 : 1);
}

std::string Scalar::str() const {
  if (is_exact()) {
    const BigRational& r = rational();
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
      s += "/";
      s += denominator(r).str();
    }
    return s;
  }
  double d = std::get<double>(v_);
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, res.ptr);
}

Scalar Scalar::parse(const std::string& s) {
  if (s.empty()) fail(Errc::InvalidArgument, "empty scalar");
  auto big = [](const std::string& t) {
    try {
      return BigInt(t);
    } catch (const std::exception&) {
      fail(Errc::InvalidArgument, "bad integer literal: " + t);
    }
  };
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    return Scalar::ratio(big(s.substr(0, slash)), big(s.substr(slash + 1)));
  }
  if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
      s.find('E') == std::string::npos) {
    return Scalar(big(s));
  }
  double d = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), d);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    fail(Errc::InvalidArgument, "bad scalar literal: " + s);
  return Scalar(d);
}

}  // namespace subsum
