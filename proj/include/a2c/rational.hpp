// Exact rational arithmetic and the Angle type (rational multiples of pi).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace a2c {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline std::string rat_to_string(const Rat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p" or "p/q" into an exact rational. Rejects anything else
/// (in particular decimal notation).
inline Rat rat_from_string(const std::string& text) {
  const auto slash = text.find('/');
  const auto parse_int = [&](const std::string& part) -> BigInt {
    if (part.empty()) throw Error("empty integer in rational '" + text + "'");
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw Error("malformed rational '" + text + "'");
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        throw Error("malformed rational '" + text + "'");
    }
    return BigInt(part);
  };
  if (slash == std::string::npos) return Rat(parse_int(text));
  const BigInt num = parse_int(text.substr(0, slash));
  const BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in rational '" + text + "'");
  return Rat(num, den);
}

/// An angle, length, or curvature value, stored exactly as a rational
/// multiple of pi. All comparisons (against pi, 2*pi, ...) are exact.
class Angle {
 public:
  Angle() = default;
  explicit Angle(Rat pi_coeff) : coeff_(std::move(pi_coeff)) {}

  /// (num/den) * pi.
  static Angle of(long long num, long long den = 1) {
    if (den == 0) throw Error("zero denominator in angle");
    return Angle(Rat(BigInt(num), BigInt(den)));
  }
  static Angle zero() { return Angle(Rat(0)); }
  static Angle pi() { return Angle(Rat(1)); }
  static Angle two_pi() { return Angle(Rat(2)); }

  const Rat& pi_coeff() const { return coeff_; }

  Angle operator+(const Angle& o) const { return Angle(coeff_ + o.coeff_); }
  Angle operator-(const Angle& o) const { return Angle(coeff_ - o.coeff_); }
  Angle operator-() const { return Angle(-coeff_); }
  Angle& operator+=(const Angle& o) {
    coeff_ += o.coeff_;
    return *this;
  }
  Angle& operator-=(const Angle& o) {
    coeff_ -= o.coeff_;
    return *this;
  }
  Angle operator*(const Rat& s) const { return Angle(coeff_ * s); }
  Angle operator*(long long s) const { return Angle(coeff_ * s); }
  Angle operator/(long long s) const {
    if (s == 0) throw Error("angle division by zero");
    return Angle(coeff_ / s);
  }

  bool operator==(const Angle& o) const { return coeff_ == o.coeff_; }
  bool operator!=(const Angle& o) const { return coeff_ != o.coeff_; }
  bool operator<(const Angle& o) const { return coeff_ < o.coeff_; }
  bool operator<=(const Angle& o) const { return coeff_ <= o.coeff_; }
  bool operator>(const Angle& o) const { return coeff_ > o.coeff_; }
  bool operator>=(const Angle& o) const { return coeff_ >= o.coeff_; }

  bool is_positive() const { return coeff_ > 0; }
  bool is_zero() const { return coeff_ == 0; }

  double radians() const {
    return coeff_.convert_to<double>() * 3.14159265358979323846;
  }

  /// Serialized as the pi-coefficient, "p" or "p/q".
  std::string str() const { return rat_to_string(coeff_); }

 private:
  Rat coeff_ = Rat(0);
};

inline Angle min(const Angle& a, const Angle& b) { return a < b ? a : b; }
inline Angle max(const Angle& a, const Angle& b) { return a < b ? b : a; }
inline Angle abs(const Angle& a) { return a < Angle::zero() ? -a : a; }

/// Best rational approximation of x (radians) as a multiple of pi with
/// denominator at most max_den, via continued fractions. Used where
/// floating-point geometry hands a parameter to the exact link metric.
inline Angle rationalize_angle(double radians, std::int64_t max_den = 1000000) {
  double x = radians / 3.14159265358979323846;
  const bool negative = x < 0;
  if (negative) x = -x;
  // Continued fraction expansion with convergent tracking.
  std::int64_t h0 = 0, k0 = 1, h1 = 1, k1 = 0;
  double frac = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(frac);
    if (fl > 9.0e15) break;
    const std::int64_t a = static_cast<std::int64_t>(fl);
    if (a != 0 && k1 != 0 && k1 > (max_den - k0) / a) break;  // overflow guard
    const std::int64_t h2 = a * h1 + h0;
    const std::int64_t k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    k0 = k1;
    h1 = h2;
    k1 = k2;
    const double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  Rat r(BigInt(h1), BigInt(k1 == 0 ? 1 : k1));
  if (negative) r = -r;
  return Angle(r);
}

}  // namespace a2c
