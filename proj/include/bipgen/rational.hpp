#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bipgen {

/// Exact fraction, always reduced with a positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit from integers
  constexpr Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    normalize();
  }

  constexpr std::int64_t numerator() const { return num_; }
  constexpr std::int64_t denominator() const { return den_; }

  constexpr Rational& operator+=(const Rational& o) {
    const std::int64_t g = std::gcd(den_, o.den_);
    num_ = num_ * (o.den_ / g) + o.num_ * (den_ / g);
    den_ = den_ / g * o.den_;
    normalize();
    return *this;
  }
  constexpr Rational& operator-=(const Rational& o) { return *this += Rational(-o.num_, o.den_); }
  constexpr Rational& operator*=(const Rational& o) {
    // Cross-reduce first to keep intermediates small.
    const std::int64_t g1 = std::gcd(num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_, den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    normalize();
    return *this;
  }

  friend constexpr Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend constexpr Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend constexpr Rational operator*(Rational a, const Rational& b) { return a *= b; }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive; values here stay far below 2^31 each side.
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  constexpr void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Always "num/den", including integers ("1/1").
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << to_string(r); }

}  // namespace bipgen
