#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace painted {

/// Rotation number in Q/Z: the unit-circle scalar exp(2 pi i * value()).
/// Always stored reduced into [0, 1).
class Angle {
 public:
  using Rational = boost::rational<std::int64_t>;

  Angle() = default;
  Angle(std::int64_t num, std::int64_t den);
  explicit Angle(Rational value);

  const Rational& value() const noexcept { return value_; }
  std::int64_t numerator() const noexcept { return value_.numerator(); }
  /// Order of the scalar in the circle group.
  std::int64_t denominator() const noexcept { return value_.denominator(); }
  bool is_zero() const noexcept { return value_.numerator() == 0; }

  Angle operator-() const { return Angle(-value_); }
  friend Angle operator+(const Angle& a, const Angle& b) { return Angle(a.value_ + b.value_); }
  friend Angle operator-(const Angle& a, const Angle& b) { return Angle(a.value_ - b.value_); }
  friend Angle operator*(std::int64_t k, const Angle& a) { return Angle(a.value_ * k); }
  Angle& operator+=(const Angle& b) { return *this = *this + b; }
  friend bool operator==(const Angle& a, const Angle& b) { return a.value_ == b.value_; }

  /// "p/q" with the reduced representative in [0, 1), e.g. "0/1", "3/4".
  std::string to_string() const;
  /// Accepts "p/q" or an integer; any rational, reduced mod 1.
  static Angle parse(std::string_view text);

 private:
  Rational value_{0};
};

}  // namespace painted
