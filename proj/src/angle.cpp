#include "painted/angle.hpp"

#include <charconv>

#include "painted/error.hpp"

namespace painted {

namespace {

Angle::Rational reduce_mod_one(Angle::Rational v) {
  const std::int64_t whole = v.numerator() / v.denominator();
  v -= whole;
  if (v.numerator() < 0) v += 1;
  return v;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::ParseError, "bad angle '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Angle::Angle(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "angle with zero denominator");
  value_ = reduce_mod_one(Rational(num, den));
}

Angle::Angle(Rational value) : value_(reduce_mod_one(value)) {}

std::string Angle::to_string() const {
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

Angle Angle::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t");
  text = first == std::string_view::npos ? std::string_view() : text.substr(first, text.find_last_not_of(" \t") - first + 1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Angle(parse_int(text, text), 1);
  return Angle(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

}  // namespace painted
