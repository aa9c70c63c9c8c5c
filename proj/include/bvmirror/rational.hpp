#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "bvmirror/error.hpp"

namespace bvmirror {

// Arbitrary precision, always normalized (lowest terms, positive denominator).
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

inline std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

inline bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace detail

/// Parses "n" or "n/d" (optionally signed numerator) into a normalized rational.
inline Rational parse_rational(std::string_view text) {
  const std::string s = detail::trim(text);
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!detail::is_integer_literal(num, true) || !detail::is_integer_literal(den, false)) {
    throw InputError("malformed rational literal '" + s + "'");
  }
  Integer d(den);
  if (d == 0) throw InputError("zero denominator in rational literal '" + s + "'");
  Integer n(num.front() == '+' ? num.substr(1) : num);
  return Rational(n, d);
}

inline std::string to_string(const Rational& q) { return q.str(); }

/// A point of the projective line: a finite rational value or the single point at infinity.
class ProjectivePoint {
 public:
  ProjectivePoint() = default;  // infinity
  ProjectivePoint(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by design
  ProjectivePoint(int value) : value_(Rational(value)) {}       // NOLINT

  static ProjectivePoint infinity() { return ProjectivePoint(); }

  bool is_infinity() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  const Rational& value() const {
    if (!value_) throw DomainError("the point at infinity has no affine value");
    return *value_;
  }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
    return a.value_ == b.value_;
  }

  // Finite points in increasing order, then infinity.
  friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.is_infinity() || b.is_infinity()) {
      return static_cast<int>(a.is_infinity()) <=> static_cast<int>(b.is_infinity());
    }
    if (*a.value_ < *b.value_) return std::strong_ordering::less;
    if (*b.value_ < *a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  std::optional<Rational> value_;
};

/// Accepts "n", "n/d", or "inf" (case-insensitive, also "infinity" / "∞").
inline ProjectivePoint parse_point(std::string_view text) {
  const std::string s = detail::lower(detail::trim(text));
  if (s == "inf" || s == "infinity" || s == "\xE2\x88\x9E") return ProjectivePoint::infinity();
  return ProjectivePoint(parse_rational(s));
}

inline std::string to_string(const ProjectivePoint& p) {
  return p.is_infinity() ? std::string("inf") : to_string(p.value());
}

inline std::ostream& operator<<(std::ostream& os, const ProjectivePoint& p) {
  return os << to_string(p);
}

}  // namespace bvmirror
