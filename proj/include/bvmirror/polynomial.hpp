#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bvmirror/error.hpp"
#include "bvmirror/rational.hpp"

namespace bvmirror {

/// Dense univariate polynomial over Q, read as a binary form of a declared
/// degree on the projective line. The gap between `formal_degree` and the
/// actual degree is the order of vanishing at infinity.
class Polynomial {
 public:
  Polynomial() = default;

  /// Coefficients lowest degree first; trailing zeros are stripped.
  Polynomial(std::vector<Rational> coefficients, int formal_degree)
      : coeffs_(std::move(coefficients)), formal_degree_(formal_degree) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    if (formal_degree_ < degree()) {
      throw DomainError("formal degree " + std::to_string(formal_degree_) +
                        " below actual degree " + std::to_string(degree()));
    }
  }

  /// Affine polynomial whose formal degree equals its actual degree.
  static Polynomial affine(std::vector<Rational> coefficients) {
    Polynomial p;
    p.coeffs_ = std::move(coefficients);
    while (!p.coeffs_.empty() && p.coeffs_.back() == 0) p.coeffs_.pop_back();
    p.formal_degree_ = std::max(p.degree(), 0);
    return p;
  }

  static Polynomial constant(Rational c, int formal_degree = 0) {
    return Polynomial({std::move(c)}, formal_degree);
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  int formal_degree() const noexcept { return formal_degree_; }
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading_coefficient() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.formal_degree_ = a.formal_degree_ + b.formal_degree_;
    if (a.is_zero() || b.is_zero()) return out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
  }

  /// Divides by (t - a), returning the quotient; `remainder` receives p(a).
  Polynomial divide_linear(const Rational& a, Rational& remainder) const {
    if (is_zero()) {
      remainder = 0;
      return *this;
    }
    std::vector<Rational> q(coeffs_.size() - 1);
    Rational carry = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      carry = carry * a + coeffs_[k];
      if (k > 0) q[k - 1] = carry;
    }
    remainder = carry;
    return Polynomial(std::move(q), formal_degree_ - 1);
  }

 private:
  std::vector<Rational> coeffs_;
  int formal_degree_ = 0;
};

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

inline Polynomial poly_pow(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

inline Rational poly_eval(const Polynomial& p, const Rational& t) { return p(t); }

/// Order of vanishing at a point of P^1. At infinity this is the formal-degree deficit.
inline int valuation(const Polynomial& p, const ProjectivePoint& at) {
  if (p.is_zero()) throw DomainError("valuation of the zero polynomial is undefined");
  if (at.is_infinity()) return p.formal_degree() - p.degree();
  int order = 0;
  Polynomial current = p;
  for (;;) {
    Rational remainder;
    Polynomial quotient = current.divide_linear(at.value(), remainder);
    if (remainder != 0) return order;
    current = std::move(quotient);
    ++order;
  }
}

struct Root {
  ProjectivePoint point;
  int multiplicity = 1;
};

/// Monic (in the affine chart) form of degree `formal_degree` vanishing to exactly the
/// given orders. An infinite root, if listed, must account for the whole degree deficit;
/// if not listed, there must be no deficit.
inline Polynomial poly_from_roots(std::span<const Root> roots, int formal_degree) {
  int finite_sum = 0;
  std::optional<int> infinity_multiplicity;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].multiplicity < 1) {
      throw InputError("non-positive multiplicity at " + to_string(roots[i].point));
    }
    for (std::size_t k = 0; k < i; ++k) {
      if (roots[k].point == roots[i].point) throw InputError("duplicate root " + to_string(roots[i].point));
    }
    if (roots[i].point.is_infinity()) {
      infinity_multiplicity = roots[i].multiplicity;
    } else {
      finite_sum += roots[i].multiplicity;
    }
  }
  if (finite_sum > formal_degree) {
    throw InputError("finite root multiplicities sum to " + std::to_string(finite_sum) +
                     ", exceeding formal degree " + std::to_string(formal_degree));
  }
  const int deficit = formal_degree - finite_sum;
  if (deficit != infinity_multiplicity.value_or(0)) {
    throw InputError("multiplicity mismatch at inf: listed " +
                     std::to_string(infinity_multiplicity.value_or(0)) + ", degree deficit is " +
                     std::to_string(deficit));
  }

  Polynomial result = Polynomial::constant(1);
  for (const auto& r : roots) {
    if (r.point.is_infinity()) continue;
    result = result * poly_pow(Polynomial::affine({-r.point.value(), Rational(1)}), r.multiplicity);
  }
  return Polynomial(std::vector<Rational>(result.coefficients().begin(), result.coefficients().end()),
                    formal_degree);
}

inline Polynomial poly_from_roots(std::initializer_list<Root> roots, int formal_degree) {
  return poly_from_roots(std::span<const Root>(roots.begin(), roots.size()), formal_degree);
}

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1 || k == 0) out += to_string(magnitude);
    if (k > 0) out += k == 1 ? "t" : "t^" + std::to_string(k);
  }
  return out;
}

}  // namespace bvmirror
