#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffgenus/poly.hpp"

namespace ffg {

/// Polynomial in x over k[t]: coefficient i is the Poly in t multiplying x^i.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(FieldPtr field) : field_(std::move(field)) {}
  BiPoly(FieldPtr field, std::vector<Poly> coeffs);

  static BiPoly from_t(const Poly& a);
  static BiPoly x(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Poly>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int t_degree() const;
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  /// Coefficient of x^i (zero polynomial when out of range).
  Poly operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Poly(field_); }

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
  BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
  BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
  bool operator==(const BiPoly& o) const { return field_ == o.field_ && c_ == o.c_; }
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  BiPoly scale(const Poly& a) const;
  BiPoly shift_x(std::size_t k) const;
  /// Exact division of every coefficient by d; throws if some remainder is nonzero.
  BiPoly divide_exact(const Poly& d) const;
  BiPoly derivative_x() const;
  /// Univariate polynomial in x after substituting t = point.
  Poly eval_t(u64 point) const;

  std::string to_string() const;

 private:
  void normalize();
  FieldPtr field_;
  std::vector<Poly> c_;
};

BiPoly pow(const BiPoly& base, u64 e);

/// Division by a monic polynomial in x: a = q*phi + r with deg_x r < deg_x phi.
std::pair<BiPoly, BiPoly> divrem_monic(const BiPoly& a, const BiPoly& phi);

struct ParseError : std::invalid_argument {
  ParseError(std::size_t column, const std::string& what);
  std::size_t column;
};

/// Grammar: integers, t, x, the field generator a, + - * ^, parentheses,
/// unary minus and implicit multiplication ("2t", "(x+1)(x-1)").
BiPoly parse_bipoly(std::string_view text, const FieldPtr& field);

}  // namespace ffg
