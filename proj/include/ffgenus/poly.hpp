#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffgenus/ff.hpp"

namespace ffg {

/// Dense univariate polynomial over a finite field, lowest degree first.
///
/// Canonical form has no trailing zeros; the zero polynomial has an empty
/// coefficient vector and degree() == -1, standing in for -infinity.
class Poly {
 public:
  Poly() = default;
  explicit Poly(FieldPtr field) : field_(std::move(field)) {}
  Poly(FieldPtr field, std::vector<u64> coeffs);

  static Poly constant(FieldPtr field, u64 c);
  static Poly monomial(FieldPtr field, u64 c, std::size_t degree);
  /// The variable itself.
  static Poly var(FieldPtr field) { return monomial(std::move(field), 1, 1); }

  const FieldPtr& field() const { return field_; }
  const Field& F() const { return *field_; }
  const std::vector<u64>& coeffs() const { return c_; }
  std::vector<u64>& mutable_coeffs() { return c_; }
  void normalize();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  u64 lc() const { return c_.empty() ? 0 : c_.back(); }
  u64 operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scale(u64 c) const;
  Poly monic() const;
  Poly derivative() const;
  Poly shift_up(std::size_t k) const;  // multiply by var^k
  u64 eval(u64 point) const;
  /// p(var + c).
  Poly taylor_shift(u64 c) const;
  /// var^n * p(1/var); requires n >= degree().
  Poly reverse(int n) const;

  std::string to_string(char var = 't') const;
  std::string to_dense_string() const;

 private:
  void check(const Poly& o) const;
  FieldPtr field_;
  std::vector<u64> c_;
};

/// Raw product of coefficient vectors (schoolbook below a cut-off, Karatsuba above).
std::vector<u64> mul_coeffs(const Field& F, const std::vector<u64>& a, const std::vector<u64>& b);

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
Poly quo(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
/// Returns (g, s, t) with s*a + t*b = g, g monic.
struct XGcd {
  Poly g, s, t;
};
XGcd xgcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& base, u64 e, const Poly& m);
Poly pow(const Poly& base, u64 e);

/// Resultant via the Euclidean remainder sequence.
u64 resultant(const Poly& a, const Poly& b);

/// Largest k with d^k | a; -1 for a == 0.
int valuation(const Poly& a, const Poly& d);

/// Parses "t^3 + 2*t + 1" (or a bracketed dense list "[1, 2, 0, 1]") over field.
Poly parse_poly(std::string_view text, const FieldPtr& field, char var = 't');

}  // namespace ffg
