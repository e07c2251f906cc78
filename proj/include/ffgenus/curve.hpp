#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ffgenus/bipoly.hpp"
#include "ffgenus/ext.hpp"

namespace ffg {

/// f = x^n + a_1 x^(n-1) + ... + a_n over k[t], n >= 2.
class DefiningPoly {
 public:
  explicit DefiningPoly(BiPoly f);
  static DefiningPoly parse(std::string_view text, const FieldPtr& field);

  const BiPoly& poly() const { return f_; }
  const FieldPtr& field() const { return f_.field(); }
  int n() const { return f_.degree(); }
  /// a_i, the coefficient of x^(n-i); a(0) == 1.
  Poly a(int i) const { return f_[static_cast<std::size_t>(n() - i)]; }
  std::string to_string() const { return f_.to_string(); }

 private:
  BiPoly f_;
};

struct Validation {
  bool irreducibility_proven = false;
  std::string witness;  // specialization that proved irreducibility
  std::vector<std::string> warnings;
};

/// Checks separability (hard error when Disc(f) = 0) and tries to prove
/// irreducibility over k(t) by specializing t at up to 8 points.
Validation validate(const DefiningPoly& f, int threads = 1);

int compute_Cf(const DefiningPoly& f);

/// t^(-n Cf) f(t, t^Cf x) written over k[u], u = 1/t (variable still printed as t).
DefiningPoly to_infinity(const DefiningPoly& f, int Cf);

/// Field with at least `count` elements containing k: k itself or the
/// extension by the first irreducible polynomial of the needed degree.
Extension point_field(const FieldPtr& k, u64 count);

/// (-1)^(n(n-1)/2) Res_x(f, f_x) by evaluation at degree_bound + 1 points and interpolation.
Poly discriminant_bounded(const DefiningPoly& f, int degree_bound, int threads = 1);
Poly discriminant(const DefiningPoly& f, int threads = 1);

struct CurveProfile {
  int Cf = 0;
  DefiningPoly f_inf;
  Poly disc;
  int delta = 0;
  int delta_inf = 0;
};

/// v_u(Disc(f_inf)), computed on f_inf and checked against delta + delta_inf = Cf n(n-1).
int delta_infinity(const DefiningPoly& f, int Cf, int delta, int threads = 1);

CurveProfile curve_profile(const DefiningPoly& f, int threads = 1);

}  // namespace ffg
