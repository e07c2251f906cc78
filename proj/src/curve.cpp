#include "ffgenus/curve.hpp"

#include <algorithm>
#include <optional>

#include "ffgenus/factor.hpp"
#include "ffgenus/kernels.hpp"

namespace ffg {

DefiningPoly::DefiningPoly(BiPoly f) : f_(std::move(f)) {
  if (f_.is_zero() || !f_.is_monic()) throw std::invalid_argument("defining polynomial must be monic in x");
  if (f_.degree() < 2) throw std::invalid_argument("defining polynomial must have degree >= 2 in x");
}

DefiningPoly DefiningPoly::parse(std::string_view text, const FieldPtr& field) {
  return DefiningPoly(parse_bipoly(text, field));
}

int compute_Cf(const DefiningPoly& f) {
  int cf = 0;
  for (int i = 1; i <= f.n(); ++i) {
    const int d = f.a(i).degree();
    if (d < 0) continue;
    cf = std::max(cf, (d + i - 1) / i);
  }
  return cf;
}

DefiningPoly to_infinity(const DefiningPoly& f, int Cf) {
  const int n = f.n();
  const auto& field = f.field();
  std::vector<Poly> c(static_cast<std::size_t>(n) + 1, Poly(field));
  c[n] = Poly::constant(field, 1);
  for (int i = 1; i <= n; ++i) {
    const Poly ai = f.a(i);
    if (ai.is_zero()) continue;
    const int shift = i * Cf - ai.degree();
    if (shift < 0) throw std::logic_error("to_infinity: coefficient not integral at infinity");
    c[n - i] = ai.reverse(ai.degree()).shift_up(static_cast<std::size_t>(shift));
  }
  return DefiningPoly(BiPoly(field, std::move(c)));
}

Extension point_field(const FieldPtr& k, u64 count) {
  const u64 q = k->size();
  int s = 1;
  for (u64 size = q; size < count; ++s) {
    if (size > kMaxFieldSize / q) throw std::overflow_error("too many evaluation points");
    size *= q;
  }
  if (s == 1) return Extension::make(k, Poly::var(k));
  std::vector<u64> c(static_cast<std::size_t>(s) + 1, 0);
  c[s] = 1;
  for (u64 enc = 1;; ++enc) {
    u64 e = enc;
    for (int i = 0; i < s; ++i) {
      c[i] = e % q;
      e /= q;
    }
    Poly psi(k, c);
    if (psi[0] != 0 && is_irreducible(psi)) return Extension::make(k, psi);
  }
}

namespace {

std::vector<Poly> embedded_coeffs(const DefiningPoly& f, const Extension& ext) {
  std::vector<Poly> out;
  out.reserve(f.poly().coeffs().size());
  for (const auto& c : f.poly().coeffs()) out.push_back(ext.embed(c));
  return out;
}

}  // namespace

Poly discriminant_bounded(const DefiningPoly& f, int degree_bound, int threads) {
  const auto& k = f.field();
  const u64 count = static_cast<u64>(degree_bound) + 1;
  Extension ext = point_field(k, count);
  const auto& E = *ext.target();
  std::vector<u64> points(count);
  for (u64 i = 0; i < count; ++i) points[i] = i;
  const auto coeffs = embedded_coeffs(f, ext);
  std::vector<u64> values, interp;
  if (threads > 1) {
    values = kernels::disc_values_omp(coeffs, points, threads);
    interp = kernels::interpolate_omp(E, points, values, threads);
  } else {
    values = kernels::disc_values_serial(coeffs, points);
    interp = kernels::interpolate_serial(E, points, values);
  }
  std::vector<u64> out(interp.size());
  for (std::size_t i = 0; i < interp.size(); ++i) {
    const auto c = ext.coords(interp[i]);
    for (std::size_t j = 1; j < c.size(); ++j)
      if (c[j] != 0) throw std::logic_error("discriminant coefficient outside the base field");
    out[i] = c[0];
  }
  return Poly(k, std::move(out));
}

Poly discriminant(const DefiningPoly& f, int threads) {
  const int n = f.n();
  return discriminant_bounded(f, compute_Cf(f) * n * (n - 1), threads);
}

int delta_infinity(const DefiningPoly& f, int Cf, int delta, int threads) {
  const int n = f.n();
  const int total = Cf * n * (n - 1);
  const Poly disc_inf = discriminant_bounded(to_infinity(f, Cf), total, threads);
  if (disc_inf.is_zero()) throw std::invalid_argument("f is inseparable: Disc(f_inf) = 0");
  const int delta_inf = valuation(disc_inf, Poly::var(f.field()));
  if (delta + delta_inf != total)
    throw std::logic_error("delta + delta_inf = " + std::to_string(delta + delta_inf) + " but Cf n(n-1) = " +
                           std::to_string(total));
  return delta_inf;
}

CurveProfile curve_profile(const DefiningPoly& f, int threads) {
  CurveProfile prof{compute_Cf(f), to_infinity(f, compute_Cf(f)), Poly(f.field()), 0, 0};
  const int n = f.n();
  prof.disc = discriminant_bounded(f, prof.Cf * n * (n - 1), threads);
  if (prof.disc.is_zero()) throw std::invalid_argument("f is inseparable in x: Disc(f) = 0");
  prof.delta = prof.disc.degree();
  prof.delta_inf = delta_infinity(f, prof.Cf, prof.delta, threads);
  return prof;
}

Validation validate(const DefiningPoly& f, int threads) {
  Validation v;
  if (discriminant(f, threads).is_zero()) throw std::invalid_argument("f is inseparable in x: Disc(f) = 0");
  const auto& k = f.field();
  const u64 q = k->size();
  constexpr u64 kAttempts = 8;
  const u64 in_base = std::min(q, kAttempts);
  const Extension base = Extension::make(k, Poly::var(k));
  std::optional<Extension> quad;
  if (in_base < kAttempts) quad = point_field(k, q * q);
  for (u64 i = 0; i < kAttempts && !v.irreducibility_proven; ++i) {
    const Extension& ext = i < in_base ? base : *quad;
    const u64 z = i < in_base ? i : q + (i - in_base);
    std::vector<u64> c;
    for (const auto& a : f.poly().coeffs()) c.push_back(ext.embed(a).eval(z));
    if (is_irreducible(Poly(ext.target(), std::move(c)))) {
      v.irreducibility_proven = true;
      v.witness = "t = " + ext.target()->to_string(z);
      if (ext.target() != k) v.witness += " in F_" + std::to_string(ext.target()->size());
    }
  }
  if (!v.irreducibility_proven) v.warnings.push_back("irreducibility unverified");
  return v;
}

}  // namespace ffg
