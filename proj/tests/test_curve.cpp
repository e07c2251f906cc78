#include <random>

#include "doctest.h"
#include "ffgenus/curve.hpp"
#include "ffgenus/kernels.hpp"

using namespace ffg;

namespace {

DefiningPoly D(const FieldPtr& F, std::string_view s) { return DefiningPoly::parse(s, F); }

// Laplace expansion along the first row; matrices here are at most 7x7.
Poly det_laplace(const std::vector<std::vector<Poly>>& m) {
  const std::size_t n = m.size();
  const auto& field = m[0][0].field();
  if (n == 1) return m[0][0];
  Poly acc(field);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][col] * det_laplace(minor);
    acc = col % 2 ? acc - term : acc + term;
  }
  return acc;
}

// Sylvester determinant of f and f_x (formal degree n-1) over k[t], with the discriminant sign.
Poly disc_sylvester(const DefiningPoly& f) {
  const int n = f.n();
  const auto& field = f.field();
  const BiPoly df = f.poly().derivative_x();
  const std::size_t size = static_cast<std::size_t>(2 * n - 1);
  std::vector<std::vector<Poly>> m(size, std::vector<Poly>(size, Poly(field)));
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j <= n; ++j) m[i][i + j] = f.poly()[n - j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= n - 1; ++j) m[n - 1 + i][i + j] = df[n - 1 - j];
  Poly det = det_laplace(m);
  return (n * (n - 1) / 2) % 2 ? -det : det;
}

DefiningPoly random_defining(const FieldPtr& F, int n, int max_deg, std::mt19937_64& rng) {
  std::vector<Poly> c;
  for (int i = 0; i < n; ++i) {
    const int d = static_cast<int>(rng() % (max_deg + 1));
    std::vector<u64> v(static_cast<std::size_t>(d) + 1);
    for (auto& x : v) x = F->random(rng);
    c.emplace_back(F, std::move(v));
  }
  c.push_back(Poly::constant(F, 1));
  return DefiningPoly(BiPoly(F, std::move(c)));
}

}  // namespace

TEST_CASE("Cf examples") {
  auto F5 = Field::make(5), F3 = Field::make(3);
  CHECK(compute_Cf(D(F5, "x^2 - t^3")) == 2);
  CHECK(compute_Cf(D(F3, "x^41 - (t^2+1)(x^2-1) - (t^8+2t^6+1)x")) == 1);
  CHECK(compute_Cf(D(F5, "x^4 + 3")) == 0);
}

TEST_CASE("to_infinity examples") {
  auto F5 = Field::make(5);
  CHECK(to_infinity(D(F5, "x^2 - t^3"), 2).poly() == parse_bipoly("x^2 - t", F5));
  CHECK(to_infinity(D(F5, "x^2 - t"), 1).poly() == parse_bipoly("x^2 - t", F5));
  CHECK(to_infinity(D(F5, "x^3 + 2"), 0).poly() == parse_bipoly("x^3 + 2", F5));
  // f_inf(u, x) = u^(n Cf) f(1/u, x/u^Cf), checked on coefficients.
  auto f = D(F5, "x^3 + (t^2+1)x + t^4 + t");
  auto finf = to_infinity(f, compute_Cf(f));
  CHECK(finf.poly() == parse_bipoly("x^3 + (t^2 + t^4)x + t^2 + t^5", F5));
}

TEST_CASE("discriminant examples") {
  auto F5 = Field::make(5), F37 = Field::make(37), F13 = Field::make(13);
  Poly d = discriminant(D(F5, "x^2 - t^3"));
  CHECK(d == parse_poly("4t^3", F5));
  auto ex1 = D(F37, "(x + t^10+t^9+t^8+t^7+t^6+t^5+t^4+t^3+t^2+t+1)^5 + t^7");
  auto p1 = curve_profile(ex1);
  CHECK(p1.Cf == 10);
  CHECK(p1.delta == 28);
  CHECK(p1.delta_inf == 172);
  auto p6 = curve_profile(D(F13, "(x^2+t)^2 + (t-1)t^3 x"));
  CHECK(p6.delta == 16);
  CHECK(p6.delta_inf == 8);
  CHECK(curve_profile(D(F5, "x^2 - t^3")).delta_inf == 1);
  auto F3 = Field::make(3);
  auto p7 = curve_profile(D(F3, "x^41 - (t^2+1)(x^2-1) - (t^8+2t^6+1)x"));
  CHECK(p7.delta == 328);
  CHECK(p7.delta_inf == 1312);
}

TEST_CASE("interpolated discriminant matches the Sylvester determinant") {
  std::mt19937_64 rng(3);
  for (auto F : {Field::make(2), Field::make(3), Field::make(5), Field::make(2, 2)}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto f = random_defining(F, 2 + static_cast<int>(rng() % 3), 5, rng);
      CHECK(discriminant(f) == disc_sylvester(f));
    }
  }
}

TEST_CASE("delta + delta_inf = Cf n(n-1) on random inputs") {
  std::mt19937_64 rng(8);
  int checked = 0;
  for (auto F : {Field::make(5), Field::make(13)}) {
    while (checked < (F->size() == 5 ? 50 : 100)) {
      auto f = random_defining(F, 2 + static_cast<int>(rng() % 7), 10, rng);
      if (discriminant(f).is_zero()) continue;
      auto prof = curve_profile(f);
      CHECK(prof.delta + prof.delta_inf == prof.Cf * f.n() * (f.n() - 1));
      ++checked;
    }
  }
}

TEST_CASE("validation") {
  auto F5 = Field::make(5);
  auto v = validate(D(F5, "x^2 - t"));
  CHECK(v.irreducibility_proven);
  CHECK(v.witness == "t = 2");
  auto w = validate(D(F5, "x^2 - t^2"));
  CHECK_FALSE(w.irreducibility_proven);
  CHECK(w.warnings.size() == 1);
  CHECK_THROWS_AS(validate(D(F5, "x^2 + 2x + 1")), std::invalid_argument);
  CHECK_THROWS_AS(D(F5, "2x^2 + t"), std::invalid_argument);
}

TEST_CASE("parallel kernels agree with serial ones") {
  auto F = Field::make(13, 3);
  std::mt19937_64 rng(4);
  std::vector<u64> pts(300), vals(300);
  for (u64 i = 0; i < 300; ++i) {
    pts[i] = i;
    vals[i] = F->random(rng);
  }
  auto a = kernels::interpolate_serial(*F, pts, vals);
  auto b = kernels::interpolate_omp(*F, pts, vals, 3);
  CHECK(a == b);
  Poly pa(F, a);
  for (u64 i = 0; i < 300; ++i) CHECK(pa.eval(pts[i]) == vals[i]);
  auto f = D(Field::make(13), "(x^2+t)^2 + (t-1)t^3 x");
  CHECK(discriminant(f, 1) == discriminant(f, 4));
}
