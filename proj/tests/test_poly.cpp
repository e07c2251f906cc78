#include <random>

#include "doctest.h"
#include "ffgenus/bipoly.hpp"
#include "ffgenus/factor.hpp"

using namespace ffg;

namespace {

Poly P(const FieldPtr& F, std::string_view s) { return parse_poly(s, F); }

Poly random_poly(const FieldPtr& F, int deg, std::mt19937_64& rng, bool monic) {
  std::vector<u64> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = F->random(rng);
  if (monic) c.back() = 1;
  else if (c.back() == 0) c.back() = 1;
  return Poly(F, std::move(c));
}

// Determinant by Gaussian elimination.
u64 det_mod(std::vector<std::vector<u64>> m, const Field& F) {
  const std::size_t n = m.size();
  u64 det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = F.neg(det);
    }
    det = F.mul(det, m[c][c]);
    const u64 inv = F.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const u64 f = F.mul(m[r][c], inv);
      for (std::size_t j = c; j < n; ++j) m[r][j] = F.sub(m[r][j], F.mul(f, m[c][j]));
    }
  }
  return det;
}

u64 sylvester_resultant(const Poly& a, const Poly& b) {
  const int da = a.degree(), db = b.degree();
  const std::size_t n = static_cast<std::size_t>(da + db);
  std::vector<std::vector<u64>> m(n, std::vector<u64>(n, 0));
  for (int i = 0; i < db; ++i)
    for (int j = 0; j <= da; ++j) m[i][i + j] = a[da - j];
  for (int i = 0; i < da; ++i)
    for (int j = 0; j <= db; ++j) m[db + i][i + j] = b[db - j];
  return det_mod(m, a.F());
}

bool brute_irreducible(const Poly& a) {
  // Trial division by every monic polynomial of degree <= deg/2.
  const auto& F = a.field();
  const u64 q = F->size();
  for (int d = 1; 2 * d <= a.degree(); ++d) {
    u64 count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (u64 enc = 0; enc < count; ++enc) {
      std::vector<u64> c(static_cast<std::size_t>(d) + 1, 0);
      u64 e = enc;
      for (int i = 0; i < d; ++i) {
        c[i] = e % q;
        e /= q;
      }
      c[d] = 1;
      if (rem(a, Poly(F, c)).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("poly basic examples") {
  auto F5 = Field::make(5), F3 = Field::make(3), F2 = Field::make(2);
  CHECK(gcd(P(F5, "t^2-1"), P(F5, "t-1")) == P(F5, "t+4"));
  CHECK(P(F3, "t^3").derivative().is_zero());
  auto [q, r] = divrem(P(F2, "t^3+1"), P(F2, "t+1"));
  CHECK(q == P(F2, "t^2+t+1"));
  CHECK(r.is_zero());
  CHECK(Poly(F5).degree() == -1);
  CHECK_THROWS_AS(divrem(P(F5, "t"), Poly(F5)), std::domain_error);
}

TEST_CASE("poly text round trip") {
  auto F7 = Field::make(7);
  Poly a = P(F7, "t^3 + 2*t + 1");
  CHECK(a.coeffs() == std::vector<u64>{1, 2, 0, 1});
  CHECK(a.to_string() == "t^3 + 2*t + 1");
  CHECK(P(F7, a.to_string()) == a);
  CHECK(P(F7, a.to_dense_string()) == a);
  CHECK(P(F7, "[1, 2, 0, 1]") == a);
  CHECK(P(F7, "-t") == P(F7, "6t"));
  CHECK_THROWS_AS(P(F7, "t^"), ParseError);
  CHECK_THROWS_AS(P(F7, "x+1"), ParseError);
}

TEST_CASE("karatsuba agrees with schoolbook") {
  std::mt19937_64 rng(5);
  for (auto F : {Field::make(13), Field::make(2, 3), Field::make(1000003)}) {
    for (int trial = 0; trial < 20; ++trial) {
      Poly a = random_poly(F, 40 + static_cast<int>(rng() % 200), rng, false);
      Poly b = random_poly(F, 40 + static_cast<int>(rng() % 200), rng, false);
      std::vector<u64> naive(a.coeffs().size() + b.coeffs().size() - 1, 0);
      for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
          naive[i + j] = F->add(naive[i + j], F->mul(a[i], b[j]));
      CHECK((a * b).coeffs() == naive);
    }
  }
}

TEST_CASE("resultant examples") {
  auto F5 = Field::make(5), F7 = Field::make(7);
  CHECK(resultant(P(F5, "t-3"), P(F5, "t-1")) == F5->sub(3, 1));
  CHECK(resultant(P(F5, "t^2+1"), P(F5, "t-2")) == 0);
  Poly a = P(F7, "t^2-2"), b = P(F7, "t^2-3");
  CHECK(resultant(a, b) == sylvester_resultant(a, b));
  CHECK(resultant(a, b) == 1);
}

TEST_CASE("resultant properties") {
  std::mt19937_64 rng(17);
  for (auto F : {Field::make(5), Field::make(13), Field::make(3, 2)}) {
    for (int trial = 0; trial < 40; ++trial) {
      Poly a = random_poly(F, 1 + static_cast<int>(rng() % 6), rng, true);
      Poly b = random_poly(F, 1 + static_cast<int>(rng() % 6), rng, true);
      Poly c = random_poly(F, 1 + static_cast<int>(rng() % 6), rng, true);
      const u64 rab = resultant(a, b), rba = resultant(b, a);
      CHECK(rab == ((a.degree() * b.degree()) % 2 ? F->neg(rba) : rba));
      CHECK(resultant(a, b * c) == F->mul(rab, resultant(a, c)));
      if (F->is_prime_field()) CHECK(rab == sylvester_resultant(a, b));
    }
  }
}

TEST_CASE("factorization examples") {
  auto F13 = Field::make(13), F3 = Field::make(3), F7 = Field::make(7), F5 = Field::make(5);
  auto fac = factorize(P(F13, "t^2+1"));
  REQUIRE(fac.factors.size() == 2);
  CHECK(fac.factors[0].first == P(F13, "t+5"));
  CHECK(fac.factors[1].first == P(F13, "t+8"));
  CHECK(is_irreducible(P(F3, "t^2+1")));
  auto cube = factorize(P(F3, "t^3"));
  REQUIRE(cube.factors.size() == 1);
  CHECK(cube.factors[0].second == 3);
  CHECK(is_irreducible(P(F5, "t")));
  // 3^2 = 2 in F_7, so t^2-2 splits; t^2-3 is the irreducible one.
  CHECK(is_irreducible(P(F7, "t^2-2")) == brute_irreducible(P(F7, "t^2-2")));
  CHECK_FALSE(is_irreducible(P(F7, "t^2-2")));
  CHECK(is_irreducible(P(F7, "t^2-3")));
  CHECK_FALSE(is_irreducible(P(F5, "(t+1)^2")));
  CHECK_THROWS_AS(factorize(Poly(F5)), std::invalid_argument);
  CHECK_THROWS_AS(is_irreducible(P(F5, "3")), std::invalid_argument);
}

TEST_CASE("factorization of p-th powers and mixed multiplicities") {
  auto F3 = Field::make(3), F2 = Field::make(2, 2);
  Poly a = P(F3, "(t^2+1)^3 * (t+1)^4 * (t+2)^9 * t");
  auto fac = factorize(a);
  CHECK(fac.expand(F3) == a);
  CHECK(fac.factors.size() == 4);
  Poly b = pow(P(F2, "t^3+t+1"), 4) * pow(P(F2, "t + a"), 2) * P(F2, "t^2+t+a");
  auto fb = factorize(b);
  CHECK(fb.expand(F2) == b);
  for (const auto& [g, e] : fb.factors) CHECK(brute_irreducible(g));
}

TEST_CASE("random factorizations") {
  std::mt19937_64 rng(23);
  for (auto F : {Field::make(2), Field::make(3), Field::make(13)}) {
    for (int trial = 0; trial < 500; ++trial) {
      Poly a = random_poly(F, 1 + static_cast<int>(rng() % 30), rng, false);
      auto fac = factorize(a, rng);
      CHECK(fac.expand(F) == a);
      int total = 0;
      for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        const auto& [g, e] = fac.factors[i];
        CHECK(is_irreducible(g));
        CHECK(g.lc() == 1);
        total += e * g.degree();
        if (i) CHECK(canonical_less(fac.factors[i - 1].first, g));
      }
      CHECK(total == a.degree());
      // gcd(a, a') holds g^(e-1), or g^e when p divides e.
      const Poly ga = gcd(a, a.derivative());
      const int p = static_cast<int>(F->characteristic());
      for (const auto& [g, e] : fac.factors) CHECK(valuation(ga, g) == (e % p ? e - 1 : e));
    }
  }
}

TEST_CASE("factorization is deterministic for a seed") {
  auto F = Field::make(101);
  Poly a = P(F, "(t^4+3)(t^6+t+7)(t^2+5)^2(t^9+2t+1)");
  auto f1 = factorize(a, 99), f2 = factorize(a, 99), f3 = factorize(a, 7);
  REQUIRE(f1.factors.size() == f2.factors.size());
  for (std::size_t i = 0; i < f1.factors.size(); ++i) CHECK(f1.factors[i].first == f3.factors[i].first);
}

TEST_CASE("roots") {
  auto F13 = Field::make(13);
  std::mt19937_64 rng(1);
  CHECK(roots(P(F13, "t^2+1"), rng) == std::vector<u64>{5, 8});
  CHECK(roots(P(F13, "t^3-t"), rng) == std::vector<u64>{0, 1, 12});
}

TEST_CASE("bivariate parsing and arithmetic") {
  auto F5 = Field::make(5);
  BiPoly f = parse_bipoly("x^2 - t^3", F5);
  CHECK(f.degree() == 2);
  CHECK(f[0] == P(F5, "-t^3"));
  CHECK(f.is_monic());
  BiPoly g = parse_bipoly("(x+t)(x-t)", F5);
  CHECK(g == parse_bipoly("x^2 - t^2", F5));
  CHECK(parse_bipoly("x^5 + (t^3+2)*x + t^7", F5).degree() == 5);
  BiPoly phi = parse_bipoly("x^2+t*x+1", F5);
  BiPoly a = parse_bipoly("x^7 + t^2 x^3 + 4", F5);
  auto [q, r] = divrem_monic(a, phi);
  CHECK(q * phi + r == a);
  CHECK(r.degree() < 2);
  try {
    parse_bipoly("x^2 + y", F5);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column == 7);
  }
  CHECK_THROWS_AS(parse_bipoly("(x+1", F5), ParseError);
}
