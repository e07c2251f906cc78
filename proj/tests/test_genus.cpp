#include <random>

#include "doctest.h"
#include "ffgenus/factor.hpp"
#include "ffgenus/genus.hpp"

using namespace ffg;

namespace {

GenusInput G(const FieldPtr& F, std::string_view s, int cd = 1) { return GenusInput{DefiningPoly::parse(s, F), cd}; }

Poly random_poly(const FieldPtr& F, int deg, std::mt19937_64& rng) {
  std::vector<u64> c(static_cast<std::size_t>(deg) + 1);
  for (auto& x : c) x = F->random(rng);
  while (c.back() == 0) c.back() = F->random(rng);
  return Poly(F, std::move(c));
}

DefiningPoly random_defining(const FieldPtr& F, int n, int max_deg, std::mt19937_64& rng) {
  std::vector<Poly> c;
  for (int i = 0; i < n; ++i) c.push_back(random_poly(F, static_cast<int>(rng() % (max_deg + 1)), rng));
  c.push_back(Poly::constant(F, 1));
  return DefiningPoly(BiPoly(F, std::move(c)));
}

// f(t + c, x)
DefiningPoly shift_t(const DefiningPoly& f, u64 c) {
  std::vector<Poly> co;
  for (const auto& a : f.poly().coeffs()) co.push_back(a.taylor_shift(c));
  return DefiningPoly(BiPoly(f.field(), std::move(co)));
}

}  // namespace

TEST_CASE("genus examples") {
  auto F5 = Field::make(5), F13 = Field::make(13), F97 = Field::make(97);
  auto r = genus_compute(G(F5, "x^2 - t^3"));
  CHECK(r.g == 0);
  CHECK(r.Cf == 2);
  CHECK(r.finite_index == 1);
  CHECK(r.ind_inf == 0);
  CHECK(genus_compute(G(F13, "(x^2+t)^2 + (t-1)t^3 x")).g == 3);
  CHECK(genus_compute(G(F97, "x^41 - (t^2+1)(x^2-1) - (t^8+2t^6+1)x")).g == 140);
  CHECK(genus_compute(G(Field::make(3), "x^41 - (t^2+1)(x^2-1) - (t^8+2t^6+1)x")).g == 138);
}

TEST_CASE("index breakdown") {
  auto F5 = Field::make(5);
  auto r = index_breakdown(G(F5, "x^2 - t"));
  REQUIRE(r.primes.size() == 1);
  CHECK(r.primes[0].p == Poly::var(F5));
  CHECK(r.primes[0].delta_p == 1);
  CHECK(r.primes[0].ind_p == 0);
  CHECK(r.finite_index == 0);
  auto c = genus_compute(G(F5, "x^2 - 2t^2", 2));
  CHECK(c.finite_index == 1);
  CHECK(c.ind_inf == 0);
  CHECK(c.g == 0);
  CHECK_THROWS_WITH_AS(genus_compute(G(F5, "x^2 - 2t^2")), doctest::Contains("constant field"), std::runtime_error);
}

TEST_CASE("hyperelliptic oracle") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (auto F : {Field::make(5), Field::make(13)}) {
    for (int trial = 0; checked < (F->size() == 5 ? 10 : 20); ++trial) {
      const int deg = 3 + static_cast<int>(rng() % 7);
      const Poly D = random_poly(F, deg, rng);
      // genus of y^2 = D depends on the odd-multiplicity part
      int odd_deg = 0;
      for (const auto& [p, m] : factorize(D).factors)
        if (m % 2) odd_deg += p.degree();
      if (odd_deg == 0) continue;
      std::vector<Poly> co = {-D, Poly(F), Poly::constant(F, 1)};
      const auto r = genus_compute(GenusInput{DefiningPoly(BiPoly(F, co))});
      CHECK(r.g == (odd_deg - 1) / 2);
      ++checked;
    }
  }
}

TEST_CASE("random instances: guard, bounds and invariance under t -> t + c") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (auto F : {Field::make(5), Field::make(7), Field::make(13)}) {
    for (int trial = 0; trial < 60 && checked < 50; ++trial) {
      const auto f = random_defining(F, 2 + static_cast<int>(rng() % 3), 6, rng);
      if (discriminant(f).is_zero() || !validate(f).irreducibility_proven) continue;
      const GenusReport r = genus_compute(GenusInput{f});
      i64 fi = 0;
      for (const auto& e : r.primes) {
        CHECK(0 <= 2 * e.ind_p);
        CHECK(2 * e.ind_p <= e.delta_p);
        fi += e.deg * e.ind_p;
        if (e.delta_p <= 1) CHECK(montes_ind(f, PrimeLocal::make(e.p)).ind == 0);
      }
      CHECK(fi == r.finite_index);
      CHECK(2 * r.ind_inf <= r.delta_inf);
      const u64 c = F->random(rng);
      CHECK(genus_compute(GenusInput{shift_t(f, c)}).g == r.g);
      ++checked;
    }
  }
  CHECK(checked == 50);
}

TEST_CASE("threads do not change the report") {
  auto F13 = Field::make(13);
  const auto in1 = G(F13, "((x^2+t)^2 + (t-1)t^3 x)^3 + t^11");
  auto in3 = in1;
  in3.threads = 3;
  const auto a = genus_compute(in1), b = genus_compute(in3);
  CHECK(a.g == b.g);
  CHECK(a.g == 9);
  REQUIRE(a.primes.size() == b.primes.size());
  for (std::size_t i = 0; i < a.primes.size(); ++i) {
    CHECK(a.primes[i].p == b.primes[i].p);
    CHECK(a.primes[i].ind_p == b.primes[i].ind_p);
  }
}
