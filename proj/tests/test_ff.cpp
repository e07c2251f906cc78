#include <random>

#include "doctest.h"
#include "ffgenus/ext.hpp"
#include "ffgenus/factor.hpp"
#include "ffgenus/ff.hpp"

using namespace ffg;

namespace {

// Cubic over F_p is irreducible iff it has no root in F_p.
bool cubic_has_root(u64 c0, u64 c1, u64 c2, u64 p) {
  for (u64 y = 0; y < p; ++y)
    if ((y * y % p * y + c2 * y % p * y + c1 * y + c0) % p == 0) return true;
  return false;
}

void check_axioms(const FieldPtr& F, int trials, u64 seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    const FFElem a = FFElem::random(F, rng), b = FFElem::random(F, rng), c = FFElem::random(F, rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == FFElem(F, 0));
    if (!a.is_zero()) CHECK(a * a.inv() == FFElem(F, 1));
    CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
    CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    FFElem f = a;
    for (int k = 0; k < F->degree(); ++k) f = f.frobenius();
    CHECK(f == a);
  }
}

}  // namespace

TEST_CASE("prime field examples") {
  auto F13 = Field::make(13);
  CHECK(F13->inv(5) == 8);
  CHECK(F13->pow(2, 12) == 1);
  CHECK(F13->size() == 13);
  CHECK_THROWS_AS(F13->inv(0), std::domain_error);
  CHECK_THROWS_AS(Field::make(15), std::invalid_argument);
}

TEST_CASE("F4 with explicit modulus") {
  auto F4 = Field::make(2, 2, std::vector<u64>{1, 1, 1});
  const u64 y = F4->generator();
  CHECK(F4->mul(y, F4->add(y, 1)) == 1);
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<u64>{1, 0, 1}), std::invalid_argument);
}

TEST_CASE("F125 default modulus is the lex-first irreducible cubic") {
  u64 enc = 0;
  for (;; ++enc) {
    const u64 c0 = enc % 5, c1 = enc / 5 % 5, c2 = enc / 25;
    if (c0 != 0 && !cubic_has_root(c0, c1, c2, 5)) break;
  }
  auto F = Field::make(5, 3);
  const auto& mod = F->modulus();
  CHECK(mod[0] + 5 * mod[1] + 25 * mod[2] == enc);
  CHECK(mod[3] == 1);
  CHECK(F->size() == 125);
}

TEST_CASE("interning and mismatch") {
  CHECK(Field::make(7) == Field::make(7));
  FFElem a(Field::make(7), 3), b(Field::make(11), 3);
  CHECK_THROWS_AS(a + b, FieldMismatch);
}

TEST_CASE("field size limit") {
  CHECK_THROWS_AS(Field::make(2, 62), std::overflow_error);
  CHECK_NOTHROW(Field::make(2, 61));
}

TEST_CASE("field axioms") {
  check_axioms(Field::make(13), 1000, 1);
  check_axioms(Field::make(2, 4), 1000, 2);
  check_axioms(Field::make(3, 5), 1000, 3);
  check_axioms(Field::make(5, 3), 1000, 4);
  check_axioms(Field::make(101, 6), 1000, 5);
  check_axioms(Field::make((u64{1} << 61) - 1), 1000, 6);
  check_axioms(Field::make(2, 40), 200, 7);
}

TEST_CASE("residue extension: F3 by y^2+1") {
  auto F3 = Field::make(3);
  auto ext = Extension::make(F3, Poly(F3, {1, 0, 1}));
  const auto& T = *ext.target();
  CHECK(T.size() == 9);
  const u64 r = ext.root();
  CHECK(T.mul(r, r) == T.neg(1));
}

TEST_CASE("residue extension: degree one is the identity") {
  auto F5 = Field::make(5);
  auto ext = Extension::make(F5, Poly(F5, {3, 1}));
  CHECK(ext.target() == F5);
  CHECK(ext.root() == 2);
  for (u64 a = 0; a < 5; ++a) CHECK(ext.embed(a) == a);
}

TEST_CASE("residue extension: F4 by y^2+y+g is a homomorphism") {
  auto F4 = Field::make(2, 2);
  const u64 g = F4->generator();
  auto ext = Extension::make(F4, Poly(F4, {g, 1, 1}));
  const auto& T = *ext.target();
  CHECK(T.size() == 16);
  for (u64 a = 0; a < 4; ++a)
    for (u64 b = 0; b < 4; ++b) {
      CHECK(ext.embed(F4->add(a, b)) == T.add(ext.embed(a), ext.embed(b)));
      CHECK(ext.embed(F4->mul(a, b)) == T.mul(ext.embed(a), ext.embed(b)));
    }
  const u64 r = ext.root();
  CHECK(T.add(T.add(T.mul(r, r), r), ext.embed(g)) == 0);
  for (u64 e = 0; e < 16; ++e) {
    const auto c = ext.coords(e);
    CHECK(ext.from_coords(c) == e);
  }
}

TEST_CASE("residue extension rejects reducible psi") {
  auto F5 = Field::make(5);
  CHECK_THROWS_AS(Extension::make(F5, Poly(F5, {4, 0, 1})), std::invalid_argument);
}

TEST_CASE("residue extension: random pairs over a larger tower") {
  auto F = Field::make(7, 2);
  std::mt19937_64 rng(11);
  Poly psi(F);
  for (u64 c = 1; c < F->size(); ++c) {
    psi = Poly(F, {c, F->generator(), 0, 1});
    if (is_irreducible(psi)) break;
  }
  REQUIRE(is_irreducible(psi));
  auto ext = Extension::make(F, psi);
  const auto& T = *ext.target();
  CHECK(ext.embed(psi).eval(ext.root()) == 0);
  for (int i = 0; i < 500; ++i) {
    const u64 x = F->random(rng), y = F->random(rng);
    CHECK(ext.embed(F->mul(x, y)) == T.mul(ext.embed(x), ext.embed(y)));
    CHECK(ext.embed(F->add(x, y)) == T.add(ext.embed(x), ext.embed(y)));
    const u64 e = T.random(rng);
    CHECK(ext.from_coords(ext.coords(e)) == e);
  }
}
