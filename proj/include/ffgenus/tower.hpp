#pragma once

#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ffgenus/ff.hpp"

namespace ffg {

/// Coordinates over k in the monomial basis of the successive generators.
using Elem = std::vector<u64>;
/// Polynomial over a tower field, lowest coefficient first, no trailing zeros.
using TPoly = std::vector<Elem>;

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// Finite field F_r = F_{r-1}[z_r]/(psi_r) over a base field k, with no size limit.
/// Element j * parent.dim() + i is coordinate i of the coefficient of z_r^j.
class Tower {
 public:
  static TowerPtr base(FieldPtr k);
  /// psi monic irreducible over parent, degree >= 2.
  static TowerPtr extend(const TowerPtr& parent, TPoly psi);

  const FieldPtr& k() const { return k_; }
  const TowerPtr& parent() const { return parent_; }
  int level() const { return level_; }
  int dim() const { return dim_; }
  int step() const { return static_cast<int>(psi_.size()) - 1; }
  const TPoly& modulus() const { return psi_; }
  u64 characteristic() const { return k_->characteristic(); }
  /// [F : F_p]
  int prime_degree() const { return dim_ * k_->degree(); }

  Elem zero() const { return Elem(static_cast<std::size_t>(dim_), 0); }
  Elem one() const { return from_k(1); }
  Elem from_k(u64 c) const;
  /// Class of z_r.
  Elem generator() const;
  bool is_zero(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, u64 e) const;
  Elem pow_signed(const Elem& a, i64 e) const;
  Elem frobenius(const Elem& a) const { return pow(a, characteristic()); }
  Elem pth_root(const Elem& a) const;
  Elem random(std::mt19937_64& rng) const;

  Elem embed(const Elem& parent_elem) const;
  std::vector<Elem> coords(const Elem& a) const;
  Elem from_coords(const std::vector<Elem>& c) const;

  std::string to_string(const Elem& a) const;

 private:
  Tower() = default;
  FieldPtr k_;
  TowerPtr parent_;
  TPoly psi_;
  int level_ = 0;
  int dim_ = 1;
};

/// base -> target with a root of psi; target == base when deg psi == 1.
struct TowerExt {
  TowerPtr base, target;
  Elem root;

  static TowerExt make(const TowerPtr& base, const TPoly& psi);
  bool trivial() const { return base == target; }
  int degree() const { return trivial() ? 1 : target->step(); }
  Elem embed(const Elem& a) const { return trivial() ? a : target->embed(a); }
  std::vector<Elem> coords(const Elem& a) const { return trivial() ? std::vector<Elem>{a} : target->coords(a); }
};

namespace tpoly {

void trim(const Tower& K, TPoly& a);
inline int degree(const TPoly& a) { return static_cast<int>(a.size()) - 1; }
TPoly from_k(const Tower& K, const std::vector<u64>& c);
TPoly add(const Tower& K, const TPoly& a, const TPoly& b);
TPoly sub(const Tower& K, const TPoly& a, const TPoly& b);
TPoly mul(const Tower& K, const TPoly& a, const TPoly& b);
TPoly scale(const Tower& K, const TPoly& a, const Elem& c);
TPoly monic(const Tower& K, const TPoly& a);
TPoly derivative(const Tower& K, const TPoly& a);
std::pair<TPoly, TPoly> divrem(const Tower& K, const TPoly& a, const TPoly& b);
TPoly rem(const Tower& K, const TPoly& a, const TPoly& b);
TPoly gcd(const Tower& K, const TPoly& a, const TPoly& b);
/// s with s*a = gcd(a, m) mod m.
TPoly inverse_mod(const Tower& K, const TPoly& a, const TPoly& m);
TPoly mulmod(const Tower& K, const TPoly& a, const TPoly& b, const TPoly& m);
TPoly powmod(const Tower& K, const TPoly& a, u64 e, const TPoly& m);
Elem eval(const Tower& K, const TPoly& a, const Elem& x);
std::string to_string(const Tower& K, const TPoly& a, char var = 'y');

bool less(const TPoly& a, const TPoly& b);

/// Monic irreducible factors with multiplicities of a nonzero polynomial, sorted by `less`.
std::vector<std::pair<TPoly, int>> factorize(const Tower& K, const TPoly& a, u64 seed);

bool is_irreducible(const Tower& K, const TPoly& a);

}  // namespace tpoly

}  // namespace ffg
