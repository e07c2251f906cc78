#pragma once

#include <span>
#include <vector>

#include "ffgenus/poly.hpp"

namespace ffg {

/// base[y]/(psi) realised as a flat field over F_p, with an explicit embedding
/// of base and a designated root of psi.
class Extension {
 public:
  /// psi must be irreducible over base. Degree-one psi gives the identity
  /// embedding with root -psi_0/psi_1.
  static Extension make(const FieldPtr& base, const Poly& psi);

  const FieldPtr& base() const { return base_; }
  const FieldPtr& target() const { return target_; }
  int degree() const { return d_; }
  u64 root() const { return root_; }

  u64 embed(u64 a) const;
  Poly embed(const Poly& a) const;

  /// c with e = sum_j c_j root^j, c_j in base, j < degree().
  std::vector<u64> coords(u64 e) const;
  u64 from_coords(std::span<const u64> c) const;

 private:
  FieldPtr base_, target_;
  int d_ = 1;
  u64 root_ = 0;
  u64 gamma_ = 0;  // image of the base generator
  std::vector<u64> table_;
  std::vector<std::vector<u64>> inverse_;  // F_p matrix: target digits -> basis coordinates
};

}  // namespace ffg
