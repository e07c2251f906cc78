#pragma once

#include <random>
#include <utility>
#include <vector>

#include "ffgenus/poly.hpp"

namespace ffg {

inline constexpr u64 kDefaultSeed = 0x5eed5eedULL;

/// unit * prod factor^multiplicity with monic irreducible, pairwise distinct factors.
struct Factorization {
  u64 unit = 0;
  std::vector<std::pair<Poly, int>> factors;

  Poly expand(const FieldPtr& field) const;
};

/// Canonical order on monic polynomials: by degree, then by coefficients read
/// from the highest non-leading one downwards.
bool canonical_less(const Poly& a, const Poly& b);

/// Complete factorization over the coefficient field. The factor list is sorted
/// with canonical_less and the product is re-checked before returning.
Factorization factorize(const Poly& a, std::mt19937_64& rng);
Factorization factorize(const Poly& a, u64 seed = kDefaultSeed);

/// (g_i, i) with a = lc * prod g_i^i and each g_i squarefree; handles a' = 0.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a);

/// For squarefree monic g: pairs (product of all irreducible factors of degree d, d).
std::vector<std::pair<Poly, int>> distinct_degree_factorization(const Poly& g);

/// Splits g (product of distinct monic irreducibles of degree d) completely.
std::vector<Poly> equal_degree_factorization(const Poly& g, int d, std::mt19937_64& rng);

/// Distinct roots in the coefficient field, ascending by packed value.
std::vector<u64> roots(const Poly& a, std::mt19937_64& rng);

bool is_irreducible(const Poly& a);

/// Inverse of coefficient-wise Frobenius composed with x -> x^p: requires a' = 0.
Poly pth_root(const Poly& a);

/// Computes h -> h^q mod g, where q is the size of the coefficient field.
/// Uses the matrix of x^(q j) mod g when that is cheaper than repeated powering.
class FrobeniusMap {
 public:
  explicit FrobeniusMap(const Poly& modulus);
  Poly apply(const Poly& h) const;
  const Poly& modulus() const { return g_; }

 private:
  Poly g_;
  bool use_matrix_ = false;
  std::vector<std::vector<u64>> rows_;  // rows_[j] = x^(q j) mod g
};

}  // namespace ffg
