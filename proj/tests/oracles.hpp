#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

#include "ffgenus/lattice.hpp"

namespace ffg::oracle {

Poly random_poly(const FieldPtr& F, std::mt19937_64& rng, int max_deg) {
  std::vector<u64> c(static_cast<std::size_t>(max_deg) + 1);
  for (auto& x : c) x = F->random(rng);
  return Poly(F, c);
}

/// Every polynomial of degree <= d over a prime field.
std::vector<Poly> all_polys(const FieldPtr& F, int d) {
  const u64 q = F->size();
  std::vector<Poly> out;
  u64 total = 1;
  for (int i = 0; i <= d; ++i) total *= q;
  for (u64 n = 0; n < total; ++n) {
    std::vector<u64> c;
    for (u64 m = n, i = 0; i <= static_cast<u64>(d); ++i, m /= q) c.push_back(m % q);
    out.emplace_back(F, c);
  }
  return out;
}

/// Definition of reducedness over all combinations with coefficients in `pool`.
bool reduced_by_definition(const Basis& B, const WeightedNorm& N, const std::vector<Poly>& pool) {
  const std::size_t m = B.size();
  std::vector<std::size_t> idx(m, 0);
  for (;;) {
    Vec sum(N.dim(), RationalFunc(B[0][0].field()));
    std::optional<Q> termwise;
    for (std::size_t i = 0; i < m; ++i) {
      const RationalFunc a(pool[idx[i]]);
      if (a.is_zero()) continue;
      Vec term;
      for (std::size_t j = 0; j < N.dim(); ++j) term.push_back(a * B[i][j]);
      for (std::size_t j = 0; j < N.dim(); ++j) sum[j] = sum[j] + term[j];
      const Q l = *norm_eval(N, term);
      if (!termwise || l > *termwise) termwise = l;
    }
    if (termwise && norm_eval(N, sum) != termwise) return false;
    std::size_t k = 0;
    while (k < m && ++idx[k] == pool.size()) idx[k++] = 0;
    if (k == m) return true;
  }
}

/// Lattice points (i, j) with first_x < i < last_x, j >= 1 and j <= H(i), where H is the lower
/// hull of the points (x, y), evaluated as the minimum over chords between point pairs.
inline i64 hull_points(const std::vector<std::pair<i64, i64>>& pts) {
  const i64 x0 = pts.front().first, x1 = pts.back().first;
  i64 total = 0;
  for (i64 i = x0 + 1; i < x1; ++i) {
    // H(i) = min over a <= i <= b of the chord value, as a fraction num/den
    i64 best_num = 0, best_den = 0;
    for (const auto& [ax, ay] : pts)
      for (const auto& [bx, by] : pts) {
        if (ax > i || bx < i || (ax == bx && ax != i)) continue;
        i64 num, den;
        if (ax == bx) {
          num = std::min(ay, by);
          den = 1;
        } else {
          num = ay * (bx - ax) + (i - ax) * (by - ay);
          den = bx - ax;
        }
        if (best_den == 0 || num * best_den < best_num * den) best_num = num, best_den = den;
      }
    const i64 floor_h = best_num >= 0 ? best_num / best_den : -((-best_num + best_den - 1) / best_den);
    if (floor_h >= 1) total += floor_h;
  }
  return total;
}

}  // namespace ffg::oracle
