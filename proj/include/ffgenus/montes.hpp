#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffgenus/curve.hpp"
#include "ffgenus/tower.hpp"

namespace ffg {

inline constexpr i64 kInfinity = std::numeric_limits<i64>::max() / 4;

/// A prime p of k[t] (or the prime u of k[u] at infinity) with residue field k[t]/(p).
struct PrimeLocal {
  Poly p;
  TowerExt residue;  // k -> k[t]/(p), root is the class of t
  bool at_infinity = false;

  static PrimeLocal make(const Poly& p, bool at_infinity = false);
  const Tower& field() const { return *residue.target; }
  Elem reduce(const Poly& a) const;
  /// The representative of degree < deg p of a residue class.
  Poly lift(const Elem& c) const;
};

/// Largest k with p^k | a; kInfinity for a = 0.
i64 vp_poly(const Poly& a, const PrimeLocal& P);

/// Coefficients a_s with F = sum a_s phi^s and deg_x a_s < deg_x phi.
std::vector<BiPoly> phi_expansion(const BiPoly& F, const BiPoly& phi);

/// Side of slope -h/e between (s0, v0) and (s1, v1).
struct Side {
  int s0 = 0, s1 = 0;
  i64 v0 = 0, v1 = 0;
  i64 h = 0, e = 1;
  int length() const { return s1 - s0; }
  int degree() const { return (s1 - s0) / static_cast<int>(e); }
};

struct NewtonPolygon {
  std::vector<std::pair<int, i64>> vertices;
  std::vector<Side> sides;
  bool empty() const { return sides.empty(); }
};

/// Lower convex hull of the finite points (s, v[s]) restricted to its negative-slope part.
/// Entries equal to kInfinity are absent points.
NewtonPolygon principal_polygon(const std::vector<i64>& ordinates);

/// Lattice points (i, j) with i strictly right of the first vertex, j strictly above
/// the last vertex, on or below the polygon.
i64 polygon_index(const NewtonPolygon& N);

struct MontesOptions {
  u64 seed = 0x5eed5eedULL;
  bool trace = false;
  /// Receives trace lines as they are produced (in addition to MontesResult::trace).
  std::function<void(const std::string&)> sink;
  /// v_p(Disc f) when known: values <= 1 short-circuit to 0 and it sizes the budget.
  std::optional<i64> delta_p;
};

struct MontesResult {
  i64 ind = 0;
  std::vector<std::string> trace;
};

/// v_p([O_F : A[theta]]) by the Montes algorithm with higher-order Newton polygons.
MontesResult montes_ind(const DefiningPoly& f, const PrimeLocal& P, const MontesOptions& opts = {});

/// ind_inf: the same engine on f_inf with the prime u = 1/t.
MontesResult montes_ind_infinity(const DefiningPoly& f, const MontesOptions& opts = {});

/// Residual polynomial over k[t]/(p)[y]/(psi0) of side `side` of the order-one polygon of f
/// with respect to the lift of psi0.
TPoly residual_poly_order1(const DefiningPoly& f, const PrimeLocal& P, const TPoly& psi0, std::size_t side = 0);

}  // namespace ffg
