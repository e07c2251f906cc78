#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "ffgenus/poly.hpp"

namespace ffg {

using Q = boost::rational<i64>;

/// num/den in k(t) with den monic and gcd(num, den) = 1.
class RationalFunc {
 public:
  RationalFunc() = default;
  explicit RationalFunc(const FieldPtr& F) : num_(F), den_(Poly::constant(F, 1)) {}
  RationalFunc(Poly num);  // NOLINT: polynomials are rational functions
  RationalFunc(Poly num, Poly den);
  /// t^e for any integer e.
  static RationalFunc t_pow(const FieldPtr& F, i64 e);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }
  bool is_zero() const { return num_.is_zero(); }
  /// |x| = deg num - deg den; undefined for 0.
  i64 degree() const { return num_.degree() - den_.degree(); }
  i64 v_inf() const { return -degree(); }
  /// Coefficient of t^degree() in the expansion at infinity.
  u64 lc() const { return num_.F().div(num_.lc(), den_.lc()); }

  RationalFunc operator+(const RationalFunc& o) const;
  RationalFunc operator-(const RationalFunc& o) const;
  RationalFunc operator-() const { return RationalFunc(-num_, den_); }
  RationalFunc operator*(const RationalFunc& o) const;
  RationalFunc operator/(const RationalFunc& o) const;
  bool operator==(const RationalFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  RationalFunc scale(u64 c) const { return RationalFunc(num_.scale(c), den_); }

  std::string to_string() const;

 private:
  Poly num_, den_;
};

using Vec = std::vector<RationalFunc>;
/// Basis vectors b_1..b_m (the columns of the basis matrix).
using Basis = std::vector<Vec>;
using Matrix = std::vector<std::vector<RationalFunc>>;  // rows

/// ||(x_i)|| = max_i (|x_i| + w_i).
struct WeightedNorm {
  std::vector<Q> w;
  std::size_t dim() const { return w.size(); }
};

std::string q_to_string(const Q& x);
std::string vec_to_string(const Vec& v);

/// nullopt stands for -infinity (the zero vector).
std::optional<Q> norm_eval(const WeightedNorm& N, const Vec& v);

/// Leading vectors of the b_i in k^m are linearly independent.
bool is_reduced(const Basis& B, const WeightedNorm& N);

struct ReducedBasisReport {
  Basis basis;
  std::vector<Q> lengths;
  std::vector<i64> ceil_lengths;
  i64 det_degree = 0;
};

/// Repeatedly cancels a leading-vector dependency in the longest vector involved.
/// `sink` receives one line per elimination step.
ReducedBasisReport reduce_basis(const Basis& B, const WeightedNorm& N,
                                const std::function<void(const std::string&)>& sink = {});

/// b -> t^(-ceil ||b||) b, so all lengths land in (-1, 0].
Basis orthonormalize(const ReducedBasisReport& R);

/// Lower blocks in m_inf, diagonal blocks in GL(A_inf), upper blocks in A_inf.
bool in_orthogonal_group(const Matrix& T, const std::vector<int>& partition);

RationalFunc determinant(Matrix M);

/// |d(L)| = deg det B + sum ceil(w_i).
i64 det_degree(const Basis& B, const WeightedNorm& N);

/// sum over ceil_lengths <= r of (r + 1 - length).
i64 rr_dim(const std::vector<i64>& ceil_lengths, i64 r);

/// g with sum(-l_i) + n r + n = r n + k0_deg (1 - g).
i64 genus_from_lengths(const std::vector<i64>& ceil_lengths, int n, int k0_deg);

}  // namespace ffg
