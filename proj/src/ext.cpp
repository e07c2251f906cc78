#include "ffgenus/ext.hpp"

#include "ffgenus/factor.hpp"

namespace ffg {

namespace {

constexpr u64 kEmbedTableLimit = u64{1} << 16;

// Inverse of a square matrix over F_p (rows of digits); throws when singular.
std::vector<std::vector<u64>> invert_mod_p(std::vector<std::vector<u64>> a, u64 p) {
  const std::size_t n = a.size();
  std::vector<std::vector<u64>> inv(n, std::vector<u64>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  auto inv_scalar = [p](u64 x) {
    u64 r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mulmod(r, x, p);
      x = mulmod(x, x, p);
      e >>= 1;
    }
    return r;
  };
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::logic_error("extension basis is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const u64 s = inv_scalar(a[col][col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = mulmod(a[col][j], s, p);
      inv[col][j] = mulmod(inv[col][j], s, p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const u64 c = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = (a[r][j] + p - mulmod(c, a[col][j], p)) % p;
        inv[r][j] = (inv[r][j] + p - mulmod(c, inv[col][j], p)) % p;
      }
    }
  }
  return inv;
}

}  // namespace

Extension Extension::make(const FieldPtr& base, const Poly& psi) {
  if (psi.field() != base) throw FieldMismatch("psi is not defined over the base field");
  if (psi.degree() < 1) throw std::invalid_argument("residue extension by a constant");
  if (!is_irreducible(psi)) throw std::invalid_argument("residue extension: psi is reducible");
  Extension ext;
  ext.base_ = base;
  ext.d_ = psi.degree();
  const Field& B = *base;
  const u64 p = B.characteristic();
  const int m = B.degree();
  std::mt19937_64 rng(kDefaultSeed);

  if (ext.d_ == 1) {
    ext.target_ = base;
    ext.gamma_ = B.generator();
    ext.root_ = B.neg(B.div(psi[0], psi[1]));
  } else {
    ext.target_ = Field::make(p, m * ext.d_);
    if (m == 1) {
      ext.gamma_ = B.generator();
    } else {
      // Base modulus has F_p coefficients, which are the same words in the target.
      Poly mu(ext.target_, B.modulus());
      ext.gamma_ = roots(mu, rng).at(0);
    }
    if (B.size() <= kEmbedTableLimit) {
      std::vector<u64> table(B.size());
      for (u64 a = 0; a < B.size(); ++a) table[a] = ext.embed(a);
      ext.table_ = std::move(table);
    }
    auto r = roots(ext.embed(psi), rng);
    if (r.empty()) throw std::logic_error("irreducible psi has no root in its splitting field");
    ext.root_ = r.front();
  }

  // Basis gamma^a root^j, index a + m j, written as F_p digit columns.
  const Field& T = *ext.target_;
  const std::size_t dim = static_cast<std::size_t>(m) * ext.d_;
  std::vector<std::vector<u64>> mat(dim, std::vector<u64>(dim, 0));
  u64 rj = 1;
  for (int j = 0; j < ext.d_; ++j) {
    u64 ga = 1;
    for (int a = 0; a < m; ++a) {
      const auto dig = T.digits(T.mul(ga, rj));
      for (std::size_t row = 0; row < dim; ++row) mat[row][a + static_cast<std::size_t>(m) * j] = dig[row];
      ga = T.mul(ga, ext.gamma_);
    }
    rj = T.mul(rj, ext.root_);
  }
  ext.inverse_ = invert_mod_p(std::move(mat), p);
  return ext;
}

u64 Extension::embed(u64 a) const {
  if (target_ == base_) return a;
  if (!table_.empty()) return table_[a];
  const Field& B = *base_;
  const Field& T = *target_;
  if (B.is_prime_field()) return a;
  const auto dig = B.digits(a);
  u64 acc = 0;
  for (std::size_t i = dig.size(); i-- > 0;) acc = T.add(T.mul(acc, gamma_), dig[i]);
  return acc;
}

Poly Extension::embed(const Poly& a) const {
  if (a.field() != base_) throw FieldMismatch("polynomial is not over the base field");
  std::vector<u64> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = embed(a.coeffs()[i]);
  return Poly(target_, std::move(c));
}

std::vector<u64> Extension::coords(u64 e) const {
  const Field& B = *base_;
  const Field& T = *target_;
  if (d_ == 1) return {e};
  const u64 p = B.characteristic();
  const int m = B.degree();
  const auto dig = T.digits(e);
  const std::size_t dim = dig.size();
  std::vector<u64> out(static_cast<std::size_t>(d_));
  std::vector<u64> base_digits(static_cast<std::size_t>(m));
  for (int j = 0; j < d_; ++j) {
    for (int a = 0; a < m; ++a) {
      const auto& row = inverse_[a + static_cast<std::size_t>(m) * j];
      u128 acc = 0;
      for (std::size_t k = 0; k < dim; ++k) acc += static_cast<u128>(row[k]) * dig[k];
      base_digits[a] = static_cast<u64>(acc % p);
    }
    out[j] = B.pack(base_digits);
  }
  return out;
}

u64 Extension::from_coords(std::span<const u64> c) const {
  const Field& T = *target_;
  u64 acc = 0;
  for (std::size_t j = c.size(); j-- > 0;) acc = T.add(T.mul(acc, root_), embed(c[j]));
  return acc;
}

}  // namespace ffg
