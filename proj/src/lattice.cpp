#include "ffgenus/lattice.hpp"

#include <map>
#include <stdexcept>

namespace ffg {

RationalFunc::RationalFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RationalFunc::RationalFunc(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    num_ = std::move(num);
    den_ = Poly::constant(den.field(), 1);
    return;
  }
  const Poly g = gcd(num, den);
  num = quo(num, g);
  den = quo(den, g);
  const u64 c = den.F().inv(den.lc());
  num_ = num.scale(c);
  den_ = den.scale(c);
}

RationalFunc RationalFunc::t_pow(const FieldPtr& F, i64 e) {
  if (e >= 0) return RationalFunc(Poly::monomial(F, 1, static_cast<std::size_t>(e)));
  return RationalFunc(Poly::constant(F, 1), Poly::monomial(F, 1, static_cast<std::size_t>(-e)));
}

RationalFunc RationalFunc::operator+(const RationalFunc& o) const {
  if (den_ == o.den_) return RationalFunc(num_ + o.num_, den_);
  return RationalFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunc RationalFunc::operator-(const RationalFunc& o) const { return *this + (-o); }

RationalFunc RationalFunc::operator*(const RationalFunc& o) const {
  return RationalFunc(num_ * o.num_, den_ * o.den_);
}

RationalFunc RationalFunc::operator/(const RationalFunc& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero");
  return RationalFunc(num_ * o.den_, den_ * o.num_);
}

std::string RationalFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

namespace {

i64 q_floor(const Q& x) {
  i64 q = x.numerator() / x.denominator();
  if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
  return q;
}

i64 q_ceil(const Q& x) { return -q_floor(-x); }

Q frac(const Q& x) { return x - Q(q_floor(x)); }

void check_dims(const Basis& B, const WeightedNorm& N) {
  for (const auto& b : B)
    if (b.size() != N.dim()) throw std::invalid_argument("dimension mismatch");
}

Matrix columns_to_rows(const Basis& B) {
  const std::size_t m = B.size();
  Matrix M(m, std::vector<RationalFunc>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) M[j][i] = B[i][j];
  return M;
}

std::vector<u64> leading_vector(const Vec& b, const WeightedNorm& N, const Q& len) {
  std::vector<u64> lv(b.size(), 0);
  for (std::size_t j = 0; j < b.size(); ++j)
    if (!b[j].is_zero() && Q(b[j].degree()) + N.w[j] == len) lv[j] = b[j].lc();
  return lv;
}

// A nonzero c with sum c_i vecs_i = 0, or empty when the vectors are independent.
std::vector<u64> dependency(const Field& F, const std::vector<std::vector<u64>>& vecs) {
  const std::size_t cols = vecs.size(), rows = vecs.empty() ? 0 : vecs[0].size();
  std::vector<std::vector<u64>> M(rows, std::vector<u64>(cols));
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = 0; j < rows; ++j) M[j][i] = vecs[i][j];
  std::vector<int> pivot_row(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && M[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(M[p], M[r]);
    const u64 inv = F.inv(M[r][c]);
    for (auto& x : M[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || M[i][c] == 0) continue;
      const u64 f = M[i][c];
      for (std::size_t k = 0; k < cols; ++k) M[i][k] = F.sub(M[i][k], F.mul(f, M[r][k]));
    }
    pivot_row[c] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_row[free] >= 0) continue;
    std::vector<u64> c(cols, 0);
    c[free] = 1;
    for (std::size_t pc = 0; pc < cols; ++pc)
      if (pivot_row[pc] >= 0) c[pc] = F.neg(M[static_cast<std::size_t>(pivot_row[pc])][free]);
    return c;
  }
  return {};
}

}  // namespace

std::string q_to_string(const Q& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

std::string vec_to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
  return s + ")";
}

namespace {

Q length_of(const WeightedNorm& N, const Vec& b) {
  auto l = norm_eval(N, b);
  if (!l) throw std::invalid_argument("singular basis: zero vector");
  return *l;
}

}  // namespace

std::optional<Q> norm_eval(const WeightedNorm& N, const Vec& v) {
  if (v.size() != N.dim()) throw std::invalid_argument("dimension mismatch");
  std::optional<Q> best;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    const Q l = Q(v[i].degree()) + N.w[i];
    if (!best || l > *best) best = l;
  }
  return best;
}

bool is_reduced(const Basis& B, const WeightedNorm& N) {
  check_dims(B, N);
  if (B.empty()) return true;
  if (determinant(columns_to_rows(B)).is_zero()) throw std::invalid_argument("singular basis");
  const Field& F = *B[0][0].field();
  std::vector<std::vector<u64>> lvs;
  for (const auto& b : B) lvs.push_back(leading_vector(b, N, length_of(N, b)));
  return dependency(F, lvs).empty();
}

ReducedBasisReport reduce_basis(const Basis& B, const WeightedNorm& N,
                                const std::function<void(const std::string&)>& sink) {
  check_dims(B, N);
  if (B.empty()) return {};
  const FieldPtr& Fp = B[0][0].field();
  const Field& F = *Fp;
  const RationalFunc det = determinant(columns_to_rows(B));
  if (det.is_zero()) throw std::invalid_argument("singular basis");
  Basis cur = B;
  for (;;) {
    std::vector<Q> len;
    for (const auto& b : cur) len.push_back(length_of(N, b));
    // vectors can only cancel against vectors whose lengths agree modulo 1
    std::map<Q, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < cur.size(); ++i) classes[frac(len[i])].push_back(i);
    bool changed = false;
    for (const auto& [cls, idx] : classes) {
      std::vector<std::vector<u64>> lvs;
      for (std::size_t i : idx) lvs.push_back(leading_vector(cur[i], N, len[i]));
      const auto c = dependency(F, lvs);
      if (c.empty()) continue;
      std::size_t j = idx.size();
      for (std::size_t a = 0; a < idx.size(); ++a)
        if (c[a] != 0 && (j == idx.size() || len[idx[a]] > len[idx[j]])) j = a;
      const std::size_t target = idx[j];
      const u64 cj_inv = F.inv(c[j]);
      Vec nb = cur[target];
      for (std::size_t a = 0; a < idx.size(); ++a) {
        if (a == j || c[a] == 0) continue;
        const Q shift = len[target] - len[idx[a]];
        const RationalFunc factor = RationalFunc::t_pow(Fp, shift.numerator()).scale(F.mul(c[a], cj_inv));
        for (std::size_t k = 0; k < nb.size(); ++k) nb[k] = nb[k] + factor * cur[idx[a]][k];
        if (sink)
          sink("b" + std::to_string(target + 1) + " += " + factor.to_string() + " * b" + std::to_string(idx[a] + 1));
      }
      cur[target] = std::move(nb);
      if (sink) sink("  b" + std::to_string(target + 1) + " = " + vec_to_string(cur[target]) + ", length " +
                     q_to_string(length_of(N, cur[target])));
      changed = true;
      break;
    }
    if (!changed) break;
  }
  ReducedBasisReport rep;
  rep.basis = cur;
  for (const auto& b : cur) {
    rep.lengths.push_back(length_of(N, b));
    rep.ceil_lengths.push_back(q_ceil(rep.lengths.back()));
    rep.det_degree += rep.ceil_lengths.back();
  }
  if (rep.det_degree != det_degree(B, N)) throw std::logic_error("reduced lengths disagree with the determinant degree");
  return rep;
}

Basis orthonormalize(const ReducedBasisReport& R) {
  Basis out;
  for (std::size_t i = 0; i < R.basis.size(); ++i) {
    const RationalFunc s = RationalFunc::t_pow(R.basis[i][0].field(), -R.ceil_lengths[i]);
    Vec b;
    for (const auto& x : R.basis[i]) b.push_back(x * s);
    out.push_back(std::move(b));
  }
  return out;
}

RationalFunc determinant(Matrix M) {
  const std::size_t n = M.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  RationalFunc det(Poly::constant(M[0][0].field(), 1));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && M[p][c].is_zero()) ++p;
    if (p == n) return RationalFunc(M[0][0].field());
    if (p != c) {
      std::swap(M[p], M[c]);
      det = -det;
    }
    det = det * M[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (M[r][c].is_zero()) continue;
      const RationalFunc f = M[r][c] / M[c][c];
      for (std::size_t k = c; k < n; ++k) M[r][k] = M[r][k] - f * M[c][k];
    }
  }
  return det;
}

bool in_orthogonal_group(const Matrix& T, const std::vector<int>& partition) {
  std::vector<int> block;
  for (std::size_t b = 0; b < partition.size(); ++b)
    for (int i = 0; i < partition[b]; ++i) block.push_back(static_cast<int>(b));
  if (block.size() != T.size()) throw std::invalid_argument("partition does not match the matrix size");
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T.size(); ++j) {
      const auto& x = T[i][j];
      if (x.is_zero()) continue;
      const i64 bound = block[i] > block[j] ? -1 : 0;
      if (x.degree() > bound) return false;
    }
  std::size_t start = 0;
  for (int size : partition) {
    Matrix D;
    for (std::size_t i = start; i < start + static_cast<std::size_t>(size); ++i)
      D.emplace_back(T[i].begin() + static_cast<std::ptrdiff_t>(start),
                     T[i].begin() + static_cast<std::ptrdiff_t>(start + static_cast<std::size_t>(size)));
    const RationalFunc d = determinant(D);
    if (d.is_zero() || d.degree() != 0) return false;
    start += static_cast<std::size_t>(size);
  }
  return true;
}

i64 det_degree(const Basis& B, const WeightedNorm& N) {
  check_dims(B, N);
  const RationalFunc d = determinant(columns_to_rows(B));
  if (d.is_zero()) throw std::invalid_argument("singular basis");
  i64 total = d.degree();
  for (const auto& w : N.w) total += q_ceil(w);
  return total;
}

i64 rr_dim(const std::vector<i64>& ceil_lengths, i64 r) {
  i64 total = 0;
  for (i64 l : ceil_lengths)
    if (l <= r) total += r + 1 - l;
  return total;
}

i64 genus_from_lengths(const std::vector<i64>& ceil_lengths, int n, int k0_deg) {
  if (k0_deg < 1) throw std::invalid_argument("constant degree must be >= 1");
  i64 sum = 0;
  for (i64 l : ceil_lengths) sum += l;
  const i64 rhs = n - sum;  // k0_deg (1 - g)
  if (rhs % k0_deg != 0 || 1 - rhs / k0_deg < 0)
    throw std::invalid_argument("lengths inconsistent with a genus: " + std::to_string(rhs) + " / " + std::to_string(k0_deg));
  return 1 - rhs / k0_deg;
}

}  // namespace ffg
