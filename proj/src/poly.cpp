#include "ffgenus/poly.hpp"

#include <algorithm>
#include <sstream>

namespace ffg {

namespace {

constexpr std::size_t kKaratsubaCutoff = 48;

void trim(std::vector<u64>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Schoolbook product into out[0 .. na+nb-1) (out must be zeroed).
void schoolbook(const Field& F, const u64* a, std::size_t na, const u64* b, std::size_t nb, u64* out) {
  if (F.is_prime_field()) {
    const u64 p = F.characteristic();
    const std::size_t n = na + nb - 1;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t lo = k >= nb ? k - nb + 1 : 0;
      const std::size_t hi = std::min(k, na - 1);
      u128 acc = 0;
      for (std::size_t i = lo; i <= hi; ++i) acc += static_cast<u128>(a[i]) * b[k - i];
      out[k] = static_cast<u64>(acc % p);
    }
    return;
  }
  for (std::size_t i = 0; i < na; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < nb; ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
}

void karatsuba(const Field& F, const u64* a, const u64* b, std::size_t n, u64* out) {
  // a, b have length n; out has length 2n-1 and is zeroed.
  if (n <= kKaratsubaCutoff) {
    schoolbook(F, a, n, b, n, out);
    return;
  }
  const std::size_t h = n / 2, hi = n - h;
  std::vector<u64> z0(2 * h - 1, 0), z2(2 * hi - 1, 0), z1(2 * hi - 1, 0);
  karatsuba(F, a, b, h, z0.data());
  karatsuba(F, a + h, b + h, hi, z2.data());
  std::vector<u64> sa(hi), sb(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = F.add(a[h + i], i < h ? a[i] : 0);
    sb[i] = F.add(b[h + i], i < h ? b[i] : 0);
  }
  karatsuba(F, sa.data(), sb.data(), hi, z1.data());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = F.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = F.sub(z1[i], z2[i]);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = F.add(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) out[i + h] = F.add(out[i + h], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] = F.add(out[i + 2 * h], z2[i]);
}

}  // namespace

std::vector<u64> mul_coeffs(const Field& F, const std::vector<u64>& a, const std::vector<u64>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> out(a.size() + b.size() - 1, 0);
  const std::size_t small = std::min(a.size(), b.size());
  if (small <= kKaratsubaCutoff) {
    schoolbook(F, a.data(), a.size(), b.data(), b.size(), out.data());
    return out;
  }
  // Split the longer operand into chunks of the shorter length.
  const std::vector<u64>& lng = a.size() >= b.size() ? a : b;
  const std::vector<u64>& sht = a.size() >= b.size() ? b : a;
  const std::size_t n = sht.size();
  std::vector<u64> chunk(n), part(2 * n - 1);
  for (std::size_t start = 0; start < lng.size(); start += n) {
    const std::size_t len = std::min(n, lng.size() - start);
    std::fill(chunk.begin(), chunk.end(), 0);
    std::copy(lng.begin() + start, lng.begin() + start + len, chunk.begin());
    std::fill(part.begin(), part.end(), 0);
    karatsuba(F, chunk.data(), sht.data(), n, part.data());
    for (std::size_t i = 0; i < part.size() && start + i < out.size(); ++i)
      out[start + i] = F.add(out[start + i], part[i]);
  }
  trim(out);
  return out;
}

Poly::Poly(FieldPtr field, std::vector<u64> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("polynomial without field");
  for (u64 c : c_)
    if (c >= field_->size()) throw std::invalid_argument("coefficient out of field range");
  normalize();
}

void Poly::normalize() { trim(c_); }

Poly Poly::constant(FieldPtr field, u64 c) { return Poly(std::move(field), std::vector<u64>{c}); }

Poly Poly::monomial(FieldPtr field, u64 c, std::size_t degree) {
  std::vector<u64> v(degree + 1, 0);
  v[degree] = c;
  return Poly(std::move(field), std::move(v));
}

void Poly::check(const Poly& o) const {
  if (field_ != o.field_) throw FieldMismatch("polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
  check(o);
  Poly r(field_);
  const auto& F = *field_;
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.add((*this)[i], o[i]);
  r.normalize();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  check(o);
  Poly r(field_);
  const auto& F = *field_;
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = F.sub((*this)[i], o[i]);
  r.normalize();
  return r;
}

Poly Poly::operator-() const {
  Poly r(field_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->neg(c_[i]);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check(o);
  Poly r(field_);
  r.c_ = mul_coeffs(*field_, c_, o.c_);
  r.normalize();
  return r;
}

bool Poly::operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

Poly Poly::scale(u64 c) const {
  if (c == 0) return Poly(field_);
  Poly r(field_);
  r.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->mul(c_[i], c);
  return r;
}

Poly Poly::monic() const {
  if (c_.empty() || lc() == 1) return *this;
  return scale(field_->inv(lc()));
}

Poly Poly::derivative() const {
  Poly r(field_);
  if (c_.size() < 2) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<i64>(i % field_->characteristic())));
  r.normalize();
  return r;
}

Poly Poly::shift_up(std::size_t k) const {
  if (c_.empty()) return *this;
  Poly r(field_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

u64 Poly::eval(u64 point) const {
  u64 acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, point), c_[i]);
  return acc;
}

Poly Poly::taylor_shift(u64 c) const {
  // Horner in the polynomial ring: ((a_n)(t+c) + a_{n-1})(t+c) + ...
  Poly lin(field_, {c, 1});
  Poly acc(field_);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * lin + Poly::constant(field_, c_[i]);
  return acc;
}

Poly Poly::reverse(int n) const {
  if (degree() > n) throw std::invalid_argument("reverse: degree exceeds n");
  Poly r(field_);
  r.c_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[n - i] = c_[i];
  r.normalize();
  return r;
}

std::string Poly::to_string(char var) const {
  if (c_.empty()) return "0";
  const auto& F = *field_;
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) out << " + ";
    first = false;
    const bool unit = c_[i] == 1;
    std::string cs = F.to_string(c_[i]);
    const bool compound = cs.find(' ') != std::string::npos;
    if (i == 0) {
      out << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (!unit) out << (compound ? "(" + cs + ")" : cs) << '*';
    out << var;
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

std::string Poly::to_dense_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out << ", ";
    out << c_[i];
  }
  out << ']';
  return out.str();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.field() != b.field()) throw FieldMismatch("polynomials over different fields");
  const auto& F = a.F();
  if (a.degree() < b.degree()) return {Poly(a.field()), a};
  std::vector<u64> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<u64> q(r.size() - db, 0);
  const u64 inv_lc = F.inv(b.lc());
  const bool monic = b.lc() == 1;
  for (std::size_t k = r.size(); k-- > db;) {
    const u64 top = r[k];
    if (!top) continue;
    const u64 c = monic ? top : F.mul(top, inv_lc);
    q[k - db] = c;
    const std::size_t shift = k - db;
    for (std::size_t i = 0; i < db; ++i) {
      if (bc[i]) r[shift + i] = F.sub(r[shift + i], F.mul(c, bc[i]));
    }
    r[k] = 0;
  }
  r.resize(db);
  return {Poly(a.field(), std::move(q)), Poly(a.field(), std::move(r))};
}

Poly rem(const Poly& a, const Poly& b) { return divrem(a, b).second; }
Poly quo(const Poly& a, const Poly& b) { return divrem(a, b).first; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

XGcd xgcd(const Poly& a, const Poly& b) {
  const auto& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const u64 c = f->inv(r0.lc());
  return {r0.scale(c), s0.scale(c), t0.scale(c)};
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return rem(a * b, m); }

Poly powmod(const Poly& base, u64 e, const Poly& m) {
  Poly result = rem(Poly::constant(base.field(), 1), m);
  Poly b = rem(base, m);
  while (e) {
    if (e & 1) result = mulmod(result, b, m);
    e >>= 1;
    if (e) b = mulmod(b, b, m);
  }
  return result;
}

Poly pow(const Poly& base, u64 e) {
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base;
  while (e) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

u64 resultant(const Poly& a_in, const Poly& b_in) {
  if (a_in.field() != b_in.field()) throw FieldMismatch("polynomials over different fields");
  const auto& F = a_in.F();
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  Poly a = a_in, b = b_in;
  u64 res = 1;
  for (;;) {
    const int da = a.degree(), db = b.degree();
    if (db == 0) return F.mul(res, F.pow(b.lc(), static_cast<u64>(da)));
    Poly r = rem(a, b);
    if (r.is_zero()) return 0;
    if ((static_cast<i64>(da) * db) % 2 == 1) res = F.neg(res);
    res = F.mul(res, F.pow(b.lc(), static_cast<u64>(da - r.degree())));
    a = std::move(b);
    b = std::move(r);
  }
}

int valuation(const Poly& a, const Poly& d) {
  if (a.is_zero()) return -1;
  if (d.degree() < 1) throw std::invalid_argument("valuation: divisor must be non-constant");
  int k = 0;
  Poly cur = a;
  for (;;) {
    auto [q, r] = divrem(cur, d);
    if (!r.is_zero()) return k;
    cur = std::move(q);
    ++k;
  }
}

}  // namespace ffg
