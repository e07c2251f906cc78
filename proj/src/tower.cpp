#include "ffgenus/tower.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffg {

TowerPtr Tower::base(FieldPtr k) {
  auto t = std::shared_ptr<Tower>(new Tower());
  t->k_ = std::move(k);
  return t;
}

TowerPtr Tower::extend(const TowerPtr& parent, TPoly psi) {
  tpoly::trim(*parent, psi);
  if (tpoly::degree(psi) < 2) throw std::invalid_argument("tower step needs degree >= 2");
  if (psi.back() != parent->one()) throw std::invalid_argument("tower modulus must be monic");
  auto t = std::shared_ptr<Tower>(new Tower());
  t->k_ = parent->k_;
  t->parent_ = parent;
  t->level_ = parent->level_ + 1;
  t->dim_ = parent->dim_ * tpoly::degree(psi);
  t->psi_ = std::move(psi);
  return t;
}

Elem Tower::from_k(u64 c) const {
  Elem e = zero();
  e[0] = c;
  return e;
}

Elem Tower::generator() const {
  if (!parent_) throw std::logic_error("base field has no tower generator");
  Elem e = zero();
  e[static_cast<std::size_t>(parent_->dim_)] = 1;
  return e;
}

bool Tower::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](u64 c) { return c == 0; });
}

Elem Tower::add(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k_->add(a[i], b[i]);
  return r;
}

Elem Tower::sub(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k_->sub(a[i], b[i]);
  return r;
}

Elem Tower::neg(const Elem& a) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k_->neg(a[i]);
  return r;
}

Elem Tower::mul(const Elem& a, const Elem& b) const {
  if (!parent_) return {k_->mul(a[0], b[0])};
  const Tower& P = *parent_;
  const int f = step();
  const auto A = coords(a), B = coords(b);
  std::vector<Elem> prod(static_cast<std::size_t>(2 * f - 1), P.zero());
  for (int i = 0; i < f; ++i) {
    if (P.is_zero(A[i])) continue;
    for (int j = 0; j < f; ++j)
      if (!P.is_zero(B[j])) prod[i + j] = P.add(prod[i + j], P.mul(A[i], B[j]));
  }
  for (int i = 2 * f - 2; i >= f; --i) {
    if (P.is_zero(prod[i])) continue;
    const Elem c = prod[i];
    for (int j = 0; j < f; ++j)
      if (!P.is_zero(psi_[j])) prod[i - f + j] = P.sub(prod[i - f + j], P.mul(c, psi_[j]));
  }
  prod.resize(static_cast<std::size_t>(f));
  return from_coords(prod);
}

Elem Tower::inv(const Elem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  if (!parent_) return {k_->inv(a[0])};
  TPoly ap = coords(a);
  tpoly::trim(*parent_, ap);
  TPoly s = tpoly::inverse_mod(*parent_, ap, psi_);
  s.resize(static_cast<std::size_t>(step()), parent_->zero());
  return from_coords(s);
}

Elem Tower::pow(const Elem& a, u64 e) const {
  Elem r = one(), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    e >>= 1;
    if (e) b = mul(b, b);
  }
  return r;
}

Elem Tower::pow_signed(const Elem& a, i64 e) const {
  return e >= 0 ? pow(a, static_cast<u64>(e)) : pow(inv(a), static_cast<u64>(-e));
}

Elem Tower::pth_root(const Elem& a) const {
  Elem r = a;
  for (int i = 1; i < prime_degree(); ++i) r = frobenius(r);
  return r;
}

Elem Tower::random(std::mt19937_64& rng) const {
  Elem r(static_cast<std::size_t>(dim_));
  for (auto& c : r) c = k_->random(rng);
  return r;
}

Elem Tower::embed(const Elem& parent_elem) const {
  Elem r = zero();
  std::copy(parent_elem.begin(), parent_elem.end(), r.begin());
  return r;
}

std::vector<Elem> Tower::coords(const Elem& a) const {
  if (!parent_) return {a};
  const auto pd = static_cast<std::size_t>(parent_->dim_);
  std::vector<Elem> out(static_cast<std::size_t>(step()));
  for (std::size_t j = 0; j < out.size(); ++j) out[j].assign(a.begin() + j * pd, a.begin() + (j + 1) * pd);
  return out;
}

Elem Tower::from_coords(const std::vector<Elem>& c) const {
  Elem r = zero();
  const auto pd = static_cast<std::size_t>(parent_ ? parent_->dim_ : 1);
  for (std::size_t j = 0; j < c.size(); ++j) std::copy(c[j].begin(), c[j].end(), r.begin() + j * pd);
  return r;
}

std::string Tower::to_string(const Elem& a) const {
  if (!parent_) return k_->to_string(a[0]);
  const auto c = coords(a);
  const std::string z = "z" + std::to_string(level_);
  std::string out;
  for (int j = step() - 1; j >= 0; --j) {
    if (parent_->is_zero(c[j])) continue;
    if (!out.empty()) out += " + ";
    const std::string s = parent_->to_string(c[j]);
    const bool compound = s.find(' ') != std::string::npos;
    if (j == 0)
      out += s;
    else {
      if (s != "1") out += (compound ? "(" + s + ")" : s) + "*";
      out += z + (j > 1 ? "^" + std::to_string(j) : "");
    }
  }
  return out.empty() ? "0" : out;
}

TowerExt TowerExt::make(const TowerPtr& base, const TPoly& psi) {
  TPoly m = tpoly::monic(*base, psi);
  if (tpoly::degree(m) < 1) throw std::invalid_argument("extension polynomial must have positive degree");
  if (tpoly::degree(m) == 1) return {base, base, base->neg(m[0])};
  TowerPtr t = Tower::extend(base, m);
  return {base, t, t->generator()};
}

namespace tpoly {

void trim(const Tower& K, TPoly& a) {
  while (!a.empty() && K.is_zero(a.back())) a.pop_back();
}

TPoly from_k(const Tower& K, const std::vector<u64>& c) {
  TPoly r;
  for (u64 x : c) r.push_back(K.from_k(x));
  trim(K, r);
  return r;
}

TPoly add(const Tower& K, const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()), K.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size())
      r[i] = K.add(a[i], b[i]);
    else
      r[i] = i < a.size() ? a[i] : b[i];
  }
  trim(K, r);
  return r;
}

TPoly sub(const Tower& K, const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()), K.zero());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size())
      r[i] = K.sub(a[i], b[i]);
    else
      r[i] = i < a.size() ? a[i] : K.neg(b[i]);
  }
  trim(K, r);
  return r;
}

TPoly mul(const Tower& K, const TPoly& a, const TPoly& b) {
  if (a.empty() || b.empty()) return {};
  TPoly r(a.size() + b.size() - 1, K.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (K.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!K.is_zero(b[j])) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
  trim(K, r);
  return r;
}

TPoly scale(const Tower& K, const TPoly& a, const Elem& c) {
  TPoly r;
  for (const auto& x : a) r.push_back(K.mul(x, c));
  trim(K, r);
  return r;
}

TPoly monic(const Tower& K, const TPoly& a) {
  if (a.empty()) return a;
  return scale(K, a, K.inv(a.back()));
}

TPoly derivative(const Tower& K, const TPoly& a) {
  TPoly r;
  for (std::size_t i = 1; i < a.size(); ++i)
    r.push_back(K.mul(a[i], K.from_k(K.k()->from_int(static_cast<i64>(i % K.characteristic())))));
  trim(K, r);
  return r;
}

std::pair<TPoly, TPoly> divrem(const Tower& K, const TPoly& a, const TPoly& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.size() < b.size()) return {{}, a};
  TPoly r = a;
  TPoly q(a.size() - b.size() + 1, K.zero());
  const Elem lcinv = K.inv(b.back());
  const bool is_monic = b.back() == K.one();
  for (std::size_t i = a.size(); i-- >= b.size();) {
    if (K.is_zero(r[i])) continue;
    const Elem c = is_monic ? r[i] : K.mul(r[i], lcinv);
    const std::size_t shift = i + 1 - b.size();
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!K.is_zero(b[j])) r[shift + j] = K.sub(r[shift + j], K.mul(c, b[j]));
  }
  r.resize(b.size() - 1);
  trim(K, r);
  trim(K, q);
  return {q, r};
}

TPoly rem(const Tower& K, const TPoly& a, const TPoly& b) { return divrem(K, a, b).second; }

TPoly gcd(const Tower& K, const TPoly& a, const TPoly& b) {
  TPoly x = a, y = b;
  while (!y.empty()) {
    TPoly r = rem(K, x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(K, x);
}

TPoly inverse_mod(const Tower& K, const TPoly& a, const TPoly& m) {
  TPoly r0 = m, r1 = rem(K, a, m), s0, s1 = {K.one()};
  while (degree(r1) > 0) {
    auto [q, r] = divrem(K, r0, r1);
    TPoly s = sub(K, s0, mul(K, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw std::domain_error("not invertible modulo m");
  return rem(K, scale(K, s1, K.inv(r1[0])), m);
}

TPoly mulmod(const Tower& K, const TPoly& a, const TPoly& b, const TPoly& m) { return rem(K, mul(K, a, b), m); }

TPoly powmod(const Tower& K, const TPoly& a, u64 e, const TPoly& m) {
  TPoly r = rem(K, {K.one()}, m), b = rem(K, a, m);
  while (e) {
    if (e & 1) r = mulmod(K, r, b, m);
    e >>= 1;
    if (e) b = mulmod(K, b, b, m);
  }
  return r;
}

Elem eval(const Tower& K, const TPoly& a, const Elem& x) {
  Elem acc = K.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = K.add(K.mul(acc, x), a[i]);
  return acc;
}

std::string to_string(const Tower& K, const TPoly& a, char var) {
  if (a.empty()) return "0";
  std::string out;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (K.is_zero(a[i])) continue;
    if (!out.empty()) out += " + ";
    const std::string c = K.to_string(a[i]);
    const bool compound = c.find(' ') != std::string::npos;
    if (i == 0)
      out += c;
    else {
      if (c != "1") out += (compound ? "(" + c + ")" : c) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

bool less(const TPoly& a, const TPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] == b[i]) continue;
    return std::lexicographical_compare(a[i].rbegin(), a[i].rend(), b[i].rbegin(), b[i].rend());
  }
  return false;
}

namespace {

TPoly exact_quo(const Tower& K, const TPoly& a, const TPoly& b) {
  auto [q, r] = divrem(K, a, b);
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

// h^q mod g with q = |K|.
TPoly frobenius_mod(const Tower& K, const TPoly& h, const TPoly& g) {
  TPoly r = h;
  for (int i = 0; i < K.prime_degree(); ++i) r = powmod(K, r, K.characteristic(), g);
  return r;
}

TPoly pth_root_poly(const Tower& K, const TPoly& a) {
  const u64 p = K.characteristic();
  TPoly r;
  for (std::size_t i = 0; i < a.size(); i += p) r.push_back(K.pth_root(a[i]));
  trim(K, r);
  return r;
}

void squarefree(const Tower& K, const TPoly& f, int mult, std::vector<std::pair<TPoly, int>>& out) {
  if (degree(f) < 1) return;
  const TPoly df = derivative(K, f);
  if (df.empty()) {
    squarefree(K, pth_root_poly(K, f), mult * static_cast<int>(K.characteristic()), out);
    return;
  }
  TPoly c = gcd(K, f, df);
  TPoly w = exact_quo(K, f, c);
  int i = 1;
  while (degree(w) > 0) {
    TPoly y = gcd(K, w, c);
    TPoly z = exact_quo(K, w, y);
    if (degree(z) > 0) out.emplace_back(monic(K, z), i * mult);
    ++i;
    w = std::move(y);
    c = exact_quo(K, c, w);
  }
  if (degree(c) > 0) squarefree(K, pth_root_poly(K, c), mult * static_cast<int>(K.characteristic()), out);
}

std::vector<std::pair<TPoly, int>> distinct_degree(const Tower& K, TPoly g) {
  std::vector<std::pair<TPoly, int>> out;
  const TPoly x = {K.zero(), K.one()};
  TPoly h = rem(K, x, g);
  for (int d = 1; 2 * d <= degree(g); ++d) {
    h = frobenius_mod(K, h, g);
    TPoly u = gcd(K, g, sub(K, h, x));
    if (degree(u) > 0) {
      out.emplace_back(u, d);
      g = exact_quo(K, g, u);
      h = rem(K, h, g);
    }
  }
  if (degree(g) > 0) out.emplace_back(g, degree(g));
  return out;
}

void equal_degree(const Tower& K, const TPoly& g, int d, std::mt19937_64& rng, std::vector<TPoly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  const u64 p = K.characteristic();
  const int steps = K.prime_degree() * d;
  for (;;) {
    TPoly r;
    for (int i = 0; i < degree(g); ++i) r.push_back(K.random(rng));
    trim(K, r);
    if (degree(r) < 1) continue;
    TPoly u;
    if (p == 2) {
      TPoly acc = r, tr = r;
      for (int j = 1; j < steps; ++j) {
        acc = mulmod(K, acc, acc, g);
        tr = add(K, tr, acc);
      }
      u = gcd(K, g, tr);
    } else {
      TPoly acc = r, norm = r;
      for (int j = 1; j < steps; ++j) {
        acc = powmod(K, acc, p, g);
        norm = mulmod(K, norm, acc, g);
      }
      const TPoly w = powmod(K, norm, (p - 1) / 2, g);
      u = gcd(K, g, sub(K, w, {K.one()}));
    }
    if (degree(u) > 0 && degree(u) < degree(g)) {
      equal_degree(K, u, d, rng, out);
      equal_degree(K, exact_quo(K, g, u), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<TPoly, int>> factorize(const Tower& K, const TPoly& a, u64 seed) {
  if (a.empty()) throw std::invalid_argument("cannot factor the zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<TPoly, int>> sqf, out;
  squarefree(K, monic(K, a), 1, sqf);
  for (const auto& [s, m] : sqf)
    for (const auto& [g, d] : distinct_degree(K, s)) {
      std::vector<TPoly> parts;
      equal_degree(K, g, d, rng, parts);
      for (auto& f : parts) out.emplace_back(std::move(f), m);
    }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return less(x.first, y.first); });
  TPoly check = {K.one()};
  for (const auto& [f, m] : out)
    for (int i = 0; i < m; ++i) check = mul(K, check, f);
  if (check != monic(K, a)) throw std::logic_error("tower factorization does not multiply back");
  return out;
}

bool is_irreducible(const Tower& K, const TPoly& a) {
  if (degree(a) < 1) return false;
  const auto f = factorize(K, a, 1);
  return f.size() == 1 && f[0].second == 1;
}

}  // namespace tpoly

}  // namespace ffg
