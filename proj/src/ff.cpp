#include "ffgenus/ff.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace ffg {

namespace {

// Dense polynomials over F_p used only while searching for moduli.
using DenseP = std::vector<u64>;

void trim(DenseP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 inv_mod(u64 a, u64 p) {
  i64 t = 0, new_t = 1;
  i64 r = static_cast<i64>(p), new_r = static_cast<i64>(a % p);
  while (new_r != 0) {
    i64 q = r / new_r;
    i64 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw std::domain_error("element is not invertible");
  if (t < 0) t += static_cast<i64>(p);
  return static_cast<u64>(t);
}

DenseP rem_mod(DenseP a, const DenseP& f, u64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const u64 inv_lc = inv_mod(f.back(), p);
  while (a.size() > df) {
    const u64 c = mulmod(a.back(), inv_lc, p);
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      const u64 s = mulmod(c, f[i], p);
      a[shift + i] = (a[shift + i] + p - s) % p;
    }
    trim(a);
  }
  return a;
}

DenseP mul_mod(const DenseP& a, const DenseP& b, const DenseP& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  DenseP c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
  return rem_mod(std::move(c), f, p);
}

DenseP pow_mod(DenseP base, u64 e, const DenseP& f, u64 p) {
  DenseP result{1};
  base = rem_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = mul_mod(result, base, f, p);
    e >>= 1;
    if (e) base = mul_mod(base, base, f, p);
  }
  return result;
}

DenseP gcd_mod(DenseP a, DenseP b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    DenseP r = rem_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 powmod_u64(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * a % n);
    a = static_cast<u64>(static_cast<u128>(a) * a % n);
    e >>= 1;
  }
  return r;
}

constexpr u64 kTableLimit = u64{1} << 18;

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<u64>(static_cast<u128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_irreducible_mod_p(std::span<const u64> poly, u64 p) {
  DenseP f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  // Ben-Or: no factor of degree i <= m/2 divides f.
  DenseP h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = pow_mod(h, p, f, p);
    DenseP d = h;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    if (gcd_mod(d, f, p).size() > 1) return false;
  }
  return true;
}

u64 Field::checked_power(u64 p, int m) {
  u64 q = 1;
  for (int i = 0; i < m; ++i) {
    if (q > (kMaxFieldSize - 1) / p) throw std::overflow_error("field size p^m exceeds 2^62");
    q *= p;
  }
  return q;
}

FieldPtr Field::make(u64 p, int m, std::optional<std::vector<u64>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  checked_power(p, m);

  std::vector<u64> mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != static_cast<std::size_t>(m) + 1 || mod.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree m");
    for (u64 c : mod)
      if (c >= p) throw std::invalid_argument("modulus coefficient not reduced mod p");
    if (!is_irreducible_mod_p(mod, p)) throw std::invalid_argument("modulus is reducible");
  } else if (m == 1) {
    mod = {0, 1};
  } else {
    mod.assign(static_cast<std::size_t>(m) + 1, 0);
    mod[m] = 1;
    for (u64 enc = 0;; ++enc) {
      u64 e = enc;
      for (int i = 0; i < m; ++i) {
        mod[i] = e % p;
        e /= p;
      }
      if (mod[0] != 0 && is_irreducible_mod_p(mod, p)) break;
    }
  }

  static std::mutex registry_mutex;
  static std::map<std::pair<u64, std::vector<u64>>, FieldPtr> registry;
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto key = std::make_pair(p, mod);
  if (auto it = registry.find(key); it != registry.end()) return it->second;
  FieldPtr field(new Field(p, m, mod));
  registry.emplace(std::move(key), field);
  return field;
}

Field::Field(u64 p, int m, std::vector<u64> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
  q_ = checked_power(p, m);
  if (m_ == 1) {
    gen_ = (p_ - modulus_[0]) % p_;
  } else {
    gen_ = p_;
  }
  if (m_ > 1 && q_ <= kTableLimit) build_tables();
}

void Field::build_tables() {
  const u64 order = q_ - 1;
  const auto factors = prime_factors(order);
  auto slow_pow = [&](u64 a, u64 e) {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul_generic(r, a);
      a = mul_generic(a, a);
      e >>= 1;
    }
    return r;
  };
  u64 g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (u64 r : factors) {
      if (slow_pow(g, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) break;
  }
  exp_.assign(2 * order, 0);
  log_.assign(q_, 0);
  u64 cur = 1;
  for (u64 i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(cur);
    exp_[i + order] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_generic(cur, g);
  }
  if (p_ != 2) {
    zech_.assign(order, static_cast<std::uint32_t>(order));
    for (u64 i = 0; i < order; ++i) {
      const u64 s = add_digits(1, exp_[i]);
      if (s != 0) zech_[i] = log_[s];
    }
  }
  tables_ = true;
}

u64 Field::from_int(i64 v) const {
  i64 r = v % static_cast<i64>(p_);
  if (r < 0) r += static_cast<i64>(p_);
  return static_cast<u64>(r);
}

u64 Field::add_digits(u64 a, u64 b) const {
  u64 result = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    u64 s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    result += s * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return result;
}

u64 Field::add(u64 a, u64 b) const {
  if (m_ == 1) {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  if (tables_) {
    if (a == 0) return b;
    if (b == 0) return a;
    const u64 order = q_ - 1;
    const u64 la = log_[a], lb = log_[b];
    const u64 d = lb >= la ? lb - la : lb + order - la;
    const u64 z = zech_[d];
    if (z == order) return 0;
    return exp_[la + z];
  }
  return add_digits(a, b);
}

u64 Field::neg(u64 a) const {
  if (a == 0) return 0;
  if (m_ == 1) return p_ - a;
  if (p_ == 2) return a;
  if (tables_) return exp_[log_[a] + (q_ - 1) / 2];
  u64 result = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    const u64 d = a % p_;
    result += (d ? p_ - d : 0) * scale;
    a /= p_;
    scale *= p_;
  }
  return result;
}

u64 Field::mul_prime(u64 a, u64 b) const { return mulmod(a, b, p_); }

u64 Field::mul_generic(u64 a, u64 b) const {
  u64 da[64], db[64], prod[128];
  for (int i = 0; i < m_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  std::fill(prod, prod + 2 * m_, 0);
  for (int i = 0; i < m_; ++i) {
    if (!da[i]) continue;
    for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + mulmod(da[i], db[j], p_)) % p_;
  }
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    const u64 c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (int i = 0; i < m_; ++i) {
      const u64 s = mulmod(c, modulus_[i], p_);
      prod[k - m_ + i] = (prod[k - m_ + i] + p_ - s) % p_;
    }
  }
  u64 result = 0;
  for (int i = m_ - 1; i >= 0; --i) result = result * p_ + prod[i];
  return result;
}

u64 Field::mul(u64 a, u64 b) const {
  if (m_ == 1) return mul_prime(a, b);
  if (tables_) {
    if (a == 0 || b == 0) return 0;
    return exp_[static_cast<u64>(log_[a]) + log_[b]];
  }
  return mul_generic(a, b);
}

u64 Field::inv(u64 a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (m_ == 1) return inv_mod(a, p_);
  if (tables_) {
    const u64 order = q_ - 1;
    return exp_[(order - log_[a]) % order];
  }
  return pow(a, q_ - 2);
}

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return r;
}

u64 Field::pow_signed(u64 a, i64 e) const {
  if (e >= 0) return pow(a, static_cast<u64>(e));
  return pow(inv(a), static_cast<u64>(-e));
}

u64 Field::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<u64> dist(0, q_ - 1);
  return dist(rng);
}

std::vector<u64> Field::digits(u64 a) const {
  std::vector<u64> d(m_);
  for (int i = 0; i < m_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

u64 Field::pack(std::span<const u64> digits) const {
  if (digits.size() > static_cast<std::size_t>(m_)) throw std::invalid_argument("too many digits for field");
  u64 result = 0;
  for (std::size_t i = digits.size(); i-- > 0;) result = result * p_ + digits[i] % p_;
  return result;
}

std::string Field::to_string(u64 a) const {
  if (m_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::ostringstream out;
  bool first = true;
  for (int i = m_ - 1; i >= 0; --i) {
    if (!d[i]) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || d[i] != 1) out << d[i];
    if (i > 0) {
      if (d[i] != 1) out << '*';
      out << 'a';
      if (i > 1) out << '^' << i;
    }
  }
  if (first) out << '0';
  return out.str();
}

FFElem::FFElem(FieldPtr field, u64 value) : field_(std::move(field)), value_(value) {
  if (!field_) throw std::invalid_argument("element without field");
  if (value_ >= field_->size()) throw std::invalid_argument("element out of range");
}

void FFElem::check(const FFElem& o) const {
  if (field_ != o.field_) throw FieldMismatch("operands belong to different fields");
}

FFElem FFElem::operator+(const FFElem& o) const {
  check(o);
  return {field_, field_->add(value_, o.value_)};
}
FFElem FFElem::operator-(const FFElem& o) const {
  check(o);
  return {field_, field_->sub(value_, o.value_)};
}
FFElem FFElem::operator-() const { return {field_, field_->neg(value_)}; }
FFElem FFElem::operator*(const FFElem& o) const {
  check(o);
  return {field_, field_->mul(value_, o.value_)};
}
FFElem FFElem::operator/(const FFElem& o) const {
  check(o);
  return {field_, field_->div(value_, o.value_)};
}
bool FFElem::operator==(const FFElem& o) const {
  check(o);
  return value_ == o.value_;
}
FFElem FFElem::inv() const { return {field_, field_->inv(value_)}; }
FFElem FFElem::pow(u64 e) const { return {field_, field_->pow(value_, e)}; }
FFElem FFElem::frobenius() const { return {field_, field_->frobenius(value_)}; }
FFElem FFElem::random(FieldPtr field, std::mt19937_64& rng) {
  const u64 v = field->random(rng);
  return {std::move(field), v};
}

}  // namespace ffg
