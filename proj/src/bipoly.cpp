#include "ffgenus/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ffg {

BiPoly::BiPoly(FieldPtr field, std::vector<Poly> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) throw FieldMismatch("coefficient over a different field");
  normalize();
}

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly BiPoly::from_t(const Poly& a) { return BiPoly(a.field(), {a}); }

BiPoly BiPoly::x(FieldPtr field) {
  Poly one = Poly::constant(field, 1);
  return BiPoly(field, {Poly(field), one});
}

int BiPoly::t_degree() const {
  int d = -1;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  if (field_ != o.field_) throw FieldMismatch("polynomials over different fields");
  BiPoly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Poly(field_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (*this)[i] + o[i];
  r.normalize();
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  if (field_ != o.field_) throw FieldMismatch("polynomials over different fields");
  BiPoly r(field_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Poly(field_));
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = (*this)[i] - o[i];
  r.normalize();
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r(field_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(-c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (field_ != o.field_) throw FieldMismatch("polynomials over different fields");
  if (c_.empty() || o.c_.empty()) return BiPoly(field_);
  BiPoly r(field_);
  r.c_.assign(c_.size() + o.c_.size() - 1, Poly(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  r.normalize();
  return r;
}

BiPoly BiPoly::scale(const Poly& a) const {
  BiPoly r(field_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) r.c_.push_back(c * a);
  r.normalize();
  return r;
}

BiPoly BiPoly::shift_x(std::size_t k) const {
  if (c_.empty()) return *this;
  BiPoly r(field_);
  r.c_.assign(k, Poly(field_));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

BiPoly BiPoly::divide_exact(const Poly& d) const {
  BiPoly r(field_);
  r.c_.reserve(c_.size());
  for (const auto& c : c_) {
    auto [q, rem] = divrem(c, d);
    if (!rem.is_zero()) throw std::logic_error("inexact division of coefficient");
    r.c_.push_back(std::move(q));
  }
  return r;
}

BiPoly BiPoly::derivative_x() const {
  BiPoly r(field_);
  if (c_.size() < 2) return r;
  const auto& F = *field_;
  for (std::size_t i = 1; i < c_.size(); ++i)
    r.c_.push_back(c_[i].scale(F.from_int(static_cast<i64>(i % F.characteristic()))));
  r.normalize();
  return r;
}

Poly BiPoly::eval_t(u64 point) const {
  std::vector<u64> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].eval(point);
  return Poly(field_, std::move(v));
}

std::string BiPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    std::string cs = c_[i].to_string('t');
    const bool compound = cs.find(' ') != std::string::npos;
    if (i == 0) {
      out << cs;
      continue;
    }
    if (!c_[i].is_one()) out << (compound ? "(" + cs + ")" : cs) << '*';
    out << 'x';
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

BiPoly pow(const BiPoly& base, u64 e) {
  BiPoly result = BiPoly::from_t(Poly::constant(base.field(), 1));
  BiPoly b = base;
  while (e) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

std::pair<BiPoly, BiPoly> divrem_monic(const BiPoly& a, const BiPoly& phi) {
  if (!phi.is_monic()) throw std::invalid_argument("divisor must be monic in x");
  const auto& field = a.field();
  const int dphi = phi.degree();
  if (a.degree() < dphi) return {BiPoly(field), a};
  std::vector<Poly> r = a.coeffs();
  std::vector<Poly> q(r.size() - dphi, Poly(field));
  const auto& pc = phi.coeffs();
  for (std::size_t k = r.size(); k-- > static_cast<std::size_t>(dphi);) {
    if (r[k].is_zero()) continue;
    const Poly c = r[k];
    const std::size_t shift = k - dphi;
    q[shift] = c;
    for (int i = 0; i < dphi; ++i)
      if (!pc[i].is_zero()) r[shift + i] -= c * pc[i];
    r[k] = Poly(field);
  }
  r.resize(dphi, Poly(field));
  return {BiPoly(field, std::move(q)), BiPoly(field, std::move(r))};
}

ParseError::ParseError(std::size_t col, const std::string& what)
    : std::invalid_argument("column " + std::to_string(col) + ": " + what), column(col) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const FieldPtr& field, char tvar, bool allow_x)
      : s_(text), field_(field), tvar_(tvar), allow_x_(allow_x) {}

  BiPoly parse() {
    skip();
    if (pos_ == s_.size()) throw ParseError(1, "empty expression");
    BiPoly r = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_ + 1, std::string("unexpected '") + s_[pos_] + "'");
    return r;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == tvar_ || (allow_x_ && c == 'x') ||
           c == 'a';
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (starts_factor(c)) {
        acc *= unary();
      } else {
        return acc;
      }
    }
  }

  BiPoly unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      u64 e = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        e = e * 10 + static_cast<u64>(s_[pos_] - '0');
        if (e > kMaxExponent) throw ParseError(start + 1, "exponent too large");
        ++pos_;
      }
      if (pos_ == start) throw ParseError(start + 1, "expected a non-negative integer exponent");
      return pow(base, e);
    }
    return base;
  }

  BiPoly atom() {
    const char c = peek();
    const std::size_t col = pos_ + 1;
    const auto& F = *field_;
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (peek() != ')') throw ParseError(pos_ + 1, "expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      u64 v = 0;
      const u64 p = F.characteristic();
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = static_cast<u64>((static_cast<u128>(v) * 10 + static_cast<u64>(s_[pos_] - '0')) % p);
        ++pos_;
      }
      return BiPoly::from_t(Poly::constant(field_, v));
    }
    if (c == tvar_) {
      ++pos_;
      return BiPoly::from_t(Poly::var(field_));
    }
    if (allow_x_ && c == 'x') {
      ++pos_;
      return BiPoly::x(field_);
    }
    if (c == 'a') {
      ++pos_;
      return BiPoly::from_t(Poly::constant(field_, F.generator()));
    }
    if (c == '\0') throw ParseError(col, "unexpected end of input");
    throw ParseError(col, std::string("unexpected '") + c + "'");
  }

  static constexpr u64 kMaxExponent = 1'000'000;
  std::string_view s_;
  const FieldPtr& field_;
  char tvar_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_bipoly(std::string_view text, const FieldPtr& field) { return Parser(text, field, 't', true).parse(); }

Poly parse_poly(std::string_view text, const FieldPtr& field, char var) {
  std::size_t first = text.find_first_not_of(" \t");
  if (first != std::string_view::npos && text[first] == '[') {
    const std::size_t close = text.find(']', first);
    if (close == std::string_view::npos) throw ParseError(text.size() + 1, "expected ']'");
    std::vector<u64> coeffs;
    std::size_t pos = first + 1;
    const auto& F = *field;
    while (pos < close) {
      while (pos < close && (text[pos] == ' ' || text[pos] == ',')) ++pos;
      if (pos == close) break;
      const std::size_t start = pos;
      u64 v = 0;
      while (pos < close && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<u64>(text[pos] - '0');
        if (v >= F.size()) throw ParseError(start + 1, "coefficient out of field range");
        ++pos;
      }
      if (pos == start) throw ParseError(pos + 1, "expected a coefficient");
      coeffs.push_back(v);
    }
    return Poly(field, std::move(coeffs));
  }
  if (var == 'x' || var == 'a') throw std::invalid_argument("unsupported variable name");
  BiPoly b = Parser(text, field, var, false).parse();
  return b.is_zero() ? Poly(field) : b[0];
}

}  // namespace ffg
