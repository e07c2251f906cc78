#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffg {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Thrown when two operands belong to different fields.
struct FieldMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Largest admissible field size; elements are packed into one machine word.
inline constexpr u64 kMaxFieldSize = u64{1} << 62;

/// The finite field F_{p^m} = F_p[y]/(modulus).
///
/// Elements are plain words holding the base-p digit string c_0 + c_1 p + ...
/// of the coefficient vector of their representative; arithmetic goes through
/// the owning Field. Fields up to 2^18 elements (m > 1) use log/exp tables,
/// larger ones multiply digit vectors modulo the modulus.
///
/// Instances are interned: make() with identical (p, modulus) returns the same
/// object, so pointer comparison is field identity. A Field is immutable once
/// built and may be shared across threads.
class Field {
 public:
  /// Builds F_{p^m}. Without a modulus, the first monic irreducible polynomial of
  /// degree m in increasing order of its packed lower coefficients is used.
  /// Throws std::invalid_argument for a composite p, m < 1, or a bad modulus and
  /// std::overflow_error when p^m >= 2^62.
  static FieldPtr make(u64 p, int m = 1, std::optional<std::vector<u64>> modulus = std::nullopt);

  u64 characteristic() const { return p_; }
  int degree() const { return m_; }
  u64 size() const { return q_; }
  /// Monic modulus over F_p, lowest coefficient first (length m+1).
  const std::vector<u64>& modulus() const { return modulus_; }
  bool is_prime_field() const { return m_ == 1; }

  /// Class of y in F_p[y]/(modulus).
  u64 generator() const { return gen_; }
  u64 from_int(i64 v) const;

  u64 add(u64 a, u64 b) const;
  u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }
  u64 neg(u64 a) const;
  u64 mul(u64 a, u64 b) const;
  u64 inv(u64 a) const;
  u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }
  u64 pow(u64 a, u64 e) const;
  /// a^e for possibly negative e (a != 0 when e < 0).
  u64 pow_signed(u64 a, i64 e) const;
  u64 frobenius(u64 a) const { return pow(a, p_); }
  u64 random(std::mt19937_64& rng) const;

  std::vector<u64> digits(u64 a) const;
  u64 pack(std::span<const u64> digits) const;
  std::string to_string(u64 a) const;

  /// p^m exactly; fails when that overflows kMaxFieldSize.
  static u64 checked_power(u64 p, int m);

 private:
  Field(u64 p, int m, std::vector<u64> modulus);
  void build_tables();
  u64 mul_prime(u64 a, u64 b) const;
  u64 mul_generic(u64 a, u64 b) const;
  u64 add_digits(u64 a, u64 b) const;

  u64 p_ = 0;
  int m_ = 0;
  u64 q_ = 0;
  u64 gen_ = 0;
  std::vector<u64> modulus_;
  bool tables_ = false;
  std::vector<std::uint32_t> exp_;   // length 2(q-1)
  std::vector<std::uint32_t> log_;   // length q
  std::vector<std::uint32_t> zech_;  // log(1 + g^i), odd p only; q-1 marks zero
};

bool is_prime(u64 n);

/// Irreducibility of a monic polynomial over F_p (dense, lowest first).
bool is_irreducible_mod_p(std::span<const u64> poly, u64 p);

/// An element together with the field it lives in. Mixing owners throws FieldMismatch.
class FFElem {
 public:
  FFElem(FieldPtr field, u64 value);

  const FieldPtr& field() const { return field_; }
  u64 value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FFElem operator+(const FFElem& o) const;
  FFElem operator-(const FFElem& o) const;
  FFElem operator-() const;
  FFElem operator*(const FFElem& o) const;
  FFElem operator/(const FFElem& o) const;
  bool operator==(const FFElem& o) const;

  FFElem inv() const;
  FFElem pow(u64 e) const;
  FFElem frobenius() const;
  static FFElem random(FieldPtr field, std::mt19937_64& rng);
  std::string to_string() const { return field_->to_string(value_); }

 private:
  void check(const FFElem& o) const;
  FieldPtr field_;
  u64 value_;
};

inline u64 mulmod(u64 a, u64 b, u64 p) {
  if (p < (u64{1} << 32)) return (a * b) % p;
  return static_cast<u64>((static_cast<u128>(a) * b) % p);
}

}  // namespace ffg
