#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace chevex {

/// Raised on invalid user-level input (bad modulus, mismatched fields, ...).
class FieldError : public std::runtime_error {
 public:
  explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

class Scalar;

/// A coefficient field: the rationals (characteristic 0) or a prime field F_p.
/// Fields are small immutable values; copying is free and thread-safe.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::int64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  std::int64_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;

  std::string str() const;

  bool operator==(const Field& other) const = default;

 private:
  explicit Field(std::int64_t p) : p_(p) {}
  std::int64_t p_;  // 0 = rationals, otherwise the (verified prime) modulus
};

/// One field element in canonical form: a reduced fraction with positive
/// denominator over Q, or a residue in [0, p) over F_p.
class Scalar {
 public:
  Scalar() : p_(0), v_(mpq_class(0)) {}

  const Field field() const { return p_ == 0 ? Field::rationals() : Field::prime(p_); }
  std::int64_t characteristic() const { return p_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// Residue in [0, p); only valid over a prime field.
  std::int64_t residue() const;
  /// Exact rational value; only valid over the rationals.
  const mpq_class& rational() const;

  /// Canonical text form, e.g. "3", "-2/5".
  std::string str() const;

  friend class Field;

 private:
  Scalar(std::int64_t p, std::int64_t residue) : p_(p), v_(residue) {}
  Scalar(std::int64_t p, mpq_class q) : p_(p), v_(std::move(q)) {}
  void require_same_field(const Scalar& o) const;

  std::int64_t p_;
  std::variant<std::int64_t, mpq_class> v_;
};

/// Multiplicative inverse of n mod p (p prime, n not divisible by p).
std::int64_t mod_inverse(std::int64_t n, std::int64_t p);

}  // namespace chevex
