#include "chevex/field.hpp"

namespace chevex {

namespace {

std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
  std::int64_t r = n % p;
  return r < 0 ? r + p : r;
}

// Smallest prime factor, or 0 if n is prime. n >= 2.
std::int64_t smallest_factor(std::int64_t n) {
  if (n % 2 == 0) return n == 2 ? 0 : 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return d;
  return 0;
}

mpq_class canon(mpq_class q) {
  q.canonicalize();
  return q;
}

}  // namespace

Field Field::prime(std::int64_t p) {
  if (p < 2) throw FieldError("field modulus must be a prime >= 2, got " + std::to_string(p));
  std::int64_t f = smallest_factor(p);
  if (f != 0) {
    throw FieldError("field modulus is not prime: " + std::to_string(p) + " = " +
                     std::to_string(f) + "·" + std::to_string(p / f));
  }
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t n) const {
  if (p_ == 0) return Scalar(0, canon(mpq_class(n)));
  return Scalar(p_, mod_reduce(n, p_));
}

std::string Field::str() const {
  return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

std::int64_t mod_inverse(std::int64_t n, std::int64_t p) {
  // extended Euclid on (n mod p, p)
  std::int64_t a = mod_reduce(n, p);
  if (a == 0) throw FieldError("division by zero in F" + std::to_string(p));
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw FieldError("no inverse: gcd != 1");
  return mod_reduce(t, p);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (p_ != o.p_) throw FieldError("scalars from different fields: " + field().str() + " vs " + o.field().str());
}

bool Scalar::is_zero() const {
  if (p_ == 0) return std::get<mpq_class>(v_) == 0;
  return std::get<std::int64_t>(v_) == 0;
}

bool Scalar::is_one() const {
  if (p_ == 0) return std::get<mpq_class>(v_) == 1;
  return std::get<std::int64_t>(v_) == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (p_ == 0) return Scalar(0, canon(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
  return Scalar(p_, mod_reduce(std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_), p_));
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  if (p_ == 0) return Scalar(0, canon(std::get<mpq_class>(v_) - std::get<mpq_class>(o.v_)));
  return Scalar(p_, mod_reduce(std::get<std::int64_t>(v_) - std::get<std::int64_t>(o.v_), p_));
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (p_ == 0) return Scalar(0, canon(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
  return Scalar(p_, mod_reduce(std::get<std::int64_t>(v_) * std::get<std::int64_t>(o.v_), p_));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (p_ == 0) return Scalar(0, canon(-std::get<mpq_class>(v_)));
  return Scalar(p_, mod_reduce(-std::get<std::int64_t>(v_), p_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("inverse of zero");
  if (p_ == 0) return Scalar(0, canon(mpq_class(1) / std::get<mpq_class>(v_)));
  return Scalar(p_, mod_inverse(std::get<std::int64_t>(v_), p_));
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  if (p_ == 0) return std::get<mpq_class>(v_) == std::get<mpq_class>(o.v_);
  return std::get<std::int64_t>(v_) == std::get<std::int64_t>(o.v_);
}

std::int64_t Scalar::residue() const {
  if (p_ == 0) throw FieldError("residue() on a rational scalar");
  return std::get<std::int64_t>(v_);
}

const mpq_class& Scalar::rational() const {
  if (p_ != 0) throw FieldError("rational() on a prime-field scalar");
  return std::get<mpq_class>(v_);
}

std::string Scalar::str() const {
  if (p_ != 0) return std::to_string(std::get<std::int64_t>(v_));
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace chevex
