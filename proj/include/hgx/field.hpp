#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hgx {

/// Error with a stable machine-readable code ("NoSolution", "NotAGroup", ...).
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

/// Base field: the rationals or a prime field GF(p).
struct Field {
  enum class Kind { Rationals, Prime };
  Kind kind = Kind::Rationals;
  long p = 0;  // modulus, only meaningful for Kind::Prime

  static Field rationals() { return Field{Kind::Rationals, 0}; }
  static Field prime(long p);

  bool is_prime_field() const { return kind == Kind::Prime; }
  long characteristic() const { return is_prime_field() ? p : 0; }
  bool operator==(const Field&) const = default;
  std::string to_string() const;
};

/// Exact field element. Rationals are arbitrary-precision fractions; GF(p)
/// values are canonical representatives in [0, p).
class Scalar {
public:
  Scalar() : field_(Field::rationals()), v_(0) {}
  Scalar(Field f, mpq_class v) : field_(f), v_(std::move(v)) { normalize(); }
  Scalar(Field f, long n) : field_(f), v_(n) { normalize(); }

  static Scalar zero(Field f) { return Scalar(f, 0); }
  static Scalar one(Field f) { return Scalar(f, 1); }

  const Field& field() const { return field_; }
  const mpq_class& value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  /// "p/q" or "n" over Q; the canonical representative over GF(p).
  std::string to_string() const;

private:
  void normalize();
  void check_same(const Scalar& o) const;

  Field field_;
  mpq_class v_;
};

/// Parse "n", "-n" or "n/d"; over GF(p), "n/d" is resolved via modular inverse.
Scalar parse_scalar(Field f, const std::string& text);

}  // namespace hgx
