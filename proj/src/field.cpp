#include "hgx/field.hpp"

namespace hgx {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field Field::prime(long p) {
  if (!is_prime(p)) throw Error("NotPrime", "GF(p) modulus " + std::to_string(p) + " is not prime");
  return Field{Kind::Prime, p};
}

std::string Field::to_string() const {
  return is_prime_field() ? "GF(" + std::to_string(p) + ")" : "Q";
}

void Scalar::normalize() {
  v_.canonicalize();
  if (field_.is_prime_field()) {
    if (v_.get_den() != 1) {
      // resolve the denominator with a modular inverse
      mpz_class den_inv;
      mpz_class den = v_.get_den() % field_.p;
      if (den < 0) den += field_.p;
      if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mpz_class(field_.p).get_mpz_t()) == 0)
        throw Error("DivisionByZero", "denominator not invertible mod " + std::to_string(field_.p));
      v_ = mpq_class(v_.get_num() * den_inv, 1);
    }
    mpz_class r = v_.get_num() % field_.p;
    if (r < 0) r += field_.p;
    v_ = mpq_class(r, 1);
  }
}

void Scalar::check_same(const Scalar& o) const {
  if (field_ != o.field_) throw Error("FieldMismatch", "mixed scalars from " + field_.to_string() + " and " + o.field_.to_string());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("DivisionByZero", "inverse of zero in " + field_.to_string());
  if (!field_.is_prime_field()) return Scalar(field_, 1 / v_);
  mpz_class inv;
  mpz_class n = v_.get_num();
  if (mpz_invert(inv.get_mpz_t(), n.get_mpz_t(), mpz_class(field_.p).get_mpz_t()) == 0)
    throw Error("DivisionByZero", "no inverse mod " + std::to_string(field_.p));
  return Scalar(field_, mpq_class(inv, 1));
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field() || v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Scalar parse_scalar(Field f, const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Scalar(f, mpq_class(mpz_class(text), 1));
    mpz_class num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den == 0) throw Error("DivisionByZero", "zero denominator in '" + text + "'");
    return Scalar(f, mpq_class(num, den));
  } catch (const std::invalid_argument&) {
    throw Error("ParseError", "bad scalar literal '" + text + "'");
  }
}

}  // namespace hgx
