#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace mzv {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator (mpq_class canonical form is maintained on every operation).
class BigRational {
public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(static_cast<signed long>(n)) {}
  BigRational(int n) : v_(n) {}
  BigRational(long num, long den);  // throws std::domain_error on den == 0
  explicit BigRational(mpq_class v);

  static BigRational reciprocal_pow(unsigned long base, unsigned long exp);

  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o);  // throws on division by zero

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const { return BigRational(mpq_class(-v_)); }

  bool operator==(const BigRational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const BigRational& o) const;

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  double to_double() const { return v_.get_d(); }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  std::string str() const;  // "p/q", or "p" when the denominator is 1

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

// C(n, k) as an exact integer-valued rational; 0 when k < 0 or k > n.
BigRational binomial(long n, long k);

}  // namespace mzv
