#include "mzv/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace mzv {

BigRational::BigRational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational::BigRational(mpq_class v) : v_(std::move(v)) {
  v_.canonicalize();
}

BigRational BigRational::reciprocal_pow(unsigned long base, unsigned long exp) {
  if (base == 0) throw std::domain_error("reciprocal of zero");
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), base, exp);
  mpq_class q(1, p);
  return BigRational(std::move(q));
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::strong_ordering BigRational::operator<=>(const BigRational& o) const {
  int c = cmp(v_, o.v_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string BigRational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
  return os << q.str();
}

BigRational binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return BigRational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return BigRational(mpq_class(b));
}

}  // namespace mzv
