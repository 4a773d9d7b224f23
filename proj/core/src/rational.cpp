#include "projsymp/rational.hpp"

#include <ostream>

#include "projsymp/error.hpp"

namespace projsymp {

Rational::Rational(long n, long d) {
  if (d == 0) fail(ErrorKind::DomainError, "rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorKind::DomainError, "division by zero rational");
  v_ /= o.v_;
  return *this;
}

Rational Rational::reciprocal() const {
  if (is_zero()) fail(ErrorKind::DomainError, "reciprocal of zero");
  return Rational(mpq_class(v_.get_den(), v_.get_num()));
}

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) fail(ErrorKind::ConfigError, "empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    fail(ErrorKind::ConfigError, "malformed rational literal '" + s + "'");
  }
  if (q.get_den() == 0) {
    fail(ErrorKind::ConfigError, "zero denominator in rational literal '" + s + "'");
  }
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<Rational> Rational::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  mpz_class num = v_.get_num();
  mpz_class den = v_.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

Rational pow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) return pow(base.reciprocal(), -exp);
  Rational acc(1);
  Rational b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace projsymp
