#ifndef PROJSYMP_RATIONAL_HPP
#define PROJSYMP_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>

namespace projsymp {

/// Arbitrary-precision rational number, always kept in canonical form:
/// gcd(|num|, den) = 1 and den > 0. All arithmetic is exact.
///
/// Thin value wrapper over GMP's mpq_class; it exists so the rest of the
/// library never sees gmpxx expression templates and so parsing/printing
/// uses the one "p/q" format everywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
  Rational(long n, long d);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& n) : v_(n) {}

  /// Parses "p", "-p", "p/q". Throws Error(ConfigError) on malformed input.
  static Rational from_string(const std::string& s);

  std::string str() const;

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational reciprocal() const;

  /// Exact square root if this is the square of a rational, nullopt otherwise.
  std::optional<Rational> exact_sqrt() const;

  double to_double() const { return v_.get_d(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational pow(const Rational& base, long exp);

}  // namespace projsymp

#endif
