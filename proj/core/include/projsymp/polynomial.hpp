#ifndef PROJSYMP_POLYNOMIAL_HPP
#define PROJSYMP_POLYNOMIAL_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "projsymp/rational.hpp"

namespace projsymp {

/// Dense univariate polynomial over Rational, coefficients stored in
/// ascending order with trailing zeros stripped. The zero polynomial has an
/// empty coefficient vector and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT: constant polynomial
  Polynomial(std::initializer_list<Rational> ascending);
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial x();
  static Polynomial monomial(long degree, const Rational& c);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const;
  Rational coeff(long i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial compose(const Polynomial& inner) const;

  /// Euclidean division: returns (quotient, remainder) with
  /// deg(remainder) < deg(divisor). Divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string str(const std::string& var = "x") const;

 private:
  void strip();
  std::vector<Rational> c_;
};

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Exact division; throws Error(Internal) if the division has a remainder.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace projsymp

#endif
