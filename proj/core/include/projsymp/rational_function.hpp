#ifndef PROJSYMP_RATIONAL_FUNCTION_HPP
#define PROJSYMP_RATIONAL_FUNCTION_HPP

#include <iosfwd>
#include <string>

#include "projsymp/polynomial.hpp"

namespace projsymp {

/// Quotient of polynomials kept in reduced form: gcd(num, den) = 1 and the
/// denominator is monic and nonzero. Zero is represented as 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_({Rational(1)}) {}
  RationalFunction(const Rational& c) : num_(c), den_({Rational(1)}) {}  // NOLINT
  RationalFunction(const Polynomial& p) : num_(p), den_({Rational(1)}) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// The numerator when the denominator is 1; throws Error(Internal) otherwise.
  Polynomial as_polynomial() const;

  /// Evaluation; throws Error(DomainError) at a pole.
  Rational operator()(const Rational& x) const;

  RationalFunction derivative() const;
  RationalFunction compose(const RationalFunction& inner) const;
  RationalFunction reciprocal() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string str(const std::string& var = "x") const;

 private:
  void reduce();
  Polynomial num_, den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace projsymp

#endif
