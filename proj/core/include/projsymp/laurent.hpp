#ifndef PROJSYMP_LAURENT_HPP
#define PROJSYMP_LAURENT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "projsymp/polynomial.hpp"
#include "projsymp/rational.hpp"
#include "projsymp/rational_function.hpp"

namespace projsymp {

/// Truncated Laurent series over Rational with explicit precision tracking.
///
/// A series stores coefficients for exponents valuation() .. valuation()+n-1
/// and declares every exponent < precision() as known (unstored known
/// coefficients are zero). Exponents >= precision() are unknown; reading one
/// throws Error(InsufficientPrecision). Arithmetic propagates precision
/// pessimistically, so a coefficient is never fabricated.
///
/// Exact values (finite Laurent polynomials) carry the sentinel precision
/// kExactPrec. Operations that would genuinely need infinitely many terms
/// (inverse, sqrt of a non-monomial exact series) require a target precision.
class LaurentSeries {
 public:
  static constexpr long kExactPrec = 1L << 40;

  LaurentSeries() : val_(kExactPrec), prec_(kExactPrec) {}

  LaurentSeries(long valuation, std::vector<Rational> coeffs, long precision);

  static LaurentSeries zero() { return LaurentSeries(); }
  static LaurentSeries zero_to_precision(long precision) {
    return LaurentSeries(precision, {}, precision);
  }
  static LaurentSeries monomial(long exponent, const Rational& c);
  static LaurentSeries from_polynomial(const Polynomial& p);

  bool is_exact() const { return prec_ == kExactPrec; }
  bool is_zero() const { return c_.empty() && is_exact(); }
  bool is_zero_to_precision() const { return c_.empty(); }

  /// Lowest known exponent with nonzero coefficient. For a series that is
  /// zero to its precision this returns precision() (a lower bound).
  long valuation() const { return val_; }
  long precision() const { return prec_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Coefficient of s^exponent. Throws Error(InsufficientPrecision) when the
  /// exponent is at or beyond the known precision.
  Rational coefficient(long exponent) const;

  /// Coefficient of s^-1; requires it to be known.
  Rational residue() const { return coefficient(-1); }

  LaurentSeries truncated(long precision) const;
  LaurentSeries shifted(long k) const;        // multiply by s^k
  LaurentSeries scaled_parameter(const Rational& c) const;  // s -> c*s
  LaurentSeries derivative() const;

  /// Multiplicative inverse. For exact non-monomial input a target precision
  /// is mandatory. Throws Error(DomainError) on (exact) zero input and
  /// Error(InsufficientPrecision) when the input is zero to its precision.
  LaurentSeries inverse(std::optional<long> target = std::nullopt) const;

  LaurentSeries pow(long e, std::optional<long> target = std::nullopt) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const LaurentSeries& o);
  LaurentSeries& operator*=(const Rational& s);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(LaurentSeries a, const LaurentSeries& b) { return a *= b; }
  friend LaurentSeries operator*(LaurentSeries a, const Rational& s) { return a *= s; }
  friend LaurentSeries operator*(const Rational& s, LaurentSeries a) { return a *= s; }

  /// Equality of all coefficients up to the smaller precision.
  bool agrees_with(const LaurentSeries& o) const;

  std::string str(const std::string& var = "s") const;

 private:
  void normalize();
  long val_;
  std::vector<Rational> c_;  // c_[i] is the coefficient of s^(val_+i)
  long prec_;
};

/// Square root with branch fixed by the positive root of the leading
/// coefficient. Requires even valuation and a leading coefficient that is a
/// square in Q; throws Error(NotASquare) otherwise.
LaurentSeries series_sqrt(const LaurentSeries& s, std::optional<long> target = std::nullopt);

/// p evaluated at a series by Horner's rule.
LaurentSeries poly_at_series(const Polynomial& p, const LaurentSeries& s);

/// f evaluated at a series; `target` bounds the precision of the denominator
/// inversion when everything in sight is exact.
LaurentSeries rf_at_series(const RationalFunction& f, const LaurentSeries& s,
                           std::optional<long> target = std::nullopt);

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s);

}  // namespace projsymp

#endif
