#ifndef PROJSYMP_SECTION_HPP
#define PROJSYMP_SECTION_HPP

#include <string>

#include "projsymp/curve.hpp"
#include "projsymp/rational_function.hpp"

namespace projsymp {

/// Weight-k tensor on a hyperelliptic curve, represented as
///   (r0(x) + r1(x)*y) * (dx/y)^k.
/// Weight -1 is a vector field, 0 a function, 1 a one-form, 2 a quadratic
/// differential. Multiplication adds weights and rewrites y^2 = f(x).
class Section {
 public:
  Section() = default;
  Section(int weight, RationalFunction r0, RationalFunction r1, CurvePtr curve);

  static Section zero(int weight, CurvePtr curve) {
    return Section(weight, RationalFunction(), RationalFunction(), std::move(curve));
  }

  int weight() const { return k_; }
  const RationalFunction& r0() const { return r0_; }
  const RationalFunction& r1() const { return r1_; }
  const CurvePtr& curve() const { return curve_; }

  bool is_zero() const { return r0_.is_zero() && r1_.is_zero(); }

  /// d/dx in the function field, defined on weight-0 sections only:
  /// D(x) = 1, D(y) = f'(x) y / (2 f(x)). Throws Error(WrongWeight) otherwise.
  Section derive_ff() const;

  /// For a vector field theta = (r0 + r1 y)(dx/y)^-1, the weight-0 section H
  /// with theta = H * d/dx. Throws Error(WrongWeight) unless weight == -1.
  Section dx_coefficient() const;

  /// The quadratic differential W * dx^2 given a weight-0 W.
  static Section from_dx2_coefficient(const Section& w);

  /// The one-form G * dx given a weight-0 G.
  static Section from_dx_coefficient(const Section& g);

  Section operator-() const;
  Section& operator+=(const Section& o);
  Section& operator-=(const Section& o);
  Section operator*(const Section& o) const;
  Section& operator*=(const Rational& s);
  Section& operator*=(const RationalFunction& s);

  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  friend Section operator*(Section a, const Rational& s) { return a *= s; }
  friend Section operator*(const Rational& s, Section a) { return a *= s; }

  friend bool operator==(const Section& a, const Section& b) {
    return a.k_ == b.k_ && a.r0_ == b.r0_ && a.r1_ == b.r1_;
  }

  std::string str() const;

 private:
  void require_same_geometry(const Section& o) const;
  int k_ = 0;
  RationalFunction r0_, r1_;
  CurvePtr curve_;
};

}  // namespace projsymp

#endif
