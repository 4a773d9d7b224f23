#ifndef PROJSYMP_JETS_HPP
#define PROJSYMP_JETS_HPP

#include <vector>

#include "projsymp/rational_function.hpp"

namespace projsymp {

/// Jet of a local coefficient at a rational base point: value and derivatives
/// up to the jet order (order n stores n+1 rationals).
struct Jet {
  Rational base;
  std::vector<Rational> d;  // d[i] = i-th derivative at base

  long order() const { return static_cast<long>(d.size()) - 1; }
  const Rational& value() const { return d[0]; }

  Jet truncated(long new_order) const {
    Jet j{base, std::vector<Rational>(d.begin(), d.begin() + new_order + 1)};
    return j;
  }

  friend bool operator==(const Jet& a, const Jet& b) { return a.base == b.base && a.d == b.d; }
};

/// Jet of a rational function at z0 (derivatives by repeated differentiation).
/// Throws Error(DomainError) if z0 is a pole.
Jet jet_of(const RationalFunction& h, const Rational& z0, long order);

/// Order-0 projection of a jet: the underlying field value.
inline const Rational& p0(const Jet& j) { return j.value(); }

/// Traceless 2x2 matrix [[alpha, beta], [gamma, -alpha]], identified with the
/// projective vector field (beta + 2 alpha z - gamma z^2) d/dz.
struct Sl2Element {
  Rational alpha, beta, gamma;

  Polynomial to_field() const;
  Sl2Element commutator(const Sl2Element& o) const;
  Rational trace_product(const Sl2Element& o) const;  // tr(X Y)

  Sl2Element operator+(const Sl2Element& o) const {
    return {alpha + o.alpha, beta + o.beta, gamma + o.gamma};
  }
  Sl2Element operator*(const Rational& s) const { return {alpha * s, beta * s, gamma * s}; }
  friend bool operator==(const Sl2Element& a, const Sl2Element& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma;
  }
};

/// The unique sl2 element whose field matches the given 2-jet at its base
/// point (the inverse of restricting global fields to 2-jets).
Sl2Element eta2_inverse(const Jet& j2);

/// 3-jet at z0 of the field of X: the splitting J^2 -> J^3 through global
/// sl2 fields.
Jet eta3_of(const Sl2Element& x, const Rational& z0);

/// Trace form on 2-jets: kappa * tr(eta2_inverse(u) eta2_inverse(v)) with the
/// module-wide calibration constant kappa. Throws Error(BasePointMismatch) if
/// the jets are based at different points.
Rational trace_form(const Jet& u, const Jet& v);

/// The calibration constant for the trace form, fixed once by requiring the
/// two pairing routes to agree on the cubic field z^3 d/dz (see hforms).
Rational trace_form_kappa();

/// Bracket on field coefficients compatible with the matrix commutator under
/// the sl2 correspondence: [u, v] = u'v - uv'.
RationalFunction field_bracket(const RationalFunction& u, const RationalFunction& v);

}  // namespace projsymp

#endif
