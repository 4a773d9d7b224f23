#include "projsymp/jets.hpp"

#include "projsymp/error.hpp"

namespace projsymp {

Jet jet_of(const RationalFunction& h, const Rational& z0, long order) {
  if (order < 0) fail(ErrorKind::DomainError, "jet order must be >= 0");
  Jet j;
  j.base = z0;
  j.d.reserve(static_cast<size_t>(order) + 1);
  RationalFunction cur = h;
  for (long i = 0; i <= order; ++i) {
    j.d.push_back(cur(z0));
    if (i < order) cur = cur.derivative();
  }
  return j;
}

Polynomial Sl2Element::to_field() const {
  return Polynomial({beta, Rational(2) * alpha, -gamma});
}

Sl2Element Sl2Element::commutator(const Sl2Element& o) const {
  // [X, Y] for X = [[a, b], [g, -a]], Y = [[a', b'], [g', -a']]:
  // alpha = b g' - g b', beta = 2(a b' - b a'), gamma = 2(g a' - a g').
  return {beta * o.gamma - gamma * o.beta,
          Rational(2) * (alpha * o.beta - beta * o.alpha),
          Rational(2) * (gamma * o.alpha - alpha * o.gamma)};
}

Rational Sl2Element::trace_product(const Sl2Element& o) const {
  return Rational(2) * alpha * o.alpha + beta * o.gamma + gamma * o.beta;
}

Sl2Element eta2_inverse(const Jet& j2) {
  if (j2.order() < 2) fail(ErrorKind::DomainError, "eta2_inverse needs a 2-jet");
  const Rational& z0 = j2.base;
  const Rational& v0 = j2.d[0];
  const Rational& v1 = j2.d[1];
  const Rational& v2 = j2.d[2];
  // Solve value/derivatives of beta + 2 alpha z - gamma z^2 at z0.
  Rational gamma = -v2 / Rational(2);
  Rational alpha = (v1 - v2 * z0) / Rational(2);
  Rational beta = v0 - v1 * z0 + v2 * z0 * z0 / Rational(2);
  return {alpha, beta, gamma};
}

Jet eta3_of(const Sl2Element& x, const Rational& z0) {
  Polynomial field = x.to_field();
  return jet_of(RationalFunction(field), z0, 3);
}

Rational trace_form_kappa() { return Rational(-2); }

Rational trace_form(const Jet& u, const Jet& v) {
  if (u.base != v.base) fail(ErrorKind::BasePointMismatch, "trace_form jets at different points");
  return trace_form_kappa() * eta2_inverse(u).trace_product(eta2_inverse(v));
}

RationalFunction field_bracket(const RationalFunction& u, const RationalFunction& v) {
  return u.derivative() * v - u * v.derivative();
}

}  // namespace projsymp
