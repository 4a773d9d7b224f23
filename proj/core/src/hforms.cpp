#include "projsymp/hforms.hpp"

#include "projsymp/error.hpp"

namespace projsymp {

RationalFunction h1_line(const RationalFunction& f, const RationalFunction& g,
                         const RationalFunction& q) {
  return f * apply_delta_line(q, g) + g * apply_delta_line(q, f);
}

RationalFunction trace_pairing_line(const RationalFunction& f, const RationalFunction& g,
                                    const RationalFunction& q) {
  RationalFunction f1 = f.derivative();
  RationalFunction g1 = g.derivative();
  RationalFunction raw = f1 * g1 * Rational(1, 2) -
                         (f * g1.derivative() + f1.derivative() * g) * Rational(1, 2) - q * f * g;
  return trace_form_kappa() * raw;
}

RationalFunction h2_line(const RationalFunction& f, const RationalFunction& g,
                         const RationalFunction& q) {
  return trace_pairing_line(f, g, q).derivative();
}

Rational h1_at(const Jet& f3, const Jet& g3, const Jet& q_jet) {
  if (f3.base != g3.base || f3.base != q_jet.base) {
    fail(ErrorKind::BasePointMismatch, "h1_at jets based at different points");
  }
  if (f3.order() < 3 || g3.order() < 3 || q_jet.order() < 1) {
    fail(ErrorKind::DomainError, "h1_at needs 3-jets of the fields and a 1-jet of q");
  }
  auto delta = [&](const Jet& j) {
    return j.d[3] + Rational(2) * q_jet.d[0] * j.d[1] + q_jet.d[1] * j.d[0];
  };
  return p0(f3) * delta(g3) + p0(g3) * delta(f3);
}

Rational calibrate_kappa() {
  // f = g = z^3, q = 0: h1 = 12 z^3; the raw (kappa = 1) trace route gives
  // d/dz [ (f'g')/2 - (fg'' + f''g)/2 ] = -6 z^3. The scalar is their exact
  // polynomial ratio.
  RationalFunction cubic{Polynomial::monomial(3, Rational(1))};
  RationalFunction q;  // zero
  RationalFunction h1 = h1_line(cubic, cubic, q);
  RationalFunction f1 = cubic.derivative();
  RationalFunction raw = (f1 * f1 * Rational(1, 2) -
                          cubic * cubic.derivative().derivative() /* f g'' */)
                             .derivative();
  if (raw.is_zero()) fail(ErrorKind::Internal, "degenerate calibration input");
  RationalFunction ratio = h1 / raw;
  if (!ratio.is_polynomial() || ratio.num().degree() != 0) {
    fail(ErrorKind::TheoremViolation, "calibration requires a constant scalar, got " + ratio.str());
  }
  return ratio.num().coeff(0);
}

Section h1_ff(const Section& u, const Section& v, const ProjectiveConnection& conn) {
  auto delta_coeff = [&](const Section& w) {
    Section w1 = w.derive_ff();
    Section w3 = w1.derive_ff().derive_ff();
    Section t1 = w1;
    t1 *= conn.q() * Rational(2);
    Section t2 = w;
    t2 *= conn.q().derivative();
    return w3 + t1 + t2;
  };
  return u * delta_coeff(v) + v * delta_coeff(u);
}

Section trace_pairing_ff(const Section& u, const Section& v, const ProjectiveConnection& conn) {
  Section u1 = u.derive_ff();
  Section v1 = v.derive_ff();
  Section raw = u1 * v1;
  raw *= Rational(1, 2);
  Section second = u * v1.derive_ff() + u1.derive_ff() * v;
  second *= Rational(1, 2);
  raw -= second;
  Section qterm = u * v;
  qterm *= conn.q();
  raw -= qterm;
  Section out = raw;
  out *= trace_form_kappa();
  return out;
}

Section h2_ff(const Section& u, const Section& v, const ProjectiveConnection& conn) {
  return trace_pairing_ff(u, v, conn).derive_ff();
}

Section h1_fields(const Section& theta1, const Section& theta2,
                  const ProjectiveConnection& conn) {
  return theta1 * apply_delta(conn, theta2) + theta2 * apply_delta(conn, theta1);
}

Section trace_pairing_fields(const Section& theta1, const Section& theta2,
                             const ProjectiveConnection& conn) {
  return trace_pairing_ff(theta1.dx_coefficient(), theta2.dx_coefficient(), conn);
}

}  // namespace projsymp
