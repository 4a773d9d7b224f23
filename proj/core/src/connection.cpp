#include "projsymp/connection.hpp"

#include "projsymp/error.hpp"
#include "projsymp/matrix.hpp"

namespace projsymp {

ProjectiveConnection build_connection(const CurvePtr& curve) {
  const auto& roots = curve->rational_roots();
  if (roots.size() != 6) {
    fail(ErrorKind::NotSquarefree,
         "build_connection needs 6 distinct rational roots, found " +
             std::to_string(roots.size()));
  }

  // Linear system for the residues c_i of the simple poles.
  RationalMatrix sys(3, 6);
  std::vector<Rational> rhs(3, Rational(0));
  Rational root_sum(0);
  for (size_t i = 0; i < 6; ++i) {
    const Rational& e = roots[i];
    sys.at(0, i) = Rational(1);
    sys.at(1, i) = e;
    sys.at(2, i) = e * e;
    root_sum += e;
  }
  rhs[1] = Rational(-9, 4);
  rhs[2] = Rational(-3, 4) * root_sum;
  auto sol = sys.solve(rhs);
  if (!sol) fail(ErrorKind::Internal, "connection coefficient system is inconsistent");

  RationalFunction q;
  Rational three_eighth(3, 8);
  for (size_t i = 0; i < 6; ++i) {
    Polynomial lin({-roots[i], Rational(1)});
    q += RationalFunction(Polynomial({three_eighth}), lin * lin);
    q += RationalFunction(Polynomial({(*sol)[i]}), lin);
  }

  ProjectiveConnection conn(q, curve, *sol);
  verify_connection_holomorphy(conn);
  return conn;
}

LaurentSeries connection_in_frame(const ProjectiveConnection& conn, const LocalFrame& frame,
                                  long order) {
  if (!conn.on_curve()) fail(ErrorKind::DomainError, "frame transforms need a curve host");
  conn.curve()->validate_point(frame.point);
  const Rational& c = frame.scale;
  long prec = order + 16;
  for (int attempt = 0; attempt < 4; ++attempt, prec *= 2) {
    LaurentSeries out;
    switch (frame.point.tag) {
      case PointSpec::Tag::InfPlus:
      case PointSpec::Tag::InfMinus: {
        // sigma(u) = 1/(c u) is Mobius: S(sigma) = 0, sigma' = -1/(c u^2).
        LaurentSeries x = LaurentSeries::monomial(-1, c.reciprocal());
        LaurentSeries dsig = LaurentSeries::monomial(-2, -c.reciprocal());
        out = rf_at_series(conn.q(), x, prec) * dsig * dsig;
        break;
      }
      case PointSpec::Tag::Branch: {
        // sigma(u) = e + c^2 u^2: S(sigma) = -3/(2 u^2), sigma' = 2 c^2 u.
        const Rational& e = frame.point.x;
        LaurentSeries x(0, {e, Rational(0), c * c}, LaurentSeries::kExactPrec);
        LaurentSeries dsig = LaurentSeries::monomial(1, Rational(2) * c * c);
        out = rf_at_series(conn.q(), x, prec) * dsig * dsig +
              LaurentSeries::monomial(-2, Rational(-3, 2));
        break;
      }
      case PointSpec::Tag::Affine: {
        // sigma(u) = x0 + c u is Mobius: S = 0, sigma' = c.
        LaurentSeries x(0, {frame.point.x, c}, LaurentSeries::kExactPrec);
        out = rf_at_series(conn.q(), x, prec) * (c * c);
        break;
      }
    }
    if (out.precision() >= order + 1) return out.truncated(order + 1);
  }
  fail(ErrorKind::InsufficientPrecision, "connection transform at " + frame.point.str());
}

void verify_connection_holomorphy(const ProjectiveConnection& conn) {
  std::vector<PointSpec> points = {PointSpec::inf_plus(), PointSpec::inf_minus()};
  for (const auto& e : conn.curve()->rational_roots()) points.push_back(PointSpec::branch(e));
  for (const auto& p : points) {
    LaurentSeries q_local = connection_in_frame(conn, LocalFrame{p, Rational(1)}, 2);
    if (q_local.valuation() < 0) {
      fail(ErrorKind::TheoremViolation,
           "transformed connection has a pole at " + p.str() + ": " + q_local.str());
    }
  }
}

RationalFunction apply_delta_line(const RationalFunction& q, const RationalFunction& h) {
  RationalFunction h1 = h.derivative();
  RationalFunction h3 = h1.derivative().derivative();
  return h3 + Rational(2) * RationalFunction(q) * h1 + q.derivative() * h;
}

Section apply_delta(const ProjectiveConnection& conn, const Section& theta) {
  if (!conn.on_curve()) fail(ErrorKind::DomainError, "apply_delta on a curve needs a curve host");
  if (theta.weight() != -1) fail(ErrorKind::WrongWeight, "apply_delta expects a vector field");
  Section h = theta.dx_coefficient();
  Section h1 = h.derive_ff();
  Section h3 = h1.derive_ff().derive_ff();
  Section value = h3;
  Section t1 = h1;
  t1 *= conn.q() * Rational(2);
  value += t1;
  Section t2 = h;
  t2 *= conn.q().derivative();
  value += t2;
  return Section::from_dx2_coefficient(value);
}

}  // namespace projsymp
