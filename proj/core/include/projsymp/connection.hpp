#ifndef PROJSYMP_CONNECTION_HPP
#define PROJSYMP_CONNECTION_HPP

#include <vector>

#include "projsymp/curve.hpp"
#include "projsymp/expansion.hpp"
#include "projsymp/rational_function.hpp"
#include "projsymp/section.hpp"

namespace projsymp {

/// Projective connection: the coefficient q of the chart the host lives in.
/// On a curve, q is the x-chart coefficient; the host may also be the
/// projective line (null curve), where q lives in the affine z-chart.
/// Under a coordinate change x = sigma(w) the coefficient transforms by
/// q~ = (q o sigma) (sigma')^2 + S(sigma).
class ProjectiveConnection {
 public:
  ProjectiveConnection() = default;
  explicit ProjectiveConnection(RationalFunction q, CurvePtr curve = nullptr,
                                std::vector<Rational> family_params = {})
      : q_(std::move(q)), curve_(std::move(curve)), family_params_(std::move(family_params)) {}

  static ProjectiveConnection projective_line() { return ProjectiveConnection(RationalFunction()); }

  const RationalFunction& q() const { return q_; }
  const CurvePtr& curve() const { return curve_; }
  bool on_curve() const { return curve_ != nullptr; }
  const std::vector<Rational>& family_params() const { return family_params_; }

 private:
  RationalFunction q_;
  CurvePtr curve_;
  std::vector<Rational> family_params_;
};

/// Builds a holomorphic projective connection on the curve:
///   q(x) = sum_i [ 3/(8 (x-e_i)^2) + c_i/(x-e_i) ]
/// with the c_i solving sum c_i = 0, sum c_i e_i = -9/4,
/// sum (c_i e_i^2 + (3/4) e_i) = 0, which forces q = O(x^-4) and hence
/// holomorphy at both infinity points; holomorphy at the branch points is
/// re-verified by expansion. Requires f to have 6 distinct rational roots.
ProjectiveConnection build_connection(const CurvePtr& curve);

/// The transformed coefficient q~ in the local frame, as a Laurent series in
/// the frame parameter (q~ multiplies du^2 after division by the square of
/// the parameter map; the Schwarzian term is included).
LaurentSeries connection_in_frame(const ProjectiveConnection& conn, const LocalFrame& frame,
                                  long order);

/// Checks that q~ is holomorphic at every branch point and both infinity
/// points. Throws Error(TheoremViolation) with the offending point otherwise.
void verify_connection_holomorphy(const ProjectiveConnection& conn);

/// The order-3 operator attached to the connection, on the projective line:
/// h d/dz -> (h''' + 2 q h' + q' h) dz^2, returned as the dz^2 coefficient.
RationalFunction apply_delta_line(const RationalFunction& q, const RationalFunction& h);

/// The same operator on the curve: takes a vector field (weight -1 section),
/// differentiates its d/dx coefficient in the function field and converts
/// dx^2 = f (dx/y)^2. Returns a weight-2 section.
Section apply_delta(const ProjectiveConnection& conn, const Section& theta);

}  // namespace projsymp

#endif
