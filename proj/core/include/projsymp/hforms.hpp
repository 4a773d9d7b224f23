#ifndef PROJSYMP_HFORMS_HPP
#define PROJSYMP_HFORMS_HPP

#include "projsymp/connection.hpp"
#include "projsymp/jets.hpp"
#include "projsymp/rational_function.hpp"
#include "projsymp/section.hpp"

namespace projsymp {

/// First pairing route on the projective line / a single chart with
/// connection coefficient q: the dz coefficient of f * Delta(g) + g * Delta(f).
RationalFunction h1_line(const RationalFunction& f, const RationalFunction& g,
                         const RationalFunction& q);

/// The chart function whose exterior derivative realizes the second route:
/// f_delta(j2 f, j2 g) = kappa * [ tr(X_f X_g) - q f g ]
///                     = (f g'' + f'' g) - f' g' + 2 q f g  for kappa = -2.
/// The q term is the connection correction of the jet trivialization; it
/// vanishes in any chart where q = 0, where the expression reduces to the
/// plain trace form on 2-jets.
RationalFunction trace_pairing_line(const RationalFunction& f, const RationalFunction& g,
                                    const RationalFunction& q);

/// Second pairing route: d of the trace pairing, as a dz coefficient.
RationalFunction h2_line(const RationalFunction& f, const RationalFunction& g,
                         const RationalFunction& q);

/// Pointwise first route on 3-jets (value of the dz coefficient at the base
/// point). q_jet must carry q and q' at the same base point.
/// Throws Error(BasePointMismatch) when base points differ.
Rational h1_at(const Jet& f3, const Jet& g3, const Jet& q_jet);

/// Recomputes the trace-form calibration constant from the cubic field:
/// the unique kappa with h2 = h1 for f = g = z^3, q = 0. The module freezes
/// kappa = -2; this function exists so the suites can re-derive and assert it.
Rational calibrate_kappa();

/// Function-field versions on the curve, acting on d/dx coefficients
/// (weight-0 sections); the derivative is derive_ff. Results are dx
/// coefficients as weight-0 sections.
Section h1_ff(const Section& u, const Section& v, const ProjectiveConnection& conn);
Section trace_pairing_ff(const Section& u, const Section& v, const ProjectiveConnection& conn);
Section h2_ff(const Section& u, const Section& v, const ProjectiveConnection& conn);

/// H1 on two vector fields (weight -1 sections), contracted to a one-form:
/// theta1 * Delta(theta2) + theta2 * Delta(theta1).
Section h1_fields(const Section& theta1, const Section& theta2, const ProjectiveConnection& conn);

/// The trace pairing of two vector fields as a function on the curve
/// (weight-0 section); its differential is h1_fields as a one-form.
Section trace_pairing_fields(const Section& theta1, const Section& theta2,
                             const ProjectiveConnection& conn);

}  // namespace projsymp

#endif
