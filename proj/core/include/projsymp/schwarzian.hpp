#ifndef PROJSYMP_SCHWARZIAN_HPP
#define PROJSYMP_SCHWARZIAN_HPP

#include "projsymp/rational_function.hpp"

namespace projsymp {

/// S(sigma) = sigma'''/sigma' - (3/2)(sigma''/sigma')^2.
/// Vanishes exactly on Mobius maps. Throws Error(DegenerateMap) for constants.
RationalFunction schwarzian(const RationalFunction& sigma);

/// z -> (a z + b)/(c z + d) with ad - bc != 0.
struct Mobius {
  Rational a{1}, b{0}, c{0}, d{1};

  Rational det() const { return a * d - b * c; }
  RationalFunction to_rf() const;
  Mobius inverse() const;
  Mobius compose(const Mobius& inner) const;  // this after inner
};

/// Pushforward of the vector field h(z) d/dz along phi: (h * phi') o phi^-1.
RationalFunction pushforward_field(const RationalFunction& h, const Mobius& phi);

/// Pushforward of the quadratic differential Q(z) dz^2 along phi:
/// (Q o phi^-1) * ((phi^-1)')^2.
RationalFunction pushforward_quadratic(const RationalFunction& q, const Mobius& phi);

}  // namespace projsymp

#endif
