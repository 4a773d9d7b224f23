#include "projsymp/schwarzian.hpp"

#include "projsymp/error.hpp"

namespace projsymp {

RationalFunction schwarzian(const RationalFunction& sigma) {
  RationalFunction d1 = sigma.derivative();
  if (d1.is_zero()) fail(ErrorKind::DegenerateMap, "Schwarzian of a constant map");
  RationalFunction d2 = d1.derivative();
  RationalFunction d3 = d2.derivative();
  RationalFunction ratio = d2 / d1;
  return d3 / d1 - ratio * ratio * Rational(3, 2);
}

RationalFunction Mobius::to_rf() const {
  if (det().is_zero()) fail(ErrorKind::DegenerateMap, "Mobius map with zero determinant");
  return RationalFunction(Polynomial({b, a}), Polynomial({d, c}));
}

Mobius Mobius::inverse() const {
  if (det().is_zero()) fail(ErrorKind::DegenerateMap, "Mobius map with zero determinant");
  return Mobius{d, -b, -c, a};
}

Mobius Mobius::compose(const Mobius& inner) const {
  return Mobius{a * inner.a + b * inner.c, a * inner.b + b * inner.d,
                c * inner.a + d * inner.c, c * inner.b + d * inner.d};
}

RationalFunction pushforward_field(const RationalFunction& h, const Mobius& phi) {
  RationalFunction inv = phi.inverse().to_rf();
  return (h * phi.to_rf().derivative()).compose(inv);
}

RationalFunction pushforward_quadratic(const RationalFunction& q, const Mobius& phi) {
  RationalFunction inv = phi.inverse().to_rf();
  RationalFunction dinv = inv.derivative();
  return q.compose(inv) * dinv * dinv;
}

}  // namespace projsymp
