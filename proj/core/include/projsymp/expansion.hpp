#ifndef PROJSYMP_EXPANSION_HPP
#define PROJSYMP_EXPANSION_HPP

#include "projsymp/curve.hpp"
#include "projsymp/laurent.hpp"
#include "projsymp/section.hpp"

namespace projsymp {

/// Series value in a local frame. At a branch point of y^2 = f(x) the
/// expansion of y involves sqrt(f'(e)), so values live in the quadratic
/// extension Q(sqrt(d)): value = plain + radical * sqrt(d). At all other
/// frames the radical part is identically zero.
struct FrameExpansion {
  LaurentSeries plain;
  LaurentSeries radical;
  Rational radicand{1};

  static FrameExpansion from_plain(LaurentSeries s) {
    return {std::move(s), LaurentSeries::zero(), Rational(1)};
  }

  bool pure_plain() const { return radical.is_zero(); }

  /// Smallest exponent carrying a (known) nonzero coefficient; when the value
  /// is zero to precision this is a lower bound.
  long valuation() const;
  long precision() const;

  Rational plain_coefficient(long e) const { return plain.coefficient(e); }
  Rational radical_coefficient(long e) const { return radical.coefficient(e); }

  FrameExpansion operator-() const;
  FrameExpansion& operator+=(const FrameExpansion& o);
  FrameExpansion& operator-=(const FrameExpansion& o);
  FrameExpansion operator*(const FrameExpansion& o) const;
  FrameExpansion inverse() const;
  FrameExpansion pow(long e) const;
  FrameExpansion derivative() const;
  FrameExpansion operator*(const Rational& c) const;

  friend FrameExpansion operator+(FrameExpansion a, const FrameExpansion& b) { return a += b; }
  friend FrameExpansion operator-(FrameExpansion a, const FrameExpansion& b) { return a -= b; }

  bool agrees_with(const FrameExpansion& o) const;

  std::string str(const std::string& var = "t") const;

 private:
  void merge_radicand(const FrameExpansion& o);
};

/// A choice of local parameter u at a point. The canonical parameters are
/// s = 1/x at the infinity points, t with x = e + t^2 at a branch point and
/// x - x0 at an affine point; the frame's parameter u satisfies
/// canonical = scale * u. scale != 1 exercises parameter independence.
struct LocalFrame {
  PointSpec point;
  Rational scale{1};
};

/// Laurent expansion of the full weighted expression of `sec` in the frame,
/// including the (dx/y)^k factor rewritten in the local parameter (the
/// result multiplies du^k). Coefficients are known at least through
/// exponent `order`; throws Error(InsufficientPrecision) if that cannot be
/// achieved.
FrameExpansion expand_at(const Section& sec, const LocalFrame& frame, long order);
FrameExpansion expand_at(const Section& sec, const PointSpec& p, long order);

/// Residue of a weight-1 section at p, independent of the local parameter.
/// Throws Error(WrongWeight) unless the weight is 1.
Rational residue_at(const Section& sec, const LocalFrame& frame);
Rational residue_at(const Section& sec, const PointSpec& p);

/// Expansion of y itself in the frame (used by frame validity tests).
FrameExpansion expand_y(const CurvePtr& curve, const LocalFrame& frame, long order);

/// Expansion of the coordinate x in the frame.
LaurentSeries expand_x(const CurvePtr& curve, const LocalFrame& frame, long order);

}  // namespace projsymp

#endif
