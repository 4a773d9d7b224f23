#include "projsymp/expansion.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "projsymp/error.hpp"

namespace projsymp {

long FrameExpansion::valuation() const {
  return std::min(plain.valuation(), radical.valuation());
}

long FrameExpansion::precision() const {
  return std::min(plain.precision(), radical.precision());
}

void FrameExpansion::merge_radicand(const FrameExpansion& o) {
  if (radical.is_zero() && !o.radical.is_zero()) radicand = o.radicand;
  if (!radical.is_zero() && !o.radical.is_zero() && radicand != o.radicand) {
    fail(ErrorKind::GeometryMismatch, "mixing expansions over different radicands");
  }
}

FrameExpansion FrameExpansion::operator-() const { return {-plain, -radical, radicand}; }

FrameExpansion& FrameExpansion::operator+=(const FrameExpansion& o) {
  merge_radicand(o);
  plain += o.plain;
  radical += o.radical;
  return *this;
}

FrameExpansion& FrameExpansion::operator-=(const FrameExpansion& o) { return *this += -o; }

FrameExpansion FrameExpansion::operator*(const FrameExpansion& o) const {
  FrameExpansion r = *this;
  r.merge_radicand(o);
  // (p1 + r1 sqrt(d)) (p2 + r2 sqrt(d)) = p1 p2 + d r1 r2 + (p1 r2 + r1 p2) sqrt(d)
  r.plain = plain * o.plain + radical * o.radical * r.radicand;
  r.radical = plain * o.radical + radical * o.plain;
  return r;
}

FrameExpansion FrameExpansion::inverse() const {
  if (radical.is_zero()) return {plain.inverse(), LaurentSeries::zero(), radicand};
  // 1/(p + r sqrt(d)) = (p - r sqrt(d)) / (p^2 - d r^2)
  LaurentSeries norm = plain * plain - radical * radical * radicand;
  LaurentSeries ninv = norm.inverse();
  return {plain * ninv, -(radical * ninv), radicand};
}

FrameExpansion FrameExpansion::pow(long e) const {
  if (e == 0) return from_plain(LaurentSeries::monomial(0, Rational(1)));
  FrameExpansion base = e < 0 ? inverse() : *this;
  long k = e < 0 ? -e : e;
  FrameExpansion acc = base;
  for (long i = 1; i < k; ++i) acc = acc * base;
  return acc;
}

FrameExpansion FrameExpansion::derivative() const {
  return {plain.derivative(), radical.derivative(), radicand};
}

FrameExpansion FrameExpansion::operator*(const Rational& c) const {
  return {plain * c, radical * c, radicand};
}

bool FrameExpansion::agrees_with(const FrameExpansion& o) const {
  if (!radical.is_zero() && !o.radical.is_zero() && radicand != o.radicand) return false;
  return plain.agrees_with(o.plain) && radical.agrees_with(o.radical);
}

std::string FrameExpansion::str(const std::string& var) const {
  if (radical.is_zero()) return plain.str(var);
  std::ostringstream os;
  os << plain.str(var) << " + sqrt(" << radicand.str() << ")*[" << radical.str(var) << "]";
  return os.str();
}

namespace {

struct FrameData {
  LaurentSeries x;        // expansion of the coordinate x
  FrameExpansion y;       // expansion of y
  FrameExpansion measure; // expansion of dx/y as a du-coefficient
};

// Builds the coordinate data of a frame at working precision `prec`.
FrameData build_frame_data(const CurvePtr& curve, const LocalFrame& frame, long prec) {
  if (frame.scale.is_zero()) fail(ErrorKind::DomainError, "frame scale must be nonzero");
  curve->validate_point(frame.point);
  const Polynomial& f = curve->f();
  const Rational& c = frame.scale;
  FrameData out;

  switch (frame.point.tag) {
    case PointSpec::Tag::InfPlus:
    case PointSpec::Tag::InfMinus: {
      bool plus = frame.point.tag == PointSpec::Tag::InfPlus;
      // s = 1/x = c*u; x = (1/c) u^-1.
      out.x = LaurentSeries::monomial(-1, c.reciprocal());
      // g(s) = s^6 f(1/s) is monic-reversed f; g(0) = 1.
      std::vector<Rational> rev(f.coeffs().rbegin(), f.coeffs().rend());
      Polynomial g(std::move(rev));
      LaurentSeries g_at = poly_at_series(g, LaurentSeries::monomial(1, c)).truncated(prec);
      LaurentSeries v = series_sqrt(g_at, prec);
      Rational sign = plus ? Rational(1) : Rational(-1);
      // y = sign * s^-3 v = sign c^-3 u^-3 v
      out.y = FrameExpansion::from_plain(v.shifted(-3) * (sign * pow(c.reciprocal(), 3)));
      // dx = -(1/c) u^-2 du; dx/y = -sign c^2 u v^-1 du
      out.measure = FrameExpansion::from_plain(v.inverse().shifted(1) * (-(sign) * c * c));
      break;
    }
    case PointSpec::Tag::Branch: {
      const Rational& e = frame.point.x;
      // x = e + (c u)^2
      out.x = LaurentSeries(0, {e, Rational(0), c * c}, LaurentSeries::kExactPrec);
      // f(e + w) = w * h(w), h(0) = f'(e) =: d (nonzero by squarefreeness)
      Polynomial shifted_f = f.compose(Polynomial({e, Rational(1)}));
      std::vector<Rational> hc(shifted_f.coeffs().begin() + 1, shifted_f.coeffs().end());
      Polynomial h(std::move(hc));
      Rational d = h.coeff(0);
      // U = sqrt(h(t^2)/d), t = c u; y = t sqrt(d) U.
      LaurentSeries h_at =
          poly_at_series(h * d.reciprocal(), LaurentSeries::monomial(2, c * c)).truncated(prec);
      LaurentSeries unit = series_sqrt(h_at, prec);
      out.y = FrameExpansion{LaurentSeries::zero(), unit.shifted(1) * c, d};
      // dx = 2 c^2 u du; dx/y = (2c/d) sqrt(d) U^-1 du
      out.measure =
          FrameExpansion{LaurentSeries::zero(), unit.inverse() * (Rational(2) * c / d), d};
      break;
    }
    case PointSpec::Tag::Affine: {
      const Rational& x0 = frame.point.x;
      const Rational& y0 = frame.point.y;
      // x = x0 + c u
      out.x = LaurentSeries(0, {x0, c}, LaurentSeries::kExactPrec);
      Polynomial shifted_f = f.compose(Polynomial({x0, c}));
      Rational y0sq_inv = (y0 * y0).reciprocal();
      LaurentSeries unit_sq = poly_at_series(shifted_f * y0sq_inv, LaurentSeries::monomial(1, Rational(1)))
                                  .truncated(prec);
      LaurentSeries y_series = series_sqrt(unit_sq, prec) * y0;
      out.y = FrameExpansion::from_plain(y_series);
      // dx = c du
      out.measure = FrameExpansion::from_plain(y_series.inverse() * c);
      break;
    }
  }
  return out;
}

// The frame series (notably the sqrt of the unit part and its inverse) depend
// only on the curve, the frame and the working precision; every section
// expansion at the same point reuses them. Precision is bucketed so nearby
// requests share an entry.
FrameData frame_data(const CurvePtr& curve, const LocalFrame& frame, long prec) {
  static std::mutex cache_mutex;
  static std::map<std::string, FrameData> cache;
  long bucket = ((prec + 31) / 32) * 32;
  std::ostringstream key;
  key << curve.get() << '|' << static_cast<int>(frame.point.tag) << '|' << frame.point.x.str()
      << '|' << frame.point.y.str() << '|' << frame.scale.str() << '|' << bucket;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key.str());
    if (it != cache.end()) return it->second;
  }
  FrameData data = build_frame_data(curve, frame, bucket);
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto [it, inserted] = cache.emplace(key.str(), std::move(data));
  return it->second;
}

}  // namespace

LaurentSeries expand_x(const CurvePtr& curve, const LocalFrame& frame, long order) {
  return frame_data(curve, frame, order + 8).x.truncated(order + 1);
}

FrameExpansion expand_y(const CurvePtr& curve, const LocalFrame& frame, long order) {
  FrameExpansion y = frame_data(curve, frame, order + 8).y;
  y.plain = y.plain.truncated(order + 1);
  y.radical = y.radical.truncated(order + 1);
  return y;
}

FrameExpansion expand_at(const Section& sec, const LocalFrame& frame, long order) {
  const CurvePtr& curve = sec.curve();
  long k = sec.weight();
  // Precision losses: exact numerator series of negative valuation shift the
  // known window (bounded by the degrees), denominator inverses cost twice
  // their local vanishing order, and the measure power costs ~3 per weight.
  // Retry with a larger window if the estimate falls short.
  long num_loss = std::max(std::max(sec.r0().num().degree(), 0L),
                           std::max(sec.r1().num().degree(), 0L) + 3);
  long den_loss = 2 * std::max(sec.r0().den().degree() + sec.r1().den().degree(), 0L);
  long buffer = 10 + 4 * (std::labs(k) + 1) + num_loss + den_loss;
  for (int attempt = 0; attempt < 4; ++attempt) {
    long prec = order + 1 + buffer;
    FrameData fd = frame_data(curve, frame, prec);
    FrameExpansion value =
        FrameExpansion::from_plain(rf_at_series(sec.r0(), fd.x, prec)) +
        fd.y * FrameExpansion::from_plain(rf_at_series(sec.r1(), fd.x, prec));
    FrameExpansion res = value * fd.measure.pow(k);
    if (res.precision() >= order + 1) {
      res.plain = res.plain.truncated(order + 1);
      res.radical = res.radical.truncated(order + 1);
      return res;
    }
    buffer *= 2;
  }
  fail(ErrorKind::InsufficientPrecision,
       "expansion at " + frame.point.str() + " did not reach order " + std::to_string(order));
}

FrameExpansion expand_at(const Section& sec, const PointSpec& p, long order) {
  return expand_at(sec, LocalFrame{p, Rational(1)}, order);
}

Rational residue_at(const Section& sec, const LocalFrame& frame) {
  if (sec.weight() != 1) fail(ErrorKind::WrongWeight, "residue_at needs a one-form (weight 1)");
  FrameExpansion e = expand_at(sec, frame, 0);
  if (!e.radical.is_zero() && !e.radical_coefficient(-1).is_zero()) {
    // Cannot happen at a branch point: the radical component is even in the
    // canonical parameter. Anything else indicates a broken frame.
    fail(ErrorKind::Internal, "irrational residue at " + frame.point.str());
  }
  return e.plain_coefficient(-1);
}

Rational residue_at(const Section& sec, const PointSpec& p) {
  return residue_at(sec, LocalFrame{p, Rational(1)});
}

}  // namespace projsymp
