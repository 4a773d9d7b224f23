#include "projsymp/section.hpp"

#include <sstream>

#include "projsymp/error.hpp"

namespace projsymp {

Section::Section(int weight, RationalFunction r0, RationalFunction r1, CurvePtr curve)
    : k_(weight), r0_(std::move(r0)), r1_(std::move(r1)), curve_(std::move(curve)) {
  if (!curve_) fail(ErrorKind::DomainError, "section requires a curve");
}

void Section::require_same_geometry(const Section& o) const {
  if (curve_.get() != o.curve_.get() && curve_->f() != o.curve_->f()) {
    fail(ErrorKind::GeometryMismatch, "sections live on different curves");
  }
}

Section Section::derive_ff() const {
  if (k_ != 0) fail(ErrorKind::WrongWeight, "derive_ff is defined on weight-0 sections");
  const Polynomial& f = curve_->f();
  RationalFunction dy_over_y(RationalFunction(f.derivative()) / (RationalFunction(f) * Rational(2)));
  // D(r0 + r1 y) = r0' + (r1' + r1 f'/(2f)) y
  return Section(0, r0_.derivative(), r1_.derivative() + r1_ * dy_over_y, curve_);
}

Section Section::dx_coefficient() const {
  if (k_ != -1) fail(ErrorKind::WrongWeight, "dx_coefficient is defined on vector fields");
  // (r0 + r1 y) * y = r1 f + r0 y
  return Section(0, r1_ * RationalFunction(curve_->f()), r0_, curve_);
}

Section Section::from_dx2_coefficient(const Section& w) {
  if (w.weight() != 0) fail(ErrorKind::WrongWeight, "dx^2 coefficient must have weight 0");
  RationalFunction f{w.curve()->f()};
  return Section(2, w.r0() * f, w.r1() * f, w.curve());
}

Section Section::from_dx_coefficient(const Section& g) {
  if (g.weight() != 0) fail(ErrorKind::WrongWeight, "dx coefficient must have weight 0");
  // (g0 + g1 y) dx = (g1 f + g0 y)(dx/y)
  RationalFunction f{g.curve()->f()};
  return Section(1, g.r1() * f, g.r0(), g.curve());
}

Section Section::operator-() const {
  Section s = *this;
  s.r0_ = -s.r0_;
  s.r1_ = -s.r1_;
  return s;
}

Section& Section::operator+=(const Section& o) {
  require_same_geometry(o);
  if (k_ != o.k_) fail(ErrorKind::WrongWeight, "adding sections of different weights");
  r0_ += o.r0_;
  r1_ += o.r1_;
  return *this;
}

Section& Section::operator-=(const Section& o) { return *this += -o; }

Section Section::operator*(const Section& o) const {
  require_same_geometry(o);
  RationalFunction f{curve_->f()};
  // (a + b y)(c + d y) = ac + bd f + (ad + bc) y
  return Section(k_ + o.k_, r0_ * o.r0_ + r1_ * o.r1_ * f, r0_ * o.r1_ + r1_ * o.r0_, curve_);
}

Section& Section::operator*=(const Rational& s) {
  r0_ *= RationalFunction(s);
  r1_ *= RationalFunction(s);
  return *this;
}

Section& Section::operator*=(const RationalFunction& s) {
  r0_ *= s;
  r1_ *= s;
  return *this;
}

std::string Section::str() const {
  std::ostringstream os;
  os << "(" << r0_.str() << " + (" << r1_.str() << ")*y) * (dx/y)^" << k_;
  return os.str();
}

}  // namespace projsymp
