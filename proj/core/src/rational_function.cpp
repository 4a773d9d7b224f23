#include "projsymp/rational_function.hpp"

#include <ostream>

#include "projsymp/error.hpp"

namespace projsymp {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorKind::DomainError, "rational function with zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = Polynomial({Rational(1)});
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  Rational lead = den_.leading();
  if (lead != Rational(1)) {
    Rational inv = lead.reciprocal();
    num_ *= inv;
    den_ *= inv;
  }
}

Polynomial RationalFunction::as_polynomial() const {
  if (!is_polynomial()) fail(ErrorKind::Internal, "rational function is not a polynomial: " + str());
  return num_;
}

Rational RationalFunction::operator()(const Rational& x) const {
  Rational d = den_(x);
  if (d.is_zero()) fail(ErrorKind::DomainError, "evaluation at a pole");
  return num_(x) / d;
}

RationalFunction RationalFunction::derivative() const {
  // (p/q)' = (p'q - pq') / q^2
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::compose(const RationalFunction& inner) const {
  // p(g)/q(g) with g = gn/gd, cleared to polynomial numerator/denominator.
  long dp = std::max(num_.degree(), den_.degree());
  if (dp < 0) return RationalFunction();
  auto lift = [&](const Polynomial& p) {
    // sum p_i * gn^i * gd^(dp - i)
    Polynomial acc;
    Polynomial gn_pow({Rational(1)});
    std::vector<Polynomial> gd_pows(static_cast<size_t>(dp) + 1);
    gd_pows[0] = Polynomial({Rational(1)});
    for (long i = 1; i <= dp; ++i) gd_pows[static_cast<size_t>(i)] = gd_pows[static_cast<size_t>(i - 1)] * inner.den();
    for (long i = 0; i <= dp; ++i) {
      Rational c = p.coeff(i);
      if (!c.is_zero()) acc += gn_pow * gd_pows[static_cast<size_t>(dp - i)] * c;
      if (i < dp) gn_pow *= inner.num();
    }
    return acc;
  };
  Polynomial top = lift(num_);
  Polynomial bot = lift(den_);
  if (bot.is_zero()) fail(ErrorKind::DomainError, "composition produced zero denominator");
  return RationalFunction(top, bot);
}

RationalFunction RationalFunction::reciprocal() const {
  if (is_zero()) fail(ErrorKind::DomainError, "reciprocal of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction f = *this;
  f.num_ = -f.num_;
  return f;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) fail(ErrorKind::DomainError, "division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

std::string RationalFunction::str(const std::string& var) const {
  if (is_polynomial()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.str(); }

}  // namespace projsymp
