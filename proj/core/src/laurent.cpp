#include "projsymp/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "projsymp/error.hpp"

namespace projsymp {

namespace {

constexpr long kExact = LaurentSeries::kExactPrec;

long sat_add(long a, long b) {
  if (a >= kExact || b >= kExact) return kExact;
  long s = a + b;
  return s >= kExact ? kExact : s;
}

}  // namespace

LaurentSeries::LaurentSeries(long valuation, std::vector<Rational> coeffs, long precision)
    : val_(valuation), c_(std::move(coeffs)), prec_(precision) {
  normalize();
}

void LaurentSeries::normalize() {
  if (prec_ > kExact) prec_ = kExact;
  // Drop stored coefficients at or beyond the declared precision.
  if (!c_.empty() && sat_add(val_, static_cast<long>(c_.size())) > prec_) {
    long keep = prec_ - val_;
    if (keep < 0) keep = 0;
    c_.resize(static_cast<size_t>(keep));
  }
  size_t lead = 0;
  while (lead < c_.size() && c_[lead].is_zero()) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    val_ += static_cast<long>(lead);
  }
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  if (c_.empty()) val_ = prec_;
}

LaurentSeries LaurentSeries::monomial(long exponent, const Rational& c) {
  if (c.is_zero()) return zero();
  return LaurentSeries(exponent, {c}, kExact);
}

LaurentSeries LaurentSeries::from_polynomial(const Polynomial& p) {
  return LaurentSeries(0, p.coeffs(), kExact);
}

Rational LaurentSeries::coefficient(long exponent) const {
  if (exponent >= prec_) {
    fail(ErrorKind::InsufficientPrecision,
         "coefficient of exponent " + std::to_string(exponent) +
             " requested but series known only below " + std::to_string(prec_));
  }
  if (exponent < val_ || exponent >= val_ + static_cast<long>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(exponent - val_)];
}

LaurentSeries LaurentSeries::truncated(long precision) const {
  LaurentSeries r = *this;
  if (precision < r.prec_) r.prec_ = precision;
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::shifted(long k) const {
  LaurentSeries r = *this;
  r.val_ += k;
  r.prec_ = sat_add(r.prec_, k);
  return r;
}

LaurentSeries LaurentSeries::scaled_parameter(const Rational& c) const {
  if (c.is_zero()) fail(ErrorKind::DomainError, "parameter scale must be nonzero");
  LaurentSeries r = *this;
  if (r.c_.empty()) return r;
  Rational factor = projsymp::pow(c, r.val_);
  for (auto& x : r.c_) {
    x *= factor;
    factor *= c;
  }
  return r;
}

LaurentSeries LaurentSeries::derivative() const {
  LaurentSeries r;
  r.val_ = val_ - 1;
  r.prec_ = is_exact() ? kExact : prec_ - 1;
  r.c_.resize(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) {
    r.c_[i] = Rational(val_ + static_cast<long>(i)) * c_[i];
  }
  r.normalize();
  return r;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  long prec = std::min(prec_, o.prec_);
  // Stored windows only; empty summands contribute nothing.
  long lo = 0, hi = 0;
  bool any = false;
  auto widen = [&](long v, size_t n) {
    if (n == 0) return;
    long end = v + static_cast<long>(n);
    if (!any) {
      lo = v;
      hi = end;
      any = true;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, end);
    }
  };
  widen(val_, c_.size());
  widen(o.val_, o.c_.size());
  hi = std::min(hi, prec);
  std::vector<Rational> out;
  if (any && hi > lo) {
    out.assign(static_cast<size_t>(hi - lo), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      long e = val_ + static_cast<long>(i);
      if (e >= lo && e < hi) out[static_cast<size_t>(e - lo)] += c_[i];
    }
    for (size_t i = 0; i < o.c_.size(); ++i) {
      long e = o.val_ + static_cast<long>(i);
      if (e >= lo && e < hi) out[static_cast<size_t>(e - lo)] += o.c_[i];
    }
  }
  val_ = (any && hi > lo) ? lo : prec;
  c_ = std::move(out);
  prec_ = prec;
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o) {
  // Result precision: min(p1 + v2, p2 + v1); the unknown tail of one factor
  // multiplies the leading monomial of the other.
  long prec = std::min(sat_add(prec_, o.val_), sat_add(o.prec_, val_));
  if (c_.empty() || o.c_.empty()) {
    val_ = prec;
    c_.clear();
    prec_ = prec;
    return *this;
  }
  long val = val_ + o.val_;
  long len = std::min(static_cast<long>(c_.size() + o.c_.size()) - 1,
                      prec >= kExact ? static_cast<long>(c_.size() + o.c_.size()) - 1
                                     : prec - val);
  std::vector<Rational> out;
  if (len > 0) {
    out.assign(static_cast<size_t>(len), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      size_t jmax = std::min(o.c_.size(), static_cast<size_t>(len) - std::min(static_cast<size_t>(len), i));
      (void)jmax;
      for (size_t j = 0; j < o.c_.size(); ++j) {
        if (i + j >= static_cast<size_t>(len)) break;
        out[i + j] += c_[i] * o.c_[j];
      }
    }
  }
  val_ = val;
  c_ = std::move(out);
  prec_ = prec;
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    val_ = prec_;
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

LaurentSeries LaurentSeries::inverse(std::optional<long> target) const {
  if (is_zero()) fail(ErrorKind::DomainError, "inverse of zero series");
  if (is_zero_to_precision())
    fail(ErrorKind::InsufficientPrecision, "inverse of a series that is zero to its precision");
  // Exact monomial inverts exactly.
  if (is_exact() && c_.size() == 1 && !target) {
    return monomial(-val_, c_[0].reciprocal());
  }
  long rel = is_exact() ? (target ? *target : -1) : prec_ - val_;
  if (target && !is_exact()) rel = std::min(rel, *target);
  if (rel <= 0) {
    fail(ErrorKind::DomainError, "inverse of exact series requires a positive target precision");
  }
  // Write this = c0 s^v (1 + w) and solve (1 + w) u = 1 coefficient by
  // coefficient: u_0 = 1, u_n = -sum_{i=1..n} w_i u_{n-i}.
  LaurentSeries unit = (shifted(-val_) * c_[0].reciprocal()).truncated(rel);
  std::vector<Rational> u(static_cast<size_t>(rel), Rational(0));
  u[0] = Rational(1);
  for (long n = 1; n < rel; ++n) {
    Rational acc(0);
    for (long i = 1; i <= n; ++i) {
      Rational w = unit.coefficient(i);
      if (!w.is_zero()) acc -= w * u[static_cast<size_t>(n - i)];
    }
    u[static_cast<size_t>(n)] = acc;
  }
  return (LaurentSeries(0, std::move(u), rel) * c_[0].reciprocal()).shifted(-val_);
}

LaurentSeries LaurentSeries::pow(long e, std::optional<long> target) const {
  if (e == 0) return monomial(0, Rational(1));
  if (e < 0) return inverse(target).pow(-e);
  LaurentSeries acc = monomial(0, Rational(1));
  LaurentSeries b = *this;
  long k = e;
  while (k > 0) {
    if (k & 1) acc *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return acc;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o) const {
  long prec = std::min(prec_, o.prec_);
  long lo = std::min(val_, o.val_);
  if (lo >= prec) return true;
  for (long e = lo; e < prec; ++e) {
    long i = e - val_;
    long j = e - o.val_;
    Rational a = (i >= 0 && i < static_cast<long>(c_.size())) ? c_[static_cast<size_t>(i)] : Rational(0);
    Rational b = (j >= 0 && j < static_cast<long>(o.c_.size())) ? o.c_[static_cast<size_t>(j)] : Rational(0);
    if (a != b) return false;
  }
  return true;
}

LaurentSeries series_sqrt(const LaurentSeries& s, std::optional<long> target) {
  if (s.is_zero()) return LaurentSeries::zero();
  if (s.is_zero_to_precision())
    fail(ErrorKind::InsufficientPrecision, "sqrt of a series that is zero to its precision");
  if (s.valuation() % 2 != 0) fail(ErrorKind::NotASquare, "sqrt of series with odd valuation");
  Rational lead = s.coeffs()[0];
  auto root = lead.exact_sqrt();
  if (!root) fail(ErrorKind::NotASquare, "leading coefficient " + lead.str() + " is not a rational square");

  if (s.is_exact() && s.coeffs().size() == 1 && !target) {
    return LaurentSeries::monomial(s.valuation() / 2, *root);
  }
  long rel = s.is_exact() ? (target ? *target : -1) : s.precision() - s.valuation();
  if (target && !s.is_exact()) rel = std::min(rel, *target);
  if (rel < 0) fail(ErrorKind::DomainError, "sqrt of exact series requires a target precision");

  // Unit part u = 1 + w; solve t*t = u coefficient by coefficient:
  // 2*t0*t_n = u_n - sum_{0<i<n} t_i t_{n-i}.
  LaurentSeries unit = (s.shifted(-s.valuation()) * lead.reciprocal()).truncated(rel);
  std::vector<Rational> t(static_cast<size_t>(rel), Rational(0));
  t[0] = Rational(1);
  Rational half(1, 2);
  for (long n = 1; n < rel; ++n) {
    Rational acc = unit.coefficient(n);
    for (long i = 1; i < n; ++i) {
      acc -= t[static_cast<size_t>(i)] * t[static_cast<size_t>(n - i)];
    }
    t[static_cast<size_t>(n)] = acc * half;
  }
  LaurentSeries u(0, std::move(t), rel);
  return (u * *root).shifted(s.valuation() / 2);
}

LaurentSeries poly_at_series(const Polynomial& p, const LaurentSeries& s) {
  LaurentSeries acc = LaurentSeries::zero();
  bool first = true;
  for (long i = p.degree(); i >= 0; --i) {
    if (first) {
      acc = LaurentSeries::monomial(0, p.coeff(i));
      first = false;
    } else {
      acc = acc * s + LaurentSeries::monomial(0, p.coeff(i));
    }
  }
  if (first) return LaurentSeries::zero();
  return acc;
}

LaurentSeries rf_at_series(const RationalFunction& f, const LaurentSeries& s,
                           std::optional<long> target) {
  LaurentSeries num = poly_at_series(f.num(), s);
  if (f.is_polynomial()) return num;
  LaurentSeries den = poly_at_series(f.den(), s);
  return num * den.inverse(target);
}

std::string LaurentSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    long e = val_ + static_cast<long>(i);
    if (!first) os << (c_[i].sign() > 0 ? " + " : " - ");
    else if (c_[i].sign() < 0) os << "-";
    Rational a = c_[i].abs();
    if (e == 0 || a != Rational(1)) os << a.str();
    if (e != 0) {
      if (a != Rational(1)) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  if (first) os << "0";
  if (!is_exact()) os << " + O(" << var << "^" << prec_ << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentSeries& s) { return os << s.str(); }

}  // namespace projsymp
