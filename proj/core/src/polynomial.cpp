#include "projsymp/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "projsymp/error.hpp"

namespace projsymp {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { strip(); }

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { strip(); }

Polynomial Polynomial::x() { return monomial(1, Rational(1)); }

Polynomial Polynomial::monomial(long degree, const Rational& c) {
  if (degree < 0) fail(ErrorKind::DomainError, "monomial with negative degree");
  Polynomial p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
  p.c_.back() = c;
  return p;
}

void Polynomial::strip() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) fail(ErrorKind::DomainError, "leading coefficient of zero polynomial");
  return c_.back();
}

Rational Polynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> d;
  d.reserve(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * c_[i]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  Rational inv = leading().reciprocal();
  for (auto& c : p.c_) c *= inv;
  return p;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * inner + Polynomial(*it);
  }
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) fail(ErrorKind::DomainError, "polynomial division by zero");
  Polynomial rem = *this;
  long dd = divisor.degree();
  if (rem.degree() < dd) return {Polynomial(), rem};
  std::vector<Rational> q(static_cast<size_t>(rem.degree() - dd) + 1, Rational(0));
  Rational lead_inv = divisor.leading().reciprocal();
  while (!rem.is_zero() && rem.degree() >= dd) {
    long shift = rem.degree() - dd;
    Rational factor = rem.leading() * lead_inv;
    q[static_cast<size_t>(shift)] = factor;
    rem -= Polynomial::monomial(shift, factor) * divisor;
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  strip();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  strip();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(out);
  strip();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

namespace {

// Primitive integer model of a rational polynomial (content removed).
std::vector<mpz_class> primitive_integer_model(const Polynomial& p) {
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) {
    mpz_class den = c.denominator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  std::vector<mpz_class> out;
  out.reserve(p.coeffs().size());
  mpz_class content = 0;
  for (const auto& c : p.coeffs()) {
    mpz_class v = lcm_den / c.denominator() * c.numerator();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content > 1) {
    for (auto& v : out) v /= content;
  }
  return out;
}

void strip_z(std::vector<mpz_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

void remove_content(std::vector<mpz_class>& v) {
  mpz_class content = 0;
  for (const auto& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (content > 1) {
    for (auto& c : v) c /= content;
  }
}

// Pseudo-remainder of u by v (integer coefficients, deg u >= deg v).
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> u, const std::vector<mpz_class>& v) {
  const mpz_class& lead = v.back();
  long dv = static_cast<long>(v.size()) - 1;
  while (static_cast<long>(u.size()) - 1 >= dv && !u.empty()) {
    long shift = static_cast<long>(u.size()) - 1 - dv;
    mpz_class factor = u.back();
    for (auto& c : u) c *= lead;
    for (long i = 0; i <= dv; ++i) {
      u[static_cast<size_t>(shift + i)] -= factor * v[static_cast<size_t>(i)];
    }
    strip_z(u);
  }
  return u;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.is_zero() ? b : b.monic();
  if (b.is_zero()) return a.monic();
  // Primitive polynomial remainder sequence over the integers; far cheaper
  // than rational Euclid, whose coefficients explode.
  std::vector<mpz_class> u = primitive_integer_model(a);
  std::vector<mpz_class> v = primitive_integer_model(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<mpz_class> r = pseudo_rem(u, v);
    remove_content(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(u.size());
  for (const auto& c : u) coeffs.push_back(Rational(c));
  return Polynomial(std::move(coeffs)).monic();
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) fail(ErrorKind::Internal, "exact_divide with nonzero remainder");
  return q;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    Rational c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    Rational a = c.abs();
    if (i == 0 || a != Rational(1)) os << a.str();
    if (i > 0) {
      if (a != Rational(1)) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace projsymp
