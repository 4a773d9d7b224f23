#include "projsymp/curve.hpp"

#include <algorithm>

#include "projsymp/error.hpp"

namespace projsymp {

namespace {

// Positive divisors by trial division; plenty for desk-scale curve data.
std::vector<mpz_class> divisors_of(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> divs;
  if (n == 0) return divs;
  if (n > mpz_class("1000000000000")) {
    fail(ErrorKind::Internal, "rational root search: constant term too large");
  }
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      divs.push_back(d);
      divs.push_back(n / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
  return divs;
}

// All rational roots of p (exact, via the rational root theorem applied to
// the integer model of p).
std::vector<Rational> rational_roots_of(const Polynomial& p) {
  std::vector<Rational> roots;
  Polynomial q = p;
  // Strip powers of x first so the constant term is nonzero.
  long x_order = 0;
  while (!q.is_zero() && q.coeff(0).is_zero()) {
    std::vector<Rational> c(q.coeffs().begin() + 1, q.coeffs().end());
    q = Polynomial(std::move(c));
    ++x_order;
  }
  if (x_order > 0) roots.push_back(Rational(0));
  if (q.degree() <= 0) return roots;

  mpz_class lcm_den = 1;
  for (const auto& c : q.coeffs()) {
    mpz_class den = c.denominator();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    lcm_den = lcm_den / g * den;
  }
  // Constant and leading coefficients of the integer model of q.
  auto int_coeff = [&](const Rational& c) -> mpz_class {
    return lcm_den / c.denominator() * c.numerator();
  };
  mpz_class a0 = int_coeff(q.coeff(0));
  mpz_class an = int_coeff(q.leading());
  for (const auto& pn : divisors_of(a0)) {
    for (const auto& qd : divisors_of(an)) {
      for (int sign : {1, -1}) {
        Rational cand(mpq_class(sign * pn, qd));
        if (q(cand).is_zero()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace

std::string PointSpec::str() const {
  switch (tag) {
    case Tag::InfPlus: return "inf+";
    case Tag::InfMinus: return "inf-";
    case Tag::Branch: return "branch(" + x.str() + ")";
    case Tag::Affine: return "affine(" + x.str() + "," + y.str() + ")";
  }
  return "?";
}

Curve::Curve(Polynomial f) : f_(std::move(f)) {
  if (f_.degree() != 6) fail(ErrorKind::DomainError, "curve polynomial must have degree 6");
  if (f_.leading() != Rational(1)) fail(ErrorKind::DomainError, "curve polynomial must be monic");
  if (gcd(f_, f_.derivative()).degree() != 0) {
    fail(ErrorKind::NotSquarefree, "curve polynomial has a repeated root");
  }
  roots_ = rational_roots_of(f_);
}

Polynomial Curve::default_sextic() {
  Polynomial f({Rational(1)});
  for (long e = 0; e <= 5; ++e) {
    f *= Polynomial({Rational(-e), Rational(1)});
  }
  return f;
}

void Curve::validate_point(const PointSpec& p) const {
  switch (p.tag) {
    case PointSpec::Tag::InfPlus:
    case PointSpec::Tag::InfMinus:
      return;
    case PointSpec::Tag::Branch:
      if (!f_(p.x).is_zero()) {
        fail(ErrorKind::DomainError, "branch point " + p.x.str() + " is not a root of f");
      }
      return;
    case PointSpec::Tag::Affine: {
      if (p.y.is_zero()) fail(ErrorKind::DomainError, "affine point must have y != 0");
      if (p.y * p.y != f_(p.x)) {
        fail(ErrorKind::DomainError, "affine point does not satisfy y^2 = f(x)");
      }
      return;
    }
  }
}

}  // namespace projsymp
