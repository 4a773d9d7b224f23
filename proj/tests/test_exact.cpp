#include <doctest.h>

#include "projsymp/error.hpp"
#include "projsymp/laurent.hpp"
#include "projsymp/matrix.hpp"
#include "projsymp/polynomial.hpp"
#include "projsymp/rational.hpp"
#include "projsymp/rational_function.hpp"
#include "projsymp/rng.hpp"

using namespace projsymp;

namespace {

Rational rq(long n, long d = 1) { return Rational(n, d); }

LaurentSeries unit_series(Rng& rng, long prec) {
  std::vector<Rational> c(static_cast<size_t>(prec), Rational(0));
  c[0] = Rational(1);
  for (size_t i = 1; i < c.size(); ++i) c[i] = rng.small_rational_or_zero(5, 4);
  return LaurentSeries(0, std::move(c), prec);
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).denominator() == 2);
  CHECK(Rational::from_string("-14/21") == Rational(-2, 3));
  CHECK(Rational::from_string("5") == Rational(5));
  CHECK(Rational(7, 3).str() == "7/3");
  CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
  CHECK(*Rational(9, 4).exact_sqrt() == Rational(3, 2));
  CHECK(!Rational(2).exact_sqrt().has_value());
  CHECK(!Rational(-1).exact_sqrt().has_value());
}

TEST_CASE("exact field axioms on random rationals") {
  Rng rng(99);
  for (int i = 0; i < 200; ++i) {
    Rational a = rng.small_rational_or_zero(40, 23);
    Rational b = rng.small_rational_or_zero(40, 23);
    Rational c = rng.small_rational_or_zero(40, 23);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("polynomial arithmetic, divmod and gcd") {
  Polynomial x = Polynomial::x();
  Polynomial p = x * x * x - Polynomial({rq(1)});        // x^3 - 1
  Polynomial q = x - Polynomial({rq(1)});                // x - 1
  auto [quot, rem] = p.divmod(q);
  CHECK(rem.is_zero());
  CHECK(quot == Polynomial({rq(1), rq(1), rq(1)}));
  CHECK(gcd(p, q) == q.monic());
  CHECK(Polynomial({rq(0), rq(0), rq(0), rq(1)}).derivative() ==
        Polynomial({rq(0), rq(0), rq(3)}));
  CHECK(Polynomial({rq(5)}).derivative().is_zero());
  CHECK(p(rq(2)) == rq(7));
  // degree sentinel
  CHECK(Polynomial().degree() == -1);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<Rational> ca, cb;
    for (int j = 0; j < 5; ++j) ca.push_back(rng.small_rational_or_zero());
    for (int j = 0; j < 4; ++j) cb.push_back(rng.small_rational_or_zero());
    Polynomial a(ca), b(cb);
    if (b.is_zero()) continue;
    auto [qq, rr] = a.divmod(b);
    CHECK(qq * b + rr == a);
  }
}

TEST_CASE("rational function reduction and derivative") {
  Polynomial x = Polynomial::x();
  RationalFunction f(x * x - Polynomial({rq(1)}), x - Polynomial({rq(1)}));
  CHECK(f.is_polynomial());
  CHECK(f.num() == x + Polynomial({rq(1)}));
  // d/dx 1/(x-2) = -1/(x-2)^2
  RationalFunction g(Polynomial({rq(1)}), Polynomial({rq(-2), rq(1)}));
  RationalFunction dg = g.derivative();
  Polynomial den = Polynomial({rq(-2), rq(1)});
  CHECK(dg == RationalFunction(Polynomial({rq(-1)}), den * den));
  // composition
  RationalFunction inv(Polynomial({rq(1)}), x);
  CHECK(g.compose(inv) == RationalFunction(x, Polynomial({rq(1), rq(-2)})));
  CHECK(RationalFunction(x).compose(g) == g);
}

TEST_CASE("laurent series arithmetic tracks precision") {
  // (1 + s) with precision 4
  LaurentSeries s(0, {rq(1), rq(1)}, 4);
  LaurentSeries prod = s * s;
  CHECK(prod.coefficient(0) == rq(1));
  CHECK(prod.coefficient(2) == rq(1));
  CHECK(prod.precision() == 4);
  CHECK_THROWS_AS(prod.coefficient(4), Error);

  LaurentSeries inv = s.inverse();
  CHECK(inv.coefficient(0) == rq(1));
  CHECK(inv.coefficient(1) == rq(-1));
  CHECK(inv.coefficient(2) == rq(1));
  CHECK(inv.coefficient(3) == rq(-1));
  CHECK((inv * s).coefficient(0) == rq(1));
  CHECK((inv * s).coefficient(3) == rq(0));

  // derivative drops precision by one
  CHECK(s.derivative().precision() == 3);

  // multiplication by a negative-valuation monomial shifts precision
  LaurentSeries m = LaurentSeries::monomial(-2, rq(3));
  CHECK((s * m).precision() == 2);
  CHECK((s * m).valuation() == -2);
}

TEST_CASE("series_sqrt matches the binomial expansion") {
  LaurentSeries s(0, {rq(1), rq(1)}, 4);
  LaurentSeries root = series_sqrt(s);
  CHECK(root.coefficient(0) == rq(1));
  CHECK(root.coefficient(1) == rq(1, 2));
  CHECK(root.coefficient(2) == rq(-1, 8));
  CHECK(root.coefficient(3) == rq(1, 16));

  // exact constant 1 stays exact
  LaurentSeries one = LaurentSeries::monomial(0, rq(1));
  CHECK(series_sqrt(one).is_exact());
  CHECK(series_sqrt(one).coefficient(0) == rq(1));

  // s^2 (1 + s): valuation halves, square returns the input
  LaurentSeries shifted(2, {rq(1), rq(1)}, 8);
  LaurentSeries r2 = series_sqrt(shifted);
  CHECK(r2.valuation() == 1);
  CHECK((r2 * r2).agrees_with(shifted));

  CHECK_THROWS_AS(series_sqrt(LaurentSeries(1, {rq(1)}, 5)), Error);  // odd valuation
  CHECK_THROWS_AS(series_sqrt(LaurentSeries(0, {rq(2), rq(1)}, 5)), Error);  // non-square lead
}

TEST_CASE("series_sqrt squares back on random unit series") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    LaurentSeries u = unit_series(rng, 9);
    LaurentSeries r = series_sqrt(u);
    CHECK((r * r).agrees_with(u));
  }
}

TEST_CASE("residue extraction and exactness of derivatives") {
  LaurentSeries f(-2, {rq(3), rq(5), rq(7)}, 4);  // 3 s^-2 + 5 s^-1 + 7
  CHECK(f.residue() == rq(5));
  CHECK(LaurentSeries::monomial(-1, rq(1)).residue() == rq(1));
  // residues of derivatives vanish
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> c;
    for (int j = 0; j < 8; ++j) c.push_back(rng.small_rational_or_zero());
    LaurentSeries g(rng.int_in(-4, 2), c, 10);
    CHECK(g.derivative().residue() == rq(0));
  }
  // insufficient precision is loud
  LaurentSeries bad = LaurentSeries::zero_to_precision(-2);
  CHECK_THROWS_AS(bad.residue(), Error);
}

TEST_CASE("kernel_basis is exact and certified") {
  RationalMatrix m(2, 2);
  m.at(0, 0) = rq(1);
  m.at(0, 1) = rq(1);
  m.at(1, 0) = rq(2);
  m.at(1, 1) = rq(2);
  auto kb = m.kernel_basis();
  REQUIRE(kb.size() == 1);
  CHECK(kb[0][0] * rq(-1) == kb[0][1]);  // (1, -1) up to scale

  CHECK(RationalMatrix::identity(3).kernel_basis().empty());

  // random 8x12 with column structure; verify M v = 0 exactly and the rank
  // identity.
  Rng rng(5);
  RationalMatrix big(8, 12);
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 12; ++j) big.at(i, j) = rng.small_rational_or_zero(9, 5);
  auto kernel = big.kernel_basis();
  size_t rank = big.rank();
  CHECK(rank + kernel.size() == 12);
  CHECK(kernel.size() >= 4);
  for (const auto& v : kernel) {
    auto prod = big.apply(v);
    for (const auto& entry : prod) CHECK(entry.is_zero());
  }
}

TEST_CASE("solve returns exact particular solutions") {
  RationalMatrix m(2, 3);
  m.at(0, 0) = rq(1);
  m.at(0, 2) = rq(2);
  m.at(1, 1) = rq(3);
  auto x = m.solve({rq(4), rq(6)});
  REQUIRE(x.has_value());
  auto b = m.apply(*x);
  CHECK(b[0] == rq(4));
  CHECK(b[1] == rq(6));
  // inconsistent system
  RationalMatrix z(2, 1);
  z.at(0, 0) = rq(1);
  z.at(1, 0) = rq(1);
  CHECK(!z.solve({rq(0), rq(1)}).has_value());
}

TEST_CASE("parameter scaling is a ring map") {
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    std::vector<Rational> c;
    for (int j = 0; j < 6; ++j) c.push_back(rng.small_rational_or_zero());
    LaurentSeries f(rng.int_in(-3, 1), c, 6);
    std::vector<Rational> d;
    for (int j = 0; j < 6; ++j) d.push_back(rng.small_rational_or_zero());
    LaurentSeries g(rng.int_in(-3, 1), d, 6);
    Rational scale = rng.small_rational(4, 3);
    CHECK((f * g).scaled_parameter(scale)
              .agrees_with(f.scaled_parameter(scale) * g.scaled_parameter(scale)));
    CHECK((f + g).scaled_parameter(scale)
              .agrees_with(f.scaled_parameter(scale) + g.scaled_parameter(scale)));
  }
}
