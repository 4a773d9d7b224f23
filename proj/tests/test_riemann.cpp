#include <doctest.h>

#include "projsymp/curve.hpp"
#include "projsymp/error.hpp"
#include "projsymp/expansion.hpp"
#include "projsymp/rng.hpp"
#include "projsymp/section.hpp"
#include "projsymp/section_space.hpp"

using namespace projsymp;

namespace {

Rational rq(long n, long d = 1) { return Rational(n, d); }

CurvePtr default_curve() { return Curve::make(Curve::default_sextic()); }

Polynomial random_poly(Rng& rng, long maxdeg) {
  std::vector<Rational> c;
  for (long i = 0; i <= maxdeg; ++i) c.push_back(rng.small_rational_or_zero(6, 4));
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("curve invariants") {
  CurvePtr c = default_curve();
  CHECK(c->rational_roots().size() == 6);
  CHECK(c->rational_roots()[0] == rq(0));
  CHECK(c->rational_roots()[5] == rq(5));
  // repeated roots are rejected
  Polynomial x = Polynomial::x();
  Polynomial sq = x * x * (x - Polynomial({rq(1)})) * (x - Polynomial({rq(2)})) *
                  (x - Polynomial({rq(3)})) * (x - Polynomial({rq(4)}));
  CHECK_THROWS_AS(Curve{sq}, Error);
  // point validation
  c->validate_point(PointSpec::branch(rq(3)));
  CHECK_THROWS_AS(c->validate_point(PointSpec::branch(rq(7))), Error);
  CHECK_THROWS_AS(c->validate_point(PointSpec::affine(rq(0), rq(1))), Error);
  // y^2 = f(-1) = (-1)(-2)(-3)(-4)(-5)(-6) = 720; not a rational square, so
  // pick x = 6: f(6) = 720. Use a curve point that actually exists: none of
  // these are squares, so validate a constructed one on x = 10:
  // f(10) = 10*9*8*7*6*5 = 151200. Also not a square; use the generic check
  // that a wrong y is rejected.
  CHECK_THROWS_AS(c->validate_point(PointSpec::affine(rq(10), rq(3))), Error);
}

TEST_CASE("frame expansions satisfy the curve equation") {
  CurvePtr c = default_curve();
  for (const LocalFrame& frame :
       {LocalFrame{PointSpec::inf_plus(), rq(1)}, LocalFrame{PointSpec::inf_minus(), rq(1)},
        LocalFrame{PointSpec::branch(rq(2)), rq(1)}, LocalFrame{PointSpec::branch(rq(0)), rq(3)}}) {
    FrameExpansion y = expand_y(c, frame, 12);
    LaurentSeries x = expand_x(c, frame, 12);
    FrameExpansion lhs = y * y;
    LaurentSeries f_at_x = poly_at_series(c->f(), x).truncated(lhs.precision());
    CHECK(lhs.radical.is_zero_to_precision());
    CHECK(lhs.plain.agrees_with(f_at_x));
  }
}

TEST_CASE("expansion anchors at infinity") {
  CurvePtr c = default_curve();
  // dx/y has a simple zero at each infinity point.
  Section dxy(1, RationalFunction(rq(1)), RationalFunction(), c);
  CHECK(expand_at(dxy, PointSpec::inf_plus(), 6).valuation() == 1);
  CHECK(expand_at(dxy, PointSpec::inf_minus(), 6).valuation() == 1);
  // x^2 dx/y has valuation -1 and residue -1 at inf+.
  Section x2(1, RationalFunction(Polynomial::monomial(2, rq(1))), RationalFunction(), c);
  FrameExpansion e = expand_at(x2, PointSpec::inf_plus(), 4);
  CHECK(e.valuation() == -1);
  CHECK(residue_at(x2, PointSpec::inf_plus()) == rq(-1));
  CHECK(residue_at(x2, PointSpec::inf_minus()) == rq(1));
  // the zero section expands to zero
  Section zero = Section::zero(2, c);
  CHECK(expand_at(zero, PointSpec::inf_plus(), 5).plain.is_zero_to_precision());
  // wrong weight for residue
  CHECK_THROWS_AS(residue_at(Section::zero(2, c), PointSpec::inf_plus()), Error);
}

TEST_CASE("derive_ff implements the function-field derivation") {
  CurvePtr c = default_curve();
  // D(y) = f' y / (2 f)
  Section y(0, RationalFunction(), RationalFunction(rq(1)), c);
  Section dy = y.derive_ff();
  RationalFunction expected = RationalFunction(c->f().derivative()) /
                              (RationalFunction(c->f()) * rq(2));
  CHECK(dy.r0().is_zero());
  CHECK(dy.r1() == expected);
  // D(x^3) = 3 x^2
  Section x3(0, RationalFunction(Polynomial::monomial(3, rq(1))), RationalFunction(), c);
  CHECK(x3.derive_ff().r0() == RationalFunction(Polynomial::monomial(2, rq(3))));
  CHECK(x3.derive_ff().r1().is_zero());
  // Leibniz on random elements, exactly.
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    Section g(0, RationalFunction(random_poly(rng, 3)), RationalFunction(random_poly(rng, 2)), c);
    Section h(0, RationalFunction(random_poly(rng, 3)), RationalFunction(random_poly(rng, 2)), c);
    Section lhs = (g * h).derive_ff();
    Section rhs = g.derive_ff() * h + g * h.derive_ff();
    CHECK(lhs == rhs);
  }
  // constants die
  Section one(0, RationalFunction(rq(5)), RationalFunction(), c);
  CHECK(one.derive_ff().is_zero());
  CHECK_THROWS_AS(Section::zero(1, c).derive_ff(), Error);
}

TEST_CASE("expansion respects products") {
  CurvePtr c = default_curve();
  Rng rng(23);
  for (const auto& p : {PointSpec::inf_plus(), PointSpec::branch(rq(1))}) {
    for (int i = 0; i < 10; ++i) {
      Section s1(1, RationalFunction(random_poly(rng, 3)), RationalFunction(random_poly(rng, 2)), c);
      Section s2(-1, RationalFunction(random_poly(rng, 2)), RationalFunction(random_poly(rng, 2)), c);
      FrameExpansion e1 = expand_at(s1, p, 6);
      FrameExpansion e2 = expand_at(s2, p, 6);
      FrameExpansion prod = expand_at(s1 * s2, p, 4);
      CHECK(prod.agrees_with(e1 * e2));
    }
  }
}

TEST_CASE("section_space dimensions match Riemann-Roch") {
  CurvePtr c = default_curve();
  CHECK(section_space(c, 1, {}).dim() == 2);   // genus
  CHECK(section_space(c, 2, {}).dim() == 3);   // 3g - 3
  CHECK(section_space(c, -1, {}).dim() == 0);  // no global fields
  // the holomorphic one-forms are spanned by dx/y and x dx/y
  SectionBasis k1 = section_space(c, 1, {});
  Section dxy(1, RationalFunction(rq(1)), RationalFunction(), c);
  Section xdxy(1, RationalFunction(Polynomial::x()), RationalFunction(), c);
  CHECK(k1.coords_of(dxy).has_value());
  CHECK(k1.coords_of(xdxy).has_value());
  CHECK(!k1.coords_of(Section(1, RationalFunction(Polynomial::monomial(2, rq(1))),
                              RationalFunction(), c))
             .has_value());
  // vector fields with poles at infinity
  PointSpec a = PointSpec::inf_plus(), b = PointSpec::inf_minus();
  CHECK(section_space(c, -1, {{a, 10}, {b, 10}}).dim() == 17);  // 2N - 3
  CHECK(section_space(c, 2, {{b, 16}}).dim() == 19);            // N + 9 at N = 10
  // combine/coords round trip
  SectionBasis theta = section_space(c, -1, {{a, 6}, {b, 6}});
  Rng rng(31);
  for (int i = 0; i < 5; ++i) {
    std::vector<Rational> coords;
    for (size_t j = 0; j < theta.dim(); ++j) coords.push_back(rng.small_rational_or_zero());
    Section s = theta.combine(coords);
    auto back = theta.coords_of(s);
    REQUIRE(back.has_value());
    CHECK(*back == coords);
  }
}

TEST_CASE("section_space honors branch-point pole bounds") {
  CurvePtr c = default_curve();
  PointSpec e2 = PointSpec::branch(rq(2));
  // Weight-0 functions with a pole bound at one branch point: L(m * P).
  // L(0) = constants; a single branch point is a Weierstrass point, so
  // L(2 P) already grows.
  CHECK(section_space(c, 0, {{e2, 0}}).dim() == 1);
  CHECK(section_space(c, 0, {{e2, 1}}).dim() == 1);
  CHECK(section_space(c, 0, {{e2, 2}}).dim() == 2);
  // 1/(x-2) realizes the double pole.
  SectionBasis l2 = section_space(c, 0, {{e2, 2}});
  Section inv(0, RationalFunction(Polynomial({rq(1)}), Polynomial({rq(-2), rq(1)})),
              RationalFunction(), c);
  CHECK(l2.coords_of(inv).has_value());
}

TEST_CASE("residue theorem on random one-forms") {
  CurvePtr c = default_curve();
  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    Section omega(1, RationalFunction(random_poly(rng, 6)), RationalFunction(random_poly(rng, 6)),
                  c);
    Rational sum = residue_at(omega, PointSpec::inf_plus()) +
                   residue_at(omega, PointSpec::inf_minus());
    CHECK(sum.is_zero());
  }
}

TEST_CASE("residues are parameter independent at a branch point") {
  CurvePtr c = default_curve();
  Polynomial pole({rq(-4), rq(1)});  // x - 4
  Section form(1, RationalFunction(), RationalFunction(Polynomial({rq(1)}), pole), c);
  LocalFrame f1{PointSpec::branch(rq(4)), rq(1)};
  LocalFrame f2{PointSpec::branch(rq(4)), rq(1, 2)};
  LocalFrame f3{PointSpec::branch(rq(4)), rq(5, 3)};
  Rational r1 = residue_at(form, f1);
  CHECK(r1 == rq(2));
  CHECK(residue_at(form, f2) == r1);
  CHECK(residue_at(form, f3) == r1);
}
