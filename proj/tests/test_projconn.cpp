#include <doctest.h>

#include "projsymp/connection.hpp"
#include "projsymp/error.hpp"
#include "projsymp/expansion.hpp"
#include "projsymp/hforms.hpp"
#include "projsymp/jets.hpp"
#include "projsymp/matrix.hpp"
#include "projsymp/rng.hpp"
#include "projsymp/schwarzian.hpp"

using namespace projsymp;

namespace {

Rational rq(long n, long d = 1) { return Rational(n, d); }

CurvePtr default_curve() { return Curve::make(Curve::default_sextic()); }

Polynomial random_poly(Rng& rng, long maxdeg) {
  std::vector<Rational> c;
  for (long i = 0; i <= maxdeg; ++i) c.push_back(rng.small_rational_or_zero(5, 3));
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("schwarzian anchors") {
  // Mobius maps are killed.
  RationalFunction mob(Polynomial({rq(1), rq(2)}), Polynomial({rq(-3), rq(1)}));
  CHECK(schwarzian(mob).is_zero());
  // S(z^2) = -3/(2 z^2), by direct differentiation.
  RationalFunction sq{Polynomial::monomial(2, rq(1))};
  CHECK(schwarzian(sq) ==
        RationalFunction(Polynomial({rq(-3, 2)}), Polynomial::monomial(2, rq(1))));
  CHECK_THROWS_AS(schwarzian(RationalFunction(rq(4))), Error);
}

TEST_CASE("schwarzian cocycle law") {
  Rng rng(61);
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_poly(rng, 3);
    if (p.derivative().is_zero()) continue;
    RationalFunction tau{p};
    Mobius m{rq(rng.int_in(-4, 4)), rq(rng.int_in(-4, 4)), rq(rng.int_in(-4, 4)),
             rq(rng.int_in(-4, 4))};
    if (m.det().is_zero()) continue;
    RationalFunction sigma = m.to_rf();
    RationalFunction dtau = tau.derivative();
    CHECK(schwarzian(sigma.compose(tau)) ==
          schwarzian(sigma).compose(tau) * dtau * dtau + schwarzian(tau));
  }
}

TEST_CASE("build_connection solves the coefficient system") {
  CurvePtr c = default_curve();
  ProjectiveConnection conn = build_connection(c);
  // Deterministic solve with free variables zeroed:
  // c = (-9/4, 27/4, -9/2, 0, 0, 0) for roots 0..5.
  REQUIRE(conn.family_params().size() == 6);
  CHECK(conn.family_params()[0] == rq(-9, 4));
  CHECK(conn.family_params()[1] == rq(27, 4));
  CHECK(conn.family_params()[2] == rq(-9, 2));
  CHECK(conn.family_params()[3] == rq(0));
  CHECK(conn.family_params()[4] == rq(0));
  CHECK(conn.family_params()[5] == rq(0));
  // The three linear constraints hold.
  Rational s0, s1, s2;
  const auto& roots = c->rational_roots();
  for (size_t i = 0; i < 6; ++i) {
    const Rational& ci = conn.family_params()[i];
    s0 += ci;
    s1 += ci * roots[i];
    s2 += ci * roots[i] * roots[i] + rq(3, 4) * roots[i];
  }
  CHECK(s0 == rq(0));
  CHECK(s1 == rq(-9, 4));
  CHECK(s2 == rq(0));
}

TEST_CASE("transformed connection is holomorphic everywhere") {
  CurvePtr c = default_curve();
  ProjectiveConnection conn = build_connection(c);
  for (const auto& e : c->rational_roots()) {
    LaurentSeries q_local = connection_in_frame(conn, {PointSpec::branch(e), rq(1)}, 3);
    CHECK(q_local.valuation() >= 0);
    // 4 c_e + O(t^2): the double pole cancels against the Schwarzian and the
    // odd coefficients vanish by parity.
    size_t idx = 0;
    while (c->rational_roots()[idx] != e) ++idx;
    CHECK(q_local.coefficient(0) == rq(4) * conn.family_params()[idx]);
    CHECK(q_local.coefficient(1) == rq(0));
  }
  for (const auto& p : {PointSpec::inf_plus(), PointSpec::inf_minus()}) {
    CHECK(connection_in_frame(conn, {p, rq(1)}, 3).valuation() >= 0);
  }
}

TEST_CASE("connection family members all verify") {
  // The solution family is 3-dimensional; shifting by a kernel vector of the
  // constraint system gives another valid connection.
  CurvePtr c = default_curve();
  ProjectiveConnection base = build_connection(c);
  const auto& roots = c->rational_roots();
  RationalMatrix sys(3, 6);
  for (size_t i = 0; i < 6; ++i) {
    sys.at(0, i) = rq(1);
    sys.at(1, i) = roots[i];
    sys.at(2, i) = roots[i] * roots[i];
  }
  auto kernel = sys.kernel_basis();
  REQUIRE(kernel.size() == 3);
  for (const auto& shift : kernel) {
    RationalFunction q = base.q();
    for (size_t i = 0; i < 6; ++i) {
      Polynomial lin({-roots[i], rq(1)});
      q += RationalFunction(Polynomial({shift[i]}), lin);
    }
    ProjectiveConnection moved(q, c, {});
    verify_connection_holomorphy(moved);  // must not throw
  }
  CHECK(true);
}

TEST_CASE("apply_delta on the projective line") {
  RationalFunction q_zero;
  RationalFunction z3{Polynomial::monomial(3, rq(1))};
  CHECK(apply_delta_line(q_zero, z3) == RationalFunction(rq(6)));
  RationalFunction z2{Polynomial::monomial(2, rq(1))};
  CHECK(apply_delta_line(q_zero, z2).is_zero());
  CHECK(apply_delta_line(q_zero, RationalFunction(rq(1))).is_zero());
}

TEST_CASE("apply_delta chart consistency at branch points") {
  CurvePtr c = default_curve();
  auto conn = build_connection(c);
  Rng rng(71);
  for (const Rational& e : {rq(0), rq(3)}) {
    LocalFrame frame{PointSpec::branch(e), rq(1)};
    for (int trial = 0; trial < 6; ++trial) {
      Section theta(-1, RationalFunction(random_poly(rng, 2)),
                    RationalFunction(random_poly(rng, 2)), c);
      // Route 1: Delta in the x-chart, then expand.
      FrameExpansion direct = expand_at(apply_delta(conn, theta), frame, 5);
      // Route 2: expand theta's d/dx coefficient, transform to the t-chart
      // field h~ = H / (dx/dt), and apply the series operator with q~.
      long order = 14;
      Section h = theta.dx_coefficient();
      FrameExpansion h_x =
          expand_at(h, frame, order);  // weight 0: plain substitution of x(t), y(t)
      LaurentSeries dxdt = expand_x(c, frame, order + 2).derivative();
      FrameExpansion h_t = h_x * FrameExpansion::from_plain(dxdt.inverse());
      LaurentSeries q_t = connection_in_frame(conn, frame, order);
      FrameExpansion qf = FrameExpansion::from_plain(q_t);
      FrameExpansion dqf = FrameExpansion::from_plain(q_t.derivative());
      FrameExpansion h3 = h_t.derivative().derivative().derivative();
      FrameExpansion delta_t = h3 + (qf * h_t.derivative()) * rq(2) + dqf * h_t;
      CHECK(direct.agrees_with(delta_t));
    }
  }
}

TEST_CASE("jets: eta2 inverse and trace anchors") {
  Jet dz{rq(0), {rq(1), rq(0), rq(0)}};
  Sl2Element x = eta2_inverse(dz);
  CHECK(x == Sl2Element{rq(0), rq(1), rq(0)});
  Jet z2{rq(0), {rq(0), rq(0), rq(2)}};
  CHECK(eta2_inverse(z2) == Sl2Element{rq(0), rq(0), rq(-1)});
  CHECK(trace_form(dz, dz) == rq(0));
  CHECK(trace_form(dz, z2) == rq(2));  // -kappa
  Jet other_base{rq(1), {rq(1), rq(0), rq(0)}};
  CHECK_THROWS_AS(trace_form(dz, other_base), Error);
}

TEST_CASE("kappa calibration is the frozen constant") {
  CHECK(calibrate_kappa() == rq(-2));
  CHECK(trace_form_kappa() == rq(-2));
}

TEST_CASE("lemma-1 identity on the line and the curve") {
  Rng rng(83);
  RationalFunction q_zero;
  for (int i = 0; i < 100; ++i) {
    RationalFunction f{random_poly(rng, 8)};
    RationalFunction g{random_poly(rng, 8)};
    CHECK(h1_line(f, g, q_zero) == h2_line(f, g, q_zero));
  }
  CurvePtr c = default_curve();
  auto conn = build_connection(c);
  for (int i = 0; i < 25; ++i) {
    RationalFunction f{random_poly(rng, 5)};
    RationalFunction g{random_poly(rng, 5)};
    CHECK(h1_line(f, g, conn.q()) == h2_line(f, g, conn.q()));
  }
  for (int i = 0; i < 25; ++i) {
    Section u(0, RationalFunction(random_poly(rng, 4)), RationalFunction(random_poly(rng, 3)), c);
    Section v(0, RationalFunction(random_poly(rng, 4)), RationalFunction(random_poly(rng, 3)), c);
    CHECK(h1_ff(u, v, conn) == h2_ff(u, v, conn));
  }
}

TEST_CASE("h1 anchors") {
  RationalFunction q_zero;
  RationalFunction z3{Polynomial::monomial(3, rq(1))};
  RationalFunction z4{Polynomial::monomial(4, rq(1))};
  CHECK(h1_line(z3, z3, q_zero) == RationalFunction{Polynomial::monomial(3, rq(12))});
  CHECK(h1_line(z3, z4, q_zero) == RationalFunction{Polynomial::monomial(4, rq(30))});
  // fields in the kernel pair to zero
  RationalFunction z2{Polynomial::monomial(2, rq(1))};
  RationalFunction one{rq(1)};
  CHECK(h1_line(z2, one, q_zero).is_zero());
}

TEST_CASE("mobius equivariance of the line operator") {
  Rng rng(91);
  RationalFunction q_zero;
  for (int i = 0; i < 30; ++i) {
    Mobius phi{rq(rng.int_in(-5, 5)), rq(rng.int_in(-5, 5)), rq(rng.int_in(-5, 5)),
               rq(rng.int_in(-5, 5))};
    if (phi.det().is_zero()) continue;
    RationalFunction h{random_poly(rng, 6)};
    if (h.is_zero()) continue;
    CHECK(apply_delta_line(q_zero, pushforward_field(h, phi)) ==
          pushforward_quadratic(apply_delta_line(q_zero, h), phi));
  }
}
