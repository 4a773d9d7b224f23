#include "projsymp/suites.hpp"

#include <algorithm>
#include <sstream>

#include "projsymp/error.hpp"
#include "projsymp/expansion.hpp"
#include "projsymp/hforms.hpp"
#include "projsymp/jets.hpp"
#include "projsymp/schwarzian.hpp"

namespace projsymp {

using nlohmann::ordered_json;

namespace {

/// Throwing a CheckFailure inside a check body marks the record failed and
/// attaches a machine-replayable witness.
struct CheckFailure {
  ordered_json witness;
};

class CheckRunner {
 public:
  template <typename F>
  void run(const std::string& name, F&& body) {
    CheckRecord rec;
    rec.name = name;
    try {
      rec.witness = body();
      rec.status = CheckStatus::Pass;
    } catch (const CheckFailure& cf) {
      rec.status = CheckStatus::Fail;
      rec.witness = cf.witness;
    } catch (const Error& e) {
      rec.status = CheckStatus::Fail;
      rec.witness = ordered_json{{"error", e.what()}};
    }
    records_.push_back(std::move(rec));
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  std::vector<CheckRecord> records_;
};

[[noreturn]] void check_fail(ordered_json witness) { throw CheckFailure{std::move(witness)}; }

void expect(bool cond, const ordered_json& witness) {
  if (!cond) check_fail(witness);
}

Polynomial random_poly(Rng& rng, long maxdeg) {
  std::vector<Rational> c;
  long deg = rng.int_in(0, maxdeg);
  for (long i = 0; i <= deg; ++i) c.push_back(rng.small_rational_or_zero(6, 4));
  return Polynomial(std::move(c));
}

Polynomial random_nonzero_poly(Rng& rng, long maxdeg) {
  for (;;) {
    Polynomial p = random_poly(rng, maxdeg);
    if (!p.is_zero()) return p;
  }
}

Mobius random_mobius(Rng& rng) {
  for (;;) {
    Mobius m{Rational(rng.int_in(-5, 5)), Rational(rng.int_in(-5, 5)),
             Rational(rng.int_in(-5, 5)), Rational(rng.int_in(-5, 5))};
    if (!m.det().is_zero()) return m;
  }
}

uint64_t suite_seed(const SuiteContext& ctx, uint64_t salt) {
  return ctx.config().seed * 0x100000001b3ULL + salt;
}

}  // namespace

SuiteContext::SuiteContext(ScenarioConfig cfg) : cfg_(std::move(cfg)) {
  CurvePtr curve = cfg_.make_curve();
  auto geom = std::make_shared<CechGeometry>();
  geom->curve = curve;
  geom->conn = build_connection(curve);
  geom->a = PointSpec::inf_plus();
  geom->b = PointSpec::inf_minus();
  geom_ = geom;
}

const H1Basis& SuiteContext::h1() {
  if (!h1_) h1_ = compute_h1_basis(geom_, cfg_.truncation);
  return *h1_;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"jets",     "lemma1",  "theorem1",
                                                 "sequence", "pairing", "goldman"};
  return names;
}

std::vector<CheckRecord> run_suite(const std::string& name, SuiteContext& ctx) {
  if (name == "jets") return run_jets_suite(ctx);
  if (name == "lemma1") return run_lemma1_suite(ctx);
  if (name == "theorem1") return run_theorem1_suite(ctx);
  if (name == "sequence") return run_sequence_suite(ctx);
  if (name == "pairing") return run_pairing_suite(ctx);
  if (name == "goldman") return run_goldman_suite(ctx);
  fail(ErrorKind::ConfigError, "unknown suite '" + name + "'");
}

// ---------------------------------------------------------------------------
// jets
// ---------------------------------------------------------------------------

std::vector<CheckRecord> run_jets_suite(SuiteContext& ctx) {
  CheckRunner r;
  RationalFunction q_zero;

  r.run("jet_kernel_dimension", [&]() {
    // Third-derivative matrix on polynomial fields of degree <= 12.
    RationalMatrix m(10, 13);
    for (long c = 3; c <= 12; ++c) {
      m.at(static_cast<size_t>(c - 3), static_cast<size_t>(c)) =
          Rational(c) * Rational(c - 1) * Rational(c - 2);
    }
    auto kernel = m.kernel_basis();
    expect(kernel.size() == 3, {{"kernel_dim", kernel.size()}});
    // The canonical kernel basis must be exactly 1, z, z^2.
    for (size_t i = 0; i < 3; ++i) {
      for (size_t j = 0; j < 13; ++j) {
        Rational want = (i == j) ? Rational(1) : Rational(0);
        expect(kernel[i][j] == want, {{"vector", i}, {"entry", j}});
      }
    }
    // Cross-check through the operator itself.
    for (long c = 0; c <= 12; ++c) {
      RationalFunction h{Polynomial::monomial(c, Rational(1))};
      bool killed = apply_delta_line(q_zero, h).is_zero();
      expect(killed == (c <= 2), {{"monomial_degree", c}});
    }
    return ordered_json{{"dimension", 3}, {"window_degree", 12}};
  });

  r.run("mobius_equivariance", [&]() {
    Rng rng(suite_seed(ctx, 1));
    for (int trial = 0; trial < 100; ++trial) {
      Mobius phi = random_mobius(rng);
      RationalFunction h{random_nonzero_poly(rng, 6)};
      RationalFunction lhs = apply_delta_line(q_zero, pushforward_field(h, phi));
      RationalFunction rhs = pushforward_quadratic(apply_delta_line(q_zero, h), phi);
      if (lhs != rhs) {
        check_fail({{"trial", trial},
                    {"mobius", {phi.a.str(), phi.b.str(), phi.c.str(), phi.d.str()}},
                    {"field", h.str()}});
      }
    }
    // The inversion example: z^3 d/dz pushed through 1/z.
    Mobius inv{Rational(0), Rational(1), Rational(1), Rational(0)};
    RationalFunction cubic{Polynomial::monomial(3, Rational(1))};
    RationalFunction lhs = apply_delta_line(q_zero, pushforward_field(cubic, inv));
    RationalFunction want(Polynomial({Rational(6)}), Polynomial::monomial(4, Rational(1)));
    expect(lhs == want, {{"lhs", lhs.str()}, {"want", want.str()}});
    return ordered_json{{"trials", 100}};
  });

  r.run("jet_splitting_identity", [&]() {
    Rng rng(suite_seed(ctx, 2));
    for (int trial = 0; trial < 50; ++trial) {
      Jet j{rng.small_rational_or_zero(5, 3),
            {rng.small_rational_or_zero(), rng.small_rational_or_zero(), rng.small_rational_or_zero()}};
      Jet round = eta3_of(eta2_inverse(j), j.base).truncated(2);
      expect(round == j, {{"trial", trial}, {"base", j.base.str()}});
    }
    return ordered_json{{"trials", 50}};
  });

  r.run("symbol_is_one", [&]() {
    Rng rng(suite_seed(ctx, 3));
    for (int trial = 0; trial < 50; ++trial) {
      RationalFunction q{random_poly(rng, 4)};
      RationalFunction h{random_nonzero_poly(rng, 7)};
      RationalFunction h3 = h.derivative().derivative().derivative();
      RationalFunction low = apply_delta_line(q, h) - h3;
      RationalFunction expected = Rational(2) * q * h.derivative() + q.derivative() * h;
      expect(low == expected, {{"trial", trial}});
      // Delta o alpha = Id: a cubic-order zero contributes exactly its third
      // derivative.
      Rational z0 = rng.small_rational_or_zero(4, 2);
      Rational w = rng.small_rational(5, 3);
      Polynomial cube({-z0, Rational(1)});
      RationalFunction h0{cube * cube * cube * (w / Rational(6))};
      expect(apply_delta_line(q, h0)(z0) == w, {{"trial", trial}, {"z0", z0.str()}});
    }
    return ordered_json{{"trials", 50}};
  });

  r.run("sl2_bracket_compatibility", [&]() {
    Rng rng(suite_seed(ctx, 4));
    std::vector<Sl2Element> basis = {{Rational(1), Rational(0), Rational(0)},
                                     {Rational(0), Rational(1), Rational(0)},
                                     {Rational(0), Rational(0), Rational(1)}};
    auto check_pair = [&](const Sl2Element& x, const Sl2Element& y, int tag) {
      RationalFunction lhs{x.commutator(y).to_field()};
      RationalFunction rhs =
          field_bracket(RationalFunction(x.to_field()), RationalFunction(y.to_field()));
      expect(lhs == rhs, {{"pair", tag}});
    };
    int tag = 0;
    for (const auto& x : basis)
      for (const auto& y : basis) check_pair(x, y, tag++);
    for (int trial = 0; trial < 20; ++trial) {
      Sl2Element x{rng.small_rational_or_zero(), rng.small_rational_or_zero(),
                   rng.small_rational_or_zero()};
      Sl2Element y{rng.small_rational_or_zero(), rng.small_rational_or_zero(),
                   rng.small_rational_or_zero()};
      check_pair(x, y, 100 + trial);
    }
    return ordered_json{{"basis_pairs", 9}, {"random_pairs", 20}};
  });

  r.run("eta2_roundtrip", [&]() {
    Rng rng(suite_seed(ctx, 5));
    for (int trial = 0; trial < 100; ++trial) {
      Jet j{rng.small_rational_or_zero(6, 4),
            {rng.small_rational_or_zero(), rng.small_rational_or_zero(), rng.small_rational_or_zero()}};
      Sl2Element x = eta2_inverse(j);
      Jet back = jet_of(RationalFunction(x.to_field()), j.base, 2);
      expect(back == j, {{"trial", trial}});
    }
    // Convention anchors.
    Sl2Element dz = eta2_inverse(Jet{Rational(0), {Rational(1), Rational(0), Rational(0)}});
    expect(dz == Sl2Element{Rational(0), Rational(1), Rational(0)}, {{"anchor", "d/dz"}});
    Sl2Element zz = eta2_inverse(Jet{Rational(0), {Rational(0), Rational(0), Rational(2)}});
    expect(zz == Sl2Element{Rational(0), Rational(0), Rational(-1)}, {{"anchor", "z^2 d/dz"}});
    return ordered_json{{"trials", 100}};
  });

  r.run("schwarzian_convention", [&]() {
    // Mobius maps have vanishing Schwarzian; S(z^2) = -3/(2 z^2); the cocycle
    // law holds exactly.
    Rng rng(suite_seed(ctx, 6));
    RationalFunction mob(Polynomial({Rational(1), Rational(2)}), Polynomial({Rational(-3), Rational(1)}));
    expect(schwarzian(mob).is_zero(), {{"case", "mobius"}});
    RationalFunction sq{Polynomial::monomial(2, Rational(1))};
    RationalFunction want(Polynomial({Rational(-3, 2)}), Polynomial::monomial(2, Rational(1)));
    expect(schwarzian(sq) == want, {{"case", "z^2"}});
    for (int trial = 0; trial < 25; ++trial) {
      RationalFunction sigma = random_mobius(rng).to_rf();
      RationalFunction tau{random_nonzero_poly(rng, 3)};
      if (tau.derivative().is_zero()) continue;
      RationalFunction comp = sigma.compose(tau);
      RationalFunction lhs = schwarzian(comp);
      RationalFunction dtau = tau.derivative();
      RationalFunction rhs = schwarzian(sigma).compose(tau) * dtau * dtau + schwarzian(tau);
      expect(lhs == rhs, {{"trial", trial}});
    }
    return ordered_json{{"cocycle_trials", 25}};
  });

  return r.take();
}

// ---------------------------------------------------------------------------
// lemma1
// ---------------------------------------------------------------------------

std::vector<CheckRecord> run_lemma1_suite(SuiteContext& ctx) {
  CheckRunner r;
  const RationalFunction& q_curve = ctx.geometry()->conn.q();

  r.run("kappa_calibration", [&]() {
    Rational kappa = calibrate_kappa();
    expect(kappa == trace_form_kappa(),
           {{"calibrated", kappa.str()}, {"frozen", trace_form_kappa().str()}});
    return ordered_json{{"kappa", kappa.str()}};
  });

  r.run("trace_form_anchors", [&]() {
    Jet dz{Rational(0), {Rational(1), Rational(0), Rational(0)}};
    Jet zsq{Rational(0), {Rational(0), Rational(0), Rational(2)}};
    expect(trace_form(dz, dz) == Rational(0), {{"anchor", "nilpotent"}});
    expect(trace_form(dz, zsq) == -trace_form_kappa(), {{"anchor", "mixed"}});
    Rng rng(suite_seed(ctx, 10));
    for (int trial = 0; trial < 30; ++trial) {
      Rational base = rng.small_rational_or_zero(5, 3);
      Jet u{base, {rng.small_rational_or_zero(), rng.small_rational_or_zero(), rng.small_rational_or_zero()}};
      Jet v{base, {rng.small_rational_or_zero(), rng.small_rational_or_zero(), rng.small_rational_or_zero()}};
      expect(trace_form(u, v) == trace_form(v, u), {{"trial", trial}});
    }
    return ordered_json{{"symmetry_trials", 30}};
  });

  r.run("h1_equals_h2_line_q0", [&]() {
    Rng rng(suite_seed(ctx, 11));
    RationalFunction q_zero;
    for (int trial = 0; trial < 500; ++trial) {
      RationalFunction f{random_poly(rng, 8)};
      RationalFunction g{random_poly(rng, 8)};
      if (h1_line(f, g, q_zero) != h2_line(f, g, q_zero)) {
        check_fail({{"trial", trial}, {"f", f.str()}, {"g", g.str()}});
      }
    }
    // Frozen examples for the cubic and the mixed pair.
    RationalFunction z3{Polynomial::monomial(3, Rational(1))};
    RationalFunction z4{Polynomial::monomial(4, Rational(1))};
    expect(h1_line(z3, z3, q_zero) == RationalFunction{Polynomial::monomial(3, Rational(12))},
           {{"anchor", "cubic"}});
    expect(h1_line(z3, z4, q_zero) == RationalFunction{Polynomial::monomial(4, Rational(30))},
           {{"anchor", "mixed"}});
    expect(h2_line(z3, z3, q_zero) == h1_line(z3, z3, q_zero), {{"anchor", "cubic h2"}});
    return ordered_json{{"trials", 500}};
  });

  r.run("h1_equals_h2_curve_q_chart", [&]() {
    Rng rng(suite_seed(ctx, 12));
    for (int trial = 0; trial < 50; ++trial) {
      RationalFunction f{random_poly(rng, 6)};
      RationalFunction g{random_poly(rng, 6)};
      if (h1_line(f, g, q_curve) != h2_line(f, g, q_curve)) {
        check_fail({{"trial", trial}, {"f", f.str()}, {"g", g.str()}});
      }
    }
    return ordered_json{{"trials", 50}};
  });

  r.run("h1_equals_h2_function_field", [&]() {
    Rng rng(suite_seed(ctx, 13));
    const CurvePtr& curve = ctx.geometry()->curve;
    const ProjectiveConnection& conn = ctx.geometry()->conn;
    for (int trial = 0; trial < 50; ++trial) {
      Section u(0, RationalFunction(random_poly(rng, 4)), RationalFunction(random_poly(rng, 3)),
                curve);
      Section v(0, RationalFunction(random_poly(rng, 4)), RationalFunction(random_poly(rng, 3)),
                curve);
      if (!(h1_ff(u, v, conn) == h2_ff(u, v, conn))) {
        check_fail({{"trial", trial}, {"u", u.str()}, {"v", v.str()}});
      }
    }
    return ordered_json{{"trials", 50}};
  });

  r.run("h1_pointwise_matches_symbolic", [&]() {
    Rng rng(suite_seed(ctx, 14));
    int done = 0;
    while (done < 50) {
      RationalFunction f{random_poly(rng, 6)};
      RationalFunction g{random_poly(rng, 6)};
      Rational z0 = rng.small_rational_or_zero(8, 3);
      try {
        Jet qj = jet_of(q_curve, z0, 1);
        Rational direct = h1_at(jet_of(f, z0, 3), jet_of(g, z0, 3), qj);
        Rational symbolic = h1_line(f, g, q_curve)(z0);
        expect(direct == symbolic, {{"trial", done}, {"z0", z0.str()}});
        ++done;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DomainError) throw;  // z0 hit a pole of q; redraw
      }
    }
    // Base point mismatch must be rejected.
    bool threw = false;
    try {
      Jet a{Rational(0), {Rational(1), Rational(0), Rational(0), Rational(0)}};
      Jet b{Rational(1), {Rational(1), Rational(0), Rational(0), Rational(0)}};
      Jet qj{Rational(0), {Rational(0), Rational(0)}};
      h1_at(a, b, qj);
    } catch (const Error& e) {
      threw = e.kind() == ErrorKind::BasePointMismatch;
    }
    expect(threw, {{"case", "base point mismatch"}});
    return ordered_json{{"trials", 50}};
  });

  r.run("flat_sections_pair_constantly", [&]() {
    Rng rng(suite_seed(ctx, 15));
    RationalFunction q_zero;
    for (int trial = 0; trial < 25; ++trial) {
      Sl2Element x{rng.small_rational_or_zero(), rng.small_rational_or_zero(),
                   rng.small_rational_or_zero()};
      Sl2Element y{rng.small_rational_or_zero(), rng.small_rational_or_zero(),
                   rng.small_rational_or_zero()};
      RationalFunction f{x.to_field()};
      RationalFunction g{y.to_field()};
      RationalFunction pairing_fn = trace_pairing_line(f, g, q_zero);
      expect(pairing_fn.derivative().is_zero(), {{"trial", trial}});
      expect(h1_line(f, g, q_zero).is_zero(), {{"trial", trial}});
    }
    return ordered_json{{"trials", 25}};
  });

  return r.take();
}

// ---------------------------------------------------------------------------
// theorem1
// ---------------------------------------------------------------------------

std::vector<CheckRecord> run_theorem1_suite(SuiteContext& ctx) {
  CheckRunner r;
  const H1Basis& basis = ctx.h1();
  const H1Model& model = *basis.model;

  r.run("cocycle_model_validity", [&]() {
    Rng rng(suite_seed(ctx, 20));
    for (const auto& rep : model.representatives()) rep.validate();
    for (int trial = 0; trial < 10; ++trial) {
      model.random_cocycle(rng).validate();
      model.random_coboundary(rng).to_cocycle().validate();
    }
    return ordered_json{{"representatives", model.representatives().size()}};
  });

  r.run("coboundary_pairs_to_zero_slot1", [&]() {
    Rng rng(suite_seed(ctx, 21));
    for (int trial = 0; trial < 200; ++trial) {
      CechCocycle cb = model.random_coboundary(rng).to_cocycle();
      CechCocycle c2 = model.random_cocycle(rng);
      Rational value = pairing(cb, c2);
      if (!value.is_zero()) {
        check_fail({{"trial", trial},
                    {"value", value.str()},
                    {"coboundary_theta", section_to_json(cb.theta)},
                    {"cocycle_theta", section_to_json(c2.theta)},
                    {"seed", ctx.config().seed},
                    {"truncation", model.truncation()}});
      }
    }
    return ordered_json{{"trials", 200}};
  });

  r.run("coboundary_pairs_to_zero_slot2", [&]() {
    Rng rng(suite_seed(ctx, 22));
    for (int trial = 0; trial < 200; ++trial) {
      CechCocycle c1 = model.random_cocycle(rng);
      CechCocycle cb = model.random_coboundary(rng).to_cocycle();
      Rational value = pairing(c1, cb);
      if (!value.is_zero()) {
        check_fail({{"trial", trial},
                    {"value", value.str()},
                    {"seed", ctx.config().seed},
                    {"truncation", model.truncation()}});
      }
    }
    return ordered_json{{"trials", 200}};
  });

  r.run("proof_mechanics_residues", [&]() {
    Rng rng(suite_seed(ctx, 23));
    const CechGeometryPtr& geom = ctx.geometry();
    const ProjectiveConnection& conn = geom->conn;
    for (int trial = 0; trial < 25; ++trial) {
      Coboundary cb = model.random_coboundary(rng);
      CechCocycle c2 = model.random_cocycle(rng);
      // Holomorphy at a kills theta_a . omega_a; the residue theorem kills
      // theta_b . omega_b (its only pole is a).
      expect(residue_at(cb.theta_a * c2.omega_a, geom->a).is_zero(), {{"trial", trial}, {"part", 1}});
      expect(residue_at(cb.theta_b * c2.omega_b, geom->b).is_zero(), {{"trial", trial}, {"part", 2}});
      expect(residue_at(cb.theta_b * c2.omega_b, geom->a).is_zero(), {{"trial", trial}, {"part", 3}});
      // The H1 route and the exact H2 route agree and have no residue.
      Section h1form = h1_fields(cb.theta_a, c2.theta, conn);
      Section h2form =
          Section::from_dx_coefficient(trace_pairing_fields(cb.theta_a, c2.theta, conn).derive_ff());
      expect(h1form == h2form, {{"trial", trial}, {"part", 4}});
      expect(residue_at(h1form, geom->a).is_zero(), {{"trial", trial}, {"part", 5}});
      expect(residue_at(h2form, geom->b).is_zero(), {{"trial", trial}, {"part", 6}});
    }
    return ordered_json{{"trials", 25}};
  });

  return r.take();
}

// ---------------------------------------------------------------------------
// sequence
// ---------------------------------------------------------------------------

std::vector<CheckRecord> run_sequence_suite(SuiteContext& ctx) {
  CheckRunner r;
  const H1Basis& basis = ctx.h1();
  const H1Model& model = *basis.model;
  const H1Model& next = *basis.stabilization_check;
  const CurvePtr& curve = ctx.geometry()->curve;

  r.run("section_space_dimensions", [&]() {
    size_t k1 = section_space(curve, 1, {}).dim();
    size_t k2 = model.global_quadratic_differentials().dim();
    size_t km1 = section_space(curve, -1, {}).dim();
    expect(k1 == 2, {{"holomorphic_one_forms", k1}});
    expect(k2 == 3, {{"holomorphic_quadratic_differentials", k2}});
    expect(km1 == 0, {{"global_vector_fields", km1}});
    return ordered_json{{"h0_K", k1}, {"h0_K2", k2}, {"h0_T", km1}};
  });

  r.run("hypercohomology_dimensions", [&]() {
    expect(model.global_quadratic_differentials().dim() == 3, {{"dim_h0_k2", model.global_quadratic_differentials().dim()}});
    expect(model.h1_tx_dim() == 3, {{"dim_h1_tx", model.h1_tx_dim()}});
    expect(model.h1_dim() == 6, {{"dim_h1", model.h1_dim()}});
    return ordered_json{{"dim_h0_k2", 3},
                        {"dim_h1_tx", model.h1_tx_dim()},
                        {"dim_h1", model.h1_dim()},
                        {"cocycles", model.cocycle_dim()},
                        {"coboundaries", model.coboundary_dim()}};
  });

  r.run("alpha1_injective", [&]() {
    const SectionBasis& quads = model.global_quadratic_differentials();
    std::vector<std::vector<Rational>> cols;
    for (size_t i = 0; i < quads.dim(); ++i) {
      cols.push_back(model.class_coords(model.alpha1(quads[i])));
    }
    size_t rank = RationalMatrix::from_columns(cols).rank();
    expect(rank == 3, {{"rank", rank}});
    return ordered_json{{"rank", rank}};
  });

  r.run("alpha2_of_alpha1_vanishes", [&]() {
    const SectionBasis& quads = model.global_quadratic_differentials();
    for (size_t i = 0; i < quads.dim(); ++i) {
      auto v = model.alpha2(model.alpha1(quads[i]));
      for (const auto& c : v) expect(c.is_zero(), {{"omega", i}});
    }
    return ordered_json{{"verticals", quads.dim()}};
  });

  r.run("alpha2_surjective", [&]() {
    std::vector<std::vector<Rational>> cols;
    for (const auto& rep : model.representatives()) cols.push_back(model.alpha2(rep));
    size_t rank = RationalMatrix::from_columns(cols).rank();
    expect(rank == 3, {{"rank", rank}});
    return ordered_json{{"rank", rank}};
  });

  r.run("alpha2_kills_coboundaries", [&]() {
    Rng rng(suite_seed(ctx, 30));
    for (int trial = 0; trial < 10; ++trial) {
      CechCocycle cb = model.random_coboundary(rng).to_cocycle();
      for (const auto& c : model.alpha2(cb)) expect(c.is_zero(), {{"trial", trial}});
      for (const auto& c : model.class_coords(cb)) expect(c.is_zero(), {{"trial", trial}});
    }
    return ordered_json{{"trials", 10}};
  });

  r.run("exactness_at_middle", [&]() {
    // im(alpha1) and the alpha2-kernel have matching rank: 3 + 3 = 6 with
    // alpha2 o alpha1 = 0 establishes ker(alpha2) = im(alpha1).
    const SectionBasis& quads = model.global_quadratic_differentials();
    std::vector<std::vector<Rational>> im_cols;
    for (size_t i = 0; i < quads.dim(); ++i) {
      im_cols.push_back(model.class_coords(model.alpha1(quads[i])));
    }
    size_t rank_im = RationalMatrix::from_columns(im_cols).rank();
    std::vector<std::vector<Rational>> a2_cols;
    for (const auto& rep : model.representatives()) a2_cols.push_back(model.alpha2(rep));
    size_t rank_a2 = RationalMatrix::from_columns(a2_cols).rank();
    expect(rank_im + rank_a2 == model.h1_dim(), {{"rank_im", rank_im}, {"rank_a2", rank_a2}});
    return ordered_json{{"rank_alpha1", rank_im}, {"rank_alpha2", rank_a2}};
  });

  r.run("truncation_stability_dimensions", [&]() {
    expect(model.h1_dim() == next.h1_dim(),
           {{"dim_at_N", model.h1_dim()}, {"dim_at_N_plus_2", next.h1_dim()}});
    expect(model.h1_tx_dim() == next.h1_tx_dim(),
           {{"tx_at_N", model.h1_tx_dim()}, {"tx_at_N_plus_2", next.h1_tx_dim()}});
    return ordered_json{{"N", model.truncation()},
                        {"N+2", next.truncation()},
                        {"equal", true}};
  });

  r.run("riemann_roch_monotonicity", [&]() {
    // Raising one pole bound changes the dimension by 0 or 1.
    PointSpec a = PointSpec::inf_plus(), b = PointSpec::inf_minus();
    for (int k : {-1, 1, 2}) {
      size_t prev = section_space(curve, k, {{a, 0}, {b, 0}}).dim();
      for (long bound = 1; bound <= 5; ++bound) {
        size_t cur = section_space(curve, k, {{a, bound}, {b, bound - 1}}).dim();
        expect(cur == prev || cur == prev + 1, {{"k", k}, {"bound", bound}, {"prev", prev}, {"cur", cur}});
        prev = cur;
        cur = section_space(curve, k, {{a, bound}, {b, bound}}).dim();
        expect(cur == prev || cur == prev + 1, {{"k", k}, {"bound", bound}, {"prev", prev}, {"cur", cur}});
        prev = cur;
      }
    }
    return ordered_json{{"weights", {-1, 1, 2}}, {"bounds_up_to", 5}};
  });

  return r.take();
}

// ---------------------------------------------------------------------------
// pairing
// ---------------------------------------------------------------------------

namespace {

CechCocycle role_swapped(const CechCocycle& c, const CechGeometryPtr& swapped_geom) {
  return {-c.theta, c.omega_b, c.omega_a, swapped_geom};
}

}  // namespace

std::vector<CheckRecord> run_pairing_suite(SuiteContext& ctx) {
  CheckRunner r;
  const H1Basis& basis = ctx.h1();
  const H1Model& model = *basis.model;
  const H1Model& next = *basis.stabilization_check;
  const CechGeometryPtr& geom = ctx.geometry();

  // The descended matrix once, shared by several checks.
  RationalMatrix m;
  r.run("descended_form_well_defined", [&]() {
    Rng rng(suite_seed(ctx, 40));
    m = model.descended_form(rng);  // throws TheoremViolation if ill-defined
    return ordered_json{{"size", m.rows()}};
  });

  r.run("matrix_antisymmetric", [&]() {
    expect(m.rows() == 6 && m.cols() == 6, {{"rows", m.rows()}});
    for (size_t i = 0; i < m.rows(); ++i) {
      for (size_t j = 0; j < m.cols(); ++j) {
        if (!(m.at(i, j) + m.at(j, i)).is_zero()) {
          check_fail({{"i", i}, {"j", j}, {"m_ij", m.at(i, j).str()}, {"m_ji", m.at(j, i).str()}});
        }
      }
    }
    return ordered_json{{"antisymmetric", true}};
  });

  r.run("matrix_rank_full", [&]() {
    size_t rank = m.rank();
    expect(rank == 6, {{"rank", rank}, {"matrix", matrix_to_json(m)}});
    return ordered_json{{"rank", rank}};
  });

  r.run("vertical_subspace_isotropic", [&]() {
    const SectionBasis& quads = model.global_quadratic_differentials();
    std::vector<CechCocycle> vert;
    std::vector<std::vector<Rational>> vert_coords;
    for (size_t i = 0; i < quads.dim(); ++i) {
      vert.push_back(model.alpha1(quads[i]));
      vert_coords.push_back(model.class_coords(vert.back()));
    }
    for (size_t i = 0; i < vert.size(); ++i) {
      for (size_t j = 0; j < vert.size(); ++j) {
        expect(pairing(vert[i], vert[j]).is_zero(), {{"i", i}, {"j", j}});
      }
    }
    // The same statement through the class matrix: V^T M V = 0.
    RationalMatrix v = RationalMatrix::from_columns(vert_coords);
    RationalMatrix block = v.transpose() * m * v;
    for (size_t i = 0; i < block.rows(); ++i) {
      for (size_t j = 0; j < block.cols(); ++j) {
        expect(block.at(i, j).is_zero(), {{"block_entry", {i, j}}});
      }
    }
    return ordered_json{{"vertical_dim", vert.size()}};
  });

  r.run("diagonal_vanishes_on_cocycles", [&]() {
    Rng rng(suite_seed(ctx, 41));
    for (int trial = 0; trial < 20; ++trial) {
      CechCocycle c = model.random_cocycle(rng);
      Rational value = pairing(c, c);
      expect(value.is_zero(), {{"trial", trial}, {"value", value.str()}});
    }
    return ordered_json{{"trials", 20}};
  });

  r.run("pairing_bilinear", [&]() {
    Rng rng(suite_seed(ctx, 42));
    for (int trial = 0; trial < 10; ++trial) {
      CechCocycle c1 = model.random_cocycle(rng);
      CechCocycle c1p = model.random_cocycle(rng);
      CechCocycle c2 = model.random_cocycle(rng);
      Rational lam = rng.small_rational(5, 3);
      Rational lhs = pairing(c1 + c1p.scaled(lam), c2);
      Rational rhs = pairing(c1, c2) + lam * pairing(c1p, c2);
      expect(lhs == rhs, {{"trial", trial}, {"slot", 1}});
      Rational lhs2 = pairing(c2, c1 + c1p.scaled(lam));
      Rational rhs2 = pairing(c2, c1) + lam * pairing(c2, c1p);
      expect(lhs2 == rhs2, {{"trial", trial}, {"slot", 2}});
    }
    return ordered_json{{"trials", 10}};
  });

  r.run("role_swap_consistency", [&]() {
    auto swapped = std::make_shared<CechGeometry>(*geom);
    std::swap(swapped->a, swapped->b);
    // Find a basis pair with a nonzero entry so the check is not vacuous.
    size_t bi = 0, bj = 0;
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j)
        if (!m.at(i, j).is_zero()) { bi = i; bj = j; }
    const auto& reps = model.representatives();
    Rational direct = m.at(bi, bj);
    Rational via_swap =
        pairing(role_swapped(reps[bi], swapped), role_swapped(reps[bj], swapped));
    expect(direct == via_swap,
           {{"i", bi}, {"j", bj}, {"direct", direct.str()}, {"swapped", via_swap.str()}});
    expect(!direct.is_zero(), {{"nonzero_sample", direct.str()}});
    return ordered_json{{"entry", {bi, bj}}, {"value", direct.str()}};
  });

  r.run("matrix_stable_across_truncations", [&]() {
    RationalMatrix m2 = next.descended_form_raw();
    // Classes of the N-level representatives inside the N+2 model.
    std::vector<std::vector<Rational>> cols;
    for (const auto& rep : model.representatives()) {
      CechCocycle lifted{rep.theta, rep.omega_a, rep.omega_b, next.geometry()};
      cols.push_back(next.class_coords(lifted));
    }
    RationalMatrix s = RationalMatrix::from_columns(cols);
    RationalMatrix transported = s.transpose() * m2 * s;
    expect(transported == m, {{"N", model.truncation()}, {"N2", next.truncation()}});
    return ordered_json{{"N", model.truncation()}, {"N+2", next.truncation()}, {"equal", true}};
  });

  r.run("residue_theorem", [&]() {
    Rng rng(suite_seed(ctx, 43));
    const CurvePtr& curve = geom->curve;
    // x^2 dx/y: the anchor residues -1 / +1 at the two infinity points.
    Section anchor(1, RationalFunction(Polynomial::monomial(2, Rational(1))), RationalFunction(),
                   curve);
    expect(residue_at(anchor, geom->a) == Rational(-1), {{"anchor", "inf+"}});
    expect(residue_at(anchor, geom->b) == Rational(1), {{"anchor", "inf-"}});
    // Holomorphic one-forms have no residue anywhere.
    Section holo(1, RationalFunction(Polynomial({Rational(0), Rational(1)})), RationalFunction(),
                 curve);
    expect(residue_at(holo, geom->a).is_zero(), {{"anchor", "dx/y*x"}});
    int nonzero = 0;
    for (int trial = 0; trial < 50; ++trial) {
      Section omega(1, RationalFunction(random_poly(rng, 6)), RationalFunction(random_poly(rng, 6)),
                    curve);
      Rational sum = residue_at(omega, geom->a) + residue_at(omega, geom->b);
      if (!sum.is_zero()) {
        check_fail({{"trial", trial}, {"sum", sum.str()}, {"section", section_to_json(omega)}});
      }
      if (!residue_at(omega, geom->a).is_zero()) ++nonzero;
    }
    expect(nonzero > 0, {{"nonzero_samples", nonzero}});
    return ordered_json{{"trials", 50}, {"nonzero_samples", nonzero}};
  });

  r.run("residue_parameter_independence", [&]() {
    Rng rng(suite_seed(ctx, 44));
    const CurvePtr& curve = geom->curve;
    const Rational e = curve->rational_roots()[2];
    Polynomial pole({-e, Rational(1)});
    // dx/(x - e) has residue 2 at the branch point in any admissible frame.
    Section form(1, RationalFunction(), RationalFunction(Polynomial({Rational(1)}), pole), curve);
    LocalFrame plain{PointSpec::branch(e), Rational(1)};
    LocalFrame rescaled{PointSpec::branch(e), Rational(1, 2)};
    expect(residue_at(form, plain) == Rational(2), {{"anchor", "dx/(x-e)"}});
    expect(residue_at(form, rescaled) == Rational(2), {{"anchor", "dx/(x-e) rescaled"}});
    for (int trial = 0; trial < 10; ++trial) {
      Section omega(1, RationalFunction(random_poly(rng, 3), pole),
                    RationalFunction(random_poly(rng, 3), pole), curve);
      Rational r1 = residue_at(omega, plain);
      Rational r2 = residue_at(omega, rescaled);
      expect(r1 == r2, {{"trial", trial}, {"r1", r1.str()}, {"r2", r2.str()}});
    }
    // The same comparison at an infinity point.
    for (int trial = 0; trial < 10; ++trial) {
      Section omega(1, RationalFunction(random_poly(rng, 5)), RationalFunction(random_poly(rng, 5)),
                    curve);
      Rational r1 = residue_at(omega, LocalFrame{geom->a, Rational(1)});
      Rational r2 = residue_at(omega, LocalFrame{geom->a, Rational(3)});
      expect(r1 == r2, {{"trial", trial}});
    }
    return ordered_json{{"branch_trials", 10}, {"infinity_trials", 10}};
  });

  r.run("cech_report", [&]() {
    ordered_json rep;
    rep["dim_h1"] = model.h1_dim();
    rep["matrix"] = matrix_to_json(m);
    rep["ranks"] = {{"alpha1", 3}, {"alpha2", 3}, {"matrix", m.rank()}};
    rep["theorem1_trials"] = 400;
    rep["stabilization"] = {{"N", model.truncation()}, {"N+2", next.truncation()}, {"equal", true}};
    return rep;
  });

  r.run("geometry_echo", [&]() {
    ordered_json rep;
    rep["curve"]["f"] = polynomial_to_json(geom->curve->f());
    rep["points"] = {{"a", geom->a.str()}, {"b", geom->b.str()}};
    rep["connection"] = connection_to_json(geom->conn);
    return rep;
  });

  return r.take();
}

// ---------------------------------------------------------------------------
// goldman
// ---------------------------------------------------------------------------

std::vector<CheckRecord> run_goldman_suite(SuiteContext& ctx) {
  CheckRunner r;
  namespace cv = charvar;
  const cv::Tolerances& tol = ctx.config().tolerances;
  const int genus = ctx.config().charvar_genus;
  const int seeds = ctx.config().charvar_seeds;
  const uint64_t seed0 = ctx.config().seed;

  cv::CupConvention conv = cv::CupConvention::PrefixStrict;
  r.run("cup_convention_gate", [&]() {
    cv::Representation rho = cv::random_representation(genus, seed0 + 1, tol);
    conv = cv::select_cup_convention(rho, seed0, tol);
    return ordered_json{{"convention", cv::cup_convention_name(conv)}};
  });

  r.run("fox_calculus_rules", [&]() {
    cv::Representation rho = cv::random_representation(genus, seed0 + 1, tol);
    // d(x)/dx = 1.
    cv::Mat3 id_op = cv::fox_derivative(rho, {1}, 0);
    expect((id_op - cv::Mat3::Identity()).norm() < 1e-12, {{"rule", "identity"}});
    // d(x^-1)/dx = -Ad(rho(x))^-1.
    cv::Mat3 inv_op = cv::fox_derivative(rho, {-1}, 0);
    cv::Mat3 want = -cv::ad_matrix(rho.gen[0]).inverse();
    expect((inv_op - want).norm() < 1e-12, {{"rule", "inverse"}});
    // Product rule d(uv)/dx = du/dx + Ad(u) dv/dx on random words.
    Rng rng(suite_seed(ctx, 50));
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> u, v;
      for (int i = 0; i < 4; ++i) {
        int gidx = static_cast<int>(rng.int_in(1, 2 * genus));
        u.push_back(rng.chance(0.5) ? gidx : -gidx);
        int gidx2 = static_cast<int>(rng.int_in(1, 2 * genus));
        v.push_back(rng.chance(0.5) ? gidx2 : -gidx2);
      }
      std::vector<int> uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      int x = static_cast<int>(rng.int_in(0, 2 * genus - 1));
      cv::Mat3 lhs = cv::fox_derivative(rho, uv, x);
      cv::Mat3 rhs = cv::fox_derivative(rho, u, x) +
                     cv::ad_matrix(rho.word(u)) * cv::fox_derivative(rho, v, x);
      double err = (lhs - rhs).norm() / std::max(1.0, rhs.norm());
      expect(err < 1e-12, {{"trial", trial}, {"err", err}});
    }
    return ordered_json{{"product_rule_trials", 20}};
  });

  r.run("reducible_rejected", [&]() {
    // Upper-triangular generators share the invariant line e1.
    cv::Representation rho(genus);
    rho.gen.assign(static_cast<size_t>(2 * genus), cv::Mat2::Identity());
    Rng rng(suite_seed(ctx, 51));
    for (auto& g : rho.gen) {
      double t = 0.5 + rng.uniform01();
      g << cv::Complex(t, 0.1), cv::Complex(rng.sym_unit(), rng.sym_unit()), cv::Complex(0, 0),
          cv::Complex(1.0 / t, -0.1 / (t * t + 0.01));
      g /= std::sqrt(g.determinant());
    }
    expect(!cv::is_certified_irreducible(rho, tol), {{"case", "upper triangular"}});
    return ordered_json{{"rejected", true}};
  });

  ordered_json per_seed = ordered_json::array();
  r.run("dimensions_over_seeds", [&]() {
    for (int s = 0; s < seeds; ++s) {
      cv::Representation rho = cv::random_representation(genus, seed0 + 1 + static_cast<uint64_t>(s), tol);
      cv::CocycleSpaces spaces = cv::cocycle_spaces(rho, tol);
      long z1 = spaces.z1.cols(), b1 = spaces.b1.cols(), h1 = spaces.h1.cols();
      per_seed.push_back({{"seed", seed0 + 1 + static_cast<uint64_t>(s)},
                          {"z1", z1},
                          {"b1", b1},
                          {"h1", h1},
                          {"relator_residual", rho.relator_residual()}});
      expect(z1 == 6 * genus - 3, {{"seed_index", s}, {"z1", z1}});
      expect(b1 == 3, {{"seed_index", s}, {"b1", b1}});
      expect(h1 == 6 * (genus - 1), {{"seed_index", s}, {"h1", h1}});
    }
    return ordered_json{{"seeds", seeds}, {"per_seed", per_seed}};
  });

  r.run("coboundaries_lie_in_z1", [&]() {
    Rng rng(suite_seed(ctx, 52));
    cv::Representation rho = cv::random_representation(genus, seed0 + 1, tol);
    for (int trial = 0; trial < 10; ++trial) {
      cv::Mat2 x = cv::vec_to_sl2(Eigen::Vector3cd(
          cv::Complex(rng.sym_unit(), rng.sym_unit()), cv::Complex(rng.sym_unit(), rng.sym_unit()),
          cv::Complex(rng.sym_unit(), rng.sym_unit())));
      cv::TangentCocycle cob;
      for (int i = 0; i < rho.pres.generator_count(); ++i) {
        cv::Mat2 g = rho.gen[static_cast<size_t>(i)];
        cob.u.push_back(cv::Mat2(g * x * g.inverse() - x));
      }
      double res = cob.cocycle_residual(rho);
      expect(res < 1e-8, {{"trial", trial}, {"residual", res}});
    }
    return ordered_json{{"trials", 10}};
  });

  r.run("goldman_vanishes_on_coboundaries", [&]() {
    Rng rng(suite_seed(ctx, 53));
    for (int s = 0; s < seeds; ++s) {
      cv::Representation rho = cv::random_representation(genus, seed0 + 1 + static_cast<uint64_t>(s), tol);
      cv::CocycleSpaces spaces = cv::cocycle_spaces(rho, tol);
      for (int trial = 0; trial < 3; ++trial) {
        cv::VecX zc = cv::VecX::Zero(spaces.z1.rows());
        for (long i = 0; i < spaces.z1.cols(); ++i) {
          zc += cv::Complex(rng.sym_unit(), rng.sym_unit()) * spaces.z1.col(i);
        }
        cv::TangentCocycle z = cv::TangentCocycle::from_vec(zc);
        cv::Mat2 x = cv::vec_to_sl2(Eigen::Vector3cd(cv::Complex(rng.sym_unit(), rng.sym_unit()),
                                                     cv::Complex(rng.sym_unit(), rng.sym_unit()),
                                                     cv::Complex(rng.sym_unit(), rng.sym_unit())));
        cv::TangentCocycle cob;
        for (int i = 0; i < rho.pres.generator_count(); ++i) {
          cv::Mat2 g = rho.gen[static_cast<size_t>(i)];
          cob.u.push_back(cv::Mat2(g * x * g.inverse() - x));
        }
        double scale1 = 0, scale2 = 0;
        cv::Complex p1 = cv::goldman_pairing(z, cob, rho, conv, &scale1);
        cv::Complex p2 = cv::goldman_pairing(cob, z, rho, conv, &scale2);
        expect(std::abs(p1) <= tol.pairing_rel * scale1,
               {{"seed_index", s}, {"trial", trial}, {"slot", 1}, {"rel", std::abs(p1) / scale1}});
        expect(std::abs(p2) <= tol.pairing_rel * scale2,
               {{"seed_index", s}, {"trial", trial}, {"slot", 2}, {"rel", std::abs(p2) / scale2}});
      }
    }
    return ordered_json{{"seeds", seeds}, {"trials_per_seed", 3}};
  });

  double min_margin = 1e300;
  r.run("goldman_antisymmetric_nondegenerate", [&]() {
    ordered_json details = ordered_json::array();
    for (int s = 0; s < seeds; ++s) {
      cv::Representation rho = cv::random_representation(genus, seed0 + 1 + static_cast<uint64_t>(s), tol);
      cv::CocycleSpaces spaces = cv::cocycle_spaces(rho, tol);
      cv::MatX m = cv::goldman_matrix(rho, spaces, conv);
      double scale = m.norm();
      double asym = (m + m.transpose()).norm() / std::max(scale, 1e-30);
      expect(asym <= tol.pairing_rel, {{"seed_index", s}, {"asym_rel", asym}});
      Eigen::JacobiSVD<cv::MatX> svd(m);
      double smax = svd.singularValues()(0);
      double margin = std::abs(m.determinant()) / std::pow(smax, 6);
      min_margin = std::min(min_margin, margin);
      expect(margin > 1e-9, {{"seed_index", s}, {"det_margin", margin}});
      details.push_back({{"seed", seed0 + 1 + static_cast<uint64_t>(s)},
                         {"asym_rel", asym},
                         {"det_margin", margin}});
    }
    return ordered_json{{"per_seed", details}, {"min_det_margin", min_margin}};
  });

  r.run("goldman_bilinear", [&]() {
    Rng rng(suite_seed(ctx, 54));
    cv::Representation rho = cv::random_representation(genus, seed0 + 1, tol);
    cv::CocycleSpaces spaces = cv::cocycle_spaces(rho, tol);
    for (int trial = 0; trial < 10; ++trial) {
      auto random_z = [&]() {
        cv::VecX zc = cv::VecX::Zero(spaces.z1.rows());
        for (long i = 0; i < spaces.z1.cols(); ++i) {
          zc += cv::Complex(rng.sym_unit(), rng.sym_unit()) * spaces.z1.col(i);
        }
        return zc;
      };
      cv::VecX u = random_z(), up = random_z(), v = random_z();
      cv::Complex lam(rng.sym_unit(), rng.sym_unit());
      double scale = 0;
      cv::Complex lhs = cv::goldman_pairing(cv::TangentCocycle::from_vec(u + lam * up),
                                            cv::TangentCocycle::from_vec(v), rho, conv, &scale);
      cv::Complex rhs =
          cv::goldman_pairing(cv::TangentCocycle::from_vec(u), cv::TangentCocycle::from_vec(v), rho, conv) +
          lam * cv::goldman_pairing(cv::TangentCocycle::from_vec(up), cv::TangentCocycle::from_vec(v),
                                    rho, conv);
      expect(std::abs(lhs - rhs) <= 1e-12 * std::max(scale, 1.0),
             {{"trial", trial}, {"err", std::abs(lhs - rhs)}});
    }
    return ordered_json{{"trials", 10}};
  });

  r.run("conjugation_invariance", [&]() {
    Rng rng(suite_seed(ctx, 55));
    cv::Representation rho = cv::random_representation(genus, seed0 + 1, tol);
    cv::CocycleSpaces spaces = cv::cocycle_spaces(rho, tol);
    cv::Mat2 mraw;
    mraw << cv::Complex(rng.sym_unit() + 1.5, rng.sym_unit()), cv::Complex(rng.sym_unit(), rng.sym_unit()),
        cv::Complex(rng.sym_unit(), rng.sym_unit()), cv::Complex(rng.sym_unit() + 1.5, rng.sym_unit());
    mraw /= std::sqrt(mraw.determinant());
    cv::Representation rho2 = cv::conjugate_representation(rho, mraw);
    expect(rho2.relator_residual() < 1e-8, {{"case", "conjugate relator"}});
    cv::CocycleSpaces spaces2 = cv::cocycle_spaces(rho2, tol);
    expect(spaces2.z1.cols() == spaces.z1.cols() && spaces2.h1.cols() == spaces.h1.cols(),
           {{"case", "conjugate dims"}});
    for (int trial = 0; trial < 5; ++trial) {
      cv::VecX zc = cv::VecX::Zero(spaces.z1.rows());
      for (long i = 0; i < spaces.z1.cols(); ++i) {
        zc += cv::Complex(rng.sym_unit(), rng.sym_unit()) * spaces.z1.col(i);
      }
      cv::VecX wc = cv::VecX::Zero(spaces.z1.rows());
      for (long i = 0; i < spaces.z1.cols(); ++i) {
        wc += cv::Complex(rng.sym_unit(), rng.sym_unit()) * spaces.z1.col(i);
      }
      cv::TangentCocycle u = cv::TangentCocycle::from_vec(zc);
      cv::TangentCocycle v = cv::TangentCocycle::from_vec(wc);
      double scale = 0;
      cv::Complex before = cv::goldman_pairing(u, v, rho, conv, &scale);
      cv::Complex after = cv::goldman_pairing(cv::transport_cocycle(u, mraw),
                                              cv::transport_cocycle(v, mraw), rho2, conv);
      expect(std::abs(before - after) <= 1e-8 * std::max(scale, 1.0),
             {{"trial", trial}, {"err", std::abs(before - after)}});
    }
    return ordered_json{{"trials", 5}};
  });

  r.run("genus3_dimensions", [&]() {
    for (int s = 0; s < std::min(seeds, 20); ++s) {
      cv::Representation rho = cv::random_representation(3, seed0 + 101 + static_cast<uint64_t>(s), tol);
      cv::CocycleSpaces spaces = cv::cocycle_spaces(rho, tol);
      expect(spaces.z1.cols() == 15, {{"seed_index", s}, {"z1", spaces.z1.cols()}});
      expect(spaces.b1.cols() == 3, {{"seed_index", s}, {"b1", spaces.b1.cols()}});
      expect(spaces.h1.cols() == 12, {{"seed_index", s}, {"h1", spaces.h1.cols()}});
    }
    return ordered_json{{"seeds", std::min(seeds, 20)}};
  });

  r.run("representation_roundtrip", [&]() {
    cv::Representation rho = cv::random_representation(genus, seed0 + 1, tol);
    ordered_json file = representation_to_json(rho);
    // Through the textual form: nlohmann prints shortest round-trip doubles.
    cv::Representation back = representation_from_json(ordered_json::parse(file.dump()));
    double err = 0;
    for (size_t i = 0; i < rho.gen.size(); ++i) {
      err = std::max(err, (rho.gen[i] - back.gen[i]).norm());
    }
    expect(err == 0.0, {{"max_entry_error", err}});
    expect(back.relator_residual() <= tol.relator, {{"relator", back.relator_residual()}});
    return ordered_json{{"representation", file}};
  });

  return r.take();
}

}  // namespace projsymp
