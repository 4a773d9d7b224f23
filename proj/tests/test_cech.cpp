#include <doctest.h>

#include "projsymp/cech.hpp"
#include "projsymp/error.hpp"
#include "projsymp/expansion.hpp"
#include "projsymp/hforms.hpp"
#include "projsymp/rng.hpp"

using namespace projsymp;

namespace {

Rational rq(long n, long d = 1) { return Rational(n, d); }

CechGeometryPtr default_geometry() {
  auto geom = std::make_shared<CechGeometry>();
  geom->curve = Curve::make(Curve::default_sextic());
  geom->conn = build_connection(geom->curve);
  return geom;
}

const CechGeometryPtr& shared_geometry() {
  static CechGeometryPtr geom = default_geometry();
  return geom;
}

const H1Model& model_n8() {
  static H1Model model(shared_geometry(), 8);
  return model;
}

}  // namespace

TEST_CASE("cocycle space dimensions at several truncations") {
  // dim Z = 2N, dim B = 2(N-3), dim H^1 = 6, dim H^1(TX) = 3.
  for (long n : {6L, 8L}) {
    H1Model model(shared_geometry(), n);
    CHECK(model.cocycle_dim() == static_cast<size_t>(2 * n));
    CHECK(model.coboundary_dim() == static_cast<size_t>(2 * n - 6));
    CHECK(model.h1_dim() == 6);
    CHECK(model.h1_tx_dim() == 3);
  }
}

TEST_CASE("representatives and random data are honest cocycles") {
  const H1Model& model = model_n8();
  Rng rng(11);
  for (const auto& rep : model.representatives()) CHECK(rep.is_cocycle());
  for (int i = 0; i < 5; ++i) {
    CHECK(model.random_cocycle(rng).is_cocycle());
    CHECK(model.random_coboundary(rng).to_cocycle().is_cocycle());
  }
  // a broken triple is rejected
  CechCocycle bad = model.representatives()[0];
  bad.omega_a += model.global_quadratic_differentials()[0];
  CHECK(!bad.is_cocycle());
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("alpha1 requires global sections") {
  const H1Model& model = model_n8();
  const auto& geom = model.geometry();
  Section with_pole(2, RationalFunction(Polynomial::monomial(5, rq(1))), RationalFunction(),
                    geom->curve);
  CHECK_THROWS_AS(model.alpha1(with_pole), Error);
  CechCocycle v = model.alpha1(model.global_quadratic_differentials()[1]);
  CHECK(v.is_cocycle());
  CHECK(v.theta.is_zero());
}

TEST_CASE("theorem-1 vanishing in both slots") {
  const H1Model& model = model_n8();
  Rng rng(13);
  for (int i = 0; i < 40; ++i) {
    CechCocycle cb = model.random_coboundary(rng).to_cocycle();
    CechCocycle c = model.random_cocycle(rng);
    CHECK(pairing(cb, c).is_zero());
    CHECK(pairing(c, cb).is_zero());
  }
}

TEST_CASE("pairing decomposes along the proof of the vanishing theorem") {
  const H1Model& model = model_n8();
  const auto& geom = model.geometry();
  Rng rng(17);
  for (int i = 0; i < 10; ++i) {
    Coboundary cb = model.random_coboundary(rng);
    CechCocycle c = model.random_cocycle(rng);
    CHECK(residue_at(cb.theta_a * c.omega_a, geom->a).is_zero());
    CHECK(residue_at(cb.theta_b * c.omega_b, geom->a).is_zero());
    Section h1form = h1_fields(cb.theta_a, c.theta, geom->conn);
    CHECK(residue_at(h1form, geom->a).is_zero());
  }
}

TEST_CASE("pairing is antisymmetric on classes and zero on the diagonal") {
  const H1Model& model = model_n8();
  Rng rng(19);
  for (int i = 0; i < 10; ++i) {
    CechCocycle c = model.random_cocycle(rng);
    CHECK(pairing(c, c).is_zero());
    CechCocycle d = model.random_cocycle(rng);
    CHECK((pairing(c, d) + pairing(d, c)).is_zero());
  }
}

TEST_CASE("descended matrix: antisymmetric, rank 6, vertical Lagrangian") {
  const H1Model& model = model_n8();
  Rng rng(23);
  RationalMatrix m = model.descended_form(rng);
  REQUIRE(m.rows() == 6);
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) CHECK((m.at(i, j) + m.at(j, i)).is_zero());
  CHECK(m.rank() == 6);
  const SectionBasis& quads = model.global_quadratic_differentials();
  for (size_t i = 0; i < quads.dim(); ++i) {
    for (size_t j = 0; j < quads.dim(); ++j) {
      CHECK(pairing(model.alpha1(quads[i]), model.alpha1(quads[j])).is_zero());
    }
  }
}

TEST_CASE("class coordinates kill coboundaries and respect shifts") {
  const H1Model& model = model_n8();
  Rng rng(29);
  for (int i = 0; i < 5; ++i) {
    CechCocycle cb = model.random_coboundary(rng).to_cocycle();
    for (const auto& c : model.class_coords(cb)) CHECK(c.is_zero());
    CechCocycle c = model.random_cocycle(rng);
    auto before = model.class_coords(c);
    auto after = model.class_coords(c + cb);
    CHECK(before == after);
  }
}

TEST_CASE("exact sequence ranks") {
  const H1Model& model = model_n8();
  const SectionBasis& quads = model.global_quadratic_differentials();
  REQUIRE(quads.dim() == 3);
  std::vector<std::vector<Rational>> a1_cols;
  for (size_t i = 0; i < 3; ++i) {
    CechCocycle v = model.alpha1(quads[i]);
    a1_cols.push_back(model.class_coords(v));
    for (const auto& c : model.alpha2(v)) CHECK(c.is_zero());
  }
  CHECK(RationalMatrix::from_columns(a1_cols).rank() == 3);
  std::vector<std::vector<Rational>> a2_cols;
  for (const auto& rep : model.representatives()) a2_cols.push_back(model.alpha2(rep));
  CHECK(RationalMatrix::from_columns(a2_cols).rank() == 3);
}

TEST_CASE("unstable truncation cannot be fabricated but errors are typed") {
  CHECK_THROWS_AS(H1Model(shared_geometry(), 3), Error);  // below the documented floor
}

TEST_CASE("compute_h1_basis stabilizes") {
  H1Basis basis = compute_h1_basis(shared_geometry(), 6);
  CHECK(basis.model->h1_dim() == 6);
  CHECK(basis.stabilization_check->h1_dim() == 6);
}

TEST_CASE("geometry mismatch is rejected") {
  const H1Model& model = model_n8();
  Rng rng(31);
  CechCocycle c = model.random_cocycle(rng);
  auto other = std::make_shared<CechGeometry>(*model.geometry());
  std::swap(other->a, other->b);
  CechCocycle swapped{c.theta, c.omega_a, c.omega_b, other};
  CHECK_THROWS_AS(pairing(c, swapped), Error);
}

TEST_CASE("role swap preserves the pairing") {
  const H1Model& model = model_n8();
  auto swapped = std::make_shared<CechGeometry>(*model.geometry());
  std::swap(swapped->a, swapped->b);
  Rng rng(37);
  for (int i = 0; i < 5; ++i) {
    CechCocycle c1 = model.random_cocycle(rng);
    CechCocycle c2 = model.random_cocycle(rng);
    CechCocycle s1{-c1.theta, c1.omega_b, c1.omega_a, swapped};
    CechCocycle s2{-c2.theta, c2.omega_b, c2.omega_a, swapped};
    CHECK(pairing(s1, s2) == pairing(c1, c2));
  }
}
