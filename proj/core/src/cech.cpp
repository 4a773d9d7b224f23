#include "projsymp/cech.hpp"

#include <algorithm>

#include "projsymp/error.hpp"
#include "projsymp/expansion.hpp"

namespace projsymp {

namespace {

void require_same_geometry(const CechGeometryPtr& g1, const CechGeometryPtr& g2) {
  if (!g1 || !g2) fail(ErrorKind::GeometryMismatch, "cocycle without geometry");
  if (g1 == g2) return;
  if (g1->curve->f() != g2->curve->f() || g1->conn.q() != g2->conn.q() || g1->a != g2->a ||
      g1->b != g2->b) {
    fail(ErrorKind::GeometryMismatch, "cocycles on different geometries");
  }
}

// Reduce a vector against RREF rows in place; returns the entries at the
// given free columns afterwards.
std::vector<Rational> reduce_mod_rows(std::vector<Rational> v,
                                      const MatrixEchelon& ech,
                                      const std::vector<size_t>& free_cols) {
  const RationalMatrix& r = ech.reduced;
  for (size_t row = 0; row < ech.pivot_cols.size(); ++row) {
    size_t p = ech.pivot_cols[row];
    if (v[p].is_zero()) continue;
    Rational factor = v[p];
    for (size_t j = 0; j < r.cols(); ++j) {
      if (!r.at(row, j).is_zero()) v[j] -= factor * r.at(row, j);
    }
  }
  std::vector<Rational> out;
  out.reserve(free_cols.size());
  for (size_t j : free_cols) out.push_back(v[j]);
  return out;
}

std::vector<size_t> free_columns(const MatrixEchelon& ech, size_t cols) {
  std::vector<bool> pivot(cols, false);
  for (size_t c : ech.pivot_cols) pivot[c] = true;
  std::vector<size_t> free;
  for (size_t j = 0; j < cols; ++j) {
    if (!pivot[j]) free.push_back(j);
  }
  return free;
}

}  // namespace

bool CechCocycle::is_cocycle() const {
  if (!geom) return false;
  Section delta = apply_delta(geom->conn, theta);
  if (!((omega_a - omega_b) == delta)) return false;
  // Pole supports: the sections must be regular on the affine curve
  // (polynomial coefficients, poles only over x = infinity) and the omegas
  // holomorphic at their own marked point.
  if (!theta.r0().is_polynomial() || !theta.r1().is_polynomial()) return false;
  if (!omega_a.r0().is_polynomial() || !omega_a.r1().is_polynomial()) return false;
  if (!omega_b.r0().is_polynomial() || !omega_b.r1().is_polynomial()) return false;
  if (expand_at(omega_a, geom->a, 0).valuation() < 0) return false;
  if (expand_at(omega_b, geom->b, 0).valuation() < 0) return false;
  return true;
}

void CechCocycle::validate() const {
  if (!is_cocycle()) fail(ErrorKind::NotACocycle, "cocycle identity or pole support violated");
}

CechCocycle CechCocycle::operator+(const CechCocycle& o) const {
  require_same_geometry(geom, o.geom);
  return {theta + o.theta, omega_a + o.omega_a, omega_b + o.omega_b, geom};
}

CechCocycle CechCocycle::operator-(const CechCocycle& o) const {
  require_same_geometry(geom, o.geom);
  return {theta - o.theta, omega_a - o.omega_a, omega_b - o.omega_b, geom};
}

CechCocycle CechCocycle::scaled(const Rational& s) const {
  CechCocycle c = *this;
  c.theta *= s;
  c.omega_a *= s;
  c.omega_b *= s;
  return c;
}

CechCocycle Coboundary::to_cocycle() const {
  if (!geom) fail(ErrorKind::GeometryMismatch, "coboundary without geometry");
  return {theta_a - theta_b, apply_delta(geom->conn, theta_a), apply_delta(geom->conn, theta_b),
          geom};
}

Rational pairing(const CechCocycle& c1, const CechCocycle& c2) {
  require_same_geometry(c1.geom, c2.geom);
  Section integrand = c1.theta * c2.omega_b - c2.theta * c1.omega_a;
  return residue_at(integrand, c1.geom->a);
}

H1Model::H1Model(CechGeometryPtr geom, long truncation) : geom_(std::move(geom)), n_(truncation) {
  if (n_ < 4) fail(ErrorKind::DomainError, "truncation must be >= 4");
  const CurvePtr& curve = geom_->curve;
  const PointSpec a = geom_->a;
  const PointSpec b = geom_->b;

  theta_space_ = section_space(curve, -1, {{a, n_}, {b, n_}});
  omega_a_space_ = section_space(curve, 2, {{b, n_ + 6}});
  omega_b_space_ = section_space(curve, 2, {{a, n_ + 6}});
  theta_a_space_ = section_space(curve, -1, {{b, n_}});
  theta_b_space_ = section_space(curve, -1, {{a, n_}});
  global_quad_ = section_space(curve, 2, {});

  // Cocycle condition omega_a - omega_b - Delta(theta) = 0, as exact linear
  // constraints on the polynomial coefficient pairs.
  const size_t nt = theta_space_.dim();
  const size_t na = omega_a_space_.dim();
  const size_t nb = omega_b_space_.dim();
  std::vector<std::pair<Polynomial, Polynomial>> cols;
  cols.reserve(nt + na + nb);
  auto poly_pair = [](const Section& s) {
    return std::make_pair(s.r0().as_polynomial(), s.r1().as_polynomial());
  };
  for (size_t i = 0; i < nt; ++i) {
    Section d = apply_delta(geom_->conn, theta_space_[i]);
    auto [p0, p1] = poly_pair(d);
    cols.emplace_back(-p0, -p1);
  }
  for (size_t i = 0; i < na; ++i) cols.push_back(poly_pair(omega_a_space_[i]));
  for (size_t i = 0; i < nb; ++i) {
    auto [p0, p1] = poly_pair(omega_b_space_[i]);
    cols.emplace_back(-p0, -p1);
  }
  long d0 = -1, d1 = -1;
  for (const auto& [p0, p1] : cols) {
    d0 = std::max(d0, p0.degree());
    d1 = std::max(d1, p1.degree());
  }
  RationalMatrix constraints(static_cast<size_t>(d0 + 1 + d1 + 1), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    for (long i = 0; i <= d0; ++i) constraints.at(static_cast<size_t>(i), j) = cols[j].first.coeff(i);
    for (long i = 0; i <= d1; ++i) {
      constraints.at(static_cast<size_t>(d0 + 1 + i), j) = cols[j].second.coeff(i);
    }
  }
  cocycle_basis_ = constraints.kernel_basis();
  cocycle_columns_ = RationalMatrix::from_columns(cocycle_basis_);

  // Coboundary image inside the cocycle space, in kernel-basis coordinates.
  std::vector<std::vector<Rational>> cob_rows;
  auto push_coboundary = [&](const Section& ta, const Section& tb) {
    Coboundary cb{ta, tb, geom_};
    CechCocycle c = cb.to_cocycle();
    cob_rows.push_back(k_coords(parameters_of(c)));
  };
  Section zero_field = Section::zero(-1, curve);
  for (size_t i = 0; i < theta_a_space_.dim(); ++i) push_coboundary(theta_a_space_[i], zero_field);
  for (size_t i = 0; i < theta_b_space_.dim(); ++i) push_coboundary(zero_field, theta_b_space_[i]);

  if (cob_rows.empty()) {
    cob_rref_ = RationalMatrix(0, cocycle_basis_.size()).rref();
  } else {
    cob_rref_ = RationalMatrix::from_rows(cob_rows).rref();
  }
  cob_rank_ = cob_rref_.rank;
  free_cols_ = free_columns(cob_rref_, cocycle_basis_.size());
  for (size_t j : free_cols_) {
    representatives_.push_back(cocycle_from_parameters(cocycle_basis_[j]));
  }

  // H^1(TX) model: theta-space modulo the fields holomorphic off one point.
  std::vector<std::vector<Rational>> sub_rows;
  for (size_t i = 0; i < theta_a_space_.dim(); ++i) {
    auto coords = theta_space_.coords_of(theta_a_space_[i]);
    if (!coords) fail(ErrorKind::Internal, "theta_a space does not embed in theta space");
    sub_rows.push_back(*coords);
  }
  for (size_t i = 0; i < theta_b_space_.dim(); ++i) {
    auto coords = theta_space_.coords_of(theta_b_space_[i]);
    if (!coords) fail(ErrorKind::Internal, "theta_b space does not embed in theta space");
    sub_rows.push_back(*coords);
  }
  if (sub_rows.empty()) {
    tx_sub_rref_ = RationalMatrix(0, theta_space_.dim()).rref();
  } else {
    tx_sub_rref_ = RationalMatrix::from_rows(sub_rows).rref();
  }
  tx_free_cols_ = free_columns(tx_sub_rref_, theta_space_.dim());
}

std::vector<Rational> H1Model::parameters_of(const CechCocycle& c) const {
  auto ct = theta_space_.coords_of(c.theta);
  auto ca = omega_a_space_.coords_of(c.omega_a);
  auto cb = omega_b_space_.coords_of(c.omega_b);
  if (!ct || !ca || !cb) {
    fail(ErrorKind::NotACocycle, "cocycle is outside the truncated model");
  }
  std::vector<Rational> p;
  p.reserve(ct->size() + ca->size() + cb->size());
  p.insert(p.end(), ct->begin(), ct->end());
  p.insert(p.end(), ca->begin(), ca->end());
  p.insert(p.end(), cb->begin(), cb->end());
  return p;
}

std::vector<Rational> H1Model::k_coords(const std::vector<Rational>& p_vec) const {
  auto x = cocycle_columns_.solve(p_vec);
  if (!x) fail(ErrorKind::NotACocycle, "vector is not in the cocycle space");
  return *x;
}

CechCocycle H1Model::cocycle_from_parameters(const std::vector<Rational>& p) const {
  const size_t nt = theta_space_.dim();
  const size_t na = omega_a_space_.dim();
  const size_t nb = omega_b_space_.dim();
  if (p.size() != nt + na + nb) fail(ErrorKind::DomainError, "parameter length mismatch");
  std::vector<Rational> ct(p.begin(), p.begin() + nt);
  std::vector<Rational> ca(p.begin() + nt, p.begin() + nt + na);
  std::vector<Rational> cb(p.begin() + nt + na, p.end());
  return {theta_space_.combine(ct), omega_a_space_.combine(ca), omega_b_space_.combine(cb), geom_};
}

CechCocycle H1Model::alpha1(const Section& omega) const {
  auto coords = global_quad_.coords_of(omega);
  if (!coords) fail(ErrorKind::NotGlobal, "alpha1 needs a globally holomorphic section");
  return {Section::zero(-1, geom_->curve), omega, omega, geom_};
}

std::vector<Rational> H1Model::alpha2(const CechCocycle& c) const {
  auto coords = theta_space_.coords_of(c.theta);
  if (!coords) fail(ErrorKind::NotACocycle, "theta part outside the truncated model");
  return reduce_mod_rows(*coords, tx_sub_rref_, tx_free_cols_);
}

std::vector<Rational> H1Model::class_coords(const CechCocycle& c) const {
  return reduce_mod_rows(k_coords(parameters_of(c)), cob_rref_, free_cols_);
}

RationalMatrix H1Model::descended_form_raw() const {
  const size_t n = representatives_.size();
  RationalMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      m.at(i, j) = pairing(representatives_[i], representatives_[j]);
    }
  }
  return m;
}

RationalMatrix H1Model::descended_form(Rng& rng) const {
  RationalMatrix m = descended_form_raw();
  // Well-definedness: shifting every representative by a coboundary must not
  // move any entry.
  const size_t n = representatives_.size();
  std::vector<CechCocycle> shifted;
  shifted.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    shifted.push_back(representatives_[i] + random_coboundary(rng).to_cocycle());
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (pairing(shifted[i], shifted[j]) != m.at(i, j)) {
        fail(ErrorKind::TheoremViolation,
             "descended pairing changed under a coboundary shift at (" + std::to_string(i) + "," +
                 std::to_string(j) + ")");
      }
    }
  }
  return m;
}

CechCocycle H1Model::random_cocycle(Rng& rng) const {
  std::vector<Rational> p(theta_space_.dim() + omega_a_space_.dim() + omega_b_space_.dim(),
                          Rational(0));
  for (const auto& k : cocycle_basis_) {
    Rational c = rng.small_rational_or_zero(4, 3);
    if (c.is_zero()) continue;
    for (size_t i = 0; i < p.size(); ++i) p[i] += c * k[i];
  }
  return cocycle_from_parameters(p);
}

Coboundary H1Model::random_coboundary(Rng& rng) const {
  std::vector<Rational> ca(theta_a_space_.dim()), cb(theta_b_space_.dim());
  for (auto& c : ca) c = rng.small_rational_or_zero(4, 3);
  for (auto& c : cb) c = rng.small_rational_or_zero(4, 3);
  return {theta_a_space_.combine(ca), theta_b_space_.combine(cb), geom_};
}

H1Basis compute_h1_basis(const CechGeometryPtr& geom, long truncation) {
  H1Basis out;
  out.model = std::make_shared<H1Model>(geom, truncation);
  out.stabilization_check = std::make_shared<H1Model>(geom, truncation + 2);
  if (out.model->h1_dim() != out.stabilization_check->h1_dim() ||
      out.model->h1_tx_dim() != out.stabilization_check->h1_tx_dim()) {
    fail(ErrorKind::UnstableTruncation,
         "hypercohomology dimension did not stabilize between N = " + std::to_string(truncation) +
             " and N + 2; raise the truncation");
  }
  return out;
}

}  // namespace projsymp
