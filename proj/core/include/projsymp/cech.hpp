#ifndef PROJSYMP_CECH_HPP
#define PROJSYMP_CECH_HPP

#include <memory>
#include <vector>

#include "projsymp/connection.hpp"
#include "projsymp/matrix.hpp"
#include "projsymp/rng.hpp"
#include "projsymp/section.hpp"
#include "projsymp/section_space.hpp"

namespace projsymp {

/// The fixed two-chart setup: marked points a, b and the connection. The
/// cover is U_a = X minus {b}, U_b = X minus {a}.
struct CechGeometry {
  CurvePtr curve;
  ProjectiveConnection conn;
  PointSpec a = PointSpec::inf_plus();
  PointSpec b = PointSpec::inf_minus();
};

using CechGeometryPtr = std::shared_ptr<const CechGeometry>;

/// One-cocycle for the two-term complex: theta is a vector field on
/// U_a n U_b, omega_a / omega_b are quadratic differentials on U_a / U_b,
/// subject to omega_a - omega_b = Delta(theta).
struct CechCocycle {
  Section theta;
  Section omega_a;
  Section omega_b;
  CechGeometryPtr geom;

  /// Exact check of the cocycle identity and the pole supports.
  bool is_cocycle() const;
  void validate() const;  // throws Error(NotACocycle)

  CechCocycle operator+(const CechCocycle& o) const;
  CechCocycle operator-(const CechCocycle& o) const;
  CechCocycle scaled(const Rational& s) const;
};

/// Coboundary datum: theta_a holomorphic on U_a, theta_b holomorphic on U_b.
/// The induced cocycle is (theta_a - theta_b, Delta theta_a, Delta theta_b).
struct Coboundary {
  Section theta_a;
  Section theta_b;
  CechGeometryPtr geom;

  CechCocycle to_cocycle() const;
};

/// Residue pairing on cocycles: Res_a(theta1 . omega2_b - theta2 . omega1_a),
/// "." the contraction of a field against a quadratic differential. With the
/// cocycle convention omega_a - omega_b = Delta(theta) this is the signing
/// under which coboundaries pair to zero in both slots and the descended
/// form is alternating. Throws Error(GeometryMismatch) for cocycles on
/// different geometries.
Rational pairing(const CechCocycle& c1, const CechCocycle& c2);

/// Finite-dimensional model of the first hypercohomology at truncation N:
/// theta bounded by pole order N at a and b, the omegas by N + 6.
class H1Model {
 public:
  H1Model(CechGeometryPtr geom, long truncation);

  long truncation() const { return n_; }
  const CechGeometryPtr& geometry() const { return geom_; }

  size_t cocycle_dim() const { return cocycle_basis_.size(); }
  size_t coboundary_dim() const { return cob_rank_; }
  size_t h1_dim() const { return representatives_.size(); }
  size_t h1_tx_dim() const { return tx_free_cols_.size(); }

  const std::vector<CechCocycle>& representatives() const { return representatives_; }
  const SectionBasis& global_quadratic_differentials() const { return global_quad_; }
  const SectionBasis& theta_space() const { return theta_space_; }
  const SectionBasis& theta_a_space() const { return theta_a_space_; }
  const SectionBasis& theta_b_space() const { return theta_b_space_; }

  /// Vertical map: a global quadratic differential omega gives (0, omega,
  /// omega). Throws Error(NotGlobal) when omega has poles.
  CechCocycle alpha1(const Section& omega) const;

  /// Forgetful map to the H^1(TX) model: canonical coordinates of the class
  /// of theta in the 3-dimensional quotient of theta-space by fields
  /// holomorphic off one marked point.
  std::vector<Rational> alpha2(const CechCocycle& c) const;

  /// Canonical coordinates of the class of a cocycle in the quotient by
  /// coboundaries (length h1_dim()). Throws Error(NotACocycle) if the input
  /// is not in the modeled cocycle space.
  std::vector<Rational> class_coords(const CechCocycle& c) const;

  /// Pairing matrix on the class representatives; checks well-definedness by
  /// re-evaluating on representatives shifted with rng-driven coboundaries.
  /// Throws Error(TheoremViolation) if the shifted evaluation disagrees.
  RationalMatrix descended_form(Rng& rng) const;

  /// Pairing matrix without the well-definedness recheck.
  RationalMatrix descended_form_raw() const;

  CechCocycle random_cocycle(Rng& rng) const;
  Coboundary random_coboundary(Rng& rng) const;

  CechCocycle cocycle_from_parameters(const std::vector<Rational>& p) const;

 private:
  std::vector<Rational> parameters_of(const CechCocycle& c) const;
  std::vector<Rational> k_coords(const std::vector<Rational>& p_vec) const;

  CechGeometryPtr geom_;
  long n_;
  SectionBasis theta_space_, omega_a_space_, omega_b_space_;
  SectionBasis theta_a_space_, theta_b_space_;
  SectionBasis global_quad_;
  std::vector<std::vector<Rational>> cocycle_basis_;  // in parameter space P
  RationalMatrix cocycle_columns_;                    // P x dim(Z)
  MatrixEchelon cob_rref_;                  // coboundaries in Z coords
  size_t cob_rank_ = 0;
  std::vector<size_t> free_cols_;
  std::vector<CechCocycle> representatives_;
  MatrixEchelon tx_sub_rref_;  // theta_a + theta_b inside theta space
  std::vector<size_t> tx_free_cols_;
};

/// Result of compute_h1_basis: the model at N plus the stabilization witness
/// at N + 2. Construction throws Error(UnstableTruncation) when the
/// dimensions do not agree.
struct H1Basis {
  std::shared_ptr<H1Model> model;
  std::shared_ptr<H1Model> stabilization_check;
};

H1Basis compute_h1_basis(const CechGeometryPtr& geom, long truncation);

}  // namespace projsymp

#endif
