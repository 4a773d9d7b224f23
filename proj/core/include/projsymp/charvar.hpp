#ifndef PROJSYMP_CHARVAR_HPP
#define PROJSYMP_CHARVAR_HPP

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "projsymp/rng.hpp"

namespace projsymp {
namespace charvar {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat3 = Eigen::Matrix3cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

/// Surface group presentation: generators a1, b1, ..., ag, bg subject to the
/// single relator prod [ai, bi]. Letters are signed 1-based generator
/// indices; the relator has length 4g with each generator appearing once
/// plainly and once inverted.
struct Presentation {
  int genus;

  explicit Presentation(int g);

  int generator_count() const { return 2 * genus; }
  const std::vector<int>& relator() const { return relator_; }

 private:
  std::vector<int> relator_;
};

/// Numerical tolerances of the floating-point suite.
struct Tolerances {
  double relator = 1e-10;        // ||rho(r) - I||
  double svd_rank_low = 1e-8;    // relative singular value cutoff
  double svd_rank_high = 1e-6;   // ambiguity band upper edge
  double irreducibility = 1e-6;  // invariant-line rejection
  double pairing_rel = 1e-8;     // coboundary vanishing / antisymmetry
};

/// SL(2, C) representation of the surface group, one matrix per generator.
struct Representation {
  Presentation pres;
  std::vector<Mat2> gen;

  explicit Representation(int g) : pres(g) {}

  Mat2 letter(int signed_index) const;       // rho of a single letter
  Mat2 word(const std::vector<int>& w) const;
  double relator_residual() const;
};

/// sl2 coordinates in the basis H = [[1,0],[0,-1]], E = [[0,1],[0,0]],
/// F = [[0,0],[1,0]].
Eigen::Vector3cd sl2_to_vec(const Mat2& x);
Mat2 vec_to_sl2(const Eigen::Vector3cd& v);

/// Adjoint action on sl2 as a 3x3 matrix: X -> M X M^-1.
Mat3 ad_matrix(const Mat2& m);

/// Ad-evaluated Fox derivative of a word with respect to one generator
/// (0-based index), as an operator on sl2. Throws Error(BadWord) for letters
/// outside the presentation.
Mat3 fox_derivative(const Representation& rho, const std::vector<int>& word, int gen_index);

/// The relator cocycle condition as a 3 x 6g matrix acting on per-generator
/// sl2 coordinates.
MatX relator_tangent_matrix(const Representation& rho);

/// Ad-twisted group 1-cocycle: one traceless matrix per generator.
struct TangentCocycle {
  std::vector<Mat2> u;

  VecX to_vec() const;
  static TangentCocycle from_vec(const VecX& v);

  double cocycle_residual(const Representation& rho) const;
};

/// Irreducibility certificate (a sufficient surrogate for Zariski-dense
/// image): the generators share no invariant line within tolerance and the
/// first handle is non-elementary (tr[a1, b1] != 2 within tolerance).
bool is_certified_irreducible(const Representation& rho, const Tolerances& tol = {});

/// Seeded irreducible representation with the relator satisfied to the
/// relator tolerance. Internally resamples on degenerate draws; throws
/// Error(ResampleNeeded) only when all retry budgets are exhausted.
Representation random_representation(int g, uint64_t seed, const Tolerances& tol = {});

Representation conjugate_representation(const Representation& rho, const Mat2& m);
TangentCocycle transport_cocycle(const TangentCocycle& u, const Mat2& m);

struct CocycleSpaces {
  MatX z1;          // orthonormal columns spanning Z^1
  MatX b1;          // orthonormal columns spanning B^1
  MatX h1;          // orthonormal columns spanning Z^1 n (B^1)-perp
};

/// Z^1 as the numerical kernel of the relator map, B^1 as the image of the
/// conjugation directions, H^1 as the orthogonal complement of B^1 inside
/// Z^1. Throws Error(IllConditioned) when a singular value falls in the
/// ambiguity band. Requires an irreducible rho.
CocycleSpaces cocycle_spaces(const Representation& rho, const Tolerances& tol = {});

enum class CupConvention {
  PrefixStrict,      // transport by the proper prefix, sum over j < k
  PrefixWithDiag,    // j <= k, diagonal at full weight
  InclusiveStrict,   // transport includes the letter itself, j < k
  InclusiveWithDiag,
  PrefixHalfDiag,    // j < k plus the diagonal at half weight
};

const char* cup_convention_name(CupConvention c);

/// Chain-level Goldman pairing of two cocycles, evaluated on the relator
/// 2-cell: sum over ordered letter pairs of tr(Ad(transport_j) u(y_j) *
/// Ad(transport_k) v(y_k)), with u extended to inverse letters by
/// u(x^-1) = -Ad(rho(x))^-1 u(x). `scale` (optional out) receives the sum of
/// absolute values of the summands, the natural relative scale.
/// Throws Error(NotACocycle) when an input violates the cocycle condition.
Complex goldman_pairing(const TangentCocycle& u, const TangentCocycle& v,
                        const Representation& rho, CupConvention conv,
                        double* scale = nullptr);

/// Validates the convention against the coboundary-vanishing gate on seeded
/// data and returns the first passing candidate. Throws Error(Internal) if
/// all four fail.
CupConvention select_cup_convention(const Representation& rho, uint64_t seed,
                                    const Tolerances& tol = {});

/// Raw pairing matrix on the H^1 basis columns; antisymmetry within
/// tolerance is a property to be checked, not enforced.
MatX goldman_matrix(const Representation& rho, const CocycleSpaces& spaces, CupConvention conv);

}  // namespace charvar
}  // namespace projsymp

#endif
