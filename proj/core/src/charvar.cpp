#include "projsymp/charvar.hpp"

#include <cmath>

#include "projsymp/error.hpp"

namespace projsymp {
namespace charvar {

Presentation::Presentation(int g) : genus(g) {
  if (g < 2) fail(ErrorKind::DomainError, "presentation needs genus >= 2");
  for (int i = 0; i < g; ++i) {
    int a = 2 * i + 1, b = 2 * i + 2;
    relator_.insert(relator_.end(), {a, b, -a, -b});
  }
}

Mat2 Representation::letter(int signed_index) const {
  int idx = std::abs(signed_index) - 1;
  if (signed_index == 0 || idx >= pres.generator_count()) {
    fail(ErrorKind::BadWord, "letter " + std::to_string(signed_index) + " outside presentation");
  }
  const Mat2& m = gen[static_cast<size_t>(idx)];
  return signed_index > 0 ? m : Mat2(m.inverse());
}

Mat2 Representation::word(const std::vector<int>& w) const {
  Mat2 acc = Mat2::Identity();
  for (int l : w) acc = acc * letter(l);
  return acc;
}

double Representation::relator_residual() const {
  return (word(pres.relator()) - Mat2::Identity()).norm();
}

Eigen::Vector3cd sl2_to_vec(const Mat2& x) {
  Eigen::Vector3cd v;
  v << x(0, 0), x(0, 1), x(1, 0);
  return v;
}

Mat2 vec_to_sl2(const Eigen::Vector3cd& v) {
  Mat2 x;
  x << v(0), v(1), v(2), -v(0);
  return x;
}

Mat3 ad_matrix(const Mat2& m) {
  Mat2 minv = m.inverse();
  Mat3 out;
  const Mat2 basis[3] = {(Mat2() << 1, 0, 0, -1).finished(), (Mat2() << 0, 1, 0, 0).finished(),
                         (Mat2() << 0, 0, 1, 0).finished()};
  for (int j = 0; j < 3; ++j) {
    out.col(j) = sl2_to_vec(m * basis[j] * minv);
  }
  return out;
}

Mat3 fox_derivative(const Representation& rho, const std::vector<int>& word, int gen_index) {
  if (gen_index < 0 || gen_index >= rho.pres.generator_count()) {
    fail(ErrorKind::BadWord, "fox derivative with respect to unknown generator");
  }
  Mat3 acc = Mat3::Zero();
  Mat2 prefix = Mat2::Identity();
  for (int l : word) {
    if (l == gen_index + 1) {
      acc += ad_matrix(prefix);
    } else if (l == -(gen_index + 1)) {
      acc -= ad_matrix(Mat2(prefix * rho.letter(l)));
    }
    prefix = prefix * rho.letter(l);
  }
  return acc;
}

MatX relator_tangent_matrix(const Representation& rho) {
  int n = rho.pres.generator_count();
  MatX m(3, 3 * n);
  for (int i = 0; i < n; ++i) {
    m.block<3, 3>(0, 3 * i) = fox_derivative(rho, rho.pres.relator(), i);
  }
  return m;
}

VecX TangentCocycle::to_vec() const {
  VecX v(3 * static_cast<long>(u.size()));
  for (size_t i = 0; i < u.size(); ++i) v.segment<3>(3 * static_cast<long>(i)) = sl2_to_vec(u[i]);
  return v;
}

TangentCocycle TangentCocycle::from_vec(const VecX& v) {
  TangentCocycle t;
  for (long i = 0; 3 * i < v.size(); ++i) {
    t.u.push_back(vec_to_sl2(v.segment<3>(3 * i)));
  }
  return t;
}

double TangentCocycle::cocycle_residual(const Representation& rho) const {
  VecX v = to_vec();
  VecX img = relator_tangent_matrix(rho) * v;
  double scale = std::max(1.0, v.norm());
  return img.norm() / scale;
}

namespace {

Mat2 random_gl2(Rng& rng) {
  Mat2 m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = Complex(rng.sym_unit(), rng.sym_unit());
  return m;
}

// Rescale to determinant 1 by a complex square root; the determinant must be
// away from zero.
Mat2 to_sl2(const Mat2& m) {
  Complex det = m.determinant();
  if (std::abs(det) < 1e-6) fail(ErrorKind::ResampleNeeded, "near-singular draw");
  return m / std::sqrt(det);
}

bool share_invariant_line(const std::vector<Mat2>& gens, double tol) {
  // Candidate lines: eigenvectors of the first generator. A common invariant
  // line must be one of them (or any vector if the first generator is near
  // scalar, which det = 1 and non-parabolicity make negligible).
  Eigen::ComplexEigenSolver<Mat2> es(gens[0]);
  for (int k = 0; k < 2; ++k) {
    Eigen::Vector2cd v = es.eigenvectors().col(k).normalized();
    bool invariant_for_all = true;
    for (const Mat2& g : gens) {
      Eigen::Vector2cd w = g * v;
      // Component of w orthogonal to v.
      Eigen::Vector2cd residual = w - v * (v.adjoint() * w)(0);
      if (residual.norm() > tol * std::max(1.0, w.norm())) {
        invariant_for_all = false;
        break;
      }
    }
    if (invariant_for_all) return true;
  }
  return false;
}

Representation attempt_representation(int g, Rng& rng, const Tolerances& tol) {
  Representation rho(g);
  rho.gen.resize(static_cast<size_t>(2 * g));
  // Free draws: a_i, b_i for i < g, except the final b_g.
  for (int i = 0; i < 2 * g - 1; ++i) {
    rho.gen[static_cast<size_t>(i)] = to_sl2(random_gl2(rng));
  }

  // Commutator target for the last handle: [a_g, b_g] = T with
  // T = (prod_{i<g} [a_i, b_i])^-1.
  Mat2 partial = Mat2::Identity();
  for (int i = 0; i + 1 < g; ++i) {
    const Mat2& a = rho.gen[static_cast<size_t>(2 * i)];
    const Mat2& b = rho.gen[static_cast<size_t>(2 * i + 1)];
    partial = partial * a * b * a.inverse() * b.inverse();
  }
  Mat2 target = partial.inverse();

  // a_g B a_g^-1 = T B has a nonzero solution iff tr(T^-1 a_g) = tr(a_g).
  // That is one linear condition on a_g; enforce it by shifting the random
  // draw along the identity, which leaves the condition's solutions generic.
  Mat2 correction = target.inverse() - Mat2::Identity();
  Complex denom = correction.trace();
  if (std::abs(denom) < 1e-8) fail(ErrorKind::ResampleNeeded, "degenerate commutator target");
  Mat2 a_last_raw = random_gl2(rng);
  Complex shift = (correction * a_last_raw).trace() / denom;
  a_last_raw -= shift * Mat2::Identity();
  Mat2 a_last = to_sl2(a_last_raw);
  rho.gen[static_cast<size_t>(2 * g - 2)] = a_last;

  // Solve the 4-equation linear system a B - T B a = 0 via the smallest
  // singular vector of its 4x4 matrix (column-major vectorization).
  Eigen::Matrix4cd sys = Eigen::Matrix4cd::Zero();
  auto vec_index = [](int row, int col) { return col * 2 + row; };
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      int eq = vec_index(r, c);
      // (a B)_{rc} = sum_k a_{rk} B_{kc}
      for (int k = 0; k < 2; ++k) {
        sys(eq, vec_index(k, c)) += a_last(r, k);
      }
      // (T B a)_{rc} = sum_{k,l} T_{rk} B_{kl} a_{lc}
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          sys(eq, vec_index(k, l)) -= target(r, k) * a_last(l, c);
        }
      }
    }
  }
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(sys, Eigen::ComputeFullV);
  double smin = svd.singularValues()(3);
  double smax = svd.singularValues()(0);
  if (smin > 1e-10 * std::max(smax, 1.0)) {
    fail(ErrorKind::ResampleNeeded, "commutator system has no kernel");
  }
  Eigen::Vector4cd bvec = svd.matrixV().col(3);
  Mat2 b_last;
  b_last << bvec(0), bvec(2), bvec(1), bvec(3);
  if (std::abs(b_last.determinant()) < 1e-6) {
    fail(ErrorKind::ResampleNeeded, "kernel solution is near-degenerate");
  }
  rho.gen[static_cast<size_t>(2 * g - 1)] = to_sl2(b_last);

  if (rho.relator_residual() > tol.relator) {
    fail(ErrorKind::ResampleNeeded, "relator residual too large");
  }
  if (!is_certified_irreducible(rho, tol)) {
    fail(ErrorKind::ResampleNeeded, "irreducibility certificate failed");
  }
  return rho;
}

}  // namespace

bool is_certified_irreducible(const Representation& rho, const Tolerances& tol) {
  if (share_invariant_line(rho.gen, tol.irreducibility)) return false;
  const Mat2& a1 = rho.gen[0];
  const Mat2& b1 = rho.gen[1];
  Complex comm_trace = (a1 * b1 * a1.inverse() * b1.inverse()).trace();
  return std::abs(comm_trace - Complex(2.0, 0.0)) >= tol.irreducibility;
}

Representation random_representation(int g, uint64_t seed, const Tolerances& tol) {
  std::string last;
  for (uint64_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(seed * 0x9e3779b97f4a7c15ULL + attempt);
    try {
      return attempt_representation(g, rng, tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ResampleNeeded) throw;
      last = e.what();
    }
  }
  fail(ErrorKind::ResampleNeeded, "no valid representation after 64 attempts: " + last);
}

Representation conjugate_representation(const Representation& rho, const Mat2& m) {
  Representation out = rho;
  Mat2 minv = m.inverse();
  for (auto& gmat : out.gen) gmat = m * gmat * minv;
  return out;
}

TangentCocycle transport_cocycle(const TangentCocycle& u, const Mat2& m) {
  TangentCocycle out = u;
  Mat2 minv = m.inverse();
  for (auto& x : out.u) x = m * x * minv;
  return out;
}

CocycleSpaces cocycle_spaces(const Representation& rho, const Tolerances& tol) {
  MatX rel = relator_tangent_matrix(rho);
  long cols = rel.cols();
  Eigen::JacobiSVD<MatX> svd(rel, Eigen::ComputeFullV);
  double smax = std::max(svd.singularValues()(0), 1.0);
  long rank = 0;
  for (long i = 0; i < svd.singularValues().size(); ++i) {
    double rel_sv = svd.singularValues()(i) / smax;
    if (rel_sv > tol.svd_rank_high) {
      ++rank;
    } else if (rel_sv > tol.svd_rank_low) {
      fail(ErrorKind::IllConditioned,
           "singular value in the ambiguity band: " + std::to_string(rel_sv));
    }
  }
  CocycleSpaces out;
  out.z1 = svd.matrixV().rightCols(cols - rank);

  // B^1: image of X -> (Ad(rho(x_i)) X - X)_i.
  MatX cob(cols, 3);
  for (int i = 0; i < rho.pres.generator_count(); ++i) {
    Mat3 block = ad_matrix(rho.gen[static_cast<size_t>(i)]) - Mat3::Identity();
    cob.block(3 * i, 0, 3, 3) = block;
  }
  Eigen::JacobiSVD<MatX> bsvd(cob, Eigen::ComputeFullU);
  double bmax = std::max(bsvd.singularValues()(0), 1.0);
  long brank = 0;
  for (long i = 0; i < bsvd.singularValues().size(); ++i) {
    double rel_sv = bsvd.singularValues()(i) / bmax;
    if (rel_sv > tol.svd_rank_high) {
      ++brank;
    } else if (rel_sv > tol.svd_rank_low) {
      fail(ErrorKind::IllConditioned, "coboundary rank in the ambiguity band");
    }
  }
  out.b1 = bsvd.matrixU().leftCols(brank);

  // H^1: component of Z^1 orthogonal to B^1.
  MatX projected = out.z1 - out.b1 * (out.b1.adjoint() * out.z1);
  Eigen::JacobiSVD<MatX> hsvd(projected, Eigen::ComputeFullU);
  double hmax = std::max(hsvd.singularValues()(0), 1.0);
  long hrank = 0;
  for (long i = 0; i < hsvd.singularValues().size(); ++i) {
    double rel_sv = hsvd.singularValues()(i) / hmax;
    if (rel_sv > tol.svd_rank_high) {
      ++hrank;
    } else if (rel_sv > tol.svd_rank_low) {
      fail(ErrorKind::IllConditioned, "H1 rank in the ambiguity band");
    }
  }
  out.h1 = hsvd.matrixU().leftCols(hrank);
  return out;
}

const char* cup_convention_name(CupConvention c) {
  switch (c) {
    case CupConvention::PrefixStrict: return "prefix, j < k";
    case CupConvention::PrefixWithDiag: return "prefix, j <= k";
    case CupConvention::InclusiveStrict: return "inclusive prefix, j < k";
    case CupConvention::InclusiveWithDiag: return "inclusive prefix, j <= k";
    case CupConvention::PrefixHalfDiag: return "prefix, j < k, half diagonal";
  }
  return "?";
}

Complex goldman_pairing(const TangentCocycle& u, const TangentCocycle& v,
                        const Representation& rho, CupConvention conv, double* scale) {
  if (u.cocycle_residual(rho) > 1e-6 || v.cocycle_residual(rho) > 1e-6) {
    fail(ErrorKind::NotACocycle, "goldman pairing inputs must satisfy the cocycle condition");
  }
  const auto& relator = rho.pres.relator();
  const size_t m = relator.size();
  bool inclusive = conv == CupConvention::InclusiveStrict || conv == CupConvention::InclusiveWithDiag;
  bool with_diag = conv == CupConvention::PrefixWithDiag || conv == CupConvention::InclusiveWithDiag;
  bool half_diag = conv == CupConvention::PrefixHalfDiag;

  auto letter_value = [&](const TangentCocycle& c, int l) -> Mat2 {
    size_t idx = static_cast<size_t>(std::abs(l) - 1);
    if (l > 0) return c.u[idx];
    Mat2 g = rho.gen[idx];
    return Mat2(-(g.inverse() * c.u[idx] * g));
  };

  // Transported letter contributions Ad(T_j) u(y_j).
  std::vector<Mat2> ut(m), vt(m);
  Mat2 prefix = Mat2::Identity();
  for (size_t j = 0; j < m; ++j) {
    Mat2 transport = inclusive ? Mat2(prefix * rho.letter(relator[j])) : prefix;
    Mat2 tinv = transport.inverse();
    ut[j] = transport * letter_value(u, relator[j]) * tinv;
    vt[j] = transport * letter_value(v, relator[j]) * tinv;
    prefix = prefix * rho.letter(relator[j]);
  }

  Complex acc(0, 0);
  double abs_acc = 0;
  for (size_t j = 0; j < m; ++j) {
    for (size_t k = (with_diag || half_diag) ? j : j + 1; k < m; ++k) {
      Complex term = (ut[j] * vt[k]).trace();
      if (half_diag && k == j) term *= 0.5;
      acc += term;
      abs_acc += std::abs(term);
    }
  }
  if (scale) *scale = std::max(abs_acc, 1e-30);
  return acc;
}

CupConvention select_cup_convention(const Representation& rho, uint64_t seed,
                                    const Tolerances& tol) {
  CocycleSpaces spaces = cocycle_spaces(rho, tol);
  Rng rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
  // The four prefix/suffix x strict/diagonal candidates, then the
  // half-diagonal refinement of the prefix formula (the diagonal term of the
  // 2-cell diagonal approximation carries weight 1/2; without it every plain
  // candidate picks up a symmetric coboundary defect).
  const CupConvention candidates[] = {CupConvention::PrefixStrict, CupConvention::PrefixWithDiag,
                                      CupConvention::InclusiveStrict,
                                      CupConvention::InclusiveWithDiag,
                                      CupConvention::PrefixHalfDiag};
  for (CupConvention conv : candidates) {
    bool ok = true;
    for (int trial = 0; trial < 6 && ok; ++trial) {
      // Random cocycle and random coboundary.
      VecX zc = VecX::Zero(spaces.z1.rows());
      for (long i = 0; i < spaces.z1.cols(); ++i) {
        zc += Complex(rng.sym_unit(), rng.sym_unit()) * spaces.z1.col(i);
      }
      Mat2 x = vec_to_sl2(Eigen::Vector3cd(Complex(rng.sym_unit(), rng.sym_unit()),
                                           Complex(rng.sym_unit(), rng.sym_unit()),
                                           Complex(rng.sym_unit(), rng.sym_unit())));
      TangentCocycle z = TangentCocycle::from_vec(zc);
      TangentCocycle cob;
      for (int i = 0; i < rho.pres.generator_count(); ++i) {
        Mat2 g = rho.gen[static_cast<size_t>(i)];
        cob.u.push_back(Mat2(g * x * g.inverse() - x));
      }
      double scale1 = 0, scale2 = 0;
      Complex p1 = goldman_pairing(z, cob, rho, conv, &scale1);
      Complex p2 = goldman_pairing(cob, z, rho, conv, &scale2);
      if (std::abs(p1) > tol.pairing_rel * scale1 || std::abs(p2) > tol.pairing_rel * scale2) {
        ok = false;
      }
    }
    if (ok) return conv;
  }
  fail(ErrorKind::Internal, "no cup-product convention passes the coboundary-vanishing gate");
}

MatX goldman_matrix(const Representation& rho, const CocycleSpaces& spaces, CupConvention conv) {
  long n = spaces.h1.cols();
  MatX m(n, n);
  std::vector<TangentCocycle> basis;
  basis.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) basis.push_back(TangentCocycle::from_vec(spaces.h1.col(i)));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      m(i, j) = goldman_pairing(basis[static_cast<size_t>(i)], basis[static_cast<size_t>(j)], rho,
                                conv);
    }
  }
  return m;
}

}  // namespace charvar
}  // namespace projsymp
