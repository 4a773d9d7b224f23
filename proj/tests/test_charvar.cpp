#include <doctest.h>

#include "projsymp/charvar.hpp"
#include "projsymp/error.hpp"
#include "projsymp/rng.hpp"

using namespace projsymp;
namespace cv = projsymp::charvar;

namespace {

cv::TangentCocycle coboundary_of(const cv::Representation& rho, const cv::Mat2& x) {
  cv::TangentCocycle cob;
  for (int i = 0; i < rho.pres.generator_count(); ++i) {
    cv::Mat2 g = rho.gen[static_cast<size_t>(i)];
    cob.u.push_back(cv::Mat2(g * x * g.inverse() - x));
  }
  return cob;
}

cv::Mat2 random_sl2_tangent(Rng& rng) {
  return cv::vec_to_sl2(Eigen::Vector3cd(cv::Complex(rng.sym_unit(), rng.sym_unit()),
                                         cv::Complex(rng.sym_unit(), rng.sym_unit()),
                                         cv::Complex(rng.sym_unit(), rng.sym_unit())));
}

}  // namespace

TEST_CASE("presentation relator shape") {
  cv::Presentation p(2);
  CHECK(p.relator().size() == 8);
  std::vector<int> count(4, 0), inv(4, 0);
  for (int l : p.relator()) {
    if (l > 0) ++count[static_cast<size_t>(l - 1)];
    else ++inv[static_cast<size_t>(-l - 1)];
  }
  for (int i = 0; i < 4; ++i) {
    CHECK(count[static_cast<size_t>(i)] == 1);
    CHECK(inv[static_cast<size_t>(i)] == 1);
  }
  CHECK_THROWS_AS(cv::Presentation(1), Error);
}

TEST_CASE("random representations satisfy the relator and are irreducible") {
  for (uint64_t seed : {1ULL, 2ULL, 7ULL, 19ULL}) {
    cv::Representation rho = cv::random_representation(2, seed);
    CHECK(rho.relator_residual() < 1e-10);
    CHECK(cv::is_certified_irreducible(rho));
    for (const auto& g : rho.gen) {
      CHECK(std::abs(g.determinant() - cv::Complex(1, 0)) < 1e-10);
    }
  }
}

TEST_CASE("conjugated representations still satisfy the relator") {
  cv::Representation rho = cv::random_representation(2, 5);
  Rng rng(55);
  cv::Mat2 m;
  m << cv::Complex(1.2, 0.3), cv::Complex(rng.sym_unit(), rng.sym_unit()),
      cv::Complex(rng.sym_unit(), rng.sym_unit()), cv::Complex(0.8, -0.1);
  m /= std::sqrt(m.determinant());
  cv::Representation rho2 = cv::conjugate_representation(rho, m);
  CHECK(rho2.relator_residual() < 1e-9);
}

TEST_CASE("fox derivative rules") {
  cv::Representation rho = cv::random_representation(2, 3);
  CHECK((cv::fox_derivative(rho, {1}, 0) - cv::Mat3::Identity()).norm() < 1e-13);
  cv::Mat3 want = -cv::ad_matrix(rho.gen[0]).inverse();
  CHECK((cv::fox_derivative(rho, {-1}, 0) - want).norm() < 1e-13);
  CHECK_THROWS_AS(cv::fox_derivative(rho, {9}, 0), Error);
  CHECK_THROWS_AS(cv::fox_derivative(rho, {1}, 7), Error);
  // product rule
  Rng rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> u, v;
    for (int i = 0; i < 3; ++i) {
      u.push_back(rng.chance(0.5) ? static_cast<int>(rng.int_in(1, 4))
                                  : -static_cast<int>(rng.int_in(1, 4)));
      v.push_back(rng.chance(0.5) ? static_cast<int>(rng.int_in(1, 4))
                                  : -static_cast<int>(rng.int_in(1, 4)));
    }
    std::vector<int> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    int x = static_cast<int>(rng.int_in(0, 3));
    cv::Mat3 lhs = cv::fox_derivative(rho, uv, x);
    cv::Mat3 rhs = cv::fox_derivative(rho, u, x) +
                   cv::ad_matrix(rho.word(u)) * cv::fox_derivative(rho, v, x);
    CHECK((lhs - rhs).norm() < 1e-12 * std::max(1.0, lhs.norm() + rhs.norm()));
  }
}

TEST_CASE("cocycle and coboundary dimensions") {
  cv::Representation rho = cv::random_representation(2, 11);
  cv::CocycleSpaces spaces = cv::cocycle_spaces(rho);
  CHECK(spaces.z1.cols() == 9);
  CHECK(spaces.b1.cols() == 3);
  CHECK(spaces.h1.cols() == 6);
  // coboundaries satisfy the cocycle condition
  Rng rng(81);
  for (int i = 0; i < 5; ++i) {
    CHECK(coboundary_of(rho, random_sl2_tangent(rng)).cocycle_residual(rho) < 1e-10);
  }
}

TEST_CASE("ad matrix is a Lie algebra representation") {
  cv::Representation rho = cv::random_representation(2, 13);
  cv::Mat3 a = cv::ad_matrix(rho.gen[0]);
  cv::Mat3 b = cv::ad_matrix(rho.gen[1]);
  cv::Mat3 ab = cv::ad_matrix(cv::Mat2(rho.gen[0] * rho.gen[1]));
  CHECK((a * b - ab).norm() < 1e-12 * std::max(1.0, ab.norm()));
}

TEST_CASE("goldman pairing: coboundary gate, antisymmetry, nondegeneracy") {
  cv::Representation rho = cv::random_representation(2, 21);
  cv::CupConvention conv = cv::select_cup_convention(rho, 21);
  cv::CocycleSpaces spaces = cv::cocycle_spaces(rho);
  Rng rng(91);
  for (int trial = 0; trial < 5; ++trial) {
    cv::VecX zc = cv::VecX::Zero(12);
    for (long i = 0; i < spaces.z1.cols(); ++i) {
      zc += cv::Complex(rng.sym_unit(), rng.sym_unit()) * spaces.z1.col(i);
    }
    cv::TangentCocycle z = cv::TangentCocycle::from_vec(zc);
    cv::TangentCocycle cob = coboundary_of(rho, random_sl2_tangent(rng));
    double s1 = 0, s2 = 0;
    double p1 = std::abs(cv::goldman_pairing(z, cob, rho, conv, &s1));
    double p2 = std::abs(cv::goldman_pairing(cob, z, rho, conv, &s2));
    CHECK(p1 <= 1e-8 * s1);
    CHECK(p2 <= 1e-8 * s2);
  }
  cv::MatX m = cv::goldman_matrix(rho, spaces, conv);
  CHECK((m + m.transpose()).norm() <= 1e-8 * m.norm());
  Eigen::JacobiSVD<cv::MatX> svd(m);
  double smax = svd.singularValues()(0);
  CHECK(std::abs(m.determinant()) / std::pow(smax, 6) > 1e-9);
}

TEST_CASE("goldman pairing rejects non-cocycles") {
  cv::Representation rho = cv::random_representation(2, 23);
  Rng rng(99);
  cv::TangentCocycle junk;
  for (int i = 0; i < 4; ++i) junk.u.push_back(random_sl2_tangent(rng));
  // A random tuple is (almost surely) not a cocycle.
  REQUIRE(junk.cocycle_residual(rho) > 1e-4);
  cv::CocycleSpaces spaces = cv::cocycle_spaces(rho);
  cv::TangentCocycle ok = cv::TangentCocycle::from_vec(spaces.z1.col(0));
  CHECK_THROWS_AS(cv::goldman_pairing(junk, ok, rho, cv::CupConvention::PrefixStrict), Error);
}

TEST_CASE("upper-triangular representations fail the certificate") {
  cv::Representation rho(2);
  rho.gen.assign(4, cv::Mat2::Identity());
  double ts[4] = {1.3, 0.7, 2.1, 0.4};
  for (int i = 0; i < 4; ++i) {
    cv::Mat2 g;
    g << cv::Complex(ts[i], 0.0), cv::Complex(0.5, 0.25 * i), cv::Complex(0, 0),
        cv::Complex(1.0 / ts[i], 0.0);
    rho.gen[static_cast<size_t>(i)] = g;
  }
  CHECK(!cv::is_certified_irreducible(rho));
}

TEST_CASE("genus 3 dimensions") {
  cv::Representation rho = cv::random_representation(3, 31);
  CHECK(rho.relator_residual() < 1e-10);
  cv::CocycleSpaces spaces = cv::cocycle_spaces(rho);
  CHECK(spaces.z1.cols() == 15);
  CHECK(spaces.b1.cols() == 3);
  CHECK(spaces.h1.cols() == 12);
}
