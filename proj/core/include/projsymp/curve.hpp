#ifndef PROJSYMP_CURVE_HPP
#define PROJSYMP_CURVE_HPP

#include <memory>
#include <string>
#include <vector>

#include "projsymp/polynomial.hpp"
#include "projsymp/rational.hpp"

namespace projsymp {

/// A point of the curve y^2 = f(x), deg f = 6: an affine point with y != 0,
/// a branch point (y = 0), or one of the two smooth points over x = infinity.
/// InfPlus is the sheet where y*x^-3 -> +1.
struct PointSpec {
  enum class Tag { Affine, Branch, InfPlus, InfMinus };

  Tag tag = Tag::InfPlus;
  Rational x;  // Affine: x0, Branch: the root e
  Rational y;  // Affine only

  static PointSpec inf_plus() { return {Tag::InfPlus, Rational(0), Rational(0)}; }
  static PointSpec inf_minus() { return {Tag::InfMinus, Rational(0), Rational(0)}; }
  static PointSpec branch(const Rational& e) { return {Tag::Branch, e, Rational(0)}; }
  static PointSpec affine(const Rational& x0, const Rational& y0) { return {Tag::Affine, x0, y0}; }

  bool is_infinite() const { return tag == Tag::InfPlus || tag == Tag::InfMinus; }

  friend bool operator==(const PointSpec& a, const PointSpec& b) {
    return a.tag == b.tag && a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const PointSpec& a, const PointSpec& b) { return !(a == b); }
  friend bool operator<(const PointSpec& a, const PointSpec& b) {
    if (a.tag != b.tag) return static_cast<int>(a.tag) < static_cast<int>(b.tag);
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  }

  std::string str() const;
};

/// Genus-2 hyperelliptic curve y^2 = f(x) with f monic, squarefree, deg 6.
class Curve {
 public:
  explicit Curve(Polynomial f);

  static std::shared_ptr<const Curve> make(Polynomial f) {
    return std::make_shared<const Curve>(std::move(f));
  }

  /// x(x-1)(x-2)(x-3)(x-4)(x-5), the default acceptance-suite curve.
  static Polynomial default_sextic();

  const Polynomial& f() const { return f_; }

  /// Rational roots of f, ascending. The default suite has all six.
  const std::vector<Rational>& rational_roots() const { return roots_; }

  /// Checks the defining invariants of a point against this curve;
  /// throws Error(DomainError) when violated.
  void validate_point(const PointSpec& p) const;

 private:
  Polynomial f_;
  std::vector<Rational> roots_;
};

using CurvePtr = std::shared_ptr<const Curve>;

}  // namespace projsymp

#endif
