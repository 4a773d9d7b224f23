#ifndef PROJSYMP_SECTION_SPACE_HPP
#define PROJSYMP_SECTION_SPACE_HPP

#include <map>
#include <optional>
#include <vector>

#include "projsymp/expansion.hpp"
#include "projsymp/matrix.hpp"
#include "projsymp/section.hpp"

namespace projsymp {

/// Exact basis of a space of weight-k sections with prescribed pole bounds,
/// together with its coordinate data. Elements are x^i/D and x^i y/D
/// combinations found by solving the expansion constraints; the basis is the
/// canonical kernel basis of that constraint system, so it is reproducible.
class SectionBasis {
 public:
  SectionBasis() = default;

  size_t dim() const { return elems_.size(); }
  const std::vector<Section>& elements() const { return elems_; }
  const Section& operator[](size_t i) const { return elems_[i]; }
  int weight() const { return weight_; }

  /// Exact coordinates of `s` in this basis, or nullopt when s is not in the
  /// span (or not representable over the ansatz window).
  std::optional<std::vector<Rational>> coords_of(const Section& s) const;

  /// Linear combination of basis elements.
  Section combine(const std::vector<Rational>& coords) const;

 private:
  friend SectionBasis section_space(const CurvePtr&, int, const std::map<PointSpec, long>&);
  int weight_ = 0;
  CurvePtr curve_;
  long window_ = -1;
  Polynomial denom_;
  std::vector<Section> elems_;
  RationalMatrix basis_columns_;  // ansatz coordinates of the basis elements
};

/// Space of weight-k sections with pole order at each listed point bounded by
/// its map value (negative bounds force vanishing) and holomorphic at every
/// other point. Computed by a monomial ansatz in x and x*y over a degree
/// window plus exact expansion constraints at the infinity points and at all
/// listed points.
SectionBasis section_space(const CurvePtr& curve, int k,
                           const std::map<PointSpec, long>& pole_bounds);

}  // namespace projsymp

#endif
