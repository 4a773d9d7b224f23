#include "projsymp/section_space.hpp"

#include <algorithm>

#include "projsymp/error.hpp"

namespace projsymp {

namespace {

// (x^i + [with_y] x^i y) / D * (dx/y)^k
Section ansatz_element(const CurvePtr& curve, int k, long i, bool with_y, const Polynomial& denom) {
  RationalFunction coeff(Polynomial::monomial(i, Rational(1)), denom);
  if (with_y) return Section(k, RationalFunction(), coeff, curve);
  return Section(k, coeff, RationalFunction(), curve);
}

}  // namespace

std::optional<std::vector<Rational>> SectionBasis::coords_of(const Section& s) const {
  if (!curve_) fail(ErrorKind::Internal, "coords_of on an empty basis");
  if (s.weight() != weight_) return std::nullopt;
  if (elems_.empty()) {
    if (s.is_zero()) return std::vector<Rational>{};
    return std::nullopt;
  }
  RationalFunction d{denom_};
  RationalFunction p0 = s.r0() * d;
  RationalFunction p1 = s.r1() * d;
  if (!p0.is_polynomial() || !p1.is_polynomial()) return std::nullopt;
  if (p0.num().degree() > window_ || p1.num().degree() > window_) return std::nullopt;
  std::vector<Rational> ansatz(2 * static_cast<size_t>(window_ + 1), Rational(0));
  for (long i = 0; i <= window_; ++i) {
    ansatz[static_cast<size_t>(i)] = p0.num().coeff(i);
    ansatz[static_cast<size_t>(window_ + 1 + i)] = p1.num().coeff(i);
  }
  return basis_columns_.solve(ansatz);
}

Section SectionBasis::combine(const std::vector<Rational>& coords) const {
  if (coords.size() != elems_.size()) fail(ErrorKind::DomainError, "coordinate length mismatch");
  Section acc = Section::zero(weight_, curve_);
  for (size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    Section t = elems_[i];
    t *= coords[i];
    acc += t;
  }
  return acc;
}

SectionBasis section_space(const CurvePtr& curve, int k,
                           const std::map<PointSpec, long>& pole_bounds) {
  auto bound_of = [&](const PointSpec& p) {
    auto it = pole_bounds.find(p);
    return it == pole_bounds.end() ? 0L : it->second;
  };

  // Shared denominator granting the allowed poles at finite points. A pole
  // bound m at a branch point needs ceil(m/2) powers of (x - e) because
  // x - e has a double zero in the local parameter.
  Polynomial denom({Rational(1)});
  for (const auto& [p, bound] : pole_bounds) {
    if (bound <= 0 || p.is_infinite()) continue;
    long power = (p.tag == PointSpec::Tag::Branch) ? (bound + 1) / 2 : bound;
    Polynomial lin({-p.x, Rational(1)});
    for (long i = 0; i < power; ++i) denom *= lin;
  }

  long max_inf_bound = std::max({bound_of(PointSpec::inf_plus()), bound_of(PointSpec::inf_minus()), 0L});
  long window = max_inf_bound + std::labs(k) + denom.degree() + 9;

  std::vector<Section> ansatz;
  for (int with_y = 0; with_y <= 1; ++with_y) {
    for (long i = 0; i <= window; ++i) {
      ansatz.push_back(ansatz_element(curve, k, i, with_y != 0, denom));
    }
  }

  // Constraint points: both infinity points always, plus every listed point.
  std::vector<PointSpec> points = {PointSpec::inf_plus(), PointSpec::inf_minus()};
  for (const auto& [p, bound] : pole_bounds) {
    if (!p.is_infinite()) points.push_back(p);
  }

  std::vector<std::vector<Rational>> rows;
  for (const auto& p : points) {
    long bound = bound_of(p);
    long order = -bound - 1;  // constraints live at exponents <= order
    std::vector<FrameExpansion> exps;
    exps.reserve(ansatz.size());
    long lo_plain = order + 1, lo_rad = order + 1;
    for (const auto& a : ansatz) {
      FrameExpansion e = expand_at(a, p, order);
      lo_plain = std::min(lo_plain, e.plain.valuation());
      lo_rad = std::min(lo_rad, e.radical.valuation());
      exps.push_back(std::move(e));
    }
    for (long e = lo_plain; e <= order; ++e) {
      std::vector<Rational> row;
      row.reserve(ansatz.size());
      for (const auto& ex : exps) row.push_back(ex.plain_coefficient(e));
      rows.push_back(std::move(row));
    }
    for (long e = lo_rad; e <= order; ++e) {
      std::vector<Rational> row;
      row.reserve(ansatz.size());
      for (const auto& ex : exps) row.push_back(ex.radical_coefficient(e));
      rows.push_back(std::move(row));
    }
  }

  SectionBasis basis;
  basis.weight_ = k;
  basis.curve_ = curve;
  basis.window_ = window;
  basis.denom_ = denom;

  std::vector<std::vector<Rational>> kernel;
  if (rows.empty()) {
    kernel = RationalMatrix(0, ansatz.size()).kernel_basis();
  } else {
    kernel = RationalMatrix::from_rows(rows).kernel_basis();
  }
  for (const auto& v : kernel) {
    Section acc = Section::zero(k, curve);
    for (size_t j = 0; j < v.size(); ++j) {
      if (v[j].is_zero()) continue;
      Section t = ansatz[j];
      t *= v[j];
      acc += t;
    }
    basis.elems_.push_back(std::move(acc));
  }
  basis.basis_columns_ = RationalMatrix::from_columns(kernel);
  return basis;
}

}  // namespace projsymp
