#include "toricdeg/valuation.hpp"

#include <algorithm>

#include "toricdeg/error.hpp"

namespace toricdeg::valuation {

using geom::HPolytope;
using geom::LatticePointSet;

void SlideDirection::validate(std::size_t n) const {
  if (!(k < l && l < n)) throw PreconditionError("slide direction needs k < l <= n");
  if (c < 0) throw PreconditionError("slide direction needs c >= 0");
}

UPolynomial UPolynomial::monomial(const IntVector& exponents, const Rational& coeff) {
  UPolynomial p(exponents.size());
  p.add_term(exponents, coeff);
  return p;
}

void UPolynomial::add_term(const IntVector& exponents, const Rational& coeff) {
  if (exponents.size() != n_) throw Error("exponent vector has wrong length");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

void UPolynomial::add_scaled(const UPolynomial& other, const Rational& factor) {
  for (const auto& [e, c] : other.terms_) add_term(e, c * factor);
}

UPolynomial operator*(const UPolynomial& a, const UPolynomial& b) {
  UPolynomial r(a.n_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      IntVector e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

UPolynomial expand_monomial(const IntVector& alpha, const SlideDirection& d) {
  const std::size_t n = alpha.size();
  d.validate(n);
  if (d.c == 0) throw PreconditionError("c = 0 does not define a coordinate change");
  for (auto a : alpha)
    if (a < 0) throw PreconditionError("exponents must be nonnegative");
  UPolynomial p(n);
  const std::int64_t ak = alpha[d.k];
  Integer binom = 1;  // C(ak, j)
  for (std::int64_t j = 0; j <= ak; ++j) {
    IntVector e(alpha);
    e[d.k] = j;
    e[d.l] = alpha[d.l] + d.c * (ak - j);
    p.add_term(e, Rational(binom));
    binom = binom * static_cast<unsigned long>(ak - j) / static_cast<unsigned long>(j + 1);
  }
  return p;
}

ValuationValue lowest_term(const UPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("valuation of zero undefined");
  return p.terms().begin()->first;
}

LatticePointSet valuation_image(std::size_t n, const std::vector<UPolynomial>& basis) {
  // owner[v] is a staged element with lowest term v.
  std::map<IntVector, UPolynomial> owner;
  for (const auto& b : basis) {
    if (b.nvars() != n) throw PreconditionError("polynomial has wrong number of variables");
    UPolynomial p = b;
    for (;;) {
      if (p.is_zero()) throw PreconditionError("basis is linearly dependent");
      auto it = owner.find(lowest_term(p));
      if (it == owner.end()) break;
      const auto& lead = *p.terms().begin();
      Rational factor = -lead.second / it->second.terms().begin()->second;
      p.add_scaled(it->second, factor);
    }
    IntVector v = lowest_term(p);
    owner.emplace(std::move(v), std::move(p));
  }
  std::vector<IntVector> pts;
  pts.reserve(owner.size());
  for (const auto& [v, _] : owner) pts.push_back(v);
  return LatticePointSet(n, std::move(pts));
}

LatticePointSet slide(const LatticePointSet& s, const SlideDirection& d) {
  d.validate(s.dim());
  // Line key: all coordinates except k, with x_l replaced by x_l + c x_k.
  std::map<IntVector, std::vector<IntVector>> lines;
  for (const auto& p : s) {
    for (auto x : p)
      if (x < 0) throw PreconditionError("slide needs points in the nonnegative orthant");
    IntVector key(p);
    key[d.l] += d.c * p[d.k];
    key[d.k] = 0;
    lines[key].push_back(p);
  }
  std::vector<IntVector> out;
  out.reserve(s.size());
  for (auto& [key, pts] : lines) {
    std::int64_t shift = pts.front()[d.k];
    for (const auto& p : pts) shift = std::min(shift, p[d.k]);
    for (auto& p : pts) {
      p[d.k] -= shift;
      p[d.l] += d.c * shift;
      out.push_back(std::move(p));
    }
  }
  return LatticePointSet(s.dim(), std::move(out));
}

const LatticePointSet& GradedSemigroup::level(int m) const {
  if (m < 0 || m > max_level) throw PreconditionError("level " + std::to_string(m) + " out of range");
  return levels[static_cast<std::size_t>(m)];
}

std::optional<std::pair<int, int>> additivity_violation(const GradedSemigroup& s) {
  for (int a = 1; a <= s.max_level; ++a)
    for (int b = a; a + b <= s.max_level; ++b) {
      const auto& target = s.level(a + b);
      for (const auto& p : s.level(a))
        for (const auto& q : s.level(b)) {
          IntVector sum(p);
          for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += q[i];
          if (!target.contains(sum)) return std::make_pair(a, b);
        }
    }
  return std::nullopt;
}

GradedSemigroup build_semigroup(const HPolytope& p, const SlideDirection& d, int max_level) {
  const std::size_t n = p.dim();
  d.validate(n);
  if (d.c == 0) throw PreconditionError("c = 0 does not define a coordinate change");
  if (max_level < 1) throw PreconditionError("max level must be >= 1");
  if (!geom::is_integral(p)) throw PreconditionError("polytope is not integral");
  if (!geom::is_delzant_smooth(p).smooth) throw PreconditionError("polytope is not Delzant smooth");
  if (!geom::is_normalized_at_origin(p))
    throw PreconditionError("polytope is not normalized at the origin vertex");
  auto normality = geom::is_normal(p, max_level);
  if (!normality.normal)
    throw PreconditionError("polytope is not normal up to level " + std::to_string(max_level) +
                            " (first failure at m = " + std::to_string(normality.counterexample->first) +
                            "); dilate it by n - 1 = " + std::to_string(n - 1) + " and retry");

  GradedSemigroup s;
  s.n = n;
  s.max_level = max_level;
  s.levels.push_back(LatticePointSet(n, {IntVector(n, 0)}));
  for (int m = 1; m <= max_level; ++m) s.levels.push_back(slide(geom::lattice_points(geom::dilate(p, m)), d));
  if (auto bad = additivity_violation(s))
    throw Error("semigroup additivity fails for levels " + std::to_string(bad->first) + " and " +
                std::to_string(bad->second));
  return s;
}

HPolytope okounkov_approx(const GradedSemigroup& s, int m) {
  if (m < 1) throw PreconditionError("level must be >= 1");
  const auto& lvl = s.level(m);
  if (lvl.empty()) throw PreconditionError("level " + std::to_string(m) + " is empty");
  return geom::dilate(geom::hull(lvl), Rational(1, m));
}

std::vector<bool> okounkov_nesting(const GradedSemigroup& s) {
  std::vector<bool> nested;
  for (int m = 1; m < s.max_level; ++m) {
    auto small = okounkov_approx(s, m);
    auto large = okounkov_approx(s, m + 1);
    bool inside = true;
    for (const auto& v : small.vertex_list()) inside = inside && large.contains(v);
    nested.push_back(inside);
  }
  return nested;
}

std::optional<ConeCertificate> level_mismatch(const GradedSemigroup& s, const HPolytope& delta, int m) {
  auto expected = geom::lattice_points(geom::dilate(delta, m));
  const auto& actual = s.level(m);
  auto missing = expected.difference(actual);
  auto extra = actual.difference(expected);
  if (missing.empty() && extra.empty()) return std::nullopt;
  if (!missing.empty() && (extra.empty() || missing.front() < extra.front()))
    return ConeCertificate{m, missing.front(), true};
  return ConeCertificate{m, extra.front(), false};
}

ConeConditionReport check_cone_condition(const GradedSemigroup& s, const HPolytope& delta) {
  if (!geom::is_integral(delta)) throw PreconditionError("cone condition needs an integral polytope");
  ConeConditionReport report;
  for (int m = 1; m <= s.max_level; ++m)
    if (auto cert = level_mismatch(s, delta, m)) {
      report.holds = false;
      report.certificate = cert;
      return report;
    }
  return report;
}

SaturationReport check_saturation(const GradedSemigroup& s) {
  SaturationReport report;
  for (int m = 1; m <= s.max_level; ++m)
    for (int t = 2; t * m <= s.max_level; ++t)
      for (const auto& y : s.level(t * m)) {
        if (!std::all_of(y.begin(), y.end(), [t](std::int64_t v) { return v % t == 0; })) continue;
        IntVector x(y);
        for (auto& v : x) v /= t;
        if (!s.level(m).contains(x)) {
          report.saturated = false;
          report.witness = SaturationWitness{m, x, t};
          return report;
        }
      }
  return report;
}

}  // namespace toricdeg::valuation
