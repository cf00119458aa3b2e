#pragma once

#include <map>
#include <optional>

#include "toricdeg/lattice_geometry.hpp"

/// Lowest-term valuations for the coordinate change u_k = f_k - f_l^c and the
/// sliding operator that computes their images on lattice polytopes.
///
/// Indices are 0-based here; the JSON layer uses 1-based k and l.
namespace toricdeg::valuation {

/// Direction -e_k + c e_l with k < l. c = 0 is a valid slide direction but
/// not a valid coordinate change, so expansion and semigroups reject it.
struct SlideDirection {
  std::size_t k = 0;
  std::size_t l = 1;
  std::int64_t c = 1;

  void validate(std::size_t n) const;
};

/// Polynomial in u_1..u_n with exact coefficients; zero terms are never stored.
class UPolynomial {
 public:
  using Terms = std::map<IntVector, Rational>;

  explicit UPolynomial(std::size_t n = 0) : n_(n) {}
  static UPolynomial monomial(const IntVector& exponents, const Rational& coeff = 1);

  std::size_t nvars() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const IntVector& exponents, const Rational& coeff);
  /// this += factor * other
  void add_scaled(const UPolynomial& other, const Rational& factor);

  friend UPolynomial operator*(const UPolynomial& a, const UPolynomial& b);
  friend bool operator==(const UPolynomial&, const UPolynomial&) = default;

 private:
  std::size_t n_;
  Terms terms_;
};

/// Valuation values live in Z^n ordered lexicographically, first coordinate
/// most significant (std::vector's operator<).
using ValuationValue = IntVector;

/// f^alpha rewritten in the u-coordinates: f_k = u_k + u_l^c, f_i = u_i.
UPolynomial expand_monomial(const IntVector& alpha, const SlideDirection& d);

/// Lexicographically smallest exponent with a nonzero coefficient.
ValuationValue lowest_term(const UPolynomial& p);

/// {nu(f) : f in span(basis), f != 0}. Gaussian elimination on lowest terms:
/// an element whose lowest term is already taken is reduced against the
/// owner of that term, which strictly raises its lowest term. The result has
/// exactly |basis| points; a dependent basis throws PreconditionError.
geom::LatticePointSet valuation_image(std::size_t n, const std::vector<UPolynomial>& basis);

/// Splits `s` into classes along lines parallel to -e_k + c e_l and
/// translates each class rigidly by the largest a >= 0 that keeps it in the
/// nonnegative orthant.
geom::LatticePointSet slide(const geom::LatticePointSet& s, const SlideDirection& d);

/// levels[m] holds nu(L^m) for 0 <= m <= max_level; levels[0] = {0}.
struct GradedSemigroup {
  std::size_t n = 0;
  int max_level = 0;
  std::vector<geom::LatticePointSet> levels;

  const geom::LatticePointSet& level(int m) const;
};

/// levels[m] = slide(mP cap Z^n) for 1 <= m <= max_level. P must be integral,
/// Delzant smooth, normalized at the origin and normal up to max_level.
GradedSemigroup build_semigroup(const geom::HPolytope& p, const SlideDirection& d, int max_level);

/// Checks levels[a] + levels[b] is contained in levels[a + b]; returns the
/// first violating (a, b) pair.
std::optional<std::pair<int, int>> additivity_violation(const GradedSemigroup& s);

/// (1/m) conv(levels[m]).
geom::HPolytope okounkov_approx(const GradedSemigroup& s, int m);

/// nested[i] is true when Delta_{i+1} is contained in Delta_{i+2}.
std::vector<bool> okounkov_nesting(const GradedSemigroup& s);

struct ConeCertificate {
  int level = 0;
  IntVector point;
  bool missing = true;  // true: in m*Delta but not in the semigroup; false: extra point
};

struct ConeConditionReport {
  bool holds = true;
  std::optional<ConeCertificate> certificate;
};

/// Compares levels[m] with mDelta cap Z^n; the certificate is the
/// lexicographically first point in the symmetric difference.
std::optional<ConeCertificate> level_mismatch(const GradedSemigroup& s, const geom::HPolytope& delta, int m);

/// levels[m] == mDelta cap Z^n for all 1 <= m <= max_level.
ConeConditionReport check_cone_condition(const GradedSemigroup& s, const geom::HPolytope& delta);

struct SaturationWitness {
  int level = 0;
  IntVector point;  // (level, point) is not in S ...
  int multiple = 0;  // ... but (multiple*level, multiple*point) is
};

struct SaturationReport {
  bool saturated = true;
  std::optional<SaturationWitness> witness;
};

/// Searches levels m and multiples t >= 2 with t*m <= max_level.
SaturationReport check_saturation(const GradedSemigroup& s);

}  // namespace toricdeg::valuation
