#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "toricdeg/lattice_geometry.hpp"
#include "toricdeg/valuation.hpp"

/// Toric Bott manifolds: polytopes Delta(A, lambda), the cohomology ring
/// Z[x_1..x_n] / (x_i^2 + sum_j A^i_j x_j x_i), degeneration moves and the
/// symplectomorphism decision for Q-trivial towers.
///
/// A[i][j] stores A^i_j and is strictly upper triangular. Indices are
/// 0-based; the JSON layer is 1-based.
namespace toricdeg::bott {

struct BottData {
  std::size_t n = 0;
  IntMatrix a;
  RationalVector lambda;

  /// Shape and strict upper-triangularity; `positive` also demands lambda > 0.
  void validate(bool positive = true) const;
  bool lambda_integral() const;

  friend bool operator==(const BottData&, const BottData&) = default;
};

/// {p_j >= 0} and {<p, e_j + sum_i A^i_j e_i> <= lambda_j}.
geom::HPolytope bott_polytope(const BottData& b);

/// Delta(A, lambda) is combinatorially a cube: exactly 2^n vertices, each with
/// one active inequality from every pair.
bool is_hypercube(const BottData& b);

/// Element of the ring in the square-free basis: bit i of the key is x_i.
struct CohClass {
  std::map<std::uint32_t, Rational> terms;

  bool is_zero() const { return terms.empty(); }
  void add(std::uint32_t mono, const Rational& c);
  void add(const CohClass& other, const Rational& factor = 1);
  /// Degree-2 class sum_i v_i x_i.
  static CohClass linear(const RationalVector& v);
  /// Coefficients of x_0..x_{n-1}; throws when other degrees are present.
  RationalVector linear_part(std::size_t n) const;

  friend bool operator==(const CohClass&, const CohClass&) = default;
};

/// Polynomial in x_1..x_n before reduction, keyed by exponent vector.
using Polynomial = std::map<IntVector, Rational>;

class CohRing {
 public:
  explicit CohRing(IntMatrix a);

  std::size_t n() const noexcept { return n_; }
  const IntMatrix& matrix() const noexcept { return a_; }
  std::size_t rank() const noexcept { return std::size_t{1} << n_; }

  CohClass one() const;
  CohClass generator(std::size_t i) const;
  CohClass multiply(const CohClass& p, const CohClass& q) const;
  CohClass multiply_var(const CohClass& p, std::size_t i) const;
  CohClass reduce(const Polynomial& p) const;

  /// x_i^2 + sum_j A^i_j x_j x_i.
  Polynomial relation(std::size_t i) const;

 private:
  std::size_t n_;
  IntMatrix a_;
  // table_[mask][i] = x_i * x^mask in normal form.
  std::vector<std::vector<CohClass>> table_;
};

/// alpha_k = -sum_j A^k_j x_j and y_k = x_k - alpha_k / 2, as degree-2
/// coefficient vectors.
struct SpecialElements {
  RationalVector alpha;
  RationalVector y;
};
SpecialElements special_elements(const BottData& b, std::size_t k);

enum class ExceptionalKind { Even, Odd, None };

/// alpha_k = c y_l with c = -A^k_l and l the first nonzero entry of row k.
/// A zero row is Even with c = 0 and the sentinel l = n.
struct ExceptionalType {
  ExceptionalKind kind = ExceptionalKind::None;
  std::size_t l = 0;
  std::int64_t c = 0;
};
ExceptionalType exceptional_type(const BottData& b, std::size_t k);

/// reduce(alpha_k^2) = 0 over Q for every k.
bool is_q_trivial(const BottData& b);

/// x_k -> sum_j images[k][j] x~_j.
struct RingMap {
  RationalMatrix images;

  static RingMap identity(std::size_t n);
  /// First this, then next.
  RingMap then(const RingMap& next) const;
  std::optional<RingMap> inverse() const;
  RationalVector apply_linear(const RationalVector& v) const;
  CohClass apply(const CohRing& target, const CohClass& c) const;

  friend bool operator==(const RingMap&, const RingMap&) = default;
};

struct RingMapReport {
  bool integral = false;
  bool descends = false;
  bool invertible = false;
  bool inverse_descends = false;
  bool preserves_omega = false;

  bool ok() const { return integral && descends && invertible && inverse_descends && preserves_omega; }
};

RingMapReport ring_map_check(const RingMap& f, const CohRing& source, const CohRing& target,
                             const RationalVector& omega, const RationalVector& omega_target);

struct Move {
  BottData target;
  RingMap map;  // H*(source) -> H*(target)
  std::size_t k = 0, l = 0;
  std::int64_t from = 0, to = 0;
  /// A^k_l + A~^k_l >= 0: the degeneration argument applies.
  bool certified = false;
};

/// Changes A^k_l to `to` (same parity), x_k -> x~_k + d x~_l with
/// d = (to - A^k_l)/2, A~^i_l = A^i_l + d A^i_k for i != k and
/// lambda~_l = lambda_l + d lambda_k. Needs A^k_j = 0 for j < l and throws
/// PreconditionError unless the map descends to a ring isomorphism.
Move general_move(const BottData& b, std::size_t k, std::size_t l, std::int64_t to);

/// The move normalizing an exceptional x_k: A~^k_l = 0 for even type and
/// -1 for odd type.
Move elementary_move(const BottData& b, std::size_t k);

struct Block {
  std::size_t root = 0;
  std::vector<std::size_t> members;  // rows equal to -e_root

  std::size_t size() const { return members.size() + 1; }
};

struct MoveRecord {
  std::size_t k = 0, l = 0;
  std::int64_t from = 0, to = 0;
  bool certified = false;
  bool hypercube = false;  // after the move
};

struct StandardForm {
  BottData form;
  RingMap map;  // H*(input) -> H*(form)
  std::vector<Block> blocks;  // ordered by root
  std::vector<std::size_t> partition;  // block sizes, non-increasing
  std::vector<MoveRecord> trace;
};

/// Processes k = n-2 .. 0 so that every row ends up zero (a root) or -e_r
/// for a root r. Throws PreconditionError for non Q-trivial input.
StandardForm standard_form(const BottData& b);

/// Primitive integral degree-2 classes with square zero and coefficients in
/// [-bound, bound], sorted.
std::vector<IntVector> primitive_square_zero(const CohRing& ring, int bound);

/// +-x_r and +-(2x_i - x_r) for every block: the square-zero primitives of
/// a standard form.
std::vector<IntVector> standard_square_zero(const StandardForm& s);

struct Decision {
  bool equivalent = false;
  std::string reason;  // for No
  StandardForm source, target;
  std::vector<std::size_t> sigma;  // standard index i -> standard index sigma[i]
  IntMatrix lambda_map;  // Lambda e_i = e_sigma(i)
  RingMap map;  // H*(b) -> H*(b~)
};

Decision decide_symplectomorphic(const BottData& b, const BottData& bt);

/// A = A~ mod 2, lambda_1 = lambda~_1 and lambda_2 - A lambda_1 / 2 agree.
bool hirzebruch_classify(std::int64_t a, const RationalVector& lambda, std::int64_t at,
                         const RationalVector& lambda_t);

struct LevelVerdict {
  int level = 0;
  bool holds = true;
  std::optional<valuation::ConeCertificate> certificate;
};

struct DegenerationReport {
  bool passed = true;
  bool reversed = false;  // the slide runs from `target` to `source`
  bool identity = false;
  int dilation = 1;
  std::int64_t c = 0;
  std::vector<LevelVerdict> levels;
};

/// Slides Delta(source) in direction -e_k + c e_l, c = (A^k_l + A~^k_l)/2,
/// and compares the semigroup with the lattice points of m Delta(target)
/// for m <= max_level. Dilates both by n-1 when Delta(source) is not normal.
DegenerationReport verify_degeneration_move(const BottData& source, const BottData& target, std::size_t k,
                                            std::size_t l, int max_level);

}  // namespace toricdeg::bott
