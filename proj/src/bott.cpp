#include "toricdeg/bott.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include "toricdeg/error.hpp"
#include "toricdeg/linalg.hpp"

namespace toricdeg::bott {

using geom::HPolytope;

namespace {

constexpr std::size_t kMaxRingDim = 16;

bool row_zero(const IntMatrix& a, std::size_t k) {
  return std::all_of(a[k].begin(), a[k].end(), [](std::int64_t v) { return v == 0; });
}

std::optional<std::size_t> first_nonzero(const IntMatrix& a, std::size_t k) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[k][j] != 0) return j;
  return std::nullopt;
}

}  // namespace

void BottData::validate(bool positive) const {
  if (n == 0) throw PreconditionError("n must be >= 1");
  if (a.size() != n || lambda.size() != n) throw PreconditionError("A and lambda must have n rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw PreconditionError("A must be n x n");
    for (std::size_t j = 0; j <= i; ++j)
      if (a[i][j] != 0) throw PreconditionError("A must be strictly upper triangular");
  }
  if (positive)
    for (const auto& l : lambda)
      if (l <= 0) throw PreconditionError("lambda entries must be positive");
}

bool BottData::lambda_integral() const {
  return std::all_of(lambda.begin(), lambda.end(), [](const Rational& l) { return is_integral(l); });
}

HPolytope bott_polytope(const BottData& b) {
  b.validate(false);
  std::vector<geom::HalfSpace> hs;
  for (std::size_t j = 0; j < b.n; ++j) {
    IntVector lower(b.n, 0), upper(b.n, 0);
    lower[j] = -1;
    upper[j] = 1;
    for (std::size_t i = 0; i < j; ++i) upper[i] = b.a[i][j];
    hs.push_back({lower, 0});
    hs.push_back({upper, b.lambda[j]});
  }
  return HPolytope(b.n, hs);
}

bool is_hypercube(const BottData& b) {
  b.validate(false);
  // Over each vertex of the first j coordinates the fiber is [0, u_j]; the
  // polytope is a cube with the expected vertices iff every u_j > 0 there.
  std::vector<RationalVector> verts{RationalVector{}};
  for (std::size_t j = 0; j < b.n; ++j) {
    std::vector<RationalVector> next;
    next.reserve(2 * verts.size());
    for (auto& v : verts) {
      Rational u = b.lambda[j];
      for (std::size_t i = 0; i < j; ++i) u -= b.a[i][j] * v[i];
      if (u <= 0) return false;
      next.push_back(v);
      next.back().push_back(0);
      v.push_back(u);
      next.push_back(std::move(v));
    }
    verts = std::move(next);
  }
  return true;
}

void CohClass::add(std::uint32_t mono, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

void CohClass::add(const CohClass& other, const Rational& factor) {
  for (const auto& [m, c] : other.terms) add(m, c * factor);
}

CohClass CohClass::linear(const RationalVector& v) {
  CohClass c;
  for (std::size_t i = 0; i < v.size(); ++i) c.add(1u << i, v[i]);
  return c;
}

RationalVector CohClass::linear_part(std::size_t n) const {
  RationalVector v(n, 0);
  for (const auto& [m, c] : terms) {
    if (std::popcount(m) != 1) throw Error("class is not of degree 2");
    v[static_cast<std::size_t>(std::countr_zero(m))] = c;
  }
  return v;
}

CohRing::CohRing(IntMatrix a) : n_(a.size()), a_(std::move(a)) {
  BottData shape{n_, a_, RationalVector(n_, 1)};
  shape.validate(false);
  if (n_ > kMaxRingDim) throw PreconditionError("cohomology ring supports n <= 16");
  const std::uint32_t count = 1u << n_;
  table_.assign(count, std::vector<CohClass>(n_));
  // x_i * x^mask with x_i in mask is x_i^2 * rest = sum_j -A^i_j x_j * x^mask,
  // which only involves indices j > i.
  for (std::size_t ii = n_; ii-- > 0;)
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      CohClass& out = table_[mask][ii];
      if (!(mask & (1u << ii))) {
        out.add(mask | (1u << ii), 1);
        continue;
      }
      for (std::size_t j = ii + 1; j < n_; ++j)
        if (a_[ii][j] != 0) out.add(table_[mask][j], Rational(static_cast<long>(-a_[ii][j])));
    }
}

CohClass CohRing::one() const {
  CohClass c;
  c.add(0, 1);
  return c;
}

CohClass CohRing::generator(std::size_t i) const {
  CohClass c;
  c.add(1u << i, 1);
  return c;
}

CohClass CohRing::multiply_var(const CohClass& p, std::size_t i) const {
  CohClass out;
  for (const auto& [m, c] : p.terms) out.add(table_[m][i], c);
  return out;
}

CohClass CohRing::multiply(const CohClass& p, const CohClass& q) const {
  CohClass out;
  for (const auto& [m, c] : q.terms) {
    CohClass part = p;
    for (std::size_t i = 0; i < n_; ++i)
      if (m & (1u << i)) part = multiply_var(part, i);
    out.add(part, c);
  }
  return out;
}

CohClass CohRing::reduce(const Polynomial& p) const {
  CohClass out;
  for (const auto& [e, c] : p) {
    if (e.size() != n_) throw PreconditionError("exponent vector has wrong length");
    CohClass part = one();
    for (std::size_t i = 0; i < n_; ++i) {
      if (e[i] < 0) throw PreconditionError("exponents must be nonnegative");
      for (std::int64_t t = 0; t < e[i]; ++t) part = multiply_var(part, i);
    }
    out.add(part, c);
  }
  return out;
}

Polynomial CohRing::relation(std::size_t i) const {
  Polynomial p;
  IntVector e(n_, 0);
  e[i] = 2;
  p[e] = 1;
  for (std::size_t j = 0; j < n_; ++j) {
    if (a_[i][j] == 0) continue;
    IntVector f(n_, 0);
    f[i] = 1;
    f[j] = 1;
    p[f] += Rational(static_cast<long>(a_[i][j]));
  }
  return p;
}

SpecialElements special_elements(const BottData& b, std::size_t k) {
  b.validate(false);
  if (k >= b.n) throw PreconditionError("generator index out of range");
  SpecialElements s{RationalVector(b.n, 0), RationalVector(b.n, 0)};
  for (std::size_t j = 0; j < b.n; ++j) s.alpha[j] = -b.a[k][j];
  for (std::size_t j = 0; j < b.n; ++j) s.y[j] = -s.alpha[j] / 2;
  s.y[k] += 1;
  return s;
}

ExceptionalType exceptional_type(const BottData& b, std::size_t k) {
  b.validate(false);
  if (k >= b.n) throw PreconditionError("generator index out of range");
  auto l = first_nonzero(b.a, k);
  if (!l) return {ExceptionalKind::Even, b.n, 0};
  const std::int64_t a = b.a[k][*l];
  for (std::size_t j = *l + 1; j < b.n; ++j)
    if (2 * b.a[k][j] != a * b.a[*l][j]) return {ExceptionalKind::None, *l, -a};
  return {(-a) % 2 == 0 ? ExceptionalKind::Even : ExceptionalKind::Odd, *l, -a};
}

bool is_q_trivial(const BottData& b) {
  b.validate(false);
  CohRing ring(b.a);
  for (std::size_t k = 0; k < b.n; ++k) {
    auto alpha = CohClass::linear(special_elements(b, k).alpha);
    if (!ring.multiply(alpha, alpha).is_zero()) return false;
  }
  return true;
}

RingMap RingMap::identity(std::size_t n) { return {linalg::to_rational(linalg::identity(n))}; }

RingMap RingMap::then(const RingMap& next) const { return {linalg::multiply(images, next.images)}; }

std::optional<RingMap> RingMap::inverse() const {
  auto inv = linalg::inverse(images);
  if (!inv) return std::nullopt;
  return RingMap{*inv};
}

RationalVector RingMap::apply_linear(const RationalVector& v) const {
  const std::size_t n = images.empty() ? 0 : images[0].size();
  RationalVector out(n, 0);
  for (std::size_t k = 0; k < v.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) out[j] += v[k] * images[k][j];
  return out;
}

CohClass RingMap::apply(const CohRing& target, const CohClass& c) const {
  CohClass out;
  for (const auto& [m, coeff] : c.terms) {
    CohClass part = target.one();
    for (std::size_t i = 0; i < images.size(); ++i)
      if (m & (1u << i)) part = target.multiply(part, CohClass::linear(images[i]));
    out.add(part, coeff);
  }
  return out;
}

namespace {

// Images of the source relations vanish in the target.
bool relations_vanish(const RingMap& f, const CohRing& source, const CohRing& target) {
  std::vector<CohClass> img;
  for (const auto& row : f.images) img.push_back(CohClass::linear(row));
  for (std::size_t i = 0; i < source.n(); ++i) {
    CohClass r = target.multiply(img[i], img[i]);
    for (std::size_t j = 0; j < source.n(); ++j)
      if (source.matrix()[i][j] != 0)
        r.add(target.multiply(img[j], img[i]), Rational(static_cast<long>(source.matrix()[i][j])));
    if (!r.is_zero()) return false;
  }
  return true;
}

}  // namespace

RingMapReport ring_map_check(const RingMap& f, const CohRing& source, const CohRing& target,
                             const RationalVector& omega, const RationalVector& omega_target) {
  RingMapReport r;
  const std::size_t n = source.n();
  if (target.n() != n || f.images.size() != n ||
      std::any_of(f.images.begin(), f.images.end(), [n](const RationalVector& row) { return row.size() != n; }))
    return r;
  r.integral = std::all_of(f.images.begin(), f.images.end(), [](const RationalVector& row) {
    return std::all_of(row.begin(), row.end(), [](const Rational& x) { return is_integral(x); });
  });
  r.descends = relations_vanish(f, source, target);
  Rational det = linalg::determinant(f.images);
  r.invertible = r.integral && (det == 1 || det == -1);
  if (auto inv = f.inverse()) r.inverse_descends = relations_vanish(*inv, target, source);
  r.preserves_omega = f.apply_linear(omega) == omega_target;
  return r;
}

Move general_move(const BottData& b, std::size_t k, std::size_t l, std::int64_t to) {
  b.validate(false);
  if (!(k < l && l < b.n)) throw PreconditionError("move needs k < l <= n");
  for (std::size_t j = 0; j < l; ++j)
    if (b.a[k][j] != 0) throw PreconditionError("row k has a nonzero entry before column l");
  const std::int64_t from = b.a[k][l];
  if ((to - from) % 2 != 0) throw PreconditionError("a move must preserve the parity of A^k_l");
  const std::int64_t d = (to - from) / 2;

  Move mv;
  mv.k = k;
  mv.l = l;
  mv.from = from;
  mv.to = to;
  mv.certified = from + to >= 0;
  mv.target = b;
  for (std::size_t i = 0; i < b.n; ++i)
    if (i != k) mv.target.a[i][l] += d * b.a[i][k];
  mv.target.a[k][l] = to;
  mv.target.lambda[l] += Rational(static_cast<long>(d)) * b.lambda[k];
  mv.map = RingMap::identity(b.n);
  mv.map.images[k][l] = d;

  auto report = ring_map_check(mv.map, CohRing(b.a), CohRing(mv.target.a), b.lambda, mv.target.lambda);
  if (!report.ok()) throw PreconditionError("move does not descend to a ring isomorphism");
  return mv;
}

Move elementary_move(const BottData& b, std::size_t k) {
  auto t = exceptional_type(b, k);
  if (t.kind == ExceptionalKind::None) throw PreconditionError("generator is not of exceptional type");
  if (t.l == b.n) {
    Move mv{b, RingMap::identity(b.n), k, b.n, 0, 0, true};
    return mv;
  }
  return general_move(b, k, t.l, t.kind == ExceptionalKind::Even ? 0 : -1);
}

StandardForm standard_form(const BottData& b) {
  b.validate(true);
  if (!is_q_trivial(b)) throw PreconditionError("standard form needs a Q-trivial tower");
  StandardForm s;
  s.form = b;
  s.map = RingMap::identity(b.n);
  auto apply = [&](const Move& mv) {
    s.form = mv.target;
    s.map = s.map.then(mv.map);
    s.trace.push_back({mv.k, mv.l, mv.from, mv.to, mv.certified, is_hypercube(s.form)});
  };
  const std::size_t n = b.n;
  for (std::size_t k = n - 1; k-- > 0;) {
    for (;;) {
      auto l = first_nonzero(s.form.a, k);
      if (!l) break;
      const std::int64_t a = s.form.a[k][*l];
      if (row_zero(s.form.a, *l)) {
        const std::int64_t final_entry = a % 2 == 0 ? 0 : -1;
        if (a == final_entry) break;
        // A detour through 2 - a keeps both moves certified.
        if (a + final_entry < 0) apply(general_move(s.form, k, *l, 2 - a));
        apply(general_move(s.form, k, *l, final_entry));
        break;
      }
      // Row l is -e_r with r a root; clearing A^k_l leaves -(a/2) e_r in row k.
      apply(general_move(s.form, k, *l, 0));
    }
  }
  for (std::size_t r = 0; r < n; ++r)
    if (row_zero(s.form.a, r)) s.blocks.push_back({r, {}});
  for (std::size_t k = 0; k < n; ++k) {
    if (row_zero(s.form.a, k)) continue;
    auto l = first_nonzero(s.form.a, k);
    auto it = std::find_if(s.blocks.begin(), s.blocks.end(), [&](const Block& bl) { return bl.root == *l; });
    IntVector expected(n, 0);
    expected[*l] = -1;
    if (it == s.blocks.end() || s.form.a[k] != expected) throw Error("standard form reduction did not terminate in a standard model");
    it->members.push_back(k);
  }
  for (const auto& bl : s.blocks) s.partition.push_back(bl.size());
  std::sort(s.partition.rbegin(), s.partition.rend());
  return s;
}

std::vector<IntVector> primitive_square_zero(const CohRing& ring, int bound) {
  const std::size_t n = ring.n();
  if (bound < 1) throw PreconditionError("bound must be >= 1");
  std::vector<IntVector> out;
  IntVector v(n, -bound);
  for (;;) {
    if (gcd_of(v) == 1) {
      auto c = CohClass::linear(to_rational(v));
      if (ring.multiply(c, c).is_zero()) out.push_back(v);
    }
    std::size_t i = 0;
    while (i < n && v[i] == bound) v[i++] = -bound;
    if (i == n) break;
    ++v[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> standard_square_zero(const StandardForm& s) {
  const std::size_t n = s.form.n;
  std::vector<IntVector> out;
  for (const auto& bl : s.blocks)
    for (std::int64_t sign : {1, -1}) {
      IntVector root(n, 0);
      root[bl.root] = sign;
      out.push_back(root);
      for (auto i : bl.members) {
        IntVector v(n, 0);
        v[i] = 2 * sign;
        v[bl.root] = -sign;
        out.push_back(v);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using BlockKey = std::tuple<std::size_t, Rational, RationalVector>;

BlockKey block_key(const StandardForm& s, const Block& bl) {
  RationalVector members;
  for (auto i : bl.members) members.push_back(s.form.lambda[i]);
  std::sort(members.begin(), members.end());
  return {bl.size(), s.form.lambda[bl.root], members};
}

std::vector<std::pair<BlockKey, const Block*>> keyed_blocks(const StandardForm& s) {
  std::vector<std::pair<BlockKey, const Block*>> out;
  for (const auto& bl : s.blocks) out.emplace_back(block_key(s, bl), &bl);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::string partition_string(const std::vector<std::size_t>& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i]);
  return out + ")";
}

}  // namespace

Decision decide_symplectomorphic(const BottData& b, const BottData& bt) {
  for (const auto* x : {&b, &bt}) {
    x->validate(true);
    if (!is_q_trivial(*x)) throw PreconditionError("decision needs Q-trivial towers");
    if (!is_hypercube(*x)) throw PreconditionError("Delta(A, lambda) is not combinatorially a cube");
  }
  Decision d;
  if (b.n != bt.n) {
    d.reason = "dimension mismatch";
    return d;
  }
  const std::size_t n = b.n;
  d.source = standard_form(b);
  d.target = standard_form(bt);
  if (d.source.partition != d.target.partition) {
    d.reason = "partition mismatch: " + partition_string(d.source.partition) + " vs " +
               partition_string(d.target.partition);
    return d;
  }
  auto ks = keyed_blocks(d.source), kt = keyed_blocks(d.target);
  for (std::size_t i = 0; i < ks.size(); ++i)
    if (ks[i].first != kt[i].first) {
      d.reason = "lambda multiset mismatch";
      return d;
    }

  d.sigma.assign(n, 0);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const Block& src = *ks[i].second;
    const Block& tgt = *kt[i].second;
    d.sigma[src.root] = tgt.root;
    auto by_lambda = [](const StandardForm& s, std::vector<std::size_t> idx) {
      std::stable_sort(idx.begin(), idx.end(),
                       [&](std::size_t x, std::size_t y) { return s.form.lambda[x] < s.form.lambda[y]; });
      return idx;
    };
    auto ms = by_lambda(d.source, src.members), mt = by_lambda(d.target, tgt.members);
    for (std::size_t j = 0; j < ms.size(); ++j) d.sigma[ms[j]] = mt[j];
  }

  RingMap perm{RationalMatrix(n, RationalVector(n, 0))};
  d.lambda_map.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    perm.images[i][d.sigma[i]] = 1;
    d.lambda_map[d.sigma[i]][i] = 1;
  }
  auto back = d.target.map.inverse();
  if (!back) throw Error("standard form map is not invertible");
  d.map = d.source.map.then(perm).then(*back);

  geom::AffineUnimodularMap lt{linalg::transpose(d.lambda_map), RationalVector(n, 0)};
  if (!geom::same_point_set(geom::transform(bott_polytope(d.target.form), lt), bott_polytope(d.source.form)))
    throw Error("polytope certificate failed");
  if (!ring_map_check(d.map, CohRing(b.a), CohRing(bt.a), b.lambda, bt.lambda).ok())
    throw Error("ring map certificate failed");
  d.equivalent = true;
  return d;
}

bool hirzebruch_classify(std::int64_t a, const RationalVector& lambda, std::int64_t at,
                         const RationalVector& lambda_t) {
  if (lambda.size() != 2 || lambda_t.size() != 2) throw PreconditionError("Hirzebruch data has n = 2");
  for (const auto& [x, l] : {std::pair{a, &lambda}, std::pair{at, &lambda_t}})
    if (!is_hypercube({2, {{0, x}, {0, 0}}, *l})) throw PreconditionError("Delta(A, lambda) is not a quadrilateral");
  if ((a - at) % 2 != 0) return false;
  if (lambda[0] != lambda_t[0]) return false;
  return lambda[1] - Rational(static_cast<long>(a)) / 2 * lambda[0] ==
         lambda_t[1] - Rational(static_cast<long>(at)) / 2 * lambda_t[0];
}

DegenerationReport verify_degeneration_move(const BottData& source, const BottData& target, std::size_t k,
                                            std::size_t l, int max_level) {
  source.validate(true);
  target.validate(true);
  if (source.n != target.n) throw PreconditionError("towers have different dimensions");
  if (!(k < l && l < source.n)) throw PreconditionError("move needs k < l <= n");
  if (!source.lambda_integral() || !target.lambda_integral())
    throw PreconditionError("degeneration check needs integral lambda");
  if (max_level < 1) throw PreconditionError("max level must be >= 1");

  DegenerationReport r;
  const BottData* from = &source;
  const BottData* to = &target;
  if (source.a[k][l] > target.a[k][l]) {
    std::swap(from, to);
    r.reversed = true;
  }
  const std::int64_t a = from->a[k][l], at = to->a[k][l];
  if ((a + at) % 2 != 0) throw PreconditionError("A^k_l and A~^k_l must have the same parity");
  if (a + at < 0) throw PreconditionError("A^k_l + A~^k_l must be >= 0 for a degeneration");
  r.c = (a + at) / 2;
  r.identity = a == at;
  if (r.c == 0 && !r.identity) throw PreconditionError("c = 0 does not define a coordinate change");

  HPolytope p = bott_polytope(*from), q = bott_polytope(*to);
  if (!geom::is_normal(p, max_level).normal && source.n > 2) {
    r.dilation = static_cast<int>(source.n) - 1;
    p = geom::dilate(p, r.dilation);
    q = geom::dilate(q, r.dilation);
  }
  if (r.c == 0) {
    // No slide: the check degenerates to comparing the two polytopes.
    for (int m = 1; m <= max_level; ++m) {
      auto lp = geom::lattice_points(geom::dilate(p, m)), lq = geom::lattice_points(geom::dilate(q, m));
      LevelVerdict v{m, lp == lq, std::nullopt};
      r.passed = r.passed && v.holds;
      r.levels.push_back(v);
    }
    return r;
  }
  auto s = valuation::build_semigroup(p, {k, l, r.c}, max_level);
  for (int m = 1; m <= max_level; ++m) {
    auto cert = valuation::level_mismatch(s, q, m);
    r.levels.push_back({m, !cert, cert});
    r.passed = r.passed && !cert;
  }
  return r;
}

}  // namespace toricdeg::bott
