#include "toricdeg/gromov.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "toricdeg/error.hpp"
#include "toricdeg/linalg.hpp"
#include "toricdeg/lp.hpp"

namespace toricdeg::gromov {

using geom::HPolytope;

Family parse_family(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "C") return Family::C;
  if (name == "D") return Family::D;
  if (name == "G2" || name == "G") return Family::G2;
  throw PreconditionError("unknown root system family '" + name + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
  }
  return "?";
}

void RootSystemSpec::validate() const {
  if (family == Family::G2) {
    if (rank != 2) throw PreconditionError("G2 has rank 2");
    return;
  }
  if (rank < 1) throw PreconditionError("rank must be >= 1");
  if (family == Family::D && rank < 2) throw PreconditionError("D needs rank >= 2");
}

std::size_t RootSystemSpec::ambient_dim() const {
  switch (family) {
    case Family::A: return static_cast<std::size_t>(rank) + 1;
    case Family::G2: return 3;
    default: return static_cast<std::size_t>(rank);
  }
}

std::vector<RationalVector> coroots(const RootSystemSpec& spec) {
  spec.validate();
  const std::size_t n = spec.ambient_dim();
  std::vector<RationalVector> out;
  auto unit = [n](std::size_t i, long s) {
    RationalVector v(n, 0);
    v[i] = s;
    return v;
  };
  auto pair = [n](std::size_t i, long si, std::size_t j, long sj) {
    RationalVector v(n, 0);
    v[i] = si;
    v[j] = sj;
    return v;
  };
  switch (spec.family) {
    case Family::A:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (i != j) out.push_back(pair(i, 1, j, -1));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          for (long si : {1, -1})
            for (long sj : {1, -1}) out.push_back(pair(i, si, j, sj));
      if (spec.family == Family::B)  // short roots +-e_i have coroots +-2e_i
        for (std::size_t i = 0; i < n; ++i)
          for (long s : {2, -2}) out.push_back(unit(i, s));
      if (spec.family == Family::C)  // long roots +-2e_i have coroots +-e_i
        for (std::size_t i = 0; i < n; ++i)
          for (long s : {1, -1}) out.push_back(unit(i, s));
      break;
    case Family::G2:
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          if (i != j) out.push_back(pair(i, 1, j, -1));
      for (std::size_t i = 0; i < 3; ++i)
        for (long s : {1, -1}) {
          RationalVector v(3, Rational(-s, 3));
          v[i] = Rational(2 * s, 3);
          out.push_back(v);
        }
      break;
  }
  return out;
}

Rational gw_formula(const RootSystemSpec& spec, const RationalVector& lambda) {
  if (lambda.size() != spec.ambient_dim())
    throw PreconditionError("weight has dimension " + std::to_string(lambda.size()) + ", expected " +
                            std::to_string(spec.ambient_dim()));
  std::optional<Rational> best;
  for (const auto& a : coroots(spec)) {
    Rational p = abs(dot(lambda, a));
    if (p != 0 && (!best || p < *best)) best = p;
  }
  if (!best) throw PreconditionError("zero orbit");
  return *best;
}

Simplex simplex(std::size_t n, const Rational& a) {
  if (a <= 0) throw PreconditionError("simplex size must be positive");
  std::vector<geom::HalfSpace> hs;
  for (std::size_t j = 0; j < n; ++j) {
    IntVector e(n, 0);
    e[j] = -1;
    hs.push_back({e, 0});
  }
  hs.push_back({IntVector(n, 1), a});
  HPolytope closed(n, hs);
  std::vector<bool> open;
  for (const auto& h : closed.halfspaces())
    open.push_back(std::all_of(h.normal.begin(), h.normal.end(), [](std::int64_t v) { return v == 1; }));
  return {closed, open};
}

namespace {

void require_unimodular(const IntMatrix& psi, std::size_t n) {
  if (psi.size() != n || std::any_of(psi.begin(), psi.end(), [n](const IntVector& r) { return r.size() != n; }))
    throw PreconditionError("psi must be an n x n matrix");
  auto det = linalg::determinant(psi);
  if (det != 1 && det != -1) throw PreconditionError("psi is not unimodular");
}

IntVector column(const IntMatrix& m, std::size_t j) {
  IntVector c(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) c[i] = m[i][j];
  return c;
}

void require_body(const HPolytope& delta) {
  if (!delta.is_bounded() || delta.is_empty() || !delta.is_full_dimensional())
    throw PreconditionError("polytope must be bounded and full-dimensional");
}

// maximize a subject to x in delta and x + a*v_j in delta for all directions v_j.
SimplexFit solve_fit(const HPolytope& delta, const std::vector<IntVector>& dirs) {
  const std::size_t n = delta.dim();
  RationalMatrix rows;
  RationalVector rhs;
  for (const auto& h : delta.halfspaces()) {
    // With a >= 0 only the largest coefficient per facet binds, and 0 covers x itself.
    std::int64_t s = 0;
    for (const auto& v : dirs) {
      std::int64_t hv = 0;
      for (std::size_t i = 0; i < n; ++i) hv += h.normal[i] * v[i];
      s = std::max(s, hv);
    }
    RationalVector row(n + 1);
    row[0] = s;
    for (std::size_t i = 0; i < n; ++i) row[i + 1] = h.normal[i];
    rows.push_back(row);
    rhs.push_back(h.rhs);
  }
  RationalVector neg_a(n + 1, 0);
  neg_a[0] = -1;
  rows.push_back(neg_a);
  rhs.push_back(0);
  RationalVector obj(n + 1, 0);
  obj[0] = 1;
  auto res = lp::maximize(rows, rhs, obj);
  if (res.status != lp::Status::Optimal) throw Error("simplex LP did not reach an optimum");
  return {res.value, {}, RationalVector(res.point.begin() + 1, res.point.end())};
}

// Column order of psi does not change the simplex; pick the order whose
// row-major flattening is largest.
IntMatrix canonical_psi(const IntMatrix& psi) {
  const std::size_t n = psi.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  IntMatrix best = psi;
  do {
    IntMatrix m(n, IntVector(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = psi[i][perm[j]];
    best = std::max(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::int64_t l1_norm(const IntMatrix& m) {
  std::int64_t s = 0;
  for (const auto& r : m)
    for (auto x : r) s += x < 0 ? -x : x;
  return s;
}

// Larger a wins; ties go to the smaller entry sum |psi|, then the larger
// canonical psi.
bool better(const SimplexFit& a, const SimplexFit& b) {
  if (a.a != b.a) return a.a > b.a;
  auto na = l1_norm(a.psi), nb = l1_norm(b.psi);
  if (na != nb) return na < nb;
  return a.psi > b.psi;
}

}  // namespace

bool fits(const HPolytope& delta, const SimplexFit& fit) {
  const std::size_t n = delta.dim();
  require_unimodular(fit.psi, n);
  if (fit.x.size() != n) throw PreconditionError("translation has wrong dimension");
  if (fit.a <= 0) return false;
  if (!delta.contains(fit.x)) return false;
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector p(fit.x);
    for (std::size_t i = 0; i < n; ++i) p[i] += fit.a * fit.psi[i][j];
    if (!delta.contains(p)) return false;
  }
  return true;
}

SimplexFit best_fit_for(const HPolytope& delta, const IntMatrix& psi) {
  require_body(delta);
  require_unimodular(psi, delta.dim());
  std::vector<IntVector> dirs;
  for (std::size_t j = 0; j < delta.dim(); ++j) dirs.push_back(column(psi, j));
  auto fit = solve_fit(delta, dirs);
  fit.psi = psi;
  return fit;
}

Rational max_segment(const HPolytope& delta, const IntVector& v) {
  require_body(delta);
  return solve_fit(delta, {v}).a;
}

namespace {

SearchResult exhaustive(const HPolytope& delta, const SearchOptions& opt) {
  const std::size_t n = delta.dim();
  if (n > 3) throw PreconditionError("exhaustive search supports n <= 3");
  const std::int64_t b = opt.bound;
  std::vector<IntVector> vecs;
  IntVector v(n, -b);
  for (;;) {
    if (std::any_of(v.begin(), v.end(), [](std::int64_t x) { return x != 0; })) vecs.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == b) v[i++] = -b;
    if (i == n) break;
    ++v[i];
  }
  std::vector<Rational> len;
  for (const auto& w : vecs) len.push_back(max_segment(delta, w));

  const SimplexFit seed = best_fit_for(delta, linalg::identity(n));
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  std::vector<SimplexFit> best(threads, seed);
  std::vector<std::size_t> counts(threads, 0);

  // Columns are strictly increasing indices into vecs: permuting columns of
  // psi permutes the simplex's vertices and leaves its image unchanged.
  auto worker = [&](unsigned t) {
    SimplexFit& mine = best[t];
    std::vector<std::size_t> idx(n);
    auto consider = [&] {
      IntMatrix psi(n, IntVector(n));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) psi[i][j] = vecs[idx[j]][i];
      auto det = linalg::determinant(psi);
      if (det != 1 && det != -1) return;
      ++counts[t];
      std::vector<IntVector> dirs;
      for (auto k : idx) dirs.push_back(vecs[k]);
      auto fit = solve_fit(delta, dirs);
      if (fit.a < mine.a) return;
      fit.psi = canonical_psi(psi);
      if (better(fit, mine)) mine = std::move(fit);
    };
    auto recurse = [&](auto&& self, std::size_t depth, std::size_t start) -> void {
      if (depth == n) {
        consider();
        return;
      }
      for (std::size_t k = start; k < vecs.size(); ++k) {
        if (depth == 0 && k % threads != t) continue;
        if (len[k] < mine.a) continue;
        idx[depth] = k;
        self(self, depth + 1, k + 1);
      }
    };
    recurse(recurse, 0, 0);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();

  SearchResult r{seed, true, 0};
  for (unsigned t = 0; t < threads; ++t) {
    if (better(best[t], r.fit)) r.fit = best[t];
    r.evaluated += counts[t];
  }
  return r;
}

SearchResult heuristic(const HPolytope& delta, const SearchOptions& opt) {
  const std::size_t n = delta.dim();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  auto within = [&](const IntMatrix& m) {
    for (const auto& r : m)
      for (auto x : r)
        if (x > opt.bound || x < -opt.bound) return false;
    return true;
  };
  // Elementary column operations keep |det| = 1.
  auto neighbour = [&](IntMatrix m) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j || n == 1) {
      for (auto& r : m) r[i] = -r[i];
      return m;
    }
    std::int64_t s = coin(rng) ? 1 : -1;
    for (auto& r : m) r[i] += s * r[j];
    return m;
  };
  SearchResult result{best_fit_for(delta, linalg::identity(n)), false, 1};
  for (int restart = 0; restart < opt.restarts; ++restart) {
    IntMatrix cur = linalg::identity(n);
    for (int k = 0; k < restart; ++k) {
      auto next = neighbour(cur);
      if (within(next)) cur = next;
    }
    SimplexFit cur_fit = best_fit_for(delta, canonical_psi(cur));
    ++result.evaluated;
    for (int step = 0; step < opt.steps; ++step) {
      auto next = neighbour(cur);
      if (!within(next)) continue;
      auto fit = best_fit_for(delta, canonical_psi(next));
      ++result.evaluated;
      if (fit.a >= cur_fit.a) {
        cur = next;
        cur_fit = fit;
      }
    }
    if (better(cur_fit, result.fit)) result.fit = cur_fit;
  }
  return result;
}

}  // namespace

SearchResult best_simplex_lb(const HPolytope& delta, const SearchOptions& options) {
  require_body(delta);
  if (options.bound < 1) throw PreconditionError("entry bound must be >= 1");
  return options.mode == SearchMode::Exhaustive ? exhaustive(delta, options) : heuristic(delta, options);
}

}  // namespace toricdeg::gromov
