// Acceptance run: one line per criterion. All comparisons are exact
// (rational arithmetic, tolerance zero).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "bott_support.hpp"
#include "oracles.hpp"
#include "test_support.hpp"
#include "toricdeg/bott.hpp"
#include "toricdeg/error.hpp"
#include "toricdeg/gromov.hpp"
#include "toricdeg/linalg.hpp"
#include "toricdeg/valuation.hpp"

using namespace toricdeg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::mt19937_64 rng_for(std::uint64_t seed, int criterion) {
  std::seed_seq seq{seed, static_cast<std::uint64_t>(criterion)};
  return std::mt19937_64(seq);
}

std::string str(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Outcome sliding_oracle(std::uint64_t seed) {
  auto rng = rng_for(seed, 1);
  int cases = 0, agree = 0;
  auto run = [&](const geom::HPolytope& p, std::size_t n) {
    auto d = testing::random_direction(rng, n);
    auto s = geom::lattice_points(p);
    auto ex = oracle::expansions(s, d);
    auto slid = valuation::slide(s, d);
    ++cases;
    if (slid == valuation::valuation_image(n, ex) && slid == oracle::echelon_valuations(n, ex)) ++agree;
  };
  for (int i = 0; i < 35; ++i) run(testing::random_smooth_polygon(rng), 2);
  for (int i = 0; i < 25; ++i) run(testing::random_smooth_tower(rng, 3), 3);
  return {agree == cases && cases >= 50,
          std::to_string(agree) + "/" + std::to_string(cases) + " polytopes (35 in 2D, 25 in 3D), c in [1,4]"};
}

Outcome rectangle_example(std::uint64_t) {
  auto rect = testing::hull_of(2, {{0, 0}, {1, 0}, {1, 3}, {0, 3}});
  const valuation::SlideDirection d{0, 1, 2};
  auto s = geom::lattice_points(rect);
  auto image = valuation::valuation_image(2, oracle::expansions(s, d));
  geom::LatticePointSet want(2, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 0}, {1, 1}});
  // Facet e_2 + (2c - A) e_1 <= lambda_2 + (c - A) lambda_1 with A = 0, c = 2, lambda = (1, 3).
  const std::int64_t a = 0, c = 2, l1 = 1, l2 = 3;
  auto trapezoid = testing::tower({{0, 2 * c - a}, {0, 0}}, {l1, l2 + (c - a) * l1});
  auto hull = geom::hull(image);
  bool ok = image == want && hull.vertex_list() == trapezoid.vertex_list() && hull.halfspaces() == trapezoid.halfspaces();
  return {ok, "8 image points, hull = Delta(" + std::to_string(2 * c - a) + ",(" + std::to_string(l1) + "," +
                  std::to_string(l2 + (c - a) * l1) + "))"};
}

Outcome saturation_example(std::uint64_t) {
  auto sq = testing::box({2, 2});
  const valuation::SlideDirection d{0, 1, 2};
  auto s = valuation::build_semigroup(sq, d, 2);
  auto rep = valuation::check_saturation(s);
  // Oracle witness: lex-first p with p missing from level 1 and 2p present at level 2.
  auto level1 = oracle::echelon_valuations(2, oracle::expansions(geom::lattice_points(sq), d));
  auto level2 = oracle::echelon_valuations(2, oracle::expansions(geom::lattice_points(geom::dilate(sq, 2)), d));
  std::optional<IntVector> witness;
  for (const auto& q : level2) {
    if (q[0] % 2 || q[1] % 2) continue;
    IntVector p{q[0] / 2, q[1] / 2};
    if (!level1.contains(p) && (!witness || p < *witness)) witness = p;
  }
  bool ok = !rep.saturated && rep.witness && witness && rep.witness->level == 1 && rep.witness->multiple == 2 &&
            rep.witness->point == *witness && s.level(1) == level1 && s.level(2) == level2;
  std::string w = rep.witness ? str(rep.witness->point) : "none";
  return {ok, "non-saturated, witness (1," + w + ") with (2," +
                  (rep.witness ? str({2 * rep.witness->point[0], 2 * rep.witness->point[1]}) : "-") +
                  ") in S; oracle witness " + (witness ? str(*witness) : "none")};
}

Outcome hirzebruch_degeneration(std::uint64_t) {
  auto r = bott::verify_degeneration_move(testing::hirzebruch(0, 1, 3), testing::hirzebruch(4, 1, 5), 0, 1, 4);
  int held = 0;
  for (const auto& v : r.levels) held += v.holds;
  return {r.passed && r.levels.size() == 4 && held == 4 && r.c == 2,
          "cone condition against Delta(4,(1,5)) at " + std::to_string(held) + "/4 levels, c = " + std::to_string(r.c)};
}

Outcome gromov_formula(std::uint64_t seed) {
  auto rng = rng_for(seed, 5);
  std::uniform_int_distribution<int> dim(2, 7), entry(-12, 12), scale(1, 9);
  int good = 0;
  const int total = 100;
  for (int t = 0; t < total; ++t) {
    std::size_t n;
    RationalVector lambda;
    for (;;) {
      n = static_cast<std::size_t>(dim(rng));
      lambda.clear();
      for (std::size_t i = 0; i < n; ++i) lambda.emplace_back(entry(rng));
      if (std::any_of(lambda.begin(), lambda.end(), [&](const Rational& x) { return x != lambda[0]; })) break;
    }
    std::optional<Rational> direct;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (lambda[i] != lambda[j]) {
          Rational diff = abs(lambda[i] - lambda[j]);
          if (!direct || diff < *direct) direct = diff;
        }
    gromov::RootSystemSpec spec{gromov::Family::A, static_cast<int>(n) - 1};
    Rational v = gromov::gw_formula(spec, lambda);
    auto perm = lambda;
    std::shuffle(perm.begin(), perm.end(), rng);
    Rational s = scale(rng);
    s /= scale(rng);
    auto scaled = lambda;
    for (auto& x : scaled) x *= s;
    if (v == *direct && gromov::gw_formula(spec, perm) == v && gromov::gw_formula(spec, scaled) == s * v) ++good;
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) +
                             " random lambda agree with pairwise differences, Weyl invariant, linear under scaling"};
}

Outcome simplex_search(std::uint64_t seed) {
  auto rng = rng_for(seed, 6);
  gromov::SearchOptions unit;
  unit.bound = 1;
  auto u = gromov::best_simplex_lb(testing::box({1, 1}), unit);
  int agree = 0;
  const int total = 25;
  for (int t = 0; t < total; ++t) {
    auto p = testing::random_polygon(rng, 5, 6);
    gromov::SearchOptions opt;
    opt.bound = 3;
    auto r = gromov::best_simplex_lb(p, opt);
    if (r.certified && r.fit.a == oracle::planar_best_simplex(p, 3)) ++agree;
  }
  return {u.fit.a == 1 && u.certified && agree == total,
          "unit square (B=1) gives " + to_string(u.fit.a) + "; " + std::to_string(agree) + "/" + std::to_string(total) +
              " random polygons match the B=3 brute force"};
}

Outcome bott_ring(std::uint64_t seed) {
  auto rng = rng_for(seed, 7);
  std::uniform_int_distribution<int> dim(1, 5), entry(-5, 5);
  int good = 0;
  const int total = 100;
  for (int t = 0; t < total; ++t) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    IntMatrix a(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) a[i][j] = entry(rng);
    bott::CohRing ring(a);
    bool ok = ring.rank() == (std::size_t{1} << n);
    // Square-free monomials reduce to themselves and are pairwise distinct basis elements.
    for (std::uint32_t mask = 0; ok && mask < ring.rank(); ++mask) {
      bott::Polynomial mono;
      IntVector e(n, 0);
      for (std::size_t i = 0; i < n; ++i) e[i] = (mask >> i) & 1u;
      mono[e] = 1;
      bott::CohClass want;
      want.add(mask, 1);
      ok = ring.reduce(mono) == want;
    }
    for (std::size_t i = 0; ok && i < n; ++i) {
      ok = ring.reduce(ring.relation(i)).is_zero();
      // The relation times every square-free monomial still vanishes.
      for (std::uint32_t mask = 0; ok && mask < ring.rank(); ++mask) {
        bott::Polynomial prod;
        for (const auto& [e, c] : ring.relation(i)) {
          IntVector f = e;
          for (std::size_t j = 0; j < n; ++j) f[j] += (mask >> j) & 1u;
          prod[f] += c;
        }
        ok = ring.reduce(prod).is_zero();
      }
      auto sp = bott::special_elements(bott::BottData{n, a, RationalVector(n, 1)}, i);
      auto y = bott::CohClass::linear(sp.y), alpha = bott::CohClass::linear(sp.alpha);
      bott::CohClass quarter;
      quarter.add(ring.multiply(alpha, alpha), Rational(1, 4));
      ok = ok && ring.multiply(y, y) == quarter;
    }
    good += ok;
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) +
                             " random towers (n <= 5, |A| <= 5): rank 2^n, relations vanish, y^2 = alpha^2/4"};
}

Outcome rigidity(std::uint64_t seed) {
  auto rng = rng_for(seed, 8);
  std::uniform_int_distribution<int> dim(2, 5);
  int yes = 0, no = 0;
  const int total = 50;
  for (int t = 0; t < total; ++t) {
    const std::size_t n = static_cast<std::size_t>(dim(rng));
    auto model = testing::random_standard_model(rng, n, 7);
    auto b = testing::scramble(rng, model, 10);
    auto bt = testing::scramble(rng, model, 10);
    auto d = bott::decide_symplectomorphic(b, bt);
    if (d.equivalent) {
      geom::AffineUnimodularMap lt{linalg::transpose(d.lambda_map), RationalVector(n, 0)};
      auto moved = geom::transform(bott::bott_polytope(d.target.form), lt);
      auto report = bott::ring_map_check(d.map, bott::CohRing(b.a), bott::CohRing(bt.a), b.lambda, bt.lambda);
      if (moved.vertex_list() == bott::bott_polytope(d.source.form).vertex_list() &&
          d.map.apply_linear(b.lambda) == bt.lambda && report.ok())
        ++yes;
    }
    auto perturbed = model;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    perturbed.lambda[idx(rng)] += 1;
    auto other = testing::scramble(rng, perturbed, 10);
    if (!bott::decide_symplectomorphic(b, other).equivalent) ++no;
  }
  return {yes == total && no == total, std::to_string(yes) + "/" + std::to_string(total) +
                                           " scrambled pairs Yes with verified certificates; " + std::to_string(no) +
                                           "/" + std::to_string(total) + " perturbed pairs No"};
}

Outcome hirzebruch_consistency(std::uint64_t) {
  struct Instance {
    std::int64_t a;
    long l1, l2;
  };
  std::vector<Instance> inst;
  for (std::int64_t a = -8; a <= 8; a += 2)
    for (long l1 = 1; l1 <= 10; ++l1)
      for (long l2 = 1; l2 <= 10; ++l2)
        if (l2 - a * l1 > 0) inst.push_back({a, l1, l2});
  const std::size_t m = inst.size();
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::size_t> pairs(workers, 0), disagree(workers, 0), swaps(workers, 0);
  std::vector<std::string> first(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < m; i += workers)
        for (std::size_t j = i; j < m; ++j) {
          const auto& p = inst[i];
          const auto& q = inst[j];
          RationalVector lp{Rational(p.l1), Rational(p.l2)}, lq{Rational(q.l1), Rational(q.l2)};
          bool crit = bott::hirzebruch_classify(p.a, lp, q.a, lq);
          bool dec = bott::decide_symplectomorphic(testing::hirzebruch(p.a, p.l1, p.l2),
                                                   testing::hirzebruch(q.a, q.l1, q.l2))
                         .equivalent;
          ++pairs[w];
          if (crit == dec) continue;
          ++disagree[w];
          // Areas of the two sphere factors: lambda_1 and lambda_2 - A lambda_1 / 2.
          Rational p2 = Rational(p.l2) - Rational(p.a * p.l1) / 2, q2 = Rational(q.l2) - Rational(q.a * q.l1) / 2;
          if (dec && !crit && Rational(p.l1) == q2 && p2 == Rational(q.l1)) ++swaps[w];
          if (first[w].empty()) {
            std::ostringstream os;
            os << "(" << p.a << ",(" << p.l1 << "," << p.l2 << ")) vs (" << q.a << ",(" << q.l1 << "," << q.l2
               << ")): decide " << (dec ? "Yes" : "No") << ", criterion " << (crit ? "Yes" : "No");
            first[w] = os.str();
          }
        }
    });
  for (auto& t : pool) t.join();
  std::size_t total = std::accumulate(pairs.begin(), pairs.end(), std::size_t{0});
  std::size_t bad = std::accumulate(disagree.begin(), disagree.end(), std::size_t{0});
  std::size_t sw = std::accumulate(swaps.begin(), swaps.end(), std::size_t{0});
  std::string example;
  for (const auto& f : first)
    if (!f.empty()) {
      example = f;
      break;
    }
  std::string detail = std::to_string(m) + " instances, " + std::to_string(total) + " pairs, " + std::to_string(bad) +
                       " disagreements";
  if (bad > 0)
    detail += " (" + std::to_string(sw) + " are exchanges of the two sphere factors" +
              (sw == bad ? ", i.e. all" : "") + "; e.g. " + example + ")";
  return {bad == 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::uint64_t seed = 20240611;
  app.add_option("--seed", seed, "seed for the randomized criteria");
  CLI11_PARSE(app, argc, argv);

  using Check = std::function<Outcome(std::uint64_t)>;
  const std::vector<std::pair<const char*, Check>> checks{
      {"sliding lemma vs valuation oracle", sliding_oracle},
      {"rectangle slide example", rectangle_example},
      {"saturation counterexample", saturation_example},
      {"Hirzebruch degeneration", hirzebruch_degeneration},
      {"coroot formula, type A", gromov_formula},
      {"simplex search vs brute force", simplex_search},
      {"Bott cohomology ring", bott_ring},
      {"rigidity decision and certificates", rigidity},
      {"Hirzebruch classification consistency", hirzebruch_consistency},
  };

  std::cout << "seed " << seed << ", tolerance: exact (rational arithmetic)\n";
  int failed = 0;
  bool substitutes = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = checks[i].second(seed);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char t[32];
    std::snprintf(t, sizeof t, "%.1fs", secs);
    std::cout << "criterion " << i + 1 << (i + 1 < 10 ? "  " : " ") << (o.pass ? "PASS" : "FAIL") << "  "
              << checks[i].first << ": " << o.detail << " [" << t << "]\n";
    failed += !o.pass;
    if (i < 6) substitutes = substitutes && o.pass;
  }
  std::cout << "criterion 10 " << (substitutes ? "PASS" : "FAIL")
            << "  desk-scale substitution: the general sharp width bound and the flat family are not computed; "
               "their computational consequences are criteria 1-4 and 5-6"
            << (substitutes ? ", which pass" : ", which do not all pass") << "\n";
  failed += !substitutes;
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
