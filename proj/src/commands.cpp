#include "toricdeg/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include "toricdeg/bott.hpp"
#include "toricdeg/error.hpp"
#include "toricdeg/gromov.hpp"
#include "toricdeg/lattice_geometry.hpp"
#include "toricdeg/render.hpp"
#include "toricdeg/valuation.hpp"

namespace toricdeg::commands {

namespace {

using geom::HPolytope;
using geom::LatticePointSet;

// ---- parsing ---------------------------------------------------------------

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

void require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
}

void allow_keys(const json& j, const std::string& path, std::initializer_list<const char*> keys) {
  require_object(j, path);
  for (const auto& [k, _] : j.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* allowed) { return k == allowed; }))
      throw SchemaError(at(path, k), "unknown field");
}

const json& need(const json& j, const std::string& path, const char* key) {
  require_object(j, path);
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(path, key), "missing field");
  return *it;
}

const json* maybe(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

Rational rational_of(const json& v, const std::string& path) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational(Integer(v.get<std::uint64_t>()));
    return Rational(Integer(static_cast<long>(v.get<std::int64_t>())));
  }
  if (v.is_number()) throw SchemaError(path, "floating point numbers are not accepted; use an integer or \"p/q\"");
  if (!v.is_string()) throw SchemaError(path, "expected an integer or a \"p/q\" string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const SchemaError& e) {
    throw SchemaError(path, e.what());
  }
}

std::int64_t int_of(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
    throw SchemaError(path, "integer out of range");
  return v.get<std::int64_t>();
}

const json& array_of(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array");
  return v;
}

RationalVector rational_vector(const json& v, const std::string& path) {
  RationalVector out;
  const auto& a = array_of(v, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(rational_of(a[i], at(path, i)));
  return out;
}

IntVector int_vector(const json& v, const std::string& path) {
  IntVector out;
  const auto& a = array_of(v, path);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(int_of(a[i], at(path, i)));
  return out;
}

std::size_t dimension_of(const json& j, const std::string& path) {
  auto d = int_of(need(j, path, "dim"), at(path, "dim"));
  if (d < 1 || d > 8) throw SchemaError(at(path, "dim"), "dimension must be between 1 and 8");
  return static_cast<std::size_t>(d);
}

HPolytope polytope_of(const json& j, const std::string& path) {
  allow_keys(j, path, {"dim", "inequalities", "vertices"});
  const std::size_t n = dimension_of(j, path);
  const json* ineq = maybe(j, "inequalities");
  const json* verts = maybe(j, "vertices");
  if ((ineq != nullptr) == (verts != nullptr))
    throw SchemaError(path, "give exactly one of \"inequalities\" and \"vertices\"");
  if (ineq) {
    const std::string p = at(path, "inequalities");
    RationalMatrix rows;
    const auto& a = array_of(*ineq, p);
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto row = rational_vector(a[i], at(p, i));
      if (row.size() != n + 1) throw SchemaError(at(p, i), "inequality needs dim coefficients and a bound");
      rows.push_back(row);
    }
    return HPolytope::from_rows(n, rows);
  }
  const std::string p = at(path, "vertices");
  std::vector<RationalVector> pts;
  const auto& a = array_of(*verts, p);
  if (a.empty()) throw SchemaError(p, "need at least one vertex");
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto v = rational_vector(a[i], at(p, i));
    if (v.size() != n) throw SchemaError(at(p, i), "vertex has wrong dimension");
    pts.push_back(v);
  }
  return geom::hull(n, pts);
}

LatticePointSet point_set_of(const json& v, const std::string& path, std::size_t n) {
  std::vector<IntVector> pts;
  const auto& a = array_of(v, path);
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto p = int_vector(a[i], at(path, i));
    if (p.size() != n) throw SchemaError(at(path, i), "point has wrong dimension");
    pts.push_back(p);
  }
  return LatticePointSet(n, pts);
}

bott::BottData bott_of(const json& j, const std::string& path) {
  allow_keys(j, path, {"n", "A", "lambda"});
  auto n = int_of(need(j, path, "n"), at(path, "n"));
  if (n < 1 || n > 12) throw SchemaError(at(path, "n"), "n must be between 1 and 12");
  bott::BottData b;
  b.n = static_cast<std::size_t>(n);
  const std::string pa = at(path, "A");
  const auto& rows = array_of(need(j, path, "A"), pa);
  if (rows.size() != b.n) throw SchemaError(pa, "A must have n rows");
  for (std::size_t i = 0; i < b.n; ++i) {
    auto row = int_vector(rows[i], at(pa, i));
    if (row.size() != b.n) throw SchemaError(at(pa, i), "A must have n columns");
    for (std::size_t jj = 0; jj <= i; ++jj)
      if (row[jj] != 0) throw SchemaError(at(at(pa, i), jj), "A must be strictly upper triangular");
    b.a.push_back(row);
  }
  const std::string pl = at(path, "lambda");
  b.lambda = rational_vector(need(j, path, "lambda"), pl);
  if (b.lambda.size() != b.n) throw SchemaError(pl, "lambda must have n entries");
  for (std::size_t i = 0; i < b.n; ++i)
    if (b.lambda[i] <= 0) throw SchemaError(at(pl, i), "lambda entries must be positive");
  return b;
}

/// 1-based index in [lo, hi], returned 0-based.
std::size_t index_of(const json& j, const std::string& path, const char* key, std::size_t lo, std::size_t hi) {
  auto v = int_of(need(j, path, key), at(path, key));
  if (v < static_cast<std::int64_t>(lo) || v > static_cast<std::int64_t>(hi))
    throw SchemaError(at(path, key), "index must be between " + std::to_string(lo) + " and " + std::to_string(hi));
  return static_cast<std::size_t>(v - 1);
}

int positive_int(const json& j, const std::string& path, const char* key, int fallback, int hi) {
  const json* v = maybe(j, key);
  if (!v) return fallback;
  auto x = int_of(*v, at(path, key));
  if (x < 1 || x > hi) throw SchemaError(at(path, key), "must be between 1 and " + std::to_string(hi));
  return static_cast<int>(x);
}

int max_level_of(const json& j) {
  const int cap = max_level_cap();
  return std::min(positive_int(j, "", "max_level", cap, 1000), cap);
}

valuation::SlideDirection direction_of(const json& j, std::size_t n) {
  std::size_t k = index_of(j, "", "k", 1, n);
  std::size_t l = index_of(j, "", "l", 1, n);
  if (k >= l) throw SchemaError("/l", "need k < l");
  auto c = int_of(need(j, "", "c"), "/c");
  if (c < 0) throw SchemaError("/c", "c must be >= 0");
  return {k, l, c};
}

// ---- serialization ---------------------------------------------------------

json rat(const Rational& r) { return to_string(r); }

json rat_vec(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat(x));
  return a;
}

json int_vec(const IntVector& v) { return json(v); }

json points_json(const LatticePointSet& s) {
  json a = json::array();
  for (const auto& p : s) a.push_back(int_vec(p));
  return a;
}

json polytope_json(const HPolytope& p) {
  json out{{"dim", p.dim()}};
  json ineq = json::array();
  for (const auto& h : p.halfspaces()) {
    json row = int_vec(h.normal);
    row.push_back(rat(h.rhs));
    ineq.push_back(row);
  }
  out["inequalities"] = ineq;
  if (p.is_bounded() && !p.is_empty()) {
    json verts = json::array();
    for (const auto& v : p.vertex_list()) verts.push_back(rat_vec(v));
    out["vertices"] = verts;
  }
  return out;
}

json matrix_json(const IntMatrix& m) {
  json a = json::array();
  for (const auto& r : m) a.push_back(int_vec(r));
  return a;
}

json rational_matrix_json(const RationalMatrix& m) {
  json a = json::array();
  for (const auto& r : m) a.push_back(rat_vec(r));
  return a;
}

json bott_json(const bott::BottData& b) { return {{"n", b.n}, {"A", matrix_json(b.a)}, {"lambda", rat_vec(b.lambda)}}; }

json one_based(std::size_t i) { return i + 1; }

json certificate_json(const std::optional<valuation::ConeCertificate>& c) {
  if (!c) return nullptr;
  return {{"level", c->level}, {"point", int_vec(c->point)}, {"kind", c->missing ? "missing" : "extra"}};
}

// ---- commands --------------------------------------------------------------

json cmd_vertices(const json& req) {
  allow_keys(req, "", {"polytope"});
  auto p = polytope_of(need(req, "", "polytope"), "/polytope");
  json out = polytope_json(p);
  out["bounded"] = p.is_bounded();
  out["empty"] = p.is_empty();
  out["affine_dimension"] = p.affine_dimension();
  return out;
}

json cmd_lattice_points(const json& req) {
  allow_keys(req, "", {"polytope", "dilation"});
  auto p = polytope_of(need(req, "", "polytope"), "/polytope");
  int m = positive_int(req, "", "dilation", 1, 1000);
  auto pts = geom::lattice_points(geom::dilate(p, m));
  return {{"dilation", m}, {"count", pts.size()}, {"points", points_json(pts)}};
}

json cmd_normal_check(const json& req) {
  allow_keys(req, "", {"polytope", "max_level"});
  auto p = polytope_of(need(req, "", "polytope"), "/polytope");
  int m = max_level_of(req);
  auto r = geom::is_normal(p, m);
  json out{{"max_level", m}, {"normal", r.normal}, {"counterexample", nullptr}};
  if (r.counterexample) out["counterexample"] = {{"level", r.counterexample->first}, {"point", int_vec(r.counterexample->second)}};
  return out;
}

json cmd_smooth_check(const json& req) {
  allow_keys(req, "", {"polytope"});
  auto p = polytope_of(need(req, "", "polytope"), "/polytope");
  auto r = geom::is_delzant_smooth(p);
  json out{{"smooth", r.smooth}, {"vertex", nullptr}};
  if (r.vertex) out["vertex"] = rat_vec(*r.vertex);
  if (r.smooth) {
    json edges = json::array();
    for (const auto& v : p.vertex_list()) {
      json dirs = json::array();
      for (const auto& e : geom::edge_directions(p, v)) dirs.push_back(int_vec(e));
      edges.push_back({{"vertex", rat_vec(v)}, {"edges", dirs}});
    }
    out["edges"] = edges;
  }
  return out;
}

json semigroup_json(const valuation::GradedSemigroup& s) {
  json levels = json::array();
  for (int m = 0; m <= s.max_level; ++m)
    levels.push_back({{"level", m}, {"count", s.level(m).size()}, {"points", points_json(s.level(m))}});
  return levels;
}

json saturation_json(const valuation::SaturationReport& r) {
  json out{{"saturated", r.saturated}, {"witness", nullptr}};
  if (r.witness)
    out["witness"] = {{"level", r.witness->level}, {"point", int_vec(r.witness->point)}, {"multiple", r.witness->multiple}};
  return out;
}

json cmd_slide(const json& req) {
  if (maybe(req, "points")) {
    allow_keys(req, "", {"dim", "points", "k", "l", "c"});
    std::size_t n = dimension_of(req, "");
    auto s = point_set_of(req["points"], "/points", n);
    auto d = direction_of(req, n);
    return {{"points", points_json(valuation::slide(s, d))}};
  }
  allow_keys(req, "", {"polytope", "k", "l", "c", "max_level", "target"});
  auto p = polytope_of(need(req, "", "polytope"), "/polytope");
  auto d = direction_of(req, p.dim());
  int m = max_level_of(req);
  auto s = valuation::build_semigroup(p, d, m);
  json hulls = json::array();
  for (int level = 1; level <= m; ++level)
    hulls.push_back({{"level", level}, {"polytope", polytope_json(geom::hull(s.level(level)))}});
  HPolytope target = maybe(req, "target") ? polytope_of(req["target"], "/target") : geom::hull(s.level(1));
  auto cone = valuation::check_cone_condition(s, target);
  return {{"max_level", m},
          {"levels", semigroup_json(s)},
          {"hulls", hulls},
          {"saturation", saturation_json(valuation::check_saturation(s))},
          {"cone_condition",
           {{"against", polytope_json(target)}, {"holds", cone.holds}, {"certificate", certificate_json(cone.certificate)}}}};
}

valuation::GradedSemigroup semigroup_of(const json& req, std::initializer_list<const char*> extra = {}) {
  std::vector<const char*> keys{"polytope", "k", "l", "c", "max_level"};
  keys.insert(keys.end(), extra.begin(), extra.end());
  require_object(req, "");
  for (const auto& [k, _] : req.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
      throw SchemaError("/" + k, "unknown field");
  auto p = polytope_of(need(req, "", "polytope"), "/polytope");
  auto d = direction_of(req, p.dim());
  return valuation::build_semigroup(p, d, max_level_of(req));
}

json cmd_semigroup(const json& req) {
  auto s = semigroup_of(req);
  return {{"max_level", s.max_level}, {"levels", semigroup_json(s)}, {"additive", !valuation::additivity_violation(s)}};
}

json cmd_okounkov(const json& req) {
  auto s = semigroup_of(req, {"level"});
  int m = positive_int(req, "", "level", 1, s.max_level);
  json nested = json::array();
  for (bool b : valuation::okounkov_nesting(s)) nested.push_back(b);
  return {{"level", m}, {"polytope", polytope_json(valuation::okounkov_approx(s, m))}, {"nested", nested}};
}

json cmd_saturation(const json& req) {
  auto s = semigroup_of(req);
  json out = saturation_json(valuation::check_saturation(s));
  out["max_level"] = s.max_level;
  return out;
}

gromov::RootSystemSpec root_system_of(const json& req) {
  const json& f = need(req, "", "family");
  if (!f.is_string()) throw SchemaError("/family", "expected a string");
  gromov::RootSystemSpec spec;
  try {
    spec.family = gromov::parse_family(f.get<std::string>());
  } catch (const PreconditionError& e) {
    throw SchemaError("/family", e.what());
  }
  auto rank = int_of(need(req, "", "rank"), "/rank");
  if (rank < 1 || rank > 64) throw SchemaError("/rank", "rank must be between 1 and 64");
  // For A the rank field counts coordinates (the n of U(n)).
  spec.rank = static_cast<int>(spec.family == gromov::Family::A ? rank - 1 : rank);
  return spec;
}

json cmd_gw_formula(const json& req) {
  allow_keys(req, "", {"family", "rank", "lambda"});
  auto spec = root_system_of(req);
  auto lambda = rational_vector(need(req, "", "lambda"), "/lambda");
  if (lambda.size() != spec.ambient_dim())
    throw SchemaError("/lambda", "lambda needs " + std::to_string(spec.ambient_dim()) + " entries");
  auto value = gromov::gw_formula(spec, lambda);
  return {{"family", gromov::family_name(spec.family)}, {"lie_rank", spec.rank}, {"value", rat(value)}};
}

json cmd_gw_simplex(const json& req) {
  allow_keys(req, "", {"polytope", "bound", "mode", "seed", "threads", "restarts", "steps"});
  auto p = polytope_of(need(req, "", "polytope"), "/polytope");
  gromov::SearchOptions opt;
  opt.bound = positive_int(req, "", "bound", 3, 50);
  if (const json* m = maybe(req, "mode")) {
    if (!m->is_string() || (*m != "exhaustive" && *m != "heuristic"))
      throw SchemaError("/mode", "mode is \"exhaustive\" or \"heuristic\"");
    opt.mode = *m == "exhaustive" ? gromov::SearchMode::Exhaustive : gromov::SearchMode::Heuristic;
  }
  if (const json* s = maybe(req, "seed")) {
    auto v = int_of(*s, "/seed");
    if (v < 0) throw SchemaError("/seed", "seed must be >= 0");
    opt.seed = static_cast<std::uint64_t>(v);
  }
  opt.threads = static_cast<unsigned>(positive_int(req, "", "threads", 1, 256));
  opt.restarts = positive_int(req, "", "restarts", opt.restarts, 100000);
  opt.steps = positive_int(req, "", "steps", opt.steps, 1000000);
  auto r = gromov::best_simplex_lb(p, opt);
  return {{"a", rat(r.fit.a)},
          {"psi", matrix_json(r.fit.psi)},
          {"x", rat_vec(r.fit.x)},
          {"bound", opt.bound},
          {"mode", opt.mode == gromov::SearchMode::Exhaustive ? "exhaustive" : "heuristic"},
          {"certified", r.certified},
          {"evaluated", r.evaluated}};
}

json exceptional_json(const bott::BottData& b) {
  json out = json::array();
  for (std::size_t k = 0; k < b.n; ++k) {
    auto t = bott::exceptional_type(b, k);
    const char* kind = t.kind == bott::ExceptionalKind::Even ? "even" : t.kind == bott::ExceptionalKind::Odd ? "odd" : "none";
    out.push_back({{"k", one_based(k)}, {"type", kind}, {"l", one_based(t.l)}, {"c", t.c}});
  }
  return out;
}

json cmd_bott_polytope(const json& req) {
  allow_keys(req, "", {"bott"});
  auto b = bott_of(need(req, "", "bott"), "/bott");
  return {{"polytope", polytope_json(bott::bott_polytope(b))},
          {"hypercube", bott::is_hypercube(b)},
          {"q_trivial", bott::is_q_trivial(b)},
          {"exceptional", exceptional_json(b)}};
}

json class_json(const bott::CohClass& c) {
  json terms = json::array();
  for (const auto& [mask, coeff] : c.terms) {
    json mono = json::array();
    for (std::size_t i = 0; i < 32; ++i)
      if (mask & (1u << i)) mono.push_back(i + 1);
    terms.push_back({{"monomial", mono}, {"coeff", rat(coeff)}});
  }
  return terms;
}

json trace_json(const std::vector<bott::MoveRecord>& trace) {
  json out = json::array();
  for (const auto& m : trace)
    out.push_back({{"k", one_based(m.k)},
                   {"l", one_based(m.l)},
                   {"from", m.from},
                   {"to", m.to},
                   {"certified", m.certified},
                   {"hypercube", m.hypercube}});
  return out;
}

json standard_form_json(const bott::StandardForm& s) {
  json blocks = json::array();
  for (const auto& bl : s.blocks) {
    json members = json::array();
    for (auto i : bl.members) members.push_back(one_based(i));
    blocks.push_back({{"root", one_based(bl.root)}, {"members", members}});
  }
  return {{"form", bott_json(s.form)},
          {"partition", s.partition},
          {"blocks", blocks},
          {"map", rational_matrix_json(s.map.images)},
          {"trace", trace_json(s.trace)}};
}

json cmd_bott_reduce(const json& req) {
  allow_keys(req, "", {"bott", "class"});
  auto b = bott_of(need(req, "", "bott"), "/bott");
  json out{{"q_trivial", bott::is_q_trivial(b)}};
  if (const json* c = maybe(req, "class")) {
    bott::Polynomial poly;
    const auto& terms = array_of(*c, "/class");
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string p = at("/class", i);
      allow_keys(terms[i], p, {"exponents", "coeff"});
      auto e = int_vector(need(terms[i], p, "exponents"), at(p, "exponents"));
      if (e.size() != b.n) throw SchemaError(at(p, "exponents"), "need n exponents");
      for (std::size_t j = 0; j < e.size(); ++j)
        if (e[j] < 0 || e[j] > 64) throw SchemaError(at(at(p, "exponents"), j), "exponent must be between 0 and 64");
      poly[e] += rational_of(need(terms[i], p, "coeff"), at(p, "coeff"));
    }
    out["class"] = class_json(bott::CohRing(b.a).reduce(poly));
  }
  if (out["q_trivial"].get<bool>()) out["standard_form"] = standard_form_json(bott::standard_form(b));
  return out;
}

json cmd_bott_equiv(const json& req) {
  allow_keys(req, "", {"source", "target"});
  auto b = bott_of(need(req, "", "source"), "/source");
  auto bt = bott_of(need(req, "", "target"), "/target");
  auto d = bott::decide_symplectomorphic(b, bt);
  json out{{"equivalent", d.equivalent}};
  if (!d.equivalent) {
    out["reason"] = d.reason;
    return out;
  }
  json sigma = json::array();
  for (auto s : d.sigma) sigma.push_back(one_based(s));
  out["sigma"] = sigma;
  out["Lambda"] = matrix_json(d.lambda_map);
  out["F"] = rational_matrix_json(d.map.images);
  out["source_standard"] = standard_form_json(d.source);
  out["target_standard"] = standard_form_json(d.target);
  return out;
}

json cmd_bott_verify_move(const json& req) {
  allow_keys(req, "", {"source", "target", "target_entry", "k", "l", "max_level"});
  auto b = bott_of(need(req, "", "source"), "/source");
  std::size_t k = index_of(req, "", "k", 1, b.n);
  std::size_t l = index_of(req, "", "l", 1, b.n);
  if (k >= l) throw SchemaError("/l", "need k < l");
  const json* tgt = maybe(req, "target");
  const json* entry = maybe(req, "target_entry");
  if ((tgt != nullptr) == (entry != nullptr)) throw SchemaError("", "give exactly one of \"target\" and \"target_entry\"");
  json out;
  bott::BottData target;
  if (tgt) {
    target = bott_of(*tgt, "/target");
    if (target.n != b.n) throw SchemaError("/target/n", "towers have different dimensions");
  } else {
    auto mv = bott::general_move(b, k, l, int_of(*entry, "/target_entry"));
    target = mv.target;
    out["move"] = {{"target", bott_json(mv.target)}, {"map", rational_matrix_json(mv.map.images)}, {"certified", mv.certified}};
  }
  int m = max_level_of(req);
  auto r = bott::verify_degeneration_move(b, target, k, l, m);
  json levels = json::array();
  for (const auto& v : r.levels)
    levels.push_back({{"level", v.level}, {"holds", v.holds}, {"certificate", certificate_json(v.certificate)}});
  out["passed"] = r.passed;
  out["c"] = r.c;
  out["reversed"] = r.reversed;
  out["identity"] = r.identity;
  out["dilation"] = r.dilation;
  out["max_level"] = m;
  out["levels"] = levels;
  return out;
}

json cmd_hirzebruch(const json& req) {
  allow_keys(req, "", {"A", "lambda", "A_target", "lambda_target"});
  auto a = int_of(need(req, "", "A"), "/A");
  auto at_ = int_of(need(req, "", "A_target"), "/A_target");
  auto l = rational_vector(need(req, "", "lambda"), "/lambda");
  auto lt = rational_vector(need(req, "", "lambda_target"), "/lambda_target");
  if (l.size() != 2) throw SchemaError("/lambda", "need two entries");
  if (lt.size() != 2) throw SchemaError("/lambda_target", "need two entries");
  for (const auto& [v, p] : {std::pair{&l, "/lambda"}, std::pair{&lt, "/lambda_target"}})
    for (std::size_t i = 0; i < 2; ++i)
      if ((*v)[i] <= 0) throw SchemaError(at(p, i), "lambda entries must be positive");
  bool criterion = bott::hirzebruch_classify(a, l, at_, lt);
  bott::BottData b{2, {{0, a}, {0, 0}}, l}, bt{2, {{0, at_}, {0, 0}}, lt};
  auto d = bott::decide_symplectomorphic(b, bt);
  json out{{"criterion", criterion}, {"decision", d.equivalent}};
  if (!d.equivalent) out["reason"] = d.reason;
  return out;
}

json cmd_render(const json& req) {
  allow_keys(req, "", {"panels", "polytope", "slide"});
  std::vector<render::Panel> panels;
  if (const json* ps = maybe(req, "panels")) {
    const auto& a = array_of(*ps, "/panels");
    for (std::size_t i = 0; i < a.size(); ++i) {
      const std::string p = at("/panels", i);
      allow_keys(a[i], p, {"polytope", "points", "highlighted", "title", "lattice_points"});
      render::Panel panel;
      if (const json* poly = maybe(a[i], "polytope")) panel.polytope = polytope_of(*poly, at(p, "polytope"));
      if (const json* pts = maybe(a[i], "points")) panel.points = point_set_of(*pts, at(p, "points"), 2).points();
      if (const json* pts = maybe(a[i], "highlighted"))
        panel.highlighted = point_set_of(*pts, at(p, "highlighted"), 2).points();
      if (const json* lp = maybe(a[i], "lattice_points")) {
        if (!lp->is_boolean()) throw SchemaError(at(p, "lattice_points"), "expected a boolean");
        if (lp->get<bool>() && panel.polytope) panel.points = geom::lattice_points(*panel.polytope).points();
      }
      if (const json* t = maybe(a[i], "title")) {
        if (!t->is_string()) throw SchemaError(at(p, "title"), "expected a string");
        panel.title = t->get<std::string>();
      }
      panels.push_back(std::move(panel));
    }
    if (panels.empty()) throw SchemaError("/panels", "need at least one panel");
  } else {
    auto poly = polytope_of(need(req, "", "polytope"), "/polytope");
    auto pts = geom::lattice_points(poly);
    panels.push_back({poly, pts.points(), {}, "polytope"});
    if (const json* s = maybe(req, "slide")) {
      allow_keys(*s, "/slide", {"k", "l", "c"});
      std::size_t k = index_of(*s, "/slide", "k", 1, 2), l = index_of(*s, "/slide", "l", 1, 2);
      if (k >= l) throw SchemaError("/slide/l", "need k < l");
      auto c = int_of(need(*s, "/slide", "c"), "/slide/c");
      if (c < 0) throw SchemaError("/slide/c", "c must be >= 0");
      auto slid = valuation::slide(pts, {k, l, c});
      render::Panel after{geom::hull(slid), {}, {}, "slide"};
      for (const auto& p : slid) (pts.contains(p) ? after.points : after.highlighted).push_back(p);
      panels.push_back(std::move(after));
    }
  }
  return {{"svg", render::svg(panels)}};
}

const std::map<std::string, std::function<json(const json&)>>& table() {
  static const std::map<std::string, std::function<json(const json&)>> t{
      {"vertices", cmd_vertices},
      {"lattice-points", cmd_lattice_points},
      {"normal-check", cmd_normal_check},
      {"smooth-check", cmd_smooth_check},
      {"slide", cmd_slide},
      {"semigroup", cmd_semigroup},
      {"okounkov", cmd_okounkov},
      {"saturation", cmd_saturation},
      {"gw-formula", cmd_gw_formula},
      {"gw-simplex", cmd_gw_simplex},
      {"bott-polytope", cmd_bott_polytope},
      {"bott-reduce", cmd_bott_reduce},
      {"bott-equiv", cmd_bott_equiv},
      {"bott-verify-move", cmd_bott_verify_move},
      {"hirzebruch", cmd_hirzebruch},
      {"render", cmd_render},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : table()) v.push_back(k);
    return v;
  }();
  return names;
}

int max_level_cap() {
  const char* env = std::getenv("TORICDEG_MAX_LEVEL");
  if (!env || !*env) return 6;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1000) throw SchemaError("", "TORICDEG_MAX_LEVEL must be an integer between 1 and 1000");
  return static_cast<int>(v);
}

json run(const std::string& command, const json& request) {
  auto it = table().find(command);
  if (it == table().end()) throw SchemaError("", "unknown command '" + command + "'");
  require_object(request, "");
  return it->second(request);
}

}  // namespace toricdeg::commands
