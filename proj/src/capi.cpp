#include "toricdeg/toricdeg.h"

#include <new>
#include <string>

#include "toricdeg/bott.hpp"
#include "toricdeg/commands.hpp"
#include "toricdeg/error.hpp"
#include "toricdeg/lattice_geometry.hpp"

struct tdg_result {
  tdg_status status = TDG_OK;
  std::string json, error, pointer;
  bool has_pointer = false;
};

struct tdg_polytope {
  toricdeg::geom::HPolytope p;
};

struct tdg_bott {
  toricdeg::bott::BottData b;
};

namespace {

thread_local std::string last_error;

tdg_status fail(tdg_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
tdg_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return TDG_OK;
  } catch (const toricdeg::SchemaError& e) {
    return fail(TDG_ERR_SCHEMA, e.what());
  } catch (const toricdeg::PreconditionError& e) {
    return fail(TDG_ERR_PRECONDITION, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TDG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TDG_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* tdg_version(void) { return "1.0.0"; }

const char* tdg_last_error(void) { return last_error.c_str(); }

const char* tdg_commands(void) {
  static const std::string names = [] {
    std::string s;
    for (const auto& n : toricdeg::commands::command_names()) s += (s.empty() ? "" : "\n") + n;
    return s;
  }();
  return names.c_str();
}

tdg_status tdg_run(const char* command, const char* request_json, tdg_result** out) {
  if (!out) return fail(TDG_ERR_ARGUMENT, "out is null");
  *out = nullptr;
  auto* r = new (std::nothrow) tdg_result;
  if (!r) return fail(TDG_ERR_INTERNAL, "out of memory");
  *out = r;
  if (!command || !request_json) {
    r->status = TDG_ERR_ARGUMENT;
    r->error = "command and request must be non-null";
    return fail(r->status, r->error);
  }
  try {
    auto request = toricdeg::commands::json::parse(request_json);
    r->json = toricdeg::commands::run(command, request).dump();
  } catch (const toricdeg::commands::json::parse_error& e) {
    r->status = TDG_ERR_SCHEMA;
    r->error = std::string("invalid JSON: ") + e.what();
    r->has_pointer = true;
  } catch (const toricdeg::SchemaError& e) {
    r->status = TDG_ERR_SCHEMA;
    r->error = e.what();
    r->pointer = e.pointer();
    r->has_pointer = true;
  } catch (const toricdeg::PreconditionError& e) {
    r->status = TDG_ERR_PRECONDITION;
    r->error = e.what();
  } catch (const std::exception& e) {
    r->status = TDG_ERR_INTERNAL;
    r->error = e.what();
  }
  if (r->status != TDG_OK) return fail(r->status, r->error);
  last_error.clear();
  return TDG_OK;
}

tdg_status tdg_result_status(const tdg_result* r) { return r ? r->status : TDG_ERR_ARGUMENT; }

const char* tdg_result_json(const tdg_result* r) { return r && r->status == TDG_OK ? r->json.c_str() : nullptr; }

const char* tdg_result_error(const tdg_result* r) { return r && r->status != TDG_OK ? r->error.c_str() : nullptr; }

const char* tdg_result_error_pointer(const tdg_result* r) {
  return r && r->status == TDG_ERR_SCHEMA && r->has_pointer ? r->pointer.c_str() : nullptr;
}

void tdg_result_free(tdg_result* r) { delete r; }

tdg_status tdg_polytope_from_inequalities(size_t dim, size_t rows, const char* const* entries, tdg_polytope** out) {
  if (!out || (!entries && rows > 0) || dim == 0) return fail(TDG_ERR_ARGUMENT, "invalid arguments");
  return guarded([&] {
    toricdeg::RationalMatrix m(rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j <= dim; ++j) {
        const char* e = entries[i * (dim + 1) + j];
        if (!e) throw toricdeg::SchemaError("", "null entry");
        m[i].push_back(toricdeg::parse_rational(e));
      }
    *out = new tdg_polytope{toricdeg::geom::HPolytope::from_rows(dim, m)};
  });
}

tdg_status tdg_polytope_from_vertices(size_t dim, size_t count, const int64_t* coords, tdg_polytope** out) {
  if (!out || !coords || dim == 0 || count == 0) return fail(TDG_ERR_ARGUMENT, "invalid arguments");
  return guarded([&] {
    std::vector<toricdeg::RationalVector> pts(count);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < dim; ++j) pts[i].emplace_back(toricdeg::Integer(static_cast<long>(coords[i * dim + j])));
    *out = new tdg_polytope{toricdeg::geom::hull(dim, pts)};
  });
}

size_t tdg_polytope_dim(const tdg_polytope* p) { return p ? p->p.dim() : 0; }

tdg_status tdg_polytope_vertex_count(const tdg_polytope* p, size_t* out) {
  if (!p || !out) return fail(TDG_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = p->p.vertex_list().size(); });
}

tdg_status tdg_polytope_lattice_point_count(const tdg_polytope* p, int dilation, size_t* out) {
  if (!p || !out || dilation < 1) return fail(TDG_ERR_ARGUMENT, "invalid arguments");
  return guarded([&] { *out = toricdeg::geom::lattice_points(toricdeg::geom::dilate(p->p, dilation)).size(); });
}

tdg_status tdg_polytope_is_smooth(const tdg_polytope* p, int* out) {
  if (!p || !out) return fail(TDG_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = toricdeg::geom::is_delzant_smooth(p->p).smooth ? 1 : 0; });
}

tdg_status tdg_polytope_is_normal(const tdg_polytope* p, int max_level, int* out) {
  if (!p || !out || max_level < 1) return fail(TDG_ERR_ARGUMENT, "invalid arguments");
  return guarded([&] { *out = toricdeg::geom::is_normal(p->p, max_level).normal ? 1 : 0; });
}

void tdg_polytope_free(tdg_polytope* p) { delete p; }

tdg_status tdg_bott_new(size_t n, const int64_t* a, const char* const* lambda, tdg_bott** out) {
  if (!out || !a || !lambda || n == 0) return fail(TDG_ERR_ARGUMENT, "invalid arguments");
  return guarded([&] {
    toricdeg::bott::BottData b;
    b.n = n;
    b.a.assign(n, toricdeg::IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b.a[i][j] = a[i * n + j];
      if (!lambda[i]) throw toricdeg::SchemaError("", "null lambda entry");
      b.lambda.push_back(toricdeg::parse_rational(lambda[i]));
    }
    b.validate(true);
    *out = new tdg_bott{b};
  });
}

size_t tdg_bott_n(const tdg_bott* b) { return b ? b->b.n : 0; }

tdg_status tdg_bott_is_q_trivial(const tdg_bott* b, int* out) {
  if (!b || !out) return fail(TDG_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = toricdeg::bott::is_q_trivial(b->b) ? 1 : 0; });
}

tdg_status tdg_bott_equivalent(const tdg_bott* b, const tdg_bott* bt, int* out) {
  if (!b || !bt || !out) return fail(TDG_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = toricdeg::bott::decide_symplectomorphic(b->b, bt->b).equivalent ? 1 : 0; });
}

tdg_status tdg_bott_polytope(const tdg_bott* b, tdg_polytope** out) {
  if (!b || !out) return fail(TDG_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new tdg_polytope{toricdeg::bott::bott_polytope(b->b)}; });
}

void tdg_bott_free(tdg_bott* b) { delete b; }

}  // extern "C"
