// Command-line front end over the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "toricdeg/toricdeg.h"

using json = nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadInput : std::runtime_error {
  BadInput(std::string pointer, const std::string& msg) : std::runtime_error(msg), pointer(std::move(pointer)) {}
  std::string pointer;
};

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw BadInput("", path + ": invalid JSON: " + e.what());
  }
}

// A value given on the command line: integers stay integers, everything else
// is handed over as a string ("p/q", family names).
json scalar(const std::string& s) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  return s;
}

json list(const std::string& s) {
  json out = json::array();
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(scalar(item));
  return out;
}

bool has_any(const json& j, std::initializer_list<const char*> keys) {
  if (!j.is_object()) return false;
  for (const char* k : keys)
    if (j.contains(k)) return true;
  return false;
}

std::string fraction(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string summary(const std::string& cmd, const json& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  if (cmd == "vertices") return std::to_string(r.value("vertices", json::array()).size()) + " vertices";
  if (cmd == "lattice-points") return std::to_string(r["count"].get<std::size_t>()) + " lattice points";
  if (cmd == "normal-check") return std::string("normal up to level ") + r["max_level"].dump() + ": " + yn(r["normal"]);
  if (cmd == "smooth-check") return std::string("smooth: ") + yn(r["smooth"]);
  if (cmd == "slide")
    return r.contains("levels") ? std::string("saturated: ") + yn(r["saturation"]["saturated"]) +
                                      ", cone condition: " + yn(r["cone_condition"]["holds"])
                                : std::to_string(r["points"].size()) + " image points";
  if (cmd == "semigroup") return std::string("levels up to ") + r["max_level"].dump();
  if (cmd == "okounkov") return std::string("approximation at level ") + r["level"].dump();
  if (cmd == "saturation") return std::string("saturated: ") + yn(r["saturated"]);
  if (cmd == "gw-formula") return "lower bound " + fraction(r["value"]);
  if (cmd == "gw-simplex")
    return "simplex of size " + fraction(r["a"]) + (r["certified"].get<bool>() ? " (certified)" : " (heuristic)");
  if (cmd == "bott-polytope") return std::string("hypercube: ") + yn(r["hypercube"]) + ", Q-trivial: " + yn(r["q_trivial"]);
  if (cmd == "bott-reduce") return std::string("Q-trivial: ") + yn(r["q_trivial"]);
  if (cmd == "bott-equiv")
    return r["equivalent"].get<bool>() ? "symplectomorphic" : "not symplectomorphic: " + r["reason"].get<std::string>();
  if (cmd == "bott-verify-move") return std::string("degeneration verified: ") + yn(r["passed"]);
  if (cmd == "hirzebruch")
    return std::string("criterion: ") + yn(r["criterion"]) + ", decision: " + yn(r["decision"]);
  return "ok";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric degenerations, Gromov width bounds and Bott manifolds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tdg_version()));

  std::vector<std::string> inputs;
  std::string request_path, output_path;
  std::optional<long long> max_level, k, l, c, bound, seed, threads, dilation, level, target_entry, rank, a, a_target;
  std::optional<std::string> mode, family, lambda, lambda_target;
  bool quiet = false;

  std::map<std::string, CLI::App*> subs;
  for (std::string name : {"vertices", "lattice-points", "normal-check", "smooth-check", "slide", "semigroup", "okounkov",
                           "saturation", "gw-formula", "gw-simplex", "bott-polytope", "bott-reduce", "bott-equiv",
                           "bott-verify-move", "hirzebruch", "render"})
    subs[name] = app.add_subcommand(name);

  for (auto& [name, sub] : subs) {
    sub->add_option("inputs", inputs, "input JSON files ('-' for stdin)");
    sub->add_option("--request", request_path, "complete request JSON");
    sub->add_option("--output,-o", output_path, "write the result to a file");
    sub->add_flag("--quiet,-q", quiet, "no summary on stderr");
  }
  for (auto name : {"normal-check", "slide", "semigroup", "okounkov", "saturation", "bott-verify-move"})
    subs[name]->add_option("--max-level", max_level);
  for (auto name : {"slide", "semigroup", "okounkov", "saturation", "bott-verify-move", "render"}) {
    subs[name]->add_option("--k", k, "1-based");
    subs[name]->add_option("--l", l, "1-based");
  }
  for (auto name : {"slide", "semigroup", "okounkov", "saturation", "render"}) subs[name]->add_option("--c", c);
  subs["lattice-points"]->add_option("--dilation", dilation);
  subs["okounkov"]->add_option("--level", level);
  subs["gw-formula"]->add_option("--family", family);
  subs["gw-formula"]->add_option("--rank", rank, "number of coordinates for A, Lie rank otherwise");
  subs["gw-formula"]->add_option("--lambda", lambda, "comma separated");
  subs["gw-simplex"]->add_option("--bound", bound, "entry bound for the unimodular search (default 3)");
  subs["gw-simplex"]->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "heuristic"}));
  subs["gw-simplex"]->add_option("--seed", seed);
  subs["gw-simplex"]->add_option("--threads", threads);
  subs["bott-verify-move"]->add_option("--target-entry", target_entry);
  subs["hirzebruch"]->add_option("--a", a);
  subs["hirzebruch"]->add_option("--lambda", lambda);
  subs["hirzebruch"]->add_option("--a-target", a_target);
  subs["hirzebruch"]->add_option("--lambda-target", lambda_target);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : TDG_ERR_ARGUMENT;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  json req = json::object();
  try {
    if (!request_path.empty()) req = read_json(request_path);
    std::vector<json> files;
    for (const auto& p : inputs) files.push_back(read_json(p));

    auto place = [&](const char* key, const json& j, std::initializer_list<const char*> request_keys) {
      if (has_any(j, request_keys)) {
        for (auto& [kk, v] : j.items()) req[kk] = v;
      } else {
        req[key] = j;
      }
    };
    if (cmd == "bott-equiv") {
      if (files.size() > 2) throw UsageError("bott-equiv takes two files");
      if (files.size() == 2) {
        req["source"] = files[0];
        req["target"] = files[1];
      } else if (files.size() == 1) {
        place("source", files[0], {"source", "target"});
      }
    } else if (cmd == "bott-verify-move") {
      if (files.size() > 2) throw UsageError("bott-verify-move takes at most two files");
      if (!files.empty()) place("source", files[0], {"source", "target", "target_entry"});
      if (files.size() == 2) req["target"] = files[1];
    } else if (cmd == "bott-polytope" || cmd == "bott-reduce") {
      if (files.size() > 1) throw UsageError(cmd + " takes one file");
      if (!files.empty()) place("bott", files[0], {"bott", "class"});
    } else if (cmd == "render") {
      if (files.size() > 1) throw UsageError("render takes one file");
      if (!files.empty()) place("polytope", files[0], {"polytope", "panels", "slide"});
    } else if (cmd == "gw-formula" || cmd == "hirzebruch") {
      if (files.size() > 1) throw UsageError(cmd + " takes one file");
      if (!files.empty()) req = files[0];
    } else {
      if (files.size() > 1) throw UsageError(cmd + " takes one file");
      if (!files.empty()) place("polytope", files[0], {"polytope", "points"});
    }

    if (!req.is_object()) throw BadInput("", "request must be a JSON object");
    auto set = [&](const char* key, const auto& v) {
      if (v) req[key] = *v;
    };
    set("max_level", max_level);
    set("dilation", dilation);
    set("level", level);
    set("bound", bound);
    set("mode", mode);
    set("seed", seed);
    set("threads", threads);
    set("target_entry", target_entry);
    set("rank", rank);
    if (family) req["family"] = *family;
    if (cmd == "render") {
      if (k || l || c) {
        json s = req.value("slide", json::object());
        if (k) s["k"] = *k;
        if (l) s["l"] = *l;
        if (c) s["c"] = *c;
        req["slide"] = s;
      }
    } else {
      set("k", k);
      set("l", l);
      set("c", c);
    }
    if (cmd == "hirzebruch") {
      set("A", a);
      set("A_target", a_target);
      if (lambda_target) req["lambda_target"] = list(*lambda_target);
    }
    if (lambda) req["lambda"] = list(*lambda);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return TDG_ERR_ARGUMENT;
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return TDG_ERR_SCHEMA;
  }

  tdg_result* res = nullptr;
  tdg_status st = tdg_run(cmd.c_str(), req.dump().c_str(), &res);
  if (st != TDG_OK) {
    std::cerr << "error: " << (res && tdg_result_error(res) ? tdg_result_error(res) : tdg_last_error()) << "\n";
    if (res && tdg_result_error_pointer(res) && *tdg_result_error_pointer(res))
      std::cerr << "at: " << tdg_result_error_pointer(res) << "\n";
    tdg_result_free(res);
    return st;
  }
  json out = json::parse(tdg_result_json(res));
  tdg_result_free(res);

  std::string text = cmd == "render" ? out["svg"].get<std::string>() : out.dump(2) + "\n";
  if (!output_path.empty()) {
    std::ofstream f(output_path, std::ios::binary);
    if (!f || !(f << text)) {
      std::cerr << "error: cannot write " << output_path << "\n";
      return TDG_ERR_ARGUMENT;
    }
  } else {
    std::cout << text;
  }
  if (!quiet) std::cerr << (cmd == "render" ? std::string("svg written") : summary(cmd, out)) << "\n";
  return 0;
}
