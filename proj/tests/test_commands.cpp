#include <cstdlib>
#include <regex>
#include <set>

#include "doctest.h"
#include "toricdeg/commands.hpp"
#include "toricdeg/error.hpp"
#include "toricdeg/render.hpp"
#include "toricdeg/valuation.hpp"
#include "test_support.hpp"

using namespace toricdeg;
using commands::json;

namespace {

json rect() { return json::parse(R"({"dim":2,"vertices":[[0,0],[1,0],[1,3],[0,3]]})"); }
json square2() { return json::parse(R"({"dim":2,"vertices":[[0,0],[2,0],[2,2],[0,2]]})"); }

std::set<std::pair<long, long>> point_pairs(const json& pts) {
  std::set<std::pair<long, long>> out;
  for (const auto& p : pts) out.emplace(p[0].get<long>(), p[1].get<long>());
  return out;
}

std::string schema_pointer(const std::string& cmd, const json& req) {
  try {
    commands::run(cmd, req);
  } catch (const SchemaError& e) {
    return e.pointer();
  }
  return "<no error>";
}

struct EnvGuard {
  explicit EnvGuard(const char* value) { setenv("TORICDEG_MAX_LEVEL", value, 1); }
  ~EnvGuard() { unsetenv("TORICDEG_MAX_LEVEL"); }
};

}  // namespace

TEST_CASE("slide on the rectangle lists eight points and the trapezoid") {
  json r = commands::run("slide", {{"polytope", rect()}, {"k", 1}, {"l", 2}, {"c", 2}, {"max_level", 3}});
  const auto level1 = point_pairs(r["levels"][1]["points"]);
  const std::set<std::pair<long, long>> want{{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 0}, {1, 1}};
  CHECK(level1 == want);
  CHECK(r["levels"][0]["points"] == json::parse("[[0,0]]"));
  CHECK(r["hulls"][0]["polytope"]["inequalities"] == json::parse(R"([[-1,0,"0"],[0,-1,"0"],[1,0,"1"],[4,1,"5"]])"));
  CHECK(r["cone_condition"]["holds"] == true);
  CHECK(r["saturation"]["saturated"] == true);
}

TEST_CASE("slide on a bare point set") {
  json r = commands::run("slide", json::parse(R"({"dim":2,"points":[[1,0],[1,1],[0,1]],"k":1,"l":2,"c":2})"));
  CHECK(point_pairs(r["points"]) == std::set<std::pair<long, long>>{{0, 1}, {0, 2}, {0, 3}});
}

TEST_CASE("square saturation and cone certificate") {
  json base{{"polytope", square2()}, {"k", 1}, {"l", 2}, {"c", 2}, {"max_level", 2}};
  json s = commands::run("saturation", base);
  CHECK(s["saturated"] == false);
  CHECK(s["witness"] == json::parse(R"({"level":1,"point":[1,1],"multiple":2})"));
  json sl = commands::run("slide", base);
  CHECK(sl["cone_condition"]["holds"] == false);
  CHECK(sl["cone_condition"]["certificate"] == json::parse(R"({"level":1,"point":[1,1],"kind":"missing"})"));
  json sg = commands::run("semigroup", base);
  CHECK(sg["additive"] == true);
  CHECK(sg["levels"][1]["count"] == 9);
}

TEST_CASE("okounkov approximations") {
  json r = commands::run("okounkov", {{"polytope", rect()}, {"k", 1}, {"l", 2}, {"c", 2}, {"max_level", 3}, {"level", 2}});
  CHECK(r["level"] == 2);
  CHECK(r["polytope"]["vertices"] == json::parse(R"([["0","0"],["0","5"],["1","0"],["1","1"]])"));
  CHECK(r["nested"].size() == 2);
}

TEST_CASE("polytope commands") {
  json v = commands::run("vertices", json::parse(R"({"polytope":{"dim":2,"vertices":[[0,0],[0,1],[0,2]]}})"));
  CHECK(v["affine_dimension"] == 1);
  CHECK(v["vertices"].size() == 2);
  json lp = commands::run("lattice-points", {{"polytope", square2()}, {"dilation", 2}});
  CHECK(lp["count"] == 25);
  json rational = commands::run(
      "vertices", json::parse(R"({"polytope":{"dim":1,"inequalities":[[1,"5/2"],[-1,"-1/3"]]}})"));
  CHECK(rational["vertices"] == json::parse(R"([["1/3"],["5/2"]])"));
  json n = commands::run("normal-check", {{"polytope", square2()}, {"max_level", 3}});
  CHECK(n["normal"] == true);
  json sm = commands::run("smooth-check", {{"polytope", rect()}});
  CHECK(sm["smooth"] == true);
  CHECK(sm["edges"].size() == 4);
  json bad = commands::run("smooth-check", json::parse(R"({"polytope":{"dim":2,"vertices":[[0,0],[2,0],[0,1]]}})"));
  CHECK(bad["smooth"] == false);
  CHECK(bad["vertex"] == json::parse(R"(["0","1"])"));
}

TEST_CASE("gromov commands") {
  CHECK(commands::run("gw-formula", json::parse(R"({"family":"A","rank":3,"lambda":[5,3,0]})"))["value"] == "2");
  CHECK(commands::run("gw-formula", json::parse(R"({"family":"A","rank":2,"lambda":["7/2",1]})"))["value"] == "5/2");
  json r = commands::run("gw-simplex", json::parse(R"({"polytope":{"dim":2,"vertices":[[0,0],[1,0],[1,1],[0,1]]},"bound":1})"));
  CHECK(r["a"] == "1");
  CHECK(r["psi"] == json::parse("[[1,0],[0,1]]"));
  CHECK(r["certified"] == true);
  json h = commands::run(
      "gw-simplex",
      json::parse(R"({"polytope":{"dim":2,"vertices":[[0,0],[1,0],[1,1],[0,1]]},"mode":"heuristic","seed":4})"));
  CHECK(h["certified"] == false);
}

TEST_CASE("bott commands") {
  json h{{"n", 2}, {"A", json::parse("[[0,2],[0,0]]")}, {"lambda", json::parse(R"(["1","5"])")}};
  json p = commands::run("bott-polytope", {{"bott", h}});
  CHECK(p["polytope"]["vertices"] == json::parse(R"([["0","0"],["0","5"],["1","0"],["1","3"]])"));
  CHECK(p["hypercube"] == true);
  CHECK(p["q_trivial"] == true);

  // x1 * x1 = -2 x1 x2 when A = 2.
  json red = commands::run("bott-reduce", {{"bott", h}, {"class", json::parse(R"([{"exponents":[2,0],"coeff":1}])")}});
  CHECK(red["class"] == json::parse(R"([{"monomial":[1,2],"coeff":"-2"}])"));
  CHECK(red["standard_form"]["form"]["A"] == json::parse("[[0,0],[0,0]]"));

  json same = commands::run("bott-equiv", {{"source", h}, {"target", h}});
  CHECK(same["equivalent"] == true);
  CHECK(same["Lambda"] == json::parse("[[1,0],[0,1]]"));
  CHECK(same["F"] == json::parse(R"([["1","0"],["0","1"]])"));

  json other = h;
  other["lambda"] = json::parse(R"(["1","6"])");
  json no = commands::run("bott-equiv", {{"source", h}, {"target", other}});
  CHECK(no["equivalent"] == false);
  CHECK(no["reason"].get<std::string>().size() > 0);

  json mv = commands::run("bott-verify-move", {{"source", h}, {"target_entry", 0}, {"k", 1}, {"l", 2}, {"max_level", 3}});
  CHECK(mv["passed"] == true);
  CHECK(mv["move"]["target"]["lambda"] == json::parse(R"(["1","4"])"));

  json hz = commands::run("hirzebruch", json::parse(R"({"A":0,"lambda":[1,3],"A_target":4,"lambda_target":[1,5]})"));
  CHECK(hz["criterion"] == true);
  CHECK(hz["decision"] == true);
}

TEST_CASE("schema errors carry a pointer") {
  CHECK(schema_pointer("vertices", json::parse(R"({"polytope":{"dim":2,"vertices":[[0,0],[1.5,0]]}})")) ==
        "/polytope/vertices/1/0");
  CHECK(schema_pointer("vertices", json::parse(R"({"polytope":{"dim":2,"vertices":[[0,0]]},"x":1})")) == "/x");
  CHECK(schema_pointer("vertices", json::parse(R"({"polytope":{"dim":2}})")) == "/polytope");
  CHECK(schema_pointer("vertices", json::parse(R"({})")) == "/polytope");
  CHECK(schema_pointer("gw-formula", json::parse(R"({"family":"A","rank":3,"lambda":[1,2]})")) == "/lambda");
  CHECK(schema_pointer("gw-formula", json::parse(R"({"family":"A","rank":3,"lambda":[1,"x",3]})")) == "/lambda/1");
  CHECK(schema_pointer("bott-polytope", json::parse(R"({"bott":{"n":2,"A":[[0,1],[1,0]],"lambda":[1,1]}})")) ==
        "/bott/A/1/0");
  CHECK(schema_pointer("bott-polytope", json::parse(R"({"bott":{"n":2,"A":[[0,1],[0,0]],"lambda":[1,0]}})")) ==
        "/bott/lambda/1");
  CHECK(schema_pointer("slide", json::parse(R"({"dim":2,"points":[],"k":2,"l":1,"c":1})")) == "/l");
  CHECK(schema_pointer("gw-simplex", json::parse(R"({"polytope":{"dim":1,"vertices":[[0],[1]]},"mode":"x"})")) ==
        "/mode");
  CHECK(schema_pointer("nope", json::object()) == "");
}

TEST_CASE("preconditions surface as typed errors") {
  CHECK_THROWS_AS(commands::run("lattice-points", json::parse(R"({"polytope":{"dim":1,"inequalities":[[-1,0]]}})")),
                  PreconditionError);
  json tri = json::parse(R"({"dim":2,"vertices":[[0,0],[2,0],[0,1]]})");
  CHECK_THROWS_AS(commands::run("semigroup", {{"polytope", tri}, {"k", 1}, {"l", 2}, {"c", 1}}), PreconditionError);
  CHECK_THROWS_AS(commands::run("render", json::parse(R"({"polytope":{"dim":1,"vertices":[[0],[1]]}})")),
                  PreconditionError);
}

TEST_CASE("max level cap from the environment") {
  CHECK(commands::max_level_cap() == 6);
  {
    EnvGuard env("2");
    json r = commands::run("semigroup", {{"polytope", rect()}, {"k", 1}, {"l", 2}, {"c", 2}, {"max_level", 5}});
    CHECK(r["max_level"] == 2);
    CHECK(r["levels"].size() == 3);
  }
  {
    EnvGuard env("lots");
    CHECK_THROWS_AS(commands::max_level_cap(), SchemaError);
  }
}

TEST_CASE("command table") {
  CHECK(commands::command_names().size() == 16);
  for (const auto& name : commands::command_names()) CHECK_THROWS_AS(commands::run(name, json::array()), SchemaError);
}

TEST_CASE("svg rendering") {
  using render::Panel;
  auto rect_poly = testing::hull_of(2, {{0, 0}, {1, 0}, {1, 3}, {0, 3}});
  auto count = [](const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
  };

  SUBCASE("polygon only when there are no points") {
    std::string s = render::svg({Panel{rect_poly, {}, {}, ""}});
    CHECK(count(s, "<polygon") == 1);
    CHECK(count(s, "<circle") == 0);
    // 1 x 3 box plus half a unit of margin on each side at 40px per unit.
    CHECK(s.find("width=\"80.00\" height=\"160.00\"") != std::string::npos);
  }
  SUBCASE("single point polytope is one dot") {
    std::string s = render::svg({Panel{testing::hull_of(2, {{2, 3}}), {}, {}, ""}});
    CHECK(count(s, "<circle") == 1);
    CHECK(s.find("cx=\"20.00\" cy=\"20.00\"") != std::string::npos);
  }
  SUBCASE("before and after panels") {
    json r = commands::run("render", {{"polytope", rect()}, {"slide", {{"k", 1}, {"l", 2}, {"c", 2}}}});
    std::string s = r["svg"];
    CHECK(count(s, "<g>") == 2);
    CHECK(count(s, "<polygon") == 2);
    // Eight dots before; after the slide (0,4) and (0,5) are new.
    CHECK(count(s, "r=\"4\"") == 8 + 6);
    CHECK(count(s, "fill=\"red\"") == 2);
    CHECK(s == commands::run("render", {{"polytope", rect()}, {"slide", {{"k", 1}, {"l", 2}, {"c", 2}}}})["svg"]);
  }
  SUBCASE("y axis points up") {
    std::string s = render::svg({Panel{std::nullopt, {{0, 0}, {0, 1}}, {}, ""}});
    std::smatch m;
    std::regex cy("cy=\"([0-9.]+)\"");
    std::vector<double> ys;
    for (auto it = std::sregex_iterator(s.begin(), s.end(), cy); it != std::sregex_iterator(); ++it)
      ys.push_back(std::stod((*it)[1]));
    REQUIRE(ys.size() == 2);
    CHECK(ys[0] > ys[1]);
  }
  CHECK_THROWS_AS(render::svg({}), PreconditionError);
}
