#include "doctest.h"

#include <json.hpp>

#include "tangentia/cli.hpp"
#include "tangentia/error.hpp"
#include "tangentia/polycore.hpp"

using namespace tangentia;
using namespace tangentia::cli;
using nlohmann::json;

namespace {

json record(const RunResult& r, std::size_t i) {
  REQUIRE(i < r.records.size());
  return json::parse(r.records[i].json);
}

const char* kCyclic6 =
    "ring R = [a, b, c, d, e, f];\n"
    "ideal I = a+b+c+d+e+f, a*b+b*c+c*d+d*e+e*f+f*a, a*b*c+b*c*d+c*d*e+d*e*f+e*f*a+f*a*b,\n"
    "  a*b*c*d+b*c*d*e+c*d*e*f+d*e*f*a+e*f*a*b+f*a*b*c,\n"
    "  a*b*c*d*e+b*c*d*e*f+c*d*e*f*a+d*e*f*a*b+e*f*a*b*c+f*a*b*c*d, a*b*c*d*e*f-1;\n"
    "gb I;\n";

}  // namespace

TEST_CASE("script parsing") {
  auto s = parse_script("ring R = [x0,x1,x2]; ideal I = x0*x2 - x1^2; dual I;");
  REQUIRE(s.statements.size() == 3);
  CHECK(s.statements[0].command == "ring");
  CHECK(s.statements[1].name == "I");
  CHECK(s.statements[2].command == "dual");
  CHECK(s.statements[2].args.front().value.text == "I");

  auto v = parse_script("veronese_cone 3 4;");
  REQUIRE(v.statements.size() == 1);
  CHECK(v.statements[0].args.size() == 2);

  auto named = parse_script("# header\nZ = span(tangents) W points=[[1, 0], [0, -1/2]];  # trailing\n");
  REQUIRE(named.statements.size() == 1);
  const auto& st = named.statements[0];
  CHECK(st.name == "Z");
  CHECK(st.qualifier == "tangents");
  REQUIRE(st.args.size() == 2);
  CHECK(st.args[1].key == "points");
  CHECK(st.args[1].value.items[1].items[1].text == "-1/2");
  CHECK(st.pos.line == 2);

  CHECK(parse_script("").statements.empty());
  CHECK(parse_script("  # only a comment\n").statements.empty());
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_script("ring R = [x0, x1];\nideal I = x0 *;");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 15);
  }
  CHECK_THROWS_AS(parse_script("dual I"), ParseError);
  CHECK_THROWS_AS(parse_script("frobnicate I;"), ParseError);
  CHECK_THROWS_AS(parse_script("ring R = x, y;"), ParseError);
  CHECK_THROWS_AS(parse_script("curve C = [1, t, (t^2];"), ParseError);
  CHECK_THROWS_AS(parse_script("tangency X H=(x0 + );"), ParseError);
}

TEST_CASE("running scripts") {
  auto r = run_source("ring R = [x0,x1,x2]; ideal I = x0*x2 - x1^2; dual I;");
  CHECK(r.exit_code == 0);
  REQUIRE(r.records.size() == 3);
  const json dual = record(r, 2);
  CHECK(dual["kind"] == "dual");
  CHECK(dual["result"]["ideal"] == json::array({"y1^2 - 4*y0*y2"}));
  CHECK(dual["result"]["variables"] == json::array({"y0", "y1", "y2"}));
  CHECK(dual["seed"] == 42);
  for (const char* key : {"kind", "inputs", "result", "dims", "seed", "timing_ms"}) CHECK(dual.contains(key));

  auto v = run_source("veronese_cone 3 4;");
  CHECK(v.exit_code == 0);
  const json cone = record(v, 0);
  CHECK(cone["result"]["stratum_dim"] == 17);
  CHECK(cone["result"]["span_dim"] == 22);
  CHECK(cone["result"]["violated"] == true);

  auto empty = run_source("");
  CHECK(empty.exit_code == 0);
  CHECK(empty.records.empty());
}

TEST_CASE("exit codes") {
  CHECK(run_source("ideal I = x0 *;").exit_code == 1);
  // Unknown variable inside a polynomial is a parse error of that expression.
  auto unknown = run_source("ring R = [x, y];\nideal I = x + q;\n");
  CHECK(unknown.exit_code == 1);
  CHECK(unknown.error.find("line 2") != std::string::npos);
  CHECK(run_source("ring R = [x, y];\ndual J;\n").exit_code == 2);
  CHECK(run_source("ring R = [x, y];\nideal I = x + 1;\ndual I;\n").exit_code == 2);
  CHECK(run_source("veronese_cone 3;").exit_code == 2);
  CHECK(run_source("veronese_cone 3 4 extra=1;").exit_code == 2);

  RunOptions opts;
  opts.timeout_seconds = 0.2;
  auto slow = run_source(kCyclic6, opts);
  CHECK(slow.exit_code == 3);
  CHECK(slow.records.size() == 2);
}

TEST_CASE("bindings flow between statements") {
  auto r = run_source(
      "ring R = [x0, x1, x2, x3];\n"
      "ideal I = x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2;\n"
      "D = dual I;\n"
      "E = dual D;\n"
      "dim E;\n"
      "S = secant I k=2;\n"
      "dim S;\n");
  CHECK(r.exit_code == 0);
  CHECK(record(r, 2)["dims"]["proj_dim"] == 2);
  CHECK(record(r, 4)["result"]["proj_dim"] == 1);
  CHECK(record(r, 4)["result"]["degree"] == "3");
  CHECK(record(r, 6)["result"]["proj_dim"] == 3);

  auto s = run_source(
      "ring R = [x, y, z];\nideal I = x*z, y*z;\nJ = saturate I by=(z);\ngb J;\n"
      "ring T = [u, v];\nideal K in R = x - z;\ngb K;\n");
  CHECK(s.exit_code == 0);
  CHECK(record(s, 3)["result"]["basis"] == json::array({"x", "y"}));
  CHECK(record(s, 6)["result"]["basis"] == json::array({"x - z"}));
}

TEST_CASE("printed polynomials parse back") {
  auto r = run_source(
      "ring R = [x0, x1, x2, x3];\n"
      "ideal I = x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2;\n"
      "dual I;\n");
  REQUIRE(r.exit_code == 0);
  const json rec = record(r, 2);
  auto ring = make_ring(rec["result"]["variables"].get<std::vector<std::string>>());
  for (const auto& g : rec["result"]["ideal"]) {
    const auto text = g.get<std::string>();
    const Polynomial p = parse_polynomial(ring, text);
    CHECK(p.to_string() == text);
    CHECK(parse_polynomial(ring, p.to_string()) == p);
  }
}

TEST_CASE("output is deterministic for a fixed seed") {
  const char* script =
      "ring R = [w, x, y];\nideal E = x^2 + 4*y^2 - w^2;\nscheme X = projective(E);\n"
      "boundary X numeric=true samples=400;\n"
      "ring S = [x0, x1, x2, x3];\nideal Q = x0*x3 - x1*x2;\nbidual Q;\n";
  RunOptions opts;
  opts.seed = 7;
  auto a = run_source(script, opts);
  auto b = run_source(script, opts);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(strip_timing(a.records[i].json) == strip_timing(b.records[i].json));
  CHECK(record(a, 3)["seed"] == 7);
}
