#include <chrono>

#include <json.hpp>

#include "tangentia/cli.hpp"

namespace tangentia::cli {

namespace {

using json = nlohmann::json;

const char* kConic = "ring R = [x0, x1, x2];\nideal I = x0*x2 - x1^2;\n";
const char* kTwistedCubic =
    "ring R = [x0, x1, x2, x3];\n"
    "ideal I = x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2;\n"
    "scheme X = projective(I);\n";
const char* kTrig =
    "ring R = [w, x, y, z];\n"
    "ideal I = x^2 + y^2 - w^2, z*w - x^2 + y^2;\n"
    "scheme X = projective(I);\n"
    "curve C = [(1+t^2)^2, (1-t^2)*(1+t^2), 2*t*(1+t^2), (1-t^2)^2 - 4*t^2];\n";

// Conics in the coordinates z_i of v_2(P^2); the coefficient of x^a is y_a.
const char* kLinePairs =
    "stratum params=[a0, a1, a2, b0, b1, b2] "
    "map=[(a0*b0), (a0*b1 + a1*b0), (a0*b2 + a2*b0), (a1*b1), (a1*b2 + a2*b1), (a2*b2)] r=0 mode=reduced-span;\n";
const char* kDoubleLines =
    "stratum params=[a0, a1, a2] map=[(a0^2), (2*a0*a1), (2*a0*a2), (a1^2), (2*a1*a2), (a2^2)] r=2 "
    "mode=tangent-span;\n";
const char* kDoubleLinesCurve =
    "stratum params=[a0, a1, a2] map=[(a0^2), (2*a0*a1), (2*a0*a2), (a1^2), (2*a1*a2), (a2^2)] r=0 "
    "mode=surface-curve-tangency;\n";

// Finite schemes in P^3 with (reduced, tangents, scheme) span dimensions.
struct ChainCase {
  const char* ideal;
  int reduced, tangents, scheme;
};
const ChainCase kChain[] = {
    {"x1, x2, x3", 0, 0, 0},
    {"x2, x3, x0*x1", 1, 1, 1},
    {"x3, x0*x1, x0*x2, x1*x2", 2, 2, 2},
    {"x0*x1, x0*x2, x0*x3, x1*x2, x1*x3, x2*x3", 3, 3, 3},
    {"x1^2, x2, x3", 0, 1, 1},
    {"x1^2, x1*x2, x1*x3, x2^2, x2*x3, x3^2", 0, 3, 3},
    {"x3, x1^2, x1*x2, x0*x2", 1, 2, 2},
    {"x3, x0*x2 - x1^2, x1*x2, x2^2", 0, 1, 2},
    {"x2, x3, x1*(x1 - x0)*(x1 + x0)", 1, 1, 1},
    {"x3, x0*x2, x2^2, x0*x1^2", 1, 2, 2},
    {"x3, x1^2, x1*x2, x2^2", 0, 2, 2},
    {"x1 - x0, x2 - x0, x3 - x0", 0, 0, 0},
    {"x2 - x0, x3 - x0, (x1 - x0)^2", 0, 1, 1},
};

std::string chain_script() {
  std::string s = "ring R = [x0, x1, x2, x3];\n";
  int i = 0;
  for (const auto& c : kChain) {
    const std::string z = "Z" + std::to_string(i++);
    s += "ideal " + z + " = " + c.ideal + ";\n";
    for (const char* kind : {"reduced", "tangents", "scheme"}) s += "span(" + std::string(kind) + ") " + z + ";\n";
  }
  return s;
}

std::vector<CorpusCheck> chain_checks() {
  std::vector<CorpusCheck> out;
  std::size_t rec = 1;
  for (const auto& c : kChain) {
    ++rec;
    for (int d : {c.reduced, c.tangents, c.scheme}) out.push_back({rec++, "/dims/proj_dim", std::to_string(d)});
  }
  return out;
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  const std::string conic = kConic;
  const std::string cubic = kTwistedCubic;
  const std::string trig = kTrig;

  c.push_back({"conic-dual", conic + "dual I;\n", {{2, "/result/ideal", R"(["y1^2 - 4*y0*y2"])"}, {2, "/dims/proj_dim", "1"}}});
  c.push_back({"twisted-cubic-dual", cubic + "dual X;\n", {{3, "/dims/proj_dim", "2"}, {3, "/result/degree", R"("4")"}}});
  c.push_back({"veronese-surface-dual",
               "V = veronese 2 2;\ndual V;\n",
               {{1, "/dims/proj_dim", "4"}, {1, "/result/degree", R"("3")"}}});
  c.push_back({"biduality",
               conic + "bidual I;\n" + "ring S = [x0, x1, x2, x3];\nideal Q = x0*x3 - x1*x2;\nbidual Q;\n" +
                   "V = veronese 2 2;\nbidual V;\n",
               {{2, "/result", "true"}, {5, "/result", "true"}, {7, "/result", "true"}}});
  c.push_back({"twisted-cubic-bidual", cubic + "bidual X;\n", {{3, "/result", "true"}}});
  c.push_back({"veronese-cone-3-4",
               "veronese_cone 3 4;\n",
               {{0, "/result/N", "34"},
                {0, "/result/stratum_dim", "17"},
                {0, "/result/stratum_dim_checked", "17"},
                {0, "/result/span_dim", "22"},
                {0, "/result/span_lower_bound", "22"},
                {0, "/result/scheme_span_bound", "11"},
                {0, "/result/violated", "true"}}});
  c.push_back({"veronese-cone-2-3", "veronese_cone 2 3;\n", {{0, "/result/violated", "false"}}});
  c.push_back({"fermat-cone-spans",
               "V = veronese 3 4;\nZ = tangency V F=(x1^4 + x2^4 + x3^4);\nspan(scheme) Z;\nspan(reduced) Z;\n"
               "span(tangents) Z;\n",
               {{1, "/dims/proj_dim", "0"},
                {2, "/dims/proj_dim", "22"},
                {3, "/dims/proj_dim", "0"},
                {4, "/dims/proj_dim", "3"},
                {4, "/result/support", R"([["1","0","0","0"]])"}}});
  c.push_back({"conic-tangency",
               conic + "scheme X = projective(I);\nZ = tangency X H=(4*x0 - 4*x1 + x2);\nspan(reduced) Z;\n",
               {{3, "/result/ideal", R"(["x0 - 1/4*x2", "x1 - 1/2*x2"])"}, {4, "/dims/proj_dim", "0"}}});
  c.push_back({"whitney-quadric-cone",
               "ring R = [x0, x1, x2, x3];\nideal I = x1^2 + x2^2 - x3^2;\nideal Y = x1, x2, x3;\n"
               "whitney I Y=Y point=[1, 0, 0, 0];\n",
               {{3, "/result/classical", "true"}}});
  c.push_back({"conic-stratum",
               "stratum params=[t] map=[(t^2), (-2*t), (1)] r=0 mode=reduced-span;\n",
               {{0, "/result/computed_dim", "1"}, {0, "/result/bound", "1"}, {0, "/result/satisfied", "true"}}});
  c.push_back({"twisted-cubic-bitangent-stratum",
               "curve C = [1, t, t^2, t^3];\nstratum curve=C points=2 r=1 mode=reduced-span;\n"
               "stratum curve=C points=2 r=1 mode=tangent-span;\n",
               {{1, "/result/computed_dim", "-1"},
                {1, "/result/bound", "1"},
                {1, "/result/satisfied", "true"},
                {2, "/result/satisfied", "true"}}});
  c.push_back({"veronese-surface-strata",
               std::string(kLinePairs) + kDoubleLines + kDoubleLinesCurve,
               {{0, "/result/computed_dim", "4"},
                {0, "/result/satisfied", "true"},
                {1, "/result/computed_dim", "2"},
                {1, "/result/satisfied", "true"},
                {2, "/result/bound", "2"},
                {2, "/result/satisfied", "true"}}});
  c.push_back({"osculating-planes",
               "curve C = [1, t, t^2, t^3];\nosc C;\nosc C t0=1;\n",
               {{1, "/result/plane", R"("-t^3*x0 + 3*t^2*x1 - 3*t*x2 + x3")"},
                {2, "/result/plane", R"("-x0 + 3*x1 - 3*x2 + x3")"}}});
  c.push_back({"bitangent-osculating",
               "curve C = [1, t, t^2, t^3];\nbitangent C;\ncurve D = [1, t, t^3, t^4];\nbitangent D;\n",
               {{1, "/dims/bitangent_pairs", "0"},
                {1, "/result/finite", "true"},
                {3, "/result/resultant", R"("s^3")"},
                {3, "/result/inflection_s", R"(["0"])"},
                {3, "/result/finite", "true"}}});
  c.push_back({"secants",
               cubic + "secant X k=2;\nr_of X;\nV = veronese 2 2;\nsecant V k=2;\nr_of V;\n",
               {{3, "/result/ideal", "[]"},
                {4, "/result/r", "1"},
                {6, "/dims/proj_dim", "4"},
                {6, "/result/degree", R"("3")"},
                {7, "/result/r", "1"}}});
  c.push_back({"trig-boundary",
               trig + "r_of X;\nboundary X curve=C cap=2 numeric=true samples=2000 tol=1e-6;\n",
               {{4, "/result/r", "1"},
                {4, "/result/secant_dims/1/dim", "3"},
                {5, "/dims/candidates", "1"},
                {5, "/result/candidates/0/k", "1"},
                {5, "/result/numeric_check", ">=0.99"}}});
  c.push_back({"ellipse-boundary",
               "ring R = [w, x, y];\nideal E = x^2 + 4*y^2 - w^2;\nscheme X = projective(E);\n"
               "boundary X numeric=true;\n",
               {{3, "/result/r_of_X", "0"}, {3, "/result/numeric_check", "1.0"}}});
  c.push_back({"groebner-basics",
               "ring R = [x, y, z] lex;\nideal I = x^2 + y + z - 1, x + y^2 + z - 1, x + y + z^2 - 1;\ngb I;\n"
               "dim I;\neliminate I vars=[x, y];\nring S = [x, y, z, w];\n"
               "ideal C = x*z - y^2, y*w - z^2, x*w - y*z, x^3 + w^3;\ngb C;\n",
               {{2, "/dims/affine_dim", "0"}, {4, "/result/ideal", R"(["z^6 - 4*z^4 + 4*z^3 - z^2"])"}}});
  c.push_back({"span-chain", chain_script(), chain_checks()});
  c.push_back({"parse-error", "ring R = [x0, x1];\nideal I = x0 *;\n", {}, 1});
  c.push_back({"empty-script", "# nothing to do\n", {}, 0});
  return c;
}

bool matches(const json& actual, const std::string& expected) {
  if (expected.rfind(">=", 0) == 0) return actual.is_number() && actual.get<double>() >= std::stod(expected.substr(2));
  const json want = json::parse(expected);
  if (want.is_number() && actual.is_number()) return want.get<double>() == actual.get<double>();
  return want == actual;
}

}  // namespace

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> corpus = build();
  return corpus;
}

std::vector<CorpusOutcome> run_corpus(const RunOptions& opts) {
  std::vector<CorpusOutcome> out;
  for (const auto& entry : builtin_corpus()) {
    CorpusOutcome o;
    o.name = entry.name;
    const auto t0 = std::chrono::steady_clock::now();
    o.run = run_source(entry.script, opts);
    o.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    o.passed = o.run.exit_code == entry.expected_exit;
    if (!o.passed) o.detail = "exit " + std::to_string(o.run.exit_code) + (o.run.error.empty() ? "" : ": " + o.run.error);
    for (const auto& check : entry.checks) {
      if (!o.passed) break;
      if (check.statement >= o.run.records.size()) {
        o.passed = false;
        o.detail = "missing record " + std::to_string(check.statement);
        break;
      }
      const json rec = json::parse(o.run.records[check.statement].json);
      const json::json_pointer ptr(check.pointer);
      if (!rec.contains(ptr) || !matches(rec.at(ptr), check.expected)) {
        o.passed = false;
        o.detail = "record " + std::to_string(check.statement) + " " + check.pointer + ": expected " + check.expected +
                   ", got " + (rec.contains(ptr) ? rec.at(ptr).dump() : "nothing");
      }
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace tangentia::cli
