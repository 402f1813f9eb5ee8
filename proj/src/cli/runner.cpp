#include <chrono>
#include <cmath>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "cli_internal.hpp"
#include "tangentia/boundary.hpp"
#include "tangentia/deadline.hpp"

namespace tangentia::cli {

namespace {

using json = nlohmann::ordered_json;

struct VeroneseSub {
  std::shared_ptr<const VeroneseEmbedding> embedding;
  Ideal source_ideal;
};

using Binding = std::variant<Ring, Ideal, ProjScheme, ParamCurve, std::shared_ptr<const VeroneseEmbedding>, VeroneseSub>;

const char* binding_kind(const Binding& b) {
  switch (b.index()) {
    case 0: return "ring";
    case 1: return "ideal";
    case 2: return "scheme";
    case 3: return "curve";
    case 4: return "veronese";
    default: return "veronese subscheme";
  }
}

json strings(const std::vector<Polynomial>& polys) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

json point_json(const Point& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(c.get_str());
  return out;
}

std::string join_strings(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string join_polys(const std::vector<Polynomial>& polys) {
  std::vector<std::string> parts;
  for (const auto& p : polys) parts.push_back(p.to_string());
  return parts.empty() ? "0" : join_strings(parts);
}

std::string point_text(const Point& p) {
  std::vector<std::string> parts;
  for (const auto& c : p) parts.push_back(c.get_str());
  return "[" + join_strings(parts, ":") + "]";
}

// Named and positional arguments of one statement; unknown names are errors.
class Args {
 public:
  explicit Args(const Statement& st) : st_(st) {}

  const Value* positional(std::size_t i) {
    std::size_t seen = 0;
    for (std::size_t k = 0; k < st_.args.size(); ++k) {
      if (!st_.args[k].key.empty()) continue;
      if (seen++ == i) {
        used_.insert(k);
        return &st_.args[k].value;
      }
    }
    return nullptr;
  }

  const Value& required_positional(std::size_t i, const char* what) {
    const Value* v = positional(i);
    if (!v) throw InputError(st_.command + ": missing " + what);
    return *v;
  }

  const Value* named(const std::string& key) {
    for (std::size_t k = 0; k < st_.args.size(); ++k) {
      if (st_.args[k].key != key) continue;
      used_.insert(k);
      return &st_.args[k].value;
    }
    return nullptr;
  }

  const Value& required(const std::string& key) {
    const Value* v = named(key);
    if (!v) throw InputError(st_.command + ": missing argument " + key + "=");
    return *v;
  }

  void finish() const {
    for (std::size_t k = 0; k < st_.args.size(); ++k) {
      if (used_.count(k)) continue;
      const auto& a = st_.args[k];
      throw InputError(st_.command + ": unexpected argument " + (a.key.empty() ? "'" + a.value.text + "'" : a.key + "="));
    }
  }

 private:
  const Statement& st_;
  std::set<std::size_t> used_;
};

long to_long(const Value& v) {
  if (v.kind != Value::Kind::Number || v.text.find_first_of("/.eE") != std::string::npos)
    throw InputError("expected an integer, got '" + v.text + "'");
  return std::stol(v.text);
}

double to_double(const Value& v) {
  if (v.kind != Value::Kind::Number) throw InputError("expected a number, got '" + v.text + "'");
  if (v.text.find('/') != std::string::npos) return Rational(v.text).get_d();
  return std::stod(v.text);
}

Rational to_rational(const Value& v) {
  if (v.kind != Value::Kind::Number || v.text.find_first_of(".eE") != std::string::npos)
    throw InputError("expected an exact rational, got '" + v.text + "'");
  Rational q(v.text[0] == '+' ? v.text.substr(1) : v.text);
  q.canonicalize();
  return q;
}

bool to_bool(const Value& v) {
  if (v.kind == Value::Kind::Identifier && (v.text == "true" || v.text == "false")) return v.text == "true";
  throw InputError("expected true or false, got '" + v.text + "'");
}

Point to_point(const Value& v) {
  if (v.kind != Value::Kind::List) throw InputError("expected a point [c0, c1, ...]");
  Point p;
  for (const auto& c : v.items) p.push_back(to_rational(c));
  return p;
}

Polynomial to_poly(const Ring& ring, const Value& v) {
  if (v.kind == Value::Kind::List) throw InputError("expected a polynomial, got a list");
  try {
    return parse_polynomial(ring, v.text);
  } catch (const ParseError& e) {
    throw relocate(e, v.pos);
  }
}

std::vector<Polynomial> to_polys(const Ring& ring, const Value& v) {
  if (v.kind != Value::Kind::List) {
    try {
      return parse_polynomial_list(ring, v.text);
    } catch (const ParseError& e) {
      throw relocate(e, v.pos);
    }
  }
  std::vector<Polynomial> out;
  for (const auto& item : v.items) out.push_back(to_poly(ring, item));
  return out;
}

std::vector<std::string> to_names(const Value& v) {
  std::vector<std::string> out;
  if (v.kind == Value::Kind::Identifier) return {v.text};
  if (v.kind != Value::Kind::List) throw InputError("expected a list of names");
  for (const auto& item : v.items) {
    if (item.kind != Value::Kind::Identifier) throw InputError("expected a name, got '" + item.text + "'");
    out.push_back(item.text);
  }
  return out;
}

StratumMode to_mode(const Value& v) {
  for (auto m : {StratumMode::ReducedSpan, StratumMode::SchemeSpan, StratumMode::TangentSpan,
                 StratumMode::SurfaceCurveTangency})
    if (v.text == to_string(m)) return m;
  throw InputError("unknown stratum mode '" + v.text + "'");
}

SpanKind to_span_kind(const std::string& s) {
  for (auto k : {SpanKind::Scheme, SpanKind::Reduced, SpanKind::Tangents})
    if (s == to_string(k)) return k;
  throw InputError("unknown span kind '" + s + "' (scheme, reduced or tangents)");
}

json scheme_dims(const ProjScheme& X) {
  return {{"proj_dim", X.dim()}, {"affine_dim", X.cone_dim()}};
}

struct Output {
  json result;
  json dims = json::object();
  std::string text;
  std::optional<Binding> value;
};

class Runner {
 public:
  explicit Runner(const RunOptions& opts) : opts_(opts) {}

  Record execute(const Statement& st) {
    const auto t0 = std::chrono::steady_clock::now();
    Output out = dispatch(st);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const bool declaration = st.command == "ring" || st.command == "ideal" || st.command == "scheme" || st.command == "curve";
    if (!declaration && !st.name.empty()) {
      if (!out.value) throw InputError(st.command + " produces nothing that can be named");
      env_.insert_or_assign(st.name, std::move(*out.value));
    }
    json inputs = {{"statement", st.source}};
    if (!st.name.empty()) inputs["name"] = st.name;
    json rec = {{"kind", st.command},  {"inputs", inputs}, {"result", out.result},
                {"dims", out.dims},    {"seed", opts_.seed}, {"timing_ms", std::round(ms * 1000) / 1000}};
    std::string label = st.command + (st.qualifier.empty() ? "" : "(" + st.qualifier + ")");
    if (declaration) label = st.command + " " + st.name;
    else if (!st.name.empty()) label = st.name + " = " + label;
    return {rec.dump(), label + ": " + out.text};
  }

 private:
  RunOptions opts_;
  std::map<std::string, Binding> env_;
  Ring current_;

  GenericOptions generic(Args& a) const {
    GenericOptions g;
    g.seed = opts_.seed;
    if (const Value* v = a.named("full")) g.full_saturation = to_bool(*v);
    return g;
  }

  const Binding& lookup(const Value& v) const {
    if (v.kind != Value::Kind::Identifier) throw InputError("expected a name, got '" + v.text + "'");
    auto it = env_.find(v.text);
    if (it == env_.end()) throw InputError("unknown name '" + v.text + "'");
    return it->second;
  }

  template <class T>
  const T& lookup_as(const Value& v, const char* what) const {
    const Binding& b = lookup(v);
    if (const T* p = std::get_if<T>(&b)) return *p;
    throw InputError("'" + v.text + "' is a " + binding_kind(b) + ", expected " + what);
  }

  Ideal ideal_of(const Value& v) const {
    const Binding& b = lookup(v);
    if (const Ideal* I = std::get_if<Ideal>(&b)) return *I;
    if (const ProjScheme* X = std::get_if<ProjScheme>(&b)) return X->ideal();
    throw InputError("'" + v.text + "' is a " + binding_kind(b) + ", expected an ideal");
  }

  ProjScheme scheme_of(const Value& v) const {
    const Binding& b = lookup(v);
    if (const ProjScheme* X = std::get_if<ProjScheme>(&b)) return *X;
    if (const Ideal* I = std::get_if<Ideal>(&b)) return ProjScheme::make(*I);
    if (const auto* e = std::get_if<std::shared_ptr<const VeroneseEmbedding>>(&b)) return (*e)->image;
    throw InputError("'" + v.text + "' is a " + binding_kind(b) + ", expected a scheme");
  }

  Output scheme_output(const ProjScheme& X, const std::string& prefix = "") {
    Output out;
    out.result = {{"ideal", strings(X.ideal().groebner_basis())}, {"degree", X.degree().get_str()}};
    out.dims = scheme_dims(X);
    out.text = prefix + join_polys(X.ideal().groebner_basis()) + "  (dim " + std::to_string(X.dim()) + ", degree " +
               X.degree().get_str() + ")";
    out.value = X;
    return out;
  }

  Output dispatch(const Statement& st) {
    Args a(st);
    Output out = run(st, a);
    a.finish();
    return out;
  }

  Output run(const Statement& st, Args& a) {
    const std::string& c = st.command;
    if (c == "ring") return ring(st, a);
    if (c == "ideal") return ideal(st, a);
    if (c == "scheme") return scheme(st);
    if (c == "curve") return curve(st);
    if (c == "gb") return gb(a);
    if (c == "dim") return dim(a);
    if (c == "saturate") return saturate_cmd(a);
    if (c == "eliminate") return eliminate_cmd(a);
    if (c == "dual") return dual(a);
    if (c == "bidual") return bidual(a);
    if (c == "tangency") return tangency(a);
    if (c == "span") return span(st, a);
    if (c == "whitney") return whitney(a);
    if (c == "stratum") return stratum(a);
    if (c == "veronese") return veronese_cmd(a);
    if (c == "veronese_cone") return veronese_cone(a);
    if (c == "osc") return osc(a);
    if (c == "bitangent") return bitangent(a);
    if (c == "secant") return secant(a);
    if (c == "r_of") return r_of_cmd(a);
    if (c == "boundary") return boundary(a);
    if (c == "resecant") return resecant(a);
    throw InternalError("unhandled command " + c);
  }

  Output ring(const Statement& st, Args& a) {
    std::vector<std::string> names = to_names(st.body.front());
    MonomialOrder order = MonomialOrder::grevlex();
    std::uint64_t characteristic = 0;
    const Value* pos = a.positional(0);
    if (pos) {
      if (pos->text == "lex") order = MonomialOrder::lex();
      else if (pos->text != "grevlex") throw InputError("unknown monomial order '" + pos->text + "'");
    }
    if (const Value* b = a.named("block")) order = MonomialOrder::block_order(static_cast<std::size_t>(to_long(*b)));
    if (const Value* p = a.named("char")) characteristic = static_cast<std::uint64_t>(to_long(*p));
    Ring r = PolyRing::make(names, order, characteristic);
    current_ = r;
    Output out;
    out.result = {{"variables", names}, {"order", order.to_string()}, {"characteristic", characteristic}};
    out.dims = {{"variables", names.size()}};
    out.text = "Q" + (characteristic ? "/" + std::to_string(characteristic) : std::string()) + "[" +
               join_strings(names) + "], " + order.to_string();
    env_.insert_or_assign(st.name, r);
    return out;
  }

  Output ideal(const Statement& st, Args& a) {
    Ring r = current_;
    if (const Value* in = a.named("in")) r = lookup_as<Ring>(*in, "a ring");
    if (!r) throw InputError("ideal " + st.name + ": no ring declared");
    Ideal I(r, to_polys(r, st.body.front()));
    env_.insert_or_assign(st.name, I);
    Output out;
    out.result = {{"generators", strings(I.generators())}};
    out.text = join_polys(I.generators());
    return out;
  }

  Output scheme(const Statement& st) {
    const Ideal& I = lookup_as<Ideal>(st.body.front(), "an ideal");
    Output out = scheme_output(ProjScheme::make(I));
    env_.insert_or_assign(st.name, *out.value);
    return out;
  }

  Output curve(const Statement& st) {
    std::set<std::string> vars;
    for (const auto& v : st.body)
      for (auto& nm : scan_identifiers(v.text)) vars.insert(nm);
    if (vars.size() > 1) throw InputError("curve " + st.name + ": components use more than one parameter");
    const std::string var = vars.empty() ? "t" : *vars.begin();
    Ring r = make_ring({var});
    std::vector<UPoly> comps;
    for (const auto& v : st.body) comps.push_back(to_univariate(to_poly(r, v), 0));
    if (comps.size() != 4) throw InputError("curve " + st.name + ": expected four components");
    ParamCurve C = ParamCurve::make(std::move(comps));
    env_.insert_or_assign(st.name, C);
    Output out;
    json comp = json::array(), infl = json::array();
    std::vector<std::string> parts;
    for (const auto& g : C.components()) comp.push_back(g.to_string(var)), parts.push_back(g.to_string(var));
    for (const auto& t : C.inflection_parameters()) infl.push_back(t.get_str());
    out.result = {{"parameter", var}, {"components", comp}, {"degree", C.degree()}, {"inflections", infl}};
    out.text = "[" + join_strings(parts) + "], degree " + std::to_string(C.degree());
    return out;
  }

  Output gb(Args& a) {
    const Ideal I = ideal_of(a.required_positional(0, "ideal"));
    Output out;
    const auto& G = I.groebner_basis();
    out.result = {{"basis", strings(G)}, {"order", I.ring()->order().to_string()}};
    out.dims = {{"affine_dim", I.dimension()}};
    out.text = join_polys(G);
    out.value = I;
    return out;
  }

  Output dim(Args& a) {
    const Value& target = a.required_positional(0, "ideal or scheme");
    const Binding& b = lookup(target);
    Output out;
    if (std::holds_alternative<ProjScheme>(b) || std::get<Ideal>(b).is_homogeneous()) {
      const ProjScheme X = scheme_of(target);
      out.dims = scheme_dims(X);
      out.result = {{"proj_dim", X.dim()}, {"degree", X.degree().get_str()}};
      out.text = "projective dimension " + std::to_string(X.dim()) + ", degree " + X.degree().get_str();
    } else {
      const long d = std::get<Ideal>(b).dimension();
      out.dims = {{"affine_dim", d}};
      out.result = {{"affine_dim", d}};
      out.text = "affine dimension " + std::to_string(d);
    }
    return out;
  }

  Output saturate_cmd(Args& a) {
    const Ideal I = ideal_of(a.required_positional(0, "ideal"));
    const Value* by = a.named("by");
    Ideal J = I;
    std::string what = "irrelevant ideal";
    if (!by) {
      J = saturate_irrelevant(I);
    } else if (by->kind == Value::Kind::Identifier && env_.count(by->text)) {
      J = saturate(I, ideal_of(*by));
      what = by->text;
    } else {
      const Polynomial f = to_poly(I.ring(), *by);
      const auto& terms = f.terms();
      std::optional<std::size_t> var;
      if (terms.size() == 1 && f.total_degree() == 1)
        for (std::size_t i = 0; i < terms.front().exponents.size(); ++i)
          if (terms.front().exponents[i]) var = i;
      J = var ? saturate_by_variable(I, *var) : saturate_principal(I, f);
      what = f.to_string();
    }
    Output out;
    out.result = {{"ideal", strings(J.groebner_basis())}, {"by", what}};
    out.dims = {{"affine_dim", J.dimension()}};
    out.text = join_polys(J.groebner_basis());
    out.value = J;
    return out;
  }

  Output eliminate_cmd(Args& a) {
    const Ideal I = ideal_of(a.required_positional(0, "ideal"));
    std::vector<std::size_t> idx;
    for (const auto& nm : to_names(a.required("vars"))) {
      auto i = I.ring()->index_of(nm);
      if (!i) throw InputError("eliminate: '" + nm + "' is not a variable of the ring");
      idx.push_back(*i);
    }
    const Ideal J = eliminate_variables(I, idx);
    Output out;
    out.result = {{"ideal", strings(J.groebner_basis())}, {"variables", J.ring()->names()}};
    out.dims = {{"affine_dim", J.dimension()}};
    out.text = join_polys(J.groebner_basis()) + "  in [" + join_strings(J.ring()->names()) + "]";
    out.value = J;
    return out;
  }

  Output dual(Args& a) {
    const ProjScheme X = scheme_of(a.required_positional(0, "scheme"));
    const ProjScheme D = dual_variety(X, generic(a));
    Output out = scheme_output(D);
    out.result["variables"] = D.ring()->names();
    out.text += "  in [" + join_strings(D.ring()->names()) + "]";
    return out;
  }

  Output bidual(Args& a) {
    const ProjScheme X = scheme_of(a.required_positional(0, "scheme"));
    const bool ok = bidual_check(X, generic(a));
    Output out;
    out.result = ok;
    out.dims = scheme_dims(X);
    out.text = ok ? "X** = X" : "X** differs from X";
    return out;
  }

  Output tangency(Args& a) {
    const Value& target = a.required_positional(0, "scheme or veronese");
    const Binding& b = lookup(target);
    if (const auto* v = std::get_if<std::shared_ptr<const VeroneseEmbedding>>(&b)) {
      const Polynomial F = to_poly((*v)->source, a.required("F"));
      const VeroneseSubscheme Z = veronese_tangency(**v, F);
      const ProjScheme onsource = ProjScheme::make(Z.source_ideal);
      Output out;
      out.result = {{"source_ideal", strings(onsource.ideal().groebner_basis())},
                    {"hyperplane", (*v)->pushforward(F).to_string()}};
      out.dims = {{"proj_dim", onsource.dim()}, {"affine_dim", onsource.cone_dim()}};
      out.text = "on P^" + std::to_string((*v)->n) + ": " + join_polys(onsource.ideal().groebner_basis()) +
                 "  (dim " + std::to_string(onsource.dim()) + ")";
      out.value = VeroneseSub{*v, Z.source_ideal};
      return out;
    }
    const ProjScheme X = scheme_of(target);
    const Polynomial H = to_poly(X.ring(), a.required("H"));
    return scheme_output(tangency_scheme(X, H, generic(a)));
  }

  Output span(const Statement& st, Args& a) {
    const SpanKind kind = to_span_kind(st.qualifier);
    const Value& target = a.required_positional(0, "scheme");
    std::vector<Point> support;
    if (const Value* p = a.named("points")) {
      if (p->kind != Value::Kind::List) throw InputError("span: points must be a list of points");
      for (const auto& q : p->items) support.push_back(to_point(q));
    }
    const Binding& b = lookup(target);
    SpanResult s;
    if (const auto* z = std::get_if<VeroneseSub>(&b)) {
      s = linear_span(VeroneseSubscheme{z->embedding.get(), z->source_ideal}, kind, support);
    } else {
      s = linear_span(scheme_of(target), kind, support);
    }
    Output out;
    json pts = json::array();
    std::vector<std::string> ptext;
    for (const auto& p : s.support) pts.push_back(point_json(p)), ptext.push_back(point_text(p));
    out.result = {{"kind", to_string(kind)}, {"linear_forms", strings(s.linear_forms)}, {"support", pts}};
    out.dims = {{"proj_dim", s.proj_dim}, {"affine_dim", s.proj_dim + 1}, {"forms", s.linear_forms.size()}};
    out.text = "projective dimension " + std::to_string(s.proj_dim) + ", " + std::to_string(s.linear_forms.size()) +
               " linear forms" + (ptext.empty() ? "" : ", support " + join_strings(ptext));
    return out;
  }

  Output whitney(Args& a) {
    const ProjScheme X = scheme_of(a.required_positional(0, "scheme X"));
    const ProjScheme Y = scheme_of(a.required("Y"));
    const Point y = to_point(a.required("point"));
    const WhitneyReport w = whitney_a(X, Y, y, generic(a));
    Output out;
    out.result = {{"classical", w.verdict_classical},
                  {"scheme", w.verdict_scheme ? json(*w.verdict_scheme) : json(nullptr)},
                  {"scheme_method", w.scheme_method},
                  {"fiber", strings(w.fiber.ideal().groebner_basis())},
                  {"tangent_perp", strings(w.tangent_perp)}};
    out.dims = {{"fiber_proj_dim", w.fiber.dim()}};
    out.text = std::string("classical ") + (w.verdict_classical ? "holds" : "fails") + ", scheme " +
               (w.verdict_scheme ? (*w.verdict_scheme ? "holds" : "fails") : "unsupported") +
               (w.scheme_method.empty() ? "" : " (" + w.scheme_method + ")");
    return out;
  }

  WitnessFamily family_from(Args& a, std::size_t& ambient) {
    if (const Value* cv = a.named("curve")) {
      const ParamCurve& C = lookup_as<ParamCurve>(*cv, "a curve");
      const Value* pts = a.named("points");
      ambient = 3;
      return contact_family(C, pts ? static_cast<std::size_t>(to_long(*pts)) : 2);
    }
    if (const Value* vv = a.named("veronese")) {
      const auto& v = lookup_as<std::shared_ptr<const VeroneseEmbedding>>(*vv, "a veronese embedding");
      ambient = v->ambient_dim();
      return veronese_cone_family(*v);
    }
    WitnessFamily fam;
    if (const Value* pv = a.named("params")) {
      fam.ring = make_ring(to_names(*pv));
      fam.map = to_polys(fam.ring, a.required("map"));
      if (fam.map.empty()) throw InputError("stratum: empty map");
      ambient = fam.map.size() - 1;
      return fam;
    }
    if (const Value* dv = a.named("dual")) {
      std::vector<std::string> names;
      if (const Value* aux = a.named("aux")) names = to_names(*aux);
      const std::vector<std::string> duals = to_names(*dv);
      if (duals.empty()) throw InputError("stratum: empty dual coordinate list");
      ambient = duals.size() - 1;
      names.insert(names.end(), duals.begin(), duals.end());
      fam.kind = WitnessFamily::Kind::Implicit;
      fam.ring = make_ring(names);
      fam.equations = to_polys(fam.ring, a.required("equations"));
      if (const Value* nv = a.named("nonvanishing")) fam.nonvanishing = to_polys(fam.ring, *nv);
      return fam;
    }
    throw InputError("stratum: give curve=, veronese=, params= with map=, or dual= with equations=");
  }

  Output stratum(Args& a) {
    std::size_t ambient = 0;
    WitnessFamily fam = family_from(a, ambient);
    if (const Value* lv = a.named("label")) fam.label = lv->text;
    const long r = to_long(a.required("r"));
    const Value* mv = a.named("mode");
    const StratumMode mode = mv ? to_mode(*mv) : StratumMode::ReducedSpan;
    const StratumReport rep = stratum_report(ambient, r, mode, fam, generic(a));
    Output out;
    out.result = {{"computed_dim", rep.computed_dim}, {"bound", rep.bound},     {"satisfied", rep.satisfied},
                  {"exact", rep.exact},               {"lower", rep.lower},     {"upper", rep.upper},
                  {"r", rep.r},                       {"mode", to_string(mode)}, {"method", rep.method},
                  {"note", rep.note}};
    out.dims = {{"ambient_dim", ambient}, {"stratum_dim", rep.computed_dim}, {"bound", rep.bound}};
    out.text = "dim " + std::to_string(rep.computed_dim) + (rep.exact ? "" : " (lower bound)") + " vs bound N - r - 1 = " +
               std::to_string(rep.bound) + ": " + (rep.satisfied ? "satisfied" : "violated") + " [" + rep.method + "]";
    return out;
  }

  Output veronese_cmd(Args& a) {
    const long n = to_long(a.required_positional(0, "n"));
    const long d = to_long(a.required_positional(1, "d"));
    if (n < 1 || d < 1) throw InputError("veronese: n and d must be positive");
    auto v = std::make_shared<const VeroneseEmbedding>(veronese(static_cast<std::size_t>(n), static_cast<unsigned>(d)));
    Output out;
    out.result = {{"ambient_dim", v->ambient_dim()},
                  {"source", v->source->names()},
                  {"target", v->target->names()},
                  {"relations", v->image.ideal().generators().size()}};
    out.dims = scheme_dims(v->image);
    out.text = "v_" + std::to_string(d) + "(P^" + std::to_string(n) + ") in P^" + std::to_string(v->ambient_dim()) +
               ", " + std::to_string(v->image.ideal().generators().size()) + " quadratic relations";
    out.value = v;
    return out;
  }

  Output veronese_cone(Args& a) {
    const long n = to_long(a.required_positional(0, "n"));
    const long d = to_long(a.required_positional(1, "d"));
    if (n < 1 || d < 1) throw InputError("veronese_cone: n and d must be positive");
    const VeroneseConeResult v = veronese_cone_stratum(static_cast<std::size_t>(n), static_cast<unsigned>(d), opts_.seed);
    Output out;
    out.result = {{"n", v.n},
                  {"d", v.d},
                  {"N", v.ambient_dim},
                  {"stratum_dim", v.stratum_dim},
                  {"stratum_dim_checked", v.stratum_dim_checked},
                  {"span_dim", v.span_dim},
                  {"span_lower_bound", v.span_lower_bound},
                  {"scheme_span_bound", v.scheme_span_bound},
                  {"violated", v.violated}};
    out.dims = {{"ambient_dim", v.ambient_dim}, {"stratum_dim", v.stratum_dim}, {"span_dim", v.span_dim}};
    out.text = "N = " + std::to_string(v.ambient_dim) + ", stratum dim " + std::to_string(v.stratum_dim) + " (checked " +
               std::to_string(v.stratum_dim_checked) + "), span " + std::to_string(v.span_dim) + " >= " +
               std::to_string(v.span_lower_bound) + ", bound N - span - 1 = " + std::to_string(v.scheme_span_bound) +
               (v.violated ? ": violated" : ": not violated");
    return out;
  }

  Output osc(Args& a) {
    const ParamCurve& C = lookup_as<ParamCurve>(a.required_positional(0, "curve"), "a curve");
    std::optional<Rational> t0;
    if (const Value* tv = a.named("t0")) t0 = to_rational(*tv);
    const OscPlaneRecord rec = osculating_plane(C, t0);
    Output out;
    json coeffs = json::array();
    for (const auto& c : rec.coefficients) coeffs.push_back(c.to_string());
    out.result = {{"plane", rec.plane.to_string()}, {"coefficients", coeffs}, {"contact_point", point_json(rec.contact_point)}};
    out.text = rec.plane.to_string();
    if (t0) out.text += "  at " + point_text(rec.contact_point);
    return out;
  }

  Output bitangent(Args& a) {
    const ParamCurve& C = lookup_as<ParamCurve>(a.required_positional(0, "curve"), "a curve");
    const BitangencyRecord rec = bitangent_osculating(C);
    Output out;
    json pairs = json::array(), infl = json::array(), extra = json::array();
    for (const auto& [s, t] : rec.pairs) pairs.push_back({s.get_str(), t.get_str()});
    for (const auto& s : rec.inflection_s) infl.push_back(s.get_str());
    for (const auto& [s, ts] : rec.extra_locus) {
      json tt = json::array();
      for (const auto& t : ts) tt.push_back(t.get_str());
      extra.push_back({{"s", s.get_str()}, {"t", tt}});
    }
    out.result = {{"pairs", pairs},
                  {"resultant", rec.resultant.to_string("s")},
                  {"resultant_degree", rec.resultant.degree()},
                  {"rational_s", rec.rational_s},
                  {"irrational_s", rec.irrational_s},
                  {"inflection_s", infl},
                  {"extra_locus", extra},
                  {"deflated_contact", rec.deflated_contact.to_string()},
                  {"deflated_tangency", rec.deflated_tangency.to_string()},
                  {"finite", rec.finiteness_verdict}};
    out.dims = {{"bitangent_pairs", rec.pairs.size()}};
    out.text = std::to_string(rec.pairs.size()) + " bitangent pairs, resultant " + rec.resultant.to_string("s") + ", " +
               (rec.finiteness_verdict ? "finitely many" : "infinitely many");
    return out;
  }

  Output secant(Args& a) {
    const ProjScheme X = scheme_of(a.required_positional(0, "scheme"));
    const Value* kv = a.named("k");
    const long k = kv ? to_long(*kv) : 2;
    Output out = scheme_output(secant_variety(X, k));
    out.result["k"] = k;
    return out;
  }

  static json secant_json(const std::vector<SecantDim>& dims) {
    json out = json::array();
    for (const auto& s : dims) out.push_back({{"k", s.k}, {"dim", s.dim}});
    return out;
  }

  Output r_of_cmd(Args& a) {
    const ProjScheme X = scheme_of(a.required_positional(0, "scheme"));
    std::vector<SecantDim> dims;
    const long r = r_of(X, &dims);
    Output out;
    out.result = {{"r", r}, {"secant_dims", secant_json(dims)}};
    out.dims = {{"ambient_dim", X.ambient_dim()}, {"proj_dim", X.dim()}};
    std::vector<std::string> parts;
    for (const auto& s : dims) parts.push_back("sigma_" + std::to_string(s.k) + " " + std::to_string(s.dim));
    out.text = "r = " + std::to_string(r) + "  (" + join_strings(parts) + ")";
    return out;
  }

  Output boundary(Args& a) {
    const ProjScheme X = scheme_of(a.required_positional(0, "scheme"));
    const Value* capv = a.named("cap");
    const long cap = capv ? to_long(*capv) : static_cast<long>(X.ambient_dim());
    std::vector<StratumWitness> witnesses;
    if (const Value* cv = a.named("curve")) witnesses = curve_witnesses(lookup_as<ParamCurve>(*cv, "a curve"), cap);
    BoundaryReport rep = boundary_candidates(X, witnesses, cap, generic(a));
    const Value* nv = a.named("numeric");
    NumericCheckOptions nopts;
    nopts.seed = opts_.seed;
    if (const Value* s = a.named("samples")) nopts.samples = static_cast<std::size_t>(to_long(*s));
    if (const Value* t = a.named("tol")) nopts.tol = to_double(*t);
    const Value* dv = a.named("dehom");
    if (nv && to_bool(*nv)) {
      std::vector<ProjScheme> vars;
      for (const auto& c : rep.candidates) vars.push_back(c.variety);
      rep.numeric_check = numeric_boundary_check(X, dv ? static_cast<std::size_t>(to_long(*dv)) : 0, vars, nopts).fraction;
    }
    Output out;
    json cands = json::array();
    std::vector<std::string> parts;
    for (const auto& c : rep.candidates) {
      cands.push_back({{"k", c.k},
                       {"stratum", strings(c.stratum.ideal().groebner_basis())},
                       {"stratum_dim", c.stratum.dim()},
                       {"variety", strings(c.variety.ideal().groebner_basis())}});
      parts.push_back("k=" + std::to_string(c.k) + ": " + join_polys(c.variety.ideal().groebner_basis()));
    }
    out.result = {{"r_of_X", rep.r_of_X},
                  {"secant_dims", secant_json(rep.secant_dims)},
                  {"candidates", cands},
                  {"notices", rep.notices},
                  {"numeric_check", rep.numeric_check ? json(*rep.numeric_check) : json(nullptr)}};
    out.dims = {{"ambient_dim", X.ambient_dim()}, {"candidates", rep.candidates.size()}};
    std::ostringstream num;
    if (rep.numeric_check) num << ", numeric check " << *rep.numeric_check;
    out.text = "r(X) = " + std::to_string(rep.r_of_X) + ", " + std::to_string(rep.candidates.size()) + " candidates" +
               num.str() + (parts.empty() ? "" : "\n  " + join_strings(parts, "\n  "));
    return out;
  }

  Output resecant(Args& a) {
    const ParamCurve& C = lookup_as<ParamCurve>(a.required_positional(0, "curve"), "a curve");
    const Value* sv = a.named("samples");
    const ResecantReport rep = tangent_resecant_check(C, sv ? static_cast<std::size_t>(to_long(*sv)) : 5, opts_.seed);
    Output out;
    json samples = json::array();
    for (const auto& s : rep.samples) samples.push_back({{"t0", s.t0.get_str()}, {"meeting", s.meeting.to_string("t")}});
    out.result = {{"no_resecant", rep.no_resecant}, {"samples", samples}};
    out.text = rep.no_resecant ? "no tangent line meets the curve again" : "some tangent line meets the curve again";
    return out;
  }
};

}  // namespace

std::string strip_timing(const std::string& json_line) {
  json j = json::parse(json_line);
  j.erase("timing_ms");
  return j.dump();
}

RunResult run_source(std::string_view source, const RunOptions& opts) {
  RunResult res;
  Script script;
  try {
    script = parse_script(source);
  } catch (const ParseError& e) {
    res.exit_code = 1;
    res.error = std::string("parse error: ") + e.what();
    return res;
  }
  std::optional<ScopedDeadline> deadline;
  if (opts.timeout_seconds)
    deadline.emplace(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
        std::chrono::duration<double>(*opts.timeout_seconds)));
  Runner runner(opts);
  for (const auto& st : script.statements) {
    try {
      res.records.push_back(runner.execute(st));
    } catch (const ParseError& e) {
      res.exit_code = 1;
      res.error = std::string("parse error: ") + e.what();
    } catch (const TimeoutError& e) {
      res.exit_code = 3;
      res.error = std::string("timeout: ") + e.what();
    } catch (const Error& e) {
      res.exit_code = 2;
      res.error = "line " + std::to_string(st.pos.line) + ": " + e.what();
    } catch (const std::exception& e) {
      res.exit_code = 2;
      res.error = "line " + std::to_string(st.pos.line) + ": " + e.what();
    }
    if (res.exit_code != 0) break;
  }
  return res;
}

}  // namespace tangentia::cli
