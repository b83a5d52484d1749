// origami: command-line front end for the fold kernel.
//
// Exit codes: 0 success, 1 domain error or failed invariant, 2 usage error.
// Diagnostics go to stderr, one JSON object per line.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "origami/alhazen.hpp"
#include "origami/classifier.hpp"
#include "origami/constructions.hpp"
#include "origami/cubic.hpp"
#include "origami/errors.hpp"
#include "origami/render.hpp"
#include "origami/serialize.hpp"

using namespace origami;
using AN = AlgebraicNumber;

namespace {

struct Options {
  int precision = 30;
  std::string emit_svg, emit_trace;
  bool json = false;
};

// Thrown for bad command lines that CLI11 cannot see (bad fractions,
// unknown recipes); maps to exit 2.
struct UsageError : std::runtime_error {
  ErrorCode code;
  UsageError(ErrorCode c, const std::string& what) : std::runtime_error(what), code(c) {}
};

void diagnostic(std::string_view level, std::string_view code, std::string_view message) {
  std::cerr << Json{{"level", level}, {"code", code}, {"message", message}}.dump() << '\n';
}

Rational parse_arg(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(ErrorCode::ParseError, what + ": " + e.what());
  }
}

std::vector<Rational> parse_list(const std::string& text, const std::string& what) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_arg(item, what));
  if (out.empty()) throw UsageError(ErrorCode::ParseError, what + ": empty list");
  return out;
}

Point parse_complex(const std::string& text, const std::string& what) {
  auto v = parse_list(text, what);
  if (v.size() != 2) throw UsageError(ErrorCode::ParseError, what + ": expected re,im");
  return Point(AN(v[0]), AN(v[1]));
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::IoError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::IoError, "cannot open " + path);
  f << text;
  if (!f) fail(ErrorCode::IoError, "cannot write " + path);
}

std::string letters(const std::set<Axiom>& s) {
  std::string out;
  for (Axiom a : s) out += axiom_letter(a);
  return out;
}

// Prints the document, or its summary lines without --json.
void emit(const Options& o, const Json& doc, const std::vector<std::string>& summary) {
  if (o.json) {
    std::cout << dump(doc);
  } else {
    for (const auto& line : summary) std::cout << line << '\n';
  }
}

Json roots_json(const std::array<AN, 3>& roots, int digits) {
  Json out = Json::array();
  for (const auto& r : roots) out.push_back(number_document(r, digits));
  return out;
}

// ---------------------------------------------------------------------------

int cmd_construct(const Options& o, const std::string& name) {
  ConstructionRecipe r;
  try {
    r = run_recipe(name);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownRecipe) throw UsageError(e.code(), e.what());
    throw;
  }
  const ConstructionTrace& t = r.trace;
  auto out = [&](const std::string& key) {
    for (const auto& [k, id] : r.outputs)
      if (k == key) return id;
    fail(ErrorCode::UnknownObject, "recipe has no output " + key);
  };

  std::vector<std::pair<std::string, bool>> checks;
  bool valid = true;
  try {
    validate(t);
  } catch (const Error&) {
    valid = false;
  }
  checks.emplace_back("trace_valid", valid);
  auto profile = t.profile();
  checks.emplace_back("profile_within_declared", std::includes(r.axioms.begin(), r.axioms.end(), profile.begin(), profile.end()));
  if (name == "pentagon" || name == "heptagon") {
    RatPolynomial expected = name == "pentagon" ? RatPolynomial::from_descending({4, 2, -1})
                                                : RatPolynomial::from_descending({8, 4, -4, -1});
    checks.emplace_back("minimal_polynomial", minimal_polynomial(t.point(out("V1")).x) == expected);
  } else if (name == "hypotenuse") {
    AN h = t.point(out("sqrt5")).x;
    checks.emplace_back("square_is_5", h * h == AN(5) && h.sign() > 0);
  } else if (name == "perp-bisector") {
    checks.emplace_back("equals_kernel_bisector", t.line(out("CD")) == perp_bisector(t.point(out("A")), t.point(out("B"))));
  } else if (name == "archimedes") {
    Point P = t.point(out("P")), C = t.point(out("C")), D = t.point(out("D"));
    checks.emplace_back("c_on_circle", C.x * C.x + C.y * C.y == AN(1));
    checks.emplace_back("cd_unit", squared_distance(C, D) == AN(1));
    checks.emplace_back("collinear", t.line(out("PD")).contains(C) && t.line(out("PD")).contains(P));
  }
  bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });

  Json outputs = Json::array();
  for (const auto& [k, id] : r.outputs) {
    Json obj = t.is_point(id) ? point_to_json(t.point(id), o.precision) : line_to_json(t.line(id), o.precision);
    outputs.push_back({{"name", k}, {"id", id}, {"object", obj}});
  }
  Json jchecks = Json::object();
  for (const auto& [k, v] : checks) jchecks[k] = v;
  Json doc{{"schema", "origami.construct/1"},
           {"recipe", name},
           {"declared_axioms", letters(r.axioms)},
           {"profile", letters(profile)},
           {"class", std::string(class_symbol(classify_trace(t)))},
           {"checks", jchecks},
           {"ok", ok},
           {"steps", t.steps().size()},
           {"outputs", outputs}};
  if (!o.emit_trace.empty()) write_file(o.emit_trace, dump(trace_to_json(t, o.precision)));
  if (!o.emit_svg.empty()) {
    RenderScene s = name == "perp-bisector" ? perp_bisector_scene() : scene_from_trace(t);
    if (name == "archimedes") s = archimedes_scene(t.point(out("P")));
    write_svg(s, o.emit_svg);
  }
  std::vector<std::string> summary{name + ": profile {" + letters(profile) + "}, class " + doc["class"].get<std::string>() +
                                   ", " + std::to_string(t.steps().size()) + " steps"};
  for (const auto& [k, v] : checks) summary.push_back("  " + k + ": " + (v ? "pass" : "FAIL"));
  emit(o, doc, summary);
  if (!ok) diagnostic("error", "InvariantFailed", "construction " + name + " failed a check");
  return ok ? 0 : 1;
}

int cmd_trisect(const Options& o, const std::string& u_text) {
  AN u(parse_arg(u_text, "--u"));
  AN y = trisect_cos(u);
  // all roots of 4y^3 - 3y - u as the reduced cubic y^3 - 3/4 y - u/4
  CubicSolution all = solve_totally_real_cubic({AN(Rational(-3, 4)), -u / AN(4)});
  Json residuals = Json::array();
  for (const auto& r : all.roots) residuals.push_back((AN(4) * r * r * r - AN(3) * r - u.lift_to(r.tower())).is_zero());
  Json doc{{"schema", "origami.trisect/1"},
           {"u", to_string(u.rational_value())},
           {"cos", number_document(y, o.precision)},
           {"minimal_polynomial", minimal_polynomial(y).to_string()},
           {"roots", roots_json(all.roots, o.precision)},
           {"residuals_zero", residuals}};
  emit(o, doc, {"trisect u = " + to_string(u.rational_value()) + ": y = " + y.decimal(o.precision),
                "  minimal polynomial " + minimal_polynomial(y).to_string()});
  return 0;
}

int cmd_cubic(const Options& o, const std::string& p_text, const std::string& q_text) {
  ReducedCubic c{AN(parse_arg(p_text, "--p")), AN(parse_arg(q_text, "--q"))};
  AN disc = discriminant_cubic(c);
  RatPolynomial f({c.q.rational_value(), c.p.rational_value(), Rational(0), Rational(1)});
  int sturm = sturm_real_root_count(f);
  CubicSolution s = solve_totally_real_cubic(c);
  Json residuals = Json::array();
  for (const auto& r : s.roots) residuals.push_back((r * r * r + c.p * r + c.q).is_zero());
  Json doc{{"schema", "origami.cubic/1"},
           {"p", to_string(c.p.rational_value())},
           {"q", to_string(c.q.rational_value())},
           {"discriminant", to_string(disc.rational_value())},
           {"sturm_count", sturm},
           {"roots", roots_json(s.roots, o.precision)},
           {"multiplicity", s.multiplicity},
           {"residuals_zero", residuals}};
  std::vector<std::string> summary{"x^3 + (" + to_string(c.p.rational_value()) + ") x + (" + to_string(c.q.rational_value()) +
                                   "): discriminant " + to_string(disc.rational_value())};
  for (const auto& r : s.roots) summary.push_back("  root " + r.decimal(o.precision));
  emit(o, doc, summary);
  return 0;
}

int cmd_classify(const Options& o, const std::string& minpoly, const std::string& trace_path, int depth) {
  ClassificationReport r;
  Json extra;
  if (!trace_path.empty()) {
    ConstructionTrace t = trace_from_json(parse_json(read_file(trace_path)));
    r = classify_trace_report(t);
  } else {
    RatPolynomial f = RatPolynomial::from_descending(parse_list(minpoly, "--minpoly"));
    if (f.degree() < 1) throw UsageError(ErrorCode::ParseError, "--minpoly: need a nonconstant polynomial");
    r = classify_polynomial(f, depth);
    int d = f.degree();
    while (d % 2 == 0) d /= 2;
    while (d % 3 == 0) d /= 3;
    extra["degree_test"] = d == 1;
  }
  Json doc = report_to_json(r, o.precision);
  for (auto& [k, v] : extra.items()) doc[k] = v;
  doc["revalidated"] = revalidate(r);
  emit(o, doc, {"class " + std::string(class_symbol(r.label)) + " (" + std::string(evidence_name(r.evidence)) + ")",
                "  " + r.reason});
  return 0;
}

int cmd_alhazen(const Options& o, const std::string& a_text, const std::string& b_text) {
  AlhazenInstance inst{parse_complex(a_text, "--a"), parse_complex(b_text, "--b")};
  SolutionSet s = solve_alhazen(inst);
  Json doc = solution_to_json(s, o.precision);
  bool ok = true;
  for (const auto& p : s.points) ok = ok && verify_equation1(p.z, inst);
  doc["equation_holds"] = ok;
  if (!o.emit_svg.empty()) write_svg(alhazen_scene(s), o.emit_svg);
  std::vector<std::string> summary{std::to_string(s.points.size()) + " solutions"};
  for (const auto& p : s.points) summary.push_back("  (" + p.z.x.decimal(o.precision) + ", " + p.z.y.decimal(o.precision) + ")");
  emit(o, doc, summary);
  return ok ? 0 : 1;
}

int cmd_render(const Options& o, int figure, const std::string& trace_path) {
  RenderScene s;
  if (!trace_path.empty())
    s = scene_from_trace(trace_from_json(parse_json(read_file(trace_path))));
  else if (figure >= 1 && figure <= 4)
    s = figure_scene(figure);
  else
    throw UsageError(ErrorCode::ParseError, "give --figure 1..4 or --trace");
  if (o.emit_svg.empty())
    std::cout << render_svg(s);
  else
    write_svg(s, o.emit_svg);
  return 0;
}

int cmd_trace(const Options& o, const std::string& in, const std::string& out) {
  ConstructionTrace t = trace_from_json(parse_json(read_file(in)));
  std::string text = dump(trace_to_json(t, o.precision));
  if (!out.empty()) write_file(out, text);
  if (!o.emit_trace.empty()) write_file(o.emit_trace, text);
  if (!o.emit_svg.empty()) write_svg(scene_from_trace(t), o.emit_svg);
  if (o.json)
    std::cout << text;
  else
    std::cout << "valid trace: " << t.steps().size() << " steps, profile {" << letters(t.profile()) << "}\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact origami constructions, trisections and Alhazen's problem"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--precision", o.precision, "decimal digits in outputs")->check(CLI::Range(1, 1000));
  app.add_option("--emit-svg", o.emit_svg, "write an SVG drawing here");
  app.add_option("--emit-trace", o.emit_trace, "write the trace JSON here");
  app.add_flag("--json", o.json, "print JSON instead of a summary");

  std::string recipe, u, p, q, minpoly, trace_in, a, b, in, out;
  int depth = 3, figure = 0;
  auto* construct = app.add_subcommand("construct", "run a named construction");
  construct->add_option("name", recipe, "pentagon, heptagon, perp-bisector, archimedes, hypotenuse")->required();
  auto* trisect = app.add_subcommand("trisect", "largest root of 4y^3 - 3y - u");
  trisect->add_option("--u", u, "u in [-1, 1], as p/q or a decimal")->required();
  auto* cubic = app.add_subcommand("cubic", "roots of x^3 + p x + q with positive discriminant");
  cubic->add_option("--p", p)->required();
  cubic->add_option("--q", q)->required();
  auto* classify = app.add_subcommand("classify", "classify a number or a trace");
  auto* mp = classify->add_option("--minpoly", minpoly, "coefficients, highest degree first");
  auto* tr = classify->add_option("--trace", trace_in, "trace JSON file");
  mp->excludes(tr);
  classify->add_option("--depth", depth, "witness search depth")->check(CLI::Range(1, 3));
  auto* alhazen = app.add_subcommand("alhazen", "solve Alhazen's problem for exterior a, b");
  alhazen->add_option("--a", a, "re,im")->required();
  alhazen->add_option("--b", b, "re,im")->required();
  auto* render = app.add_subcommand("render", "draw a figure or a trace as SVG");
  auto* fig = render->add_option("--figure", figure, "1 to 4");
  auto* rtr = render->add_option("--trace", trace_in, "trace JSON file");
  fig->excludes(rtr);
  auto* trace = app.add_subcommand("trace", "validate and re-export a trace");
  trace->add_option("--in", in, "trace JSON file")->required();
  trace->add_option("--out", out, "write the re-exported trace here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    diagnostic("error", "UsageError", e.what());
    return 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, recipe);
    if (trisect->parsed()) return cmd_trisect(o, u);
    if (cubic->parsed()) return cmd_cubic(o, p, q);
    if (classify->parsed()) {
      if (minpoly.empty() && trace_in.empty()) throw UsageError(ErrorCode::ParseError, "give --minpoly or --trace");
      return cmd_classify(o, minpoly, trace_in, depth);
    }
    if (alhazen->parsed()) return cmd_alhazen(o, a, b);
    if (render->parsed()) return cmd_render(o, figure, trace_in);
    if (trace->parsed()) return cmd_trace(o, in, out);
  } catch (const UsageError& e) {
    diagnostic("error", to_string(e.code), e.what());
    return 2;
  } catch (const Error& e) {
    diagnostic("error", to_string(e.code()), e.what());
    return 1;
  }
  return 2;
}
