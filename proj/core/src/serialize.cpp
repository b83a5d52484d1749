#include "origami/serialize.hpp"

#include "origami/errors.hpp"

namespace origami {

namespace {

using AN = AlgebraicNumber;

Json coords_json(const std::vector<Rational>& c) {
  Json out = Json::array();
  for (const auto& q : c) out.push_back(to_string(q));
  return out;
}

std::vector<Rational> coords_from(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "coordinates must be an array");
  std::vector<Rational> out;
  for (const auto& e : j) {
    if (!e.is_string()) fail(ErrorCode::ParseError, "coordinates must be fraction strings");
    out.push_back(parse_rational(e.get<std::string>()));
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

void expect_schema(const Json& j, std::string_view schema) {
  const Json& s = field(j, "schema");
  if (!s.is_string() || s.get<std::string>() != schema)
    fail(ErrorCode::ParseError, "expected schema " + std::string(schema));
}

// Runs f, turning nlohmann's exceptions into ParseError.
template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

Json polynomial_json(const RatPolynomial& f) {
  return {{"coefficients", coords_json(f.coeffs())}, {"text", f.to_string()}};
}

Json check_json(const Check& c, int digits) {
  Json j{{"level", c.level},
         {"condition", std::string(condition_name(c.condition))},
         {"passed", c.passed},
         {"value", number_document(c.value, digits)}};
  if (c.kind) j["kind"] = *c.kind == StepKind::SquareRoot ? "sqrt" : "trisection";
  if (!c.poly.empty()) {
    Json p = Json::array();
    for (const auto& a : c.poly) p.push_back(number_document(a, digits));
    j["poly"] = p;
  }
  if (c.field) j["field"] = tower_to_json(c.field, digits);
  return j;
}

}  // namespace

Json tower_to_json(const TowerPtr& F, int digits) {
  Json levels = Json::array();
  auto chain = F->chain();
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const TowerField* t = *it;
    if (t->is_base()) continue;
    const AN& p = *t->step().param;
    levels.push_back({{"kind", t->step().kind == StepKind::SquareRoot ? "sqrt" : "trisection"},
                      {"param", coords_json(p.lift_to(t->parent()).coords())},
                      {"param_decimal", p.decimal(digits)}});
  }
  return {{"schema", std::string(kTowerSchema)}, {"degree", F->degree()}, {"levels", levels}};
}

TowerPtr tower_from_json(const Json& j) {
  return guarded([&] {
    expect_schema(j, kTowerSchema);
    TowerPtr F = TowerField::rationals();
    for (const auto& level : field(j, "levels")) {
      std::string kind = field(level, "kind").get<std::string>();
      std::vector<Rational> c = coords_from(field(level, "param"));
      if (c.size() != F->degree()) fail(ErrorCode::ParseError, "parameter has the wrong number of coordinates");
      AN p(F, c);
      TowerPtr next;
      if (kind == "sqrt")
        next = adjoin_sqrt(F, p).first;
      else if (kind == "trisection")
        next = adjoin_trisection_root(F, p).first;
      else
        fail(ErrorCode::ParseError, "unknown level kind '" + kind + "'");
      if (next->height() != F->height() + 1 || next->parent() != F)
        fail(ErrorCode::ParseError, "level " + std::to_string(F->height() + 1) + " does not extend the field");
      F = next;
    }
    if (field(j, "degree").get<size_t>() != F->degree()) fail(ErrorCode::ParseError, "degree mismatch");
    return F;
  });
}

Json number_to_json(const AN& x, int digits) {
  return {{"coords", coords_json(x.coords())}, {"decimal", x.decimal(digits)}};
}

AN number_from_json(const Json& j, const TowerPtr& F) {
  return guarded([&] {
    std::vector<Rational> c = coords_from(field(j, "coords"));
    if (c.size() != F->degree()) fail(ErrorCode::ParseError, "number has the wrong number of coordinates");
    return AN(F, std::move(c));
  });
}

Json number_document(const AN& x, int digits) {
  return {{"schema", std::string(kNumberSchema)},
          {"tower", tower_to_json(x.tower(), digits)},
          {"value", number_to_json(x, digits)}};
}

Json point_to_json(const Point& p, int digits) {
  TowerPtr t = common_tower(p.x.tower(), p.y.tower());
  return {{"kind", "point"},
          {"x", number_to_json(p.x.lift_to(t), digits)},
          {"y", number_to_json(p.y.lift_to(t), digits)}};
}

Json line_to_json(const Line& l, int digits) {
  TowerPtr t = l.tower();
  return {{"kind", "line"},
          {"a", number_to_json(l.a().lift_to(t), digits)},
          {"b", number_to_json(l.b().lift_to(t), digits)},
          {"c", number_to_json(l.c().lift_to(t), digits)}};
}

Json trace_to_json(const ConstructionTrace& t, int digits) {
  Json objects = Json::array();
  for (size_t i = 0; i < t.object_count(); ++i) {
    ObjectId id = static_cast<ObjectId>(i);
    Json o = t.is_point(id) ? point_to_json(t.point(id), digits) : line_to_json(t.line(id), digits);
    o["id"] = id;
    o["label"] = t.label(id);
    objects.push_back(o);
  }
  Json steps = Json::array();
  for (const auto& s : t.steps())
    steps.push_back({{"tag", std::string(1, axiom_letter(s.tag))}, {"op", s.op}, {"inputs", s.inputs}, {"outputs", s.outputs}});
  std::string profile;
  for (Axiom a : t.profile()) profile += axiom_letter(a);
  return {{"schema", std::string(kTraceSchema)},
          {"tower", tower_to_json(t.tower(), digits)},
          {"profile", profile},
          {"objects", objects},
          {"steps", steps}};
}

ConstructionTrace trace_from_json(const Json& j) {
  ConstructionTrace t = guarded([&] {
    expect_schema(j, kTraceSchema);
    ConstructionTrace::Raw raw;
    raw.tower = tower_from_json(field(j, "tower"));
    for (const auto& o : field(j, "objects")) {
      if (field(o, "id").get<size_t>() != raw.objects.size()) fail(ErrorCode::ParseError, "object ids must be 0, 1, 2, ...");
      std::string kind = field(o, "kind").get<std::string>();
      if (kind == "point") {
        raw.objects.emplace_back(Point(number_from_json(field(o, "x"), raw.tower), number_from_json(field(o, "y"), raw.tower)));
      } else if (kind == "line") {
        raw.objects.emplace_back(Line(number_from_json(field(o, "a"), raw.tower), number_from_json(field(o, "b"), raw.tower),
                                      number_from_json(field(o, "c"), raw.tower)));
      } else {
        fail(ErrorCode::ParseError, "unknown object kind '" + kind + "'");
      }
      raw.labels.push_back(o.value("label", std::string()));
    }
    for (const auto& s : field(j, "steps")) {
      std::string tag = field(s, "tag").get<std::string>();
      if (tag.size() != 1) fail(ErrorCode::ParseError, "step tag must be one letter");
      TraceStep step{axiom_from_letter(tag[0]), field(s, "op").get<std::string>(),
                     field(s, "inputs").get<std::vector<ObjectId>>(), field(s, "outputs").get<std::vector<ObjectId>>()};
      for (ObjectId id : step.inputs)
        if (id < 0 || static_cast<size_t>(id) >= raw.objects.size()) fail(ErrorCode::ParseError, "step refers to a missing object");
      for (ObjectId id : step.outputs)
        if (id < 0 || static_cast<size_t>(id) >= raw.objects.size()) fail(ErrorCode::ParseError, "step refers to a missing object");
      raw.steps.push_back(std::move(step));
    }
    return ConstructionTrace::from_raw(std::move(raw));
  });
  validate(t);
  return t;
}

Json report_to_json(const ClassificationReport& r, int digits) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c, digits));
  Json j{{"schema", std::string(kReportSchema)},
         {"label", std::string(class_symbol(r.label))},
         {"evidence", std::string(evidence_name(r.evidence))},
         {"reason", r.reason},
         {"checks", checks}};
  if (r.tower) j["tower"] = tower_to_json(r.tower, digits);
  if (r.polynomial) j["polynomial"] = polynomial_json(*r.polynomial);
  if (r.root) j["root"] = number_document(*r.root, digits);
  return j;
}

Json solution_to_json(const SolutionSet& s, int digits) {
  const PencilData& d = s.pencil;
  auto complex = [&](const Point& p) { return Json{{"re", number_document(p.x, digits)}, {"im", number_document(p.y, digits)}}; };
  Json cubic = Json::array();
  for (const auto& c : d.cubic) cubic.push_back(number_document(c, digits));
  Json roots = Json::array();
  for (const auto& r : s.roots.roots) roots.push_back(number_document(r, digits));
  Json pencil{{"q", number_document(d.q, digits)},
              {"r", number_document(d.r, digits)},
              {"s", number_document(d.s, digits)},
              {"tau", number_document(d.tau, digits)},
              {"cubic", cubic},
              {"roots", roots},
              {"sturm_count", s.roots.sturm_count},
              {"rotation", {{"cos", number_document(d.rotation.cos, digits)}, {"sin", number_document(d.rotation.sin, digits)}}}};

  TowerPtr top = TowerField::rationals();
  for (const auto& p : s.points) top = common_tower(top, common_tower(p.z.x.tower(), p.z.y.tower()));
  for (const auto& l : s.lines) top = common_tower(top, l.tower());

  Json points = Json::array();
  for (const auto& p : s.points) {
    Json pj = point_to_json(p.z.lift_to(top), digits);
    pj["lines"] = p.lines;
    points.push_back(pj);
  }
  Json lines = Json::array();
  for (size_t i = 0; i < s.lines.size(); ++i) {
    Json lj = line_to_json(s.lines[i].lift_to(top), digits);
    lj["conic"] = i / 2;
    lj["lambda_decimal"] = s.conics.at(i / 2).lambda.decimal(digits);
    lines.push_back(lj);
  }
  return {{"schema", std::string(kAlhazenSchema)},
          {"instance", {{"a", complex(d.original.a)}, {"b", complex(d.original.b)}}},
          {"tower", tower_to_json(top, digits)},
          {"points", points},
          {"lines", lines},
          {"incidence", s.incidence()},
          {"pencil", pencil}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

}  // namespace origami
