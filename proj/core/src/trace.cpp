#include "origami/trace.hpp"

#include <algorithm>

#include "origami/errors.hpp"

namespace origami {

namespace {
using AN = AlgebraicNumber;
using Vec = std::pair<AN, AN>;

Vec sub(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
Vec scale(const Vec& v, const AN& k) { return {v.first * k, v.second * k}; }
Vec add(const Vec& u, const Vec& v) { return {u.first + v.first, u.second + v.second}; }
Point shift(const Point& p, const Vec& v) { return {p.x + v.first, p.y + v.second}; }
AN cross(const Vec& u, const Vec& v) { return u.first * v.second - u.second * v.first; }

// Square roots and trisections adjoined on top of one running tower, so every
// intermediate value stays comparable with every other.
struct Chain {
  TowerPtr F;
  AN root(const AN& x) {
    auto [E, r] = adjoin_sqrt(F, x.lift_to(common_tower(F, x.tower())));
    F = E;
    return r;
  }
  AN length(const Vec& v) { return root(dot(v, v)); }
  AN trisect(const AN& u) {
    auto [E, y] = adjoin_trisection_root(F, u.lift_to(common_tower(F, u.tower())));
    F = E;
    return y;
  }
};

bool perpendicular_lines(const Line& l, const Line& m) { return (l.a() * m.a() + l.b() * m.b()).is_zero(); }

}  // namespace

char axiom_letter(Axiom a) {
  switch (a) {
    case Axiom::Seed: return 'S';
    case Axiom::L: return 'L';
    case Axiom::P: return 'P';
    case Axiom::B: return 'B';
    case Axiom::E: return 'E';
    case Axiom::T: return 'T';
  }
  return '?';
}

Axiom axiom_from_letter(char c) {
  switch (c) {
    case 'S': return Axiom::Seed;
    case 'L': return Axiom::L;
    case 'P': return Axiom::P;
    case 'B': return Axiom::B;
    case 'E': return Axiom::E;
    case 'T': return Axiom::T;
    default: fail(ErrorCode::ParseError, std::string("unknown axiom tag '") + c + "'");
  }
}

// ---------------------------------------------------------------------------

ConstructionTrace::ConstructionTrace() : tower_(TowerField::rationals()) {
  record(Axiom::Seed, "seed", {}, {Point(AN(0), AN(0))});
  record(Axiom::Seed, "seed", {}, {Point(AN(1), AN(0))});
  labels_[0] = "O";
  labels_[1] = "U";
}

void ConstructionTrace::check_id(ObjectId id) const {
  if (id < 0 || static_cast<size_t>(id) >= objects_.size())
    fail(ErrorCode::UnknownObject, "no object with id " + std::to_string(id));
}

bool ConstructionTrace::is_point(ObjectId id) const {
  check_id(id);
  return std::holds_alternative<Point>(objects_[static_cast<size_t>(id)]);
}

bool ConstructionTrace::is_line(ObjectId id) const {
  check_id(id);
  return std::holds_alternative<Line>(objects_[static_cast<size_t>(id)]);
}

Point ConstructionTrace::point(ObjectId id) const {
  if (!is_point(id)) fail(ErrorCode::UnknownObject, "object " + std::to_string(id) + " is not a point");
  return std::get<Point>(objects_[static_cast<size_t>(id)]).lift_to(tower_);
}

Line ConstructionTrace::line(ObjectId id) const {
  if (!is_line(id)) fail(ErrorCode::UnknownObject, "object " + std::to_string(id) + " is not a line");
  return std::get<Line>(objects_[static_cast<size_t>(id)]).lift_to(tower_);
}

const Object& ConstructionTrace::raw(ObjectId id) const {
  check_id(id);
  return objects_[static_cast<size_t>(id)];
}

std::string ConstructionTrace::label(ObjectId id) const {
  check_id(id);
  return labels_[static_cast<size_t>(id)];
}

void ConstructionTrace::set_label(ObjectId id, std::string name) {
  check_id(id);
  labels_[static_cast<size_t>(id)] = std::move(name);
}

std::set<Axiom> ConstructionTrace::profile() const {
  std::set<Axiom> out;
  for (const auto& s : steps_)
    if (s.tag != Axiom::Seed) out.insert(s.tag);
  return out;
}

void ConstructionTrace::adopt(const TowerPtr& t) { tower_ = common_tower(tower_, t); }

std::vector<ObjectId> ConstructionTrace::record(Axiom tag, std::string op, std::vector<ObjectId> inputs,
                                                std::vector<Object> outputs) {
  for (ObjectId id : inputs) check_id(id);
  std::vector<ObjectId> ids;
  for (auto& o : outputs) {
    adopt(std::visit([](const auto& v) { return v.tower(); }, o));
    ids.push_back(static_cast<ObjectId>(objects_.size()));
    objects_.push_back(std::move(o));
    labels_.emplace_back();
  }
  steps_.push_back({tag, std::move(op), std::move(inputs), ids});
  return ids;
}

ConstructionTrace ConstructionTrace::from_raw(Raw raw) {
  ConstructionTrace t;
  t.tower_ = raw.tower;
  t.objects_ = std::move(raw.objects);
  t.labels_ = std::move(raw.labels);
  t.labels_.resize(t.objects_.size());
  t.steps_ = std::move(raw.steps);
  return t;
}

// ---------------------------------------------------------------------------

ObjectId fold_L(ConstructionTrace& t, ObjectId p, ObjectId q) {
  return t.record(Axiom::L, "line", {p, q}, {line_through(t.point(p), t.point(q))})[0];
}

ObjectId fold_P(ConstructionTrace& t, ObjectId l1, ObjectId l2) {
  return t.record(Axiom::P, "meet", {l1, l2}, {intersect(t.line(l1), t.line(l2))})[0];
}

std::pair<ObjectId, ObjectId> fold_B(ConstructionTrace& t, ObjectId l1, ObjectId l2) {
  auto [b1, b2] = angle_bisectors(t.line(l1), t.line(l2));
  auto ids = t.record(Axiom::B, "bisect", {l1, l2}, {b1, b2});
  return {ids[0], ids[1]};
}

ObjectId fold_perpendicular(ConstructionTrace& t, ObjectId p, ObjectId l) {
  return t.record(Axiom::B, "perpendicular", {p, l}, {perpendicular_from(t.point(p), t.line(l))})[0];
}

ObjectId fold_perp_bisector(ConstructionTrace& t, ObjectId p, ObjectId q) {
  return t.record(Axiom::B, "perp_bisector", {p, q}, {perp_bisector(t.point(p), t.point(q))})[0];
}

ObjectId fold_reflect(ConstructionTrace& t, ObjectId p, ObjectId l) {
  return t.record(Axiom::B, "reflect", {p, l}, {reflect_point(t.point(p), t.line(l))})[0];
}

ObjectId fold_parallel(ConstructionTrace& t, ObjectId p, ObjectId l) {
  Point P = t.point(p);
  Line L = t.line(l);
  return t.record(Axiom::B, "parallel", {p, l}, {Line(L.a(), L.b(), -(L.a() * P.x + L.b() * P.y))})[0];
}

ObjectId fold_transfer(ConstructionTrace& t, ObjectId p, ObjectId q, ObjectId r) {
  Point P = t.point(p), Q = t.point(q), R = t.point(r);
  AN dq = squared_distance(P, Q);
  if (dq.is_zero()) fail(ErrorCode::CoincidentPoints, "transfer along a ray needs two distinct points");
  // |PR| / |PQ| = sqrt(|PR|^2 |PQ|^2) / |PQ|^2
  Chain ch{t.tower()};
  AN k = ch.root(squared_distance(P, R) * dq) / dq;
  return t.record(Axiom::B, "transfer", {p, q, r}, {shift(P, scale(sub(Q, P), k))})[0];
}

FoldResult fold_E(ConstructionTrace& t, ObjectId p, ObjectId l, ObjectId q) {
  Point P = t.point(p), Q = t.point(q);
  Line L = t.line(l);
  if (P == Q) fail(ErrorCode::DegenerateConfiguration, "fold through the focus reflects it onto itself");
  // The image P' of P lies on l and on the circle about Q through P.
  Point F = foot_of_perpendicular(Q, L);
  AN ab = L.a() * L.a() + L.b() * L.b();
  AN D = squared_distance(Q, P) - squared_distance(Q, F);
  if (D.sign() < 0) fail(ErrorCode::NoRealFold, "no fold through Q places P on l");
  std::vector<Point> images;
  if (D.is_zero()) {
    images.push_back(F);
  } else {
    Chain ch{t.tower()};
    AN s = ch.root(D / ab);
    Vec dir = L.direction();
    images.push_back(shift(F, scale(dir, s)));
    images.push_back(shift(F, scale(dir, -s)));
  }
  std::vector<Object> lines;
  FoldResult res;
  for (const auto& img : images) {
    Line fold = img == P ? line_through(Q, P) : perp_bisector(P, img);
    lines.push_back(fold);
    res.witnesses.push_back({{img}});
  }
  res.lines = t.record(Axiom::E, "fold_E", {p, l, q}, std::move(lines));
  return res;
}

std::vector<Line> fold_T_lines(const Point& P, const Point& Q, const Line& l) {
  if (!l.contains(P)) fail(ErrorCode::PointNotOnLine, "axiom T needs P on l");
  if (P == Q) fail(ErrorCode::CoincidentPoints, "axiom T needs P != Q");
  const Line l2 = perp_bisector(P, Q);
  const Vec pq = sub(Q, P);
  Chain ch{common_tower(common_tower(P, Q), l.tower())};
  // Unit direction d1 along l1 (perpendicular to PQ) and d2 along l, with the
  // angle between them acute.
  Vec d1 = scale(Vec{-pq.second, pq.first}, ch.length(pq).inverse());
  Vec d2 = l.direction();
  if (dot(d1, d2).sign() < 0) d2 = scale(d2, AN(-1));
  d2 = scale(d2, ch.length(d2).inverse());
  AN c = cross(d1, d2);
  if (c.is_zero()) fail(ErrorCode::DegenerateConfiguration, "l is perpendicular to PQ; the angle to trisect is zero");
  const AN u = dot(d1, d2);
  // Unit normal to d1 on the side of d2.
  const Vec n = scale(add(d2, scale(d1, -u)), ch.root(AN(1) - u * u).inverse());

  const AN y1 = ch.trisect(u);
  const AN s1 = ch.root(AN(1) - y1 * y1);
  const AN w = ch.root(AN(3) * (AN(1) - y1 * y1));
  const AN r3 = w / s1;
  const AN half(Rational(1, 2));
  const std::vector<Vec> angles = {
      {y1, s1},
      {(-y1 - w) * half, (r3 * y1 - s1) * half},
      {(w - y1) * half, (-s1 - r3 * y1) * half},
  };
  std::vector<Line> out;
  for (const auto& [cs, sn] : angles) {
    Vec dir = add(scale(d1, cs), scale(n, sn));
    Line ray(dir.second, -dir.first, dir.first * P.y - dir.second * P.x);
    if (parallel(ray, l2)) continue;
    Point P1 = intersect(ray, l2);
    Line fold = perp_bisector(P, P1);
    if (!l.contains(reflect_point(Q, fold)) || !l2.contains(reflect_point(P, fold))) continue;
    if (std::find(out.begin(), out.end(), fold) == out.end()) out.push_back(fold);
  }
  return out;
}

FoldResult fold_T(ConstructionTrace& t, ObjectId p, ObjectId q, ObjectId l) {
  Point P = t.point(p), Q = t.point(q);
  Line L = t.line(l);
  auto lines = fold_T_lines(P, Q, L);
  FoldResult res;
  std::vector<Object> objs;
  for (const auto& f : lines) {
    res.witnesses.push_back({{reflect_point(Q, f), reflect_point(P, f)}});
    objs.push_back(f);
  }
  res.lines = t.record(Axiom::T, "fold_T", {p, q, l}, std::move(objs));
  return res;
}

std::pair<Line, Line> trisectors(const Line& l1, const Line& l2) {
  const Point X = intersect(l1, l2);
  Chain ch{common_tower(l1, l2)};
  Vec d1 = l1.direction(), d2 = l2.direction();
  if (d1.first.sign() < 0 || (d1.first.is_zero() && d1.second.sign() < 0)) d1 = scale(d1, AN(-1));
  // acute side; for a right angle, counterclockwise from l1
  int side = dot(d1, d2).sign();
  if (side < 0 || (side == 0 && cross(d1, d2).sign() < 0)) d2 = scale(d2, AN(-1));
  d1 = scale(d1, ch.length(d1).inverse());
  d2 = scale(d2, ch.length(d2).inverse());
  const AN u = dot(d1, d2);
  const Vec n = scale(add(d2, scale(d1, -u)), ch.root(AN(1) - u * u).inverse());
  const AN y = ch.trisect(u);
  const AN s = ch.root(AN(1) - y * y);
  const Vec t1 = add(scale(d1, y), scale(n, s));
  const Vec t2 = add(scale(d1, AN(2) * y * y - AN(1)), scale(n, AN(2) * y * s));
  return {line_through(X, shift(X, t1)), line_through(X, shift(X, t2))};
}

std::pair<ObjectId, ObjectId> trisect_between_lines(ConstructionTrace& t, ObjectId l1, ObjectId l2) {
  auto [m1, m2] = trisectors(t.line(l1), t.line(l2));
  auto ids = t.record(Axiom::T, "trisect", {l1, l2}, {m1, m2});
  return {ids[0], ids[1]};
}

// ---------------------------------------------------------------------------

namespace {

[[noreturn]] void invalid(size_t step, const std::string& why) {
  fail(ErrorCode::InvalidTrace, "step " + std::to_string(step) + ": " + why);
}

void check_step(const ConstructionTrace& t, size_t k, const TraceStep& s) {
  auto arity = [&](size_t in, size_t out_min, size_t out_max) {
    if (s.inputs.size() != in || s.outputs.size() < out_min || s.outputs.size() > out_max)
      invalid(k, "wrong number of objects for '" + s.op + "'");
  };
  auto expect_tag = [&](Axiom a) {
    if (s.tag != a) invalid(k, "operation '" + s.op + "' recorded under the wrong axiom");
  };
  auto in = [&](size_t i) { return s.inputs[i]; };
  auto out = [&](size_t i) { return s.outputs[i]; };
  const std::string& op = s.op;

  if (op == "seed") {
    expect_tag(Axiom::Seed);
    arity(0, 1, 1);
    if (k > 1) invalid(k, "seeds must be the first two steps");
    Point expect(AN(static_cast<long>(k)), AN(0));
    if (!(t.point(out(0)) == expect)) invalid(k, "seed point is not the origin or unit point");
  } else if (op == "line") {
    expect_tag(Axiom::L);
    arity(2, 1, 1);
    Line m = t.line(out(0));
    Point P = t.point(in(0)), Q = t.point(in(1));
    if (P == Q || !m.contains(P) || !m.contains(Q)) invalid(k, "line does not join its two points");
  } else if (op == "meet") {
    expect_tag(Axiom::P);
    arity(2, 1, 1);
    Point X = t.point(out(0));
    if (!t.line(in(0)).contains(X) || !t.line(in(1)).contains(X) || t.line(in(0)) == t.line(in(1)))
      invalid(k, "point is not the meet of its lines");
  } else if (op == "bisect") {
    expect_tag(Axiom::B);
    arity(2, 2, 2);
    Line l1 = t.line(in(0)), l2 = t.line(in(1));
    for (size_t i = 0; i < 2; ++i)
      if (!(reflect_line(l1, t.line(out(i))) == l2)) invalid(k, "bisector does not fold l1 onto l2");
    if (t.line(out(0)) == t.line(out(1))) invalid(k, "bisectors coincide");
  } else if (op == "perpendicular") {
    expect_tag(Axiom::B);
    arity(2, 1, 1);
    Line m = t.line(out(0));
    if (!m.contains(t.point(in(0))) || !perpendicular_lines(m, t.line(in(1))))
      invalid(k, "line is not the perpendicular through the point");
  } else if (op == "perp_bisector") {
    expect_tag(Axiom::B);
    arity(2, 1, 1);
    Point P = t.point(in(0)), Q = t.point(in(1));
    if (P == Q || !(reflect_point(P, t.line(out(0))) == Q)) invalid(k, "line does not fold P onto Q");
  } else if (op == "reflect") {
    expect_tag(Axiom::B);
    arity(2, 1, 1);
    if (!(reflect_point(t.point(in(0)), t.line(in(1))) == t.point(out(0)))) invalid(k, "point is not the reflection");
  } else if (op == "parallel") {
    expect_tag(Axiom::B);
    arity(2, 1, 1);
    Line m = t.line(out(0)), L = t.line(in(1));
    if (!m.contains(t.point(in(0))) || !(m.a() == L.a() && m.b() == L.b()))
      invalid(k, "line is not the parallel through the point");
  } else if (op == "transfer") {
    expect_tag(Axiom::B);
    arity(3, 1, 1);
    Point P = t.point(in(0)), Q = t.point(in(1)), R = t.point(in(2)), S = t.point(out(0));
    Vec pq = sub(Q, P), ps = sub(S, P);
    if (!cross(pq, ps).is_zero() || dot(pq, ps).sign() < 0 || !(squared_distance(P, S) == squared_distance(P, R)))
      invalid(k, "point is not the transferred length on the ray");
  } else if (op == "fold_E") {
    expect_tag(Axiom::E);
    arity(3, 1, 2);
    Point P = t.point(in(0)), Q = t.point(in(2));
    Line L = t.line(in(1));
    for (ObjectId f : s.outputs) {
      Line m = t.line(f);
      if (!m.contains(Q) || !L.contains(reflect_point(P, m))) invalid(k, "fold does not satisfy axiom E");
    }
  } else if (op == "fold_T") {
    expect_tag(Axiom::T);
    arity(3, 1, 3);
    Point P = t.point(in(0)), Q = t.point(in(1));
    Line L = t.line(in(2));
    if (!L.contains(P) || P == Q) invalid(k, "axiom T inputs are degenerate");
    Line l2 = perp_bisector(P, Q);
    for (ObjectId f : s.outputs) {
      Line m = t.line(f);
      if (!L.contains(reflect_point(Q, m)) || !l2.contains(reflect_point(P, m)))
        invalid(k, "fold does not satisfy axiom T");
    }
  } else if (op == "trisect") {
    expect_tag(Axiom::T);
    arity(2, 2, 2);
    Line l1 = t.line(in(0)), l2 = t.line(in(1)), m1 = t.line(out(0)), m2 = t.line(out(1));
    if (!(reflect_line(l1, m1) == m2) || !(reflect_line(m1, m2) == l2)) invalid(k, "lines do not trisect the angle");
    // Trisecting the obtuse angle also passes the reflection test; the acute
    // one puts m1 within 30 degrees of l1.
    Vec d1 = l1.direction(), e = m1.direction();
    AN de = dot(d1, e);
    if ((AN(4) * de * de - AN(3) * dot(d1, d1) * dot(e, e)).sign() < 0)
      invalid(k, "trisected angle is not the acute one");
  } else {
    invalid(k, "unknown operation '" + op + "'");
  }
}

}  // namespace

void validate(const ConstructionTrace& t) {
  if (t.steps().size() < 2) fail(ErrorCode::InvalidTrace, "trace lacks its two seeds");
  size_t next = 0;
  for (size_t k = 0; k < t.steps().size(); ++k) {
    const auto& s = t.steps()[k];
    for (ObjectId id : s.inputs)
      if (id < 0 || static_cast<size_t>(id) >= next) invalid(k, "input used before it is constructed");
    for (ObjectId id : s.outputs)
      if (static_cast<size_t>(id) != next++) invalid(k, "outputs are not numbered in order");
    try {
      check_step(t, k, s);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvalidTrace) throw;
      invalid(k, e.what());
    }
  }
  if (next != t.object_count()) fail(ErrorCode::InvalidTrace, "objects not produced by any step");
}

}  // namespace origami
