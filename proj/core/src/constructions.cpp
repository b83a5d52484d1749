#include "origami/constructions.hpp"

#include "origami/cubic.hpp"
#include "origami/errors.hpp"

namespace origami {

namespace {
using AN = AlgebraicNumber;

AN q(long n, long d = 1) { return AN(Rational(n) / d); }
}  // namespace

FoldArithmetic::FoldArithmetic(ConstructionTrace& t) : t_(t) {
  x_axis_ = fold_L(t_, zero(), one());
  y_axis_ = fold_perpendicular(t_, zero(), x_axis_);
  auto [b1, b2] = fold_B(t_, x_axis_, y_axis_);
  diag_ = t_.line(b1).b() == AN(-1) ? b1 : b2;  // x - y = 0
  ints_[0] = zero();
  ints_[1] = one();
}

AlgebraicNumber FoldArithmetic::value(ObjectId a) const { return t_.point(a).x; }

ObjectId FoldArithmetic::integer(long n) {
  if (auto it = ints_.find(n); it != ints_.end()) return it->second;
  ObjectId r;
  if (n < 0)
    r = neg(integer(-n));
  else if (n % 2 == 0)
    r = add(integer(n / 2), integer(n / 2));
  else
    r = add(integer(n - 1), one());
  ints_[n] = r;
  return r;
}

ObjectId FoldArithmetic::rational(const Rational& v) {
  if (v.get_den() == 1) return integer(v.get_num().get_si());
  return div(integer(v.get_num().get_si()), integer(v.get_den().get_si()));
}

ObjectId FoldArithmetic::add(ObjectId a, ObjectId b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  // Reflect O across the vertical line through the midpoint of a and b.
  ObjectId mid = value(a) == value(b) ? fold_perpendicular(t_, a, x_axis_) : fold_perp_bisector(t_, a, b);
  return fold_reflect(t_, zero(), mid);
}

ObjectId FoldArithmetic::neg(ObjectId a) { return is_zero(a) ? a : fold_reflect(t_, a, y_axis_); }

ObjectId FoldArithmetic::sub(ObjectId a, ObjectId b) { return add(a, neg(b)); }

ObjectId FoldArithmetic::mul(ObjectId a, ObjectId b) {
  if (is_zero(a) || is_zero(b)) return zero();
  if (value(a) == AN(1)) return b;
  if (value(b) == AN(1)) return a;
  // The line through (1,0), (0,b) and its parallel through (a,0), which meets
  // the y axis at (0, ab).
  ObjectId l1 = fold_L(t_, one(), on_y(b));
  ObjectId l2 = fold_parallel(t_, a, l1);
  return fold_reflect(t_, fold_P(t_, l2, y_axis_), diag_);
}

ObjectId FoldArithmetic::inv(ObjectId a) {
  if (is_zero(a)) fail(ErrorCode::DivisionByZero, "reciprocal of zero");
  if (value(a) == AN(1)) return a;
  // The line through (a,0), (0,1) and its parallel through (1,0), which meets
  // the y axis at (0, 1/a).
  ObjectId l1 = fold_L(t_, a, on_y(one()));
  ObjectId l2 = fold_parallel(t_, one(), l1);
  return fold_reflect(t_, fold_P(t_, l2, y_axis_), diag_);
}

ObjectId FoldArithmetic::div(ObjectId a, ObjectId b) { return mul(a, inv(b)); }

ObjectId FoldArithmetic::half(ObjectId a) {
  if (is_zero(a)) return a;
  return fold_P(t_, fold_perp_bisector(t_, zero(), a), x_axis_);
}

ObjectId FoldArithmetic::hyp(ObjectId a, ObjectId b) {
  if (is_zero(b)) return value(a).sign() < 0 ? neg(a) : a;
  ObjectId z = point(a, b);
  ObjectId oz = fold_L(t_, zero(), z);
  auto [b1, b2] = fold_B(t_, x_axis_, oz);
  Point Z = t_.point(z);
  for (ObjectId bis : {b1, b2}) {
    Point img = reflect_point(Z, t_.line(bis));
    if (img.y.is_zero() && img.x.sign() > 0) return fold_reflect(t_, z, bis);
  }
  fail(ErrorCode::ComputationLimit, "no bisector reflects the hypotenuse onto the positive axis");
}

ObjectId FoldArithmetic::hyp(const std::vector<ObjectId>& xs) {
  if (xs.empty()) fail(ErrorCode::EmptyInput, "hypotenuse of no lengths");
  ObjectId h = hyp(xs[0], zero());
  for (size_t i = 1; i < xs.size(); ++i) h = hyp(h, xs[i]);
  return h;
}

ObjectId FoldArithmetic::on_y(ObjectId a) {
  if (is_zero(a)) return a;
  if (auto it = on_y_.find(a); it != on_y_.end()) return it->second;
  return on_y_[a] = fold_reflect(t_, a, diag_);
}

ObjectId FoldArithmetic::point(ObjectId x, ObjectId y) {
  if (is_zero(y)) return x;
  if (is_zero(x)) return on_y(y);
  ObjectId vx = fold_perpendicular(t_, x, x_axis_);
  ObjectId hy = fold_parallel(t_, on_y(y), x_axis_);
  return fold_P(t_, vx, hy);
}

ObjectId FoldArithmetic::project_x(ObjectId p) {
  if (t_.point(p).y.is_zero()) return p;
  return fold_P(t_, fold_perpendicular(t_, p, x_axis_), x_axis_);
}

// ---------------------------------------------------------------------------

ObjectId perp_bisector_fig2(ConstructionTrace& t, ObjectId a, ObjectId b) {
  ObjectId ab = fold_L(t, a, b);
  ObjectId pa = fold_perpendicular(t, a, ab);
  ObjectId pb = fold_perpendicular(t, b, ab);
  auto [a1, a2] = fold_B(t, ab, pa);
  auto [b1, b2] = fold_B(t, ab, pb);
  // each bisector at A is parallel to one at B and meets the other
  if (parallel(t.line(a1), t.line(b1))) std::swap(b1, b2);
  ObjectId c = fold_P(t, a1, b1);
  ObjectId d = fold_P(t, a2, b2);
  return fold_L(t, c, d);
}

namespace {

AN hyp_value(const AN& a, const AN& b) {
  if (b.is_zero()) return a.sign() < 0 ? -a : a;
  const Point O(AN(0), AN(0)), Z(a, b);
  const Line x_axis(AN(0), AN(1), AN(0));
  auto [b1, b2] = angle_bisectors(x_axis, line_through(O, Z));
  for (const Line& bis : {b1, b2}) {
    Point img = reflect_point(Z, bis);
    if (img.y.is_zero() && img.x.sign() > 0) return img.x;
  }
  fail(ErrorCode::ComputationLimit, "no bisector reflects the hypotenuse onto the positive axis");
}

// (cos, sin) of k * angle for k = 0..n-1 by the angle-sum formulas.
std::vector<Point> rotations(const AN& c, const AN& s, int n) {
  std::vector<Point> v{Point(AN(1), AN(0))};
  for (int k = 1; k < n; ++k) {
    const Point& p = v.back();
    v.emplace_back(p.x * c - p.y * s, p.y * c + p.x * s);
  }
  return v;
}

std::vector<ObjectId> fold_vertices(ConstructionTrace& t, FoldArithmetic& F, ObjectId c, ObjectId s, int n) {
  std::vector<ObjectId> v{F.one(), F.point(c, s)};
  for (int k = 2; k < n; ++k) {
    ObjectId spoke = fold_L(t, F.zero(), v[static_cast<size_t>(k - 1)]);
    v.push_back(fold_reflect(t, v[static_cast<size_t>(k - 2)], spoke));
  }
  return v;
}

}  // namespace

AlgebraicNumber hypotenuse_sqrt(const std::vector<AlgebraicNumber>& xs) {
  if (xs.empty()) fail(ErrorCode::EmptyInput, "hypotenuse of no lengths");
  AN h = hyp_value(xs[0], AN(0));
  for (size_t i = 1; i < xs.size(); ++i) h = hyp_value(h, xs[i].lift_to(common_tower(h.tower(), xs[i].tower())));
  return h;
}

PolygonConstruction pentagon() {
  PolygonConstruction out{AN(0), AN(0), {}, ConstructionTrace(), {}};
  ConstructionTrace& t = out.trace;
  FoldArithmetic F(t);
  ObjectId r5 = F.hyp(F.one(), F.integer(2));
  ObjectId c = F.half(F.half(F.sub(r5, F.one())));       // (sqrt5 - 1) / 4
  ObjectId cos_pi_5 = F.half(F.half(F.add(r5, F.one())));  // (sqrt5 + 1) / 4
  ObjectId s = F.hyp(cos_pi_5, F.half(F.one()));
  t.set_label(c, "cos(2pi/5)");
  t.set_label(s, "sin(2pi/5)");
  out.vertex_ids = fold_vertices(t, F, c, s, 5);
  out.c = F.value(c);
  out.s = F.value(s);
  out.vertices = rotations(out.c, out.s, 5);
  return out;
}

PolygonConstruction heptagon() {
  PolygonConstruction out{AN(0), AN(0), {}, ConstructionTrace(), {}};
  ConstructionTrace& t = out.trace;
  FoldArithmetic F(t);
  ObjectId two = F.integer(2), three = F.integer(3);
  ObjectId r2 = F.hyp(F.one(), F.one());
  ObjectId r3 = F.hyp(r2, F.one());
  ObjectId r7 = F.hyp(r3, two);
  // A line at angle theta with cos theta = 1/sqrt28, i.e. direction (1, 3 sqrt3).
  ObjectId dir = fold_L(t, F.zero(), F.point(F.one(), F.mul(three, r3)));
  ObjectId tri = trisect_between_lines(t, F.x_axis(), dir).first;
  // Unit point on the first trisector, then its abscissa w = cos(theta/3).
  auto [b1, b2] = fold_B(t, F.x_axis(), tri);
  Point U = t.point(F.one());
  ObjectId bis = reflect_point(U, t.line(b1)).x.sign() > 0 ? b1 : b2;
  ObjectId w = F.project_x(fold_reflect(t, F.one(), bis));
  // z = m w with m = 2 sqrt7 / 3; t = z - 1/3; c = t / 2
  ObjectId m = F.div(F.add(r7, r7), three);
  ObjectId c = F.half(F.sub(F.mul(m, w), F.rational(Rational(1) / 3)));
  // cos(3pi/7) = -cos(4pi/7) = 1 - 2c^2; cos(pi/7) = -cos(6pi/7) = 1 - 2cos^2(3pi/7)
  ObjectId c37 = F.sub(F.one(), F.mul(two, F.mul(c, c)));
  ObjectId c17 = F.sub(F.one(), F.mul(two, F.mul(c37, c37)));
  ObjectId s = F.hyp(F.mul(F.half(r3), c17), F.mul(c37, c37));
  t.set_label(w, "w");
  t.set_label(c, "cos(2pi/7)");
  t.set_label(c17, "cos(pi/7)");
  t.set_label(c37, "cos(3pi/7)");
  t.set_label(s, "sin(2pi/7)");
  out.vertex_ids = fold_vertices(t, F, c, s, 7);
  out.c = F.value(c);
  out.s = F.value(s);
  out.vertices = rotations(out.c, out.s, 7);
  return out;
}

HeptagonData heptagon_pipeline() {
  HeptagonData d;
  ReducedCubic rc = reduce_cubic(RatPolynomial({Rational(-1), Rational(-2), Rational(1), Rational(1)}));
  d.p = rc.p;
  d.q = rc.q;
  auto [Tm, m] = adjoin_sqrt(TowerField::rationals(), AN(-4) * rc.p / AN(3));
  d.m = m;
  d.u = AN(-4) * rc.q.lift_to(Tm) / (m * m * m);
  d.w = trisect_cos(d.u);
  d.c = (d.m * d.w - q(1, 3)) * q(1, 2);
  d.cos_pi_7 = sqrt((AN(1) + d.c) * q(1, 2));
  d.cos_3pi_7 = AN(4) * d.cos_pi_7.pow(3) - AN(3) * d.cos_pi_7;
  auto [T3, r3] = adjoin_sqrt(d.cos_3pi_7.tower(), AN(3));
  d.s = hypotenuse_sqrt({r3 * q(1, 2) * d.cos_pi_7.lift_to(T3), d.cos_3pi_7.pow(2).lift_to(T3)});
  return d;
}

ArchimedesReport archimedes_demo(const Point& P) {
  if (!(P.x * P.x + P.y * P.y == AN(1))) fail(ErrorCode::DegenerateInput, "P is not on the unit circle");
  if (P.y.sign() <= 0 || P.x.sign() < 0) fail(ErrorCode::NotAcute, "the angle at O must lie in (0, 90] degrees");
  const Point O(AN(0), AN(0));
  const Line r(AN(0), AN(1), AN(0));
  Line m1 = trisectors(r, line_through(O, P)).first;
  auto [dx, dy] = m1.direction();
  if (dx.sign() < 0) {
    dx = -dx;
    dy = -dy;
  }
  AN len = sqrt(dx * dx + dy * dy);
  AN y = dx / len, s = dy / len;  // cos and sin of a third of the angle
  ArchimedesReport rep{P.lift_to(len.tower()), Point(-y, s), Point(AN(-2) * y, AN(0)), AN(0), false, false, false, false};
  const Point& C = rep.C;
  const Point& D = rep.D;
  rep.c_on_circle = C.x * C.x + C.y * C.y == AN(1);
  rep.cd_unit = squared_distance(C, D) == AN(1);
  rep.collinear = ((C.x - D.x) * (rep.P.y - D.y) - (C.y - D.y) * (rep.P.x - D.x)).is_zero();
  // angle ODP from the vectors D->O and D->P
  AN ox = -D.x, oy = -D.y, px = rep.P.x - D.x, py = rep.P.y - D.y;
  AN dp = sqrt(px * px + py * py);
  AN dO = ox.sign() > 0 ? ox : -ox;
  rep.cos_odp = (ox * px + oy * py) / (dO * dp.lift_to(common_tower(dO.tower(), dp.tower())));
  const AN& c = rep.cos_odp;
  rep.triple_angle = AN(4) * c * c * c - AN(3) * c == rep.P.x;
  return rep;
}

// ---------------------------------------------------------------------------

std::vector<std::string> recipe_names() {
  return {"archimedes", "heptagon", "hypotenuse", "pentagon", "perp-bisector"};
}

ConstructionRecipe run_recipe(const std::string& name) {
  const std::set<Axiom> pyth{Axiom::L, Axiom::P, Axiom::B};
  const std::set<Axiom> trisect{Axiom::L, Axiom::P, Axiom::B, Axiom::T};
  if (name == "pentagon" || name == "heptagon") {
    PolygonConstruction poly = name == "pentagon" ? pentagon() : heptagon();
    ConstructionRecipe r{name, name == "pentagon" ? pyth : trisect, std::move(poly.trace), {}};
    for (size_t k = 0; k < poly.vertex_ids.size(); ++k)
      r.outputs.emplace_back("V" + std::to_string(k), poly.vertex_ids[k]);
    return r;
  }
  if (name == "perp-bisector") {
    ConstructionRecipe r{name, pyth, ConstructionTrace(), {}};
    FoldArithmetic F(r.trace);
    ObjectId b = F.integer(4);
    ObjectId l = perp_bisector_fig2(r.trace, F.zero(), b);
    r.outputs = {{"A", F.zero()}, {"B", b}, {"CD", l}};
    return r;
  }
  if (name == "hypotenuse") {
    ConstructionRecipe r{name, pyth, ConstructionTrace(), {}};
    FoldArithmetic F(r.trace);
    ObjectId h = F.hyp(F.one(), F.integer(2));
    r.outputs = {{"sqrt5", h}};
    return r;
  }
  if (name == "archimedes") {
    // 60 degrees: P = (1/2, sqrt3/2); C = (-cos 20, sin 20), D = (-2 cos 20, 0)
    ConstructionRecipe r{name, trisect, ConstructionTrace(), {}};
    ConstructionTrace& t = r.trace;
    FoldArithmetic F(t);
    ObjectId half = F.half(F.one());
    ObjectId p = F.point(half, F.half(F.hyp(F.hyp(F.one(), F.one()), F.one())));
    ObjectId s = fold_L(t, F.zero(), p);
    ObjectId tri = trisect_between_lines(t, F.x_axis(), s).first;
    auto [b1, b2] = fold_B(t, F.x_axis(), tri);
    ObjectId bis = reflect_point(t.point(F.one()), t.line(b1)).x.sign() > 0 ? b1 : b2;
    ObjectId a = fold_reflect(t, F.one(), bis);
    ObjectId c = fold_reflect(t, a, F.y_axis());
    ObjectId y = F.project_x(a);
    ObjectId d = F.neg(F.add(y, y));
    ObjectId pd = fold_L(t, p, d);
    r.outputs = {{"P", p}, {"C", c}, {"D", d}, {"PD", pd}};
    return r;
  }
  fail(ErrorCode::UnknownRecipe, "no construction named '" + name + "'");
}

}  // namespace origami
