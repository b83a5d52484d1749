#include "origami/geometry.hpp"

#include <ostream>

#include "origami/errors.hpp"

namespace origami {

namespace {
using AN = AlgebraicNumber;
}

Point::Point(AlgebraicNumber x_, AlgebraicNumber y_) : x(std::move(x_)), y(std::move(y_)) {
  TowerPtr t = origami::common_tower(x.tower(), y.tower());
  x = x.lift_to(t);
  y = y.lift_to(t);
}

Line::Line(AlgebraicNumber a, AlgebraicNumber b, AlgebraicNumber c) {
  TowerPtr t = origami::common_tower(origami::common_tower(a.tower(), b.tower()), c.tower());
  a = a.lift_to(t);
  b = b.lift_to(t);
  c = c.lift_to(t);
  if (a.is_zero() && b.is_zero()) fail(ErrorCode::DegenerateInput, "line with a = b = 0");
  AN lead = a.is_zero() ? b : a;
  if (lead == AN(1)) {
    a_ = std::move(a);
    b_ = std::move(b);
    c_ = std::move(c);
    return;
  }
  AN inv = lead.inverse();
  a_ = a * inv;
  b_ = b * inv;
  c_ = c * inv;
}

Line Line::lift_to(const TowerPtr& t) const { return Line(a_.lift_to(t), b_.lift_to(t), c_.lift_to(t)); }

TowerPtr common_tower(const Point& p, const Point& q) { return common_tower(p.tower(), q.tower()); }
TowerPtr common_tower(const Line& l, const Line& m) { return common_tower(l.tower(), m.tower()); }
TowerPtr common_tower(const Point& p, const Line& l) { return common_tower(p.tower(), l.tower()); }

AlgebraicNumber squared_distance(const Point& p, const Point& q) {
  AN dx = p.x - q.x, dy = p.y - q.y;
  return dx * dx + dy * dy;
}

AlgebraicNumber dot(const std::pair<AN, AN>& u, const std::pair<AN, AN>& v) {
  return u.first * v.first + u.second * v.second;
}

Point midpoint(const Point& p, const Point& q) {
  const AN half(Rational(1, 2));
  return {(p.x + q.x) * half, (p.y + q.y) * half};
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) fail(ErrorCode::CoincidentPoints, "line through a single point is not determined");
  // (y_q - y_p) x - (x_q - x_p) y + (x_q y_p - x_p y_q) = 0
  return Line(q.y - p.y, p.x - q.x, q.x * p.y - p.x * q.y);
}

bool parallel(const Line& l1, const Line& l2) { return (l1.a() * l2.b() - l2.a() * l1.b()).is_zero(); }

Point intersect(const Line& l1, const Line& l2) {
  AN det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det.is_zero()) {
    if (l1 == l2) fail(ErrorCode::IdenticalLines, "lines coincide");
    fail(ErrorCode::ParallelLines, "lines are parallel");
  }
  AN x = (l1.b() * l2.c() - l2.b() * l1.c()) / det;
  AN y = (l1.c() * l2.a() - l2.c() * l1.a()) / det;
  return {x, y};
}

Point reflect_point(const Point& p, const Line& l) {
  AN r = l.residual(p);
  if (r.is_zero()) return p.lift_to(common_tower(p, l));
  AN k = AN(2) * r / (l.a() * l.a() + l.b() * l.b());
  return {p.x - k * l.a(), p.y - k * l.b()};
}

Line reflect_line(const Line& m, const Line& l) {
  // Reflect two points of m.
  auto [dx, dy] = m.direction();
  Point p0 = m.a().is_zero() ? Point(AN(0), -m.c() / m.b()) : Point(-m.c() / m.a(), AN(0));
  Point p1(p0.x + dx, p0.y + dy);
  return line_through(reflect_point(p0, l), reflect_point(p1, l));
}

Line perpendicular_from(const Point& p, const Line& l) {
  // normal (-b, a)
  return Line(-l.b(), l.a(), l.b() * p.x - l.a() * p.y);
}

Line perpendicular_at(const Line& l, const Point& p) {
  if (!l.contains(p)) fail(ErrorCode::PointNotOnLine, "point is not on the line");
  return perpendicular_from(p, l);
}

Point foot_of_perpendicular(const Point& p, const Line& l) { return midpoint(p, reflect_point(p, l)); }

Line perp_bisector(const Point& p, const Point& q) {
  if (p == q) fail(ErrorCode::CoincidentPoints, "perpendicular bisector of a single point");
  AN dx = q.x - p.x, dy = q.y - p.y;
  AN c = (p.x * p.x + p.y * p.y - q.x * q.x - q.y * q.y) * AN(Rational(1, 2));
  return Line(dx, dy, c);
}

std::pair<Line, Line> angle_bisectors(const Line& l1, const Line& l2) {
  if (parallel(l1, l2)) {
    if (l1 == l2) fail(ErrorCode::IdenticalLines, "lines coincide");
    fail(ErrorCode::ParallelLines, "lines are parallel");
  }
  TowerPtr t = common_tower(l1, l2);
  auto [t1, n1] = adjoin_sqrt(t, l1.a() * l1.a() + l1.b() * l1.b());
  auto [t2, n2] = adjoin_sqrt(t1, (l2.a() * l2.a() + l2.b() * l2.b()).lift_to(t1));
  n1 = n1.lift_to(t2);
  Line m1(n2 * l1.a() - n1 * l2.a(), n2 * l1.b() - n1 * l2.b(), n2 * l1.c() - n1 * l2.c());
  Line m2(n2 * l1.a() + n1 * l2.a(), n2 * l1.b() + n1 * l2.b(), n2 * l1.c() + n1 * l2.c());
  return {m1, m2};
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << p.x.decimal(12) << ", " << p.y.decimal(12) << ")";
}

std::ostream& operator<<(std::ostream& os, const Line& l) {
  return os << l.a().decimal(12) << " x + " << l.b().decimal(12) << " y + " << l.c().decimal(12) << " = 0";
}

}  // namespace origami
