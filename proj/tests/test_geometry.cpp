#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "origami/errors.hpp"
#include "origami/geometry.hpp"

using namespace origami;

namespace {

using AN = AlgebraicNumber;

AN R(long n, long d = 1) { return AN(Rational(n) / d); }
Point pt(long x, long y) { return {R(x), R(y)}; }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

// Random points with coordinates in Q(sqrt2, sqrt3).
struct Sampler {
  std::mt19937 rng{99};
  AN s2 = sqrt(R(2));
  AN s3;
  Sampler() { s3 = adjoin_sqrt(s2.tower(), R(3)).second; }
  AN num() {
    std::uniform_int_distribution<int> d(-6, 6);
    return R(d(rng), 1 + std::abs(d(rng))) + R(d(rng)) * s2 + R(d(rng), 3) * s3;
  }
  Point point() { return {num(), num()}; }
  Line line() {
    while (true) {
      Point p = point(), q = point();
      if (!(p == q)) return line_through(p, q);
    }
  }
};

}  // namespace

TEST(LineThrough, Examples) {
  EXPECT_EQ(line_through(pt(0, 0), pt(1, 1)), Line(R(1), R(-1), R(0)));
  EXPECT_EQ(line_through(pt(0, 0), pt(0, 1)), Line(R(1), R(0), R(0)));
  AN c = (sqrt(R(5)) - R(1)) / R(4);
  AN s = sqrt(R(1) - c * c);
  Point p(R(1), R(0)), q(c, s);
  Line l = line_through(p, q);
  EXPECT_TRUE(l.contains(p));
  EXPECT_TRUE(l.contains(q));
  EXPECT_EQ(l.a(), R(1));
  EXPECT_EQ(code_of([] { line_through(pt(2, 3), pt(2, 3)); }), ErrorCode::CoincidentPoints);
}

TEST(Intersect, Examples) {
  EXPECT_EQ(intersect(Line(R(1), R(0), R(0)), Line(R(0), R(1), R(0))), pt(0, 0));
  EXPECT_EQ(intersect(Line(R(1), R(-1), R(0)), Line(R(1), R(1), R(-2))), pt(1, 1));
  EXPECT_EQ(code_of([] { intersect(Line(R(1), R(0), R(0)), Line(R(2), R(0), R(1))); }), ErrorCode::ParallelLines);
  EXPECT_EQ(code_of([] { intersect(Line(R(1), R(0), R(0)), Line(R(2), R(0), R(0))); }), ErrorCode::IdenticalLines);
  Sampler s;
  for (int i = 0; i < 20; ++i) {
    Line l1 = s.line(), l2 = s.line();
    if (parallel(l1, l2)) continue;
    Point p = intersect(l1, l2);
    EXPECT_TRUE(l1.contains(p));
    EXPECT_TRUE(l2.contains(p));
  }
}

TEST(Reflect, Examples) {
  EXPECT_EQ(reflect_point(pt(0, 1), Line(R(0), R(1), R(0))), pt(0, -1));
  Line diag(R(1), R(-1), R(0));
  EXPECT_EQ(reflect_point(pt(3, 3), diag), pt(3, 3));
  EXPECT_EQ(reflect_point(pt(1, 2), diag), pt(2, 1));
}

TEST(Reflect, InvolutionAndPerpendicularity) {
  Sampler s;
  for (int i = 0; i < 100; ++i) {
    Point p = s.point();
    Line l = s.line();
    Point q = reflect_point(p, l);
    EXPECT_EQ(reflect_point(q, l), p.lift_to(q.tower()));
    EXPECT_TRUE(l.contains(midpoint(p, q)));
    EXPECT_TRUE(dot({q.x - p.x, q.y - p.y}, l.direction()).is_zero());
  }
}

TEST(Perpendicular, Examples) {
  Line xaxis(R(0), R(1), R(0));
  EXPECT_EQ(perpendicular_at(xaxis, pt(0, 0)), Line(R(1), R(0), R(0)));
  EXPECT_EQ(perpendicular_at(Line(R(1), R(-1), R(0)), pt(1, 1)), Line(R(1), R(1), R(-2)));
  EXPECT_EQ(code_of([&] { perpendicular_at(xaxis, pt(0, 1)); }), ErrorCode::PointNotOnLine);
  EXPECT_EQ(perpendicular_from(pt(0, 1), xaxis), Line(R(1), R(0), R(0)));
  EXPECT_EQ(perpendicular_from(pt(4, 0), xaxis), perpendicular_at(xaxis, pt(4, 0)));
  Sampler s;
  for (int i = 0; i < 20; ++i) {
    Line l = s.line();
    Point p = s.point();
    Line m = perpendicular_from(p, l);
    EXPECT_TRUE(m.contains(p));
    EXPECT_TRUE(dot(m.direction(), l.direction()).is_zero());
    Point f = foot_of_perpendicular(p, l);
    EXPECT_TRUE(l.contains(f));
    EXPECT_TRUE(m.contains(f));
  }
}

TEST(PerpBisector, Examples) {
  EXPECT_EQ(perp_bisector(pt(0, 0), pt(2, 0)), Line(R(1), R(0), R(-1)));
  EXPECT_EQ(perp_bisector(pt(0, 0), pt(0, 2)), Line(R(0), R(1), R(-1)));
  EXPECT_EQ(perp_bisector(pt(1, 0), pt(0, 1)), Line(R(1), R(-1), R(0)));
  Sampler s;
  for (int i = 0; i < 10; ++i) {
    Point p = s.point(), q = s.point();
    if (p == q) continue;
    Line l = perp_bisector(p, q);
    EXPECT_TRUE(l.contains(midpoint(p, q)));
    auto [dx, dy] = l.direction();
    for (int k = -1; k <= 1; ++k) {
      Point m = midpoint(p, q);
      Point x(m.x + R(k) * dx, m.y + R(k) * dy);
      EXPECT_EQ(squared_distance(x, p), squared_distance(x, q));
    }
  }
}

TEST(AngleBisectors, Examples) {
  Line yaxis(R(1), R(0), R(0)), xaxis(R(0), R(1), R(0));
  auto [m1, m2] = angle_bisectors(yaxis, xaxis);
  EXPECT_TRUE((m1 == Line(R(1), R(-1), R(0)) && m2 == Line(R(1), R(1), R(0))) ||
              (m2 == Line(R(1), R(-1), R(0)) && m1 == Line(R(1), R(1), R(0))));
  EXPECT_EQ(code_of([&] { angle_bisectors(xaxis, xaxis); }), ErrorCode::IdenticalLines);
  EXPECT_EQ(code_of([&] { angle_bisectors(xaxis, Line(R(0), R(1), R(3))); }), ErrorCode::ParallelLines);

  AN s3 = sqrt(R(3));
  Line steep(s3, R(-1), R(0));  // y = sqrt3 x
  auto [b1, b2] = angle_bisectors(xaxis, steep);
  // a line y = k x has canonical form x - y/k = 0, so b = -1/k
  AN want = R(1) / s3;
  bool found = false;
  for (const Line& b : {b1, b2})
    if (!b.b().is_zero() && -(R(1) / b.b()) == want.lift_to(b.tower())) found = true;
  EXPECT_TRUE(found);
}

TEST(AngleBisectors, ReflectAndPerpendicular) {
  Sampler s;
  for (int i = 0; i < 8; ++i) {
    Line l1 = s.line(), l2 = s.line();
    if (parallel(l1, l2)) continue;
    auto [m1, m2] = angle_bisectors(l1, l2);
    EXPECT_TRUE(dot(m1.direction(), m2.direction()).is_zero());
    TowerPtr t = m1.tower();
    EXPECT_EQ(reflect_line(l1, m1), l2.lift_to(t));
    EXPECT_EQ(reflect_line(l1, m2), l2.lift_to(t));
  }
}
