#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <random>

#include "origami/constructions.hpp"
#include "origami/errors.hpp"

using namespace origami;
using AN = AlgebraicNumber;

namespace {

AN q(long n, long d = 1) { return AN(Rational(n) / d); }

RatPolynomial poly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RatPolynomial(std::move(v));
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::IoError;
}

bool subset(const std::set<Axiom>& a, const std::set<Axiom>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void check_regular_polygon(const std::vector<Point>& v) {
  const Point O(AN(0), AN(0));
  AN chord = squared_distance(v.back(), v.front());
  AN sx(0), sy(0);
  for (size_t k = 0; k < v.size(); ++k) {
    EXPECT_EQ(squared_distance(O, v[k]), AN(1)) << "vertex " << k;
    if (k > 0) {
      EXPECT_EQ(squared_distance(v[k - 1], v[k]), chord) << "chord " << k;
    }
    sx += v[k].x;
    sy += v[k].y;
  }
  EXPECT_TRUE(sx.is_zero());
  EXPECT_TRUE(sy.is_zero());
}

}  // namespace

TEST(FoldArithmetic, AgreesWithRationalArithmetic) {
  ConstructionTrace t;
  FoldArithmetic F(t);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-9, 9), den(1, 5);
  for (int i = 0; i < 20; ++i) {
    Rational a = Rational(d(rng)) / den(rng), b = Rational(d(rng)) / den(rng);
    ObjectId A = F.rational(a), B = F.rational(b);
    EXPECT_EQ(F.value(A), AN(a));
    EXPECT_EQ(F.value(F.add(A, B)), AN(Rational(a + b)));
    EXPECT_EQ(F.value(F.sub(A, B)), AN(Rational(a - b)));
    EXPECT_EQ(F.value(F.mul(A, B)), AN(Rational(a * b)));
    EXPECT_EQ(F.value(F.half(A)), AN(Rational(a / 2)));
    if (b != 0) EXPECT_EQ(F.value(F.div(A, B)), AN(Rational(a / b)));
  }
  EXPECT_EQ(code_of([&] { F.inv(F.zero()); }), ErrorCode::DivisionByZero);
  EXPECT_TRUE(subset(t.profile(), {Axiom::L, Axiom::P, Axiom::B}));
  validate(t);
}

TEST(FoldArithmetic, Hypotenuse) {
  ConstructionTrace t;
  FoldArithmetic F(t);
  AN h = F.value(F.hyp(F.integer(3), F.integer(4)));
  EXPECT_EQ(h, AN(5));
  AN r5 = F.value(F.hyp(F.one(), F.integer(2)));
  EXPECT_EQ(r5 * r5, AN(5));
  EXPECT_GT(r5.sign(), 0);
  AN r3 = F.value(F.hyp({F.one(), F.one(), F.one()}));
  EXPECT_EQ(r3 * r3, AN(3));
  EXPECT_EQ(F.value(F.hyp(F.integer(-2), F.zero())), AN(2));
  EXPECT_TRUE(subset(t.profile(), {Axiom::L, Axiom::P, Axiom::B}));
  validate(t);
}

TEST(FoldedBisector, HorizontalAndVerticalSegments) {
  ConstructionTrace t;
  FoldArithmetic F(t);
  ObjectId four = F.integer(4);
  EXPECT_EQ(t.line(perp_bisector_fig2(t, F.zero(), four)), Line(q(1), q(0), q(-2)));
  ObjectId two_up = F.on_y(F.integer(2));
  EXPECT_EQ(t.line(perp_bisector_fig2(t, F.zero(), two_up)), Line(q(0), q(1), q(-1)));
  EXPECT_TRUE(subset(t.profile(), {Axiom::L, Axiom::P, Axiom::B}));
  validate(t);
}

TEST(FoldedBisector, RandomAlgebraicPairsMatchKernel) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  ConstructionTrace t;
  FoldArithmetic F(t);
  ObjectId r2 = F.hyp(F.one(), F.one());
  for (int i = 0; i < 6; ++i) {
    auto num = [&] { return F.add(F.rational(Rational(d(rng)) / 2), F.mul(F.integer(d(rng)), r2)); };
    ObjectId a = F.point(num(), num()), b = F.point(num(), num());
    if (t.point(a) == t.point(b)) continue;
    EXPECT_EQ(t.line(perp_bisector_fig2(t, a, b)), perp_bisector(t.point(a), t.point(b)));
  }
  EXPECT_TRUE(subset(t.profile(), {Axiom::L, Axiom::P, Axiom::B}));
  validate(t);
}

TEST(HypotenuseSqrt, Examples) {
  AN r5 = hypotenuse_sqrt({AN(1), AN(2)});
  EXPECT_EQ(r5 * r5, AN(5));
  EXPECT_GT(r5.sign(), 0);
  EXPECT_EQ(hypotenuse_sqrt({AN(3), AN(4)}), AN(5));
  AN r3 = hypotenuse_sqrt({AN(1), AN(1), AN(1)});
  EXPECT_EQ(r3 * r3, AN(3));
  EXPECT_EQ(r3.tower()->height(), 2);  // sqrt2, then sqrt3
  EXPECT_EQ(code_of([] { hypotenuse_sqrt({}); }), ErrorCode::EmptyInput);
}

TEST(Pentagon, NumbersVerticesAndProfile) {
  PolygonConstruction p = pentagon();
  EXPECT_EQ(minimal_polynomial(p.c), poly({-1, 2, 4}));
  EXPECT_EQ(p.s * p.s + p.c * p.c, AN(1));
  EXPECT_NEAR(p.c.approx(), std::cos(2 * M_PI / 5), 1e-15);
  EXPECT_NEAR(p.s.approx(), std::sin(2 * M_PI / 5), 1e-15);
  ASSERT_EQ(p.vertices.size(), 5u);
  check_regular_polygon(p.vertices);
  for (size_t k = 0; k < 5; ++k) EXPECT_EQ(p.trace.point(p.vertex_ids[k]), p.vertices[k]);
  EXPECT_TRUE(subset(p.trace.profile(), {Axiom::L, Axiom::P, Axiom::B}));
  validate(p.trace);
}

TEST(Heptagon, NumbersVerticesAndProfile) {
  PolygonConstruction h = heptagon();
  EXPECT_EQ(minimal_polynomial(h.c), poly({-1, -4, 4, 8}));
  EXPECT_EQ(h.s * h.s + h.c * h.c, AN(1));
  EXPECT_NEAR(h.c.approx(), std::cos(2 * M_PI / 7), 1e-15);
  EXPECT_NEAR(h.s.approx(), std::sin(2 * M_PI / 7), 1e-15);
  ASSERT_EQ(h.vertices.size(), 7u);
  check_regular_polygon(h.vertices);
  for (size_t k = 0; k < 7; ++k) EXPECT_EQ(h.trace.point(h.vertex_ids[k]), h.vertices[k]);
  auto prof = h.trace.profile();
  EXPECT_TRUE(subset(prof, {Axiom::L, Axiom::P, Axiom::B, Axiom::T}));
  EXPECT_TRUE(prof.count(Axiom::T));
  EXPECT_TRUE(h.trace.tower()->is_totally_real());
  validate(h.trace);
}

TEST(Heptagon, PipelineValues) {
  HeptagonData d = heptagon_pipeline();
  EXPECT_EQ(d.p, q(-7, 3));
  EXPECT_EQ(d.q, q(-7, 27));
  EXPECT_EQ(d.m * d.m, q(28, 9));
  EXPECT_EQ(d.u * d.u, q(1, 28));
  EXPECT_GT(d.u.sign(), 0);
  EXPECT_EQ(AN(4) * d.w.pow(3) - AN(3) * d.w, d.u);
  EXPECT_EQ(minimal_polynomial(d.c), poly({-1, -4, 4, 8}));
  // every conjugate of u is in [-1, 1] and (1 + c)/2 is totally positive
  EXPECT_TRUE(is_totally_positive(AN(1) - d.u * d.u));
  EXPECT_TRUE(is_totally_positive((AN(1) + d.c) * q(1, 2)));
  EXPECT_TRUE(is_totally_real(d.c));
  EXPECT_EQ(sturm_real_root_count(minimal_polynomial(d.c)), 3);
  // 4 sin^2(2pi/7) = 3 cos^2(pi/7) + 4 cos^4(3pi/7)
  EXPECT_TRUE((AN(4) * d.s * d.s - AN(3) * d.cos_pi_7.pow(2) - AN(4) * d.cos_3pi_7.pow(4)).is_zero());
  EXPECT_EQ(d.s * d.s + d.c * d.c, AN(1));
  EXPECT_NEAR(d.cos_pi_7.approx(), std::cos(M_PI / 7), 1e-15);
  EXPECT_NEAR(d.cos_3pi_7.approx(), std::cos(3 * M_PI / 7), 1e-15);
  // the folded construction and the bare pipeline give the same numbers
  PolygonConstruction h = heptagon();
  EXPECT_EQ(h.c.decimal(40), d.c.decimal(40));
  EXPECT_EQ(h.s.decimal(40), d.s.decimal(40));
}

TEST(Archimedes, RightAngle) {
  ArchimedesReport r = archimedes_demo(Point(AN(0), AN(1)));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.cos_odp * r.cos_odp, q(3, 4));
  EXPECT_GT(r.cos_odp.sign(), 0);
}

TEST(Archimedes, SixtyDegrees) {
  AN r3 = sqrt(AN(3));
  ArchimedesReport r = archimedes_demo(Point(q(1, 2), r3 * q(1, 2)));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(minimal_polynomial(r.cos_odp), poly({-1, -6, 0, 8}));
  EXPECT_NEAR(r.cos_odp.approx(), std::cos(M_PI / 9), 1e-15);
}

TEST(Archimedes, Errors) {
  EXPECT_EQ(code_of([] { archimedes_demo(Point(AN(1), AN(0))); }), ErrorCode::NotAcute);
  EXPECT_EQ(code_of([] { archimedes_demo(Point(q(-3, 5), q(4, 5))); }), ErrorCode::NotAcute);
  EXPECT_EQ(code_of([] { archimedes_demo(Point(q(1), q(1))); }), ErrorCode::DegenerateInput);
  ArchimedesReport r = archimedes_demo(Point(q(3, 5), q(4, 5)));
  EXPECT_TRUE(r.ok());
}

TEST(Recipes, AllRunValidateAndRespectDeclaredAxioms) {
  for (const auto& name : recipe_names()) {
    ConstructionRecipe r = run_recipe(name);
    EXPECT_EQ(r.name, name);
    EXPECT_TRUE(subset(r.trace.profile(), r.axioms)) << name;
    EXPECT_FALSE(r.outputs.empty());
    validate(r.trace);
  }
  EXPECT_EQ(code_of([] { run_recipe("hexagon"); }), ErrorCode::UnknownRecipe);
}

TEST(Recipes, ArchimedesConfigurationIsCollinear) {
  ConstructionRecipe r = run_recipe("archimedes");
  std::map<std::string, ObjectId> o(r.outputs.begin(), r.outputs.end());
  Line pd = r.trace.line(o["PD"]);
  Point C = r.trace.point(o["C"]), D = r.trace.point(o["D"]);
  EXPECT_TRUE(pd.contains(C));
  EXPECT_EQ(squared_distance(C, D), AN(1));
  EXPECT_EQ(C.x * C.x + C.y * C.y, AN(1));
}
