#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <functional>
#include <random>

#include "origami/cubic.hpp"
#include "origami/errors.hpp"

using namespace origami;

namespace {

using AN = AlgebraicNumber;

AN R(long n, long d = 1) { return AN(Rational(n) / d); }

// Discriminant of x^3 + A x^2 + B x + C by the textbook expansion.
Rational general_discriminant(const Rational& A, const Rational& B, const Rational& C) {
  return A * A * B * B - 4 * B * B * B - 4 * A * A * A * C - 27 * C * C + 18 * A * B * C;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST(Discriminant, Quadratic) {
  EXPECT_EQ(discriminant_quadratic(R(0), R(-2)), R(8));
  EXPECT_EQ(discriminant_quadratic(R(1), R(-1)), R(5));
  EXPECT_EQ(discriminant_quadratic(R(2), R(1)), R(0));
}

TEST(Discriminant, Cubic) {
  EXPECT_EQ(discriminant_cubic({R(-7, 3), R(-7, 27)}), AN(general_discriminant(0, Rational(-7, 3), Rational(-7, 27))));
  EXPECT_EQ(discriminant_cubic({R(-7, 3), R(-7, 27)}), R(49));
  EXPECT_EQ(discriminant_cubic({R(0), R(-2)}), R(-108));
  EXPECT_EQ(discriminant_cubic({R(-3), R(1)}), R(81));
  EXPECT_EQ(sturm_real_root_count(RatPolynomial::from_descending({1, 0, -3, 1})), 3);
}

TEST(ReduceCubic, Examples) {
  auto c = reduce_cubic(R(1), R(-2), R(-1));
  EXPECT_EQ(c.p, R(-7, 3));
  EXPECT_EQ(c.q, R(-7, 27));
  auto d = reduce_cubic(R(0), R(5), R(-2));
  EXPECT_EQ(d.p, R(5));
  EXPECT_EQ(d.q, R(-2));
  auto e = reduce_cubic(R(-3), R(3), R(-1));
  EXPECT_TRUE(e.p.is_zero());
  EXPECT_TRUE(e.q.is_zero());
}

TEST(ReduceCubic, PreservesDiscriminant) {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> d(-12, 12);
  for (int i = 0; i < 50; ++i) {
    Rational A = Rational(d(rng)) / (1 + std::abs(d(rng)));
    Rational B = Rational(d(rng)) / (1 + std::abs(d(rng)));
    Rational C = Rational(d(rng)) / (1 + std::abs(d(rng)));
    auto c = reduce_cubic(AN(A), AN(B), AN(C));
    EXPECT_EQ(discriminant_cubic(c), AN(general_discriminant(A, B, C)));
    // roots shift by A/3: f(y - A/3) equals the reduced cubic at y, checked at a few y
    for (int y = -2; y <= 2; ++y) {
      Rational x = Rational(y) - A / 3;
      Rational fx = x * x * x + A * x * x + B * x + C;
      AN gy = R(y * y * y) + c.p * R(y) + c.q;
      EXPECT_EQ(gy, AN(fx));
    }
  }
}

TEST(TrisectCos, Examples) {
  AN r28 = sqrt(R(28));
  AN w = trisect_cos(R(1) / r28);
  EXPECT_EQ(R(4) * w.pow(3) - R(3) * w, R(1) / r28);
  AN h = trisect_cos(R(0));
  EXPECT_EQ(R(4) * h * h, R(3));
  EXPECT_NEAR(h.approx(), std::sqrt(3.0) / 2, 1e-15);
  AN c20 = trisect_cos(R(1, 2));
  EXPECT_NEAR((4 * std::pow(c20.approx(), 3) - 3 * c20.approx()), 0.5, 1e-14);
  EXPECT_EQ(minimal_polynomial(c20), RatPolynomial::from_descending({8, 0, -6, -1}));
}

TEST(SolveCubic, Heptagon) {
  ReducedCubic c{R(-7, 3), R(-7, 27)};
  CubicSolution s = solve_totally_real_cubic(c);
  std::vector<double> want;
  for (int k = 1; k <= 3; ++k) want.push_back(2 * std::cos(2 * k * std::numbers::pi / 7) + 1.0 / 3);
  std::sort(want.rbegin(), want.rend());
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(s.roots[static_cast<size_t>(i)].approx(), want[static_cast<size_t>(i)], 1e-12);
}

TEST(SolveCubic, SplitsAtZero) {
  CubicSolution s = solve_totally_real_cubic({R(-3, 4), R(0)});
  EXPECT_EQ(s.scale, R(1));
  EXPECT_EQ(s.roots[0] * s.roots[0], R(3, 4));
  EXPECT_TRUE(s.roots[1].is_zero());
  EXPECT_EQ(s.roots[2], -s.roots[0]);
}

TEST(SolveCubic, VietaAndResiduals) {
  for (auto [p, q] : {std::pair{R(-3), R(1)}, std::pair{R(-7, 3), R(-7, 27)}, std::pair{R(-5), R(-3, 2)}}) {
    ReducedCubic c{p, q};
    CubicSolution s = solve_totally_real_cubic(c);
    const auto& r = s.roots;
    EXPECT_TRUE((r[0] + r[1] + r[2]).is_zero());
    EXPECT_EQ(r[0] * r[1] + r[0] * r[2] + r[1] * r[2], p);
    EXPECT_EQ(r[0] * r[1] * r[2], -q);
    for (const auto& x : r) {
      EXPECT_TRUE((x * x * x + p * x + q).is_zero());
      EXPECT_TRUE(is_totally_real(x));
    }
    EXPECT_GT(r[0].compare(r[1]), 0);
    EXPECT_GT(r[1].compare(r[2]), 0);
  }
}

TEST(SolveCubic, RejectsNonPositiveDiscriminant) {
  EXPECT_EQ(code_of([] { solve_totally_real_cubic({R(0), R(-2)}); }), ErrorCode::NotTotallyReal);
  EXPECT_EQ(code_of([] { solve_totally_real_cubic({R(-3), R(2)}); }), ErrorCode::NotTotallyReal);
}

TEST(SolveCubic, RandomTrisectionRootSets) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> d(-99, 99);
  for (int i = 0; i < 100; ++i) {
    AN u(Rational(d(rng)) / 100);
    // 4y^3 - 3y - u  ->  y^3 - (3/4) y - u/4
    CubicSolution s = solve_totally_real_cubic({R(-3, 4), -u / R(4)});
    const auto& y = s.roots;
    for (const auto& v : y) EXPECT_TRUE((R(4) * v.pow(3) - R(3) * v - u).is_zero());
    EXPECT_TRUE((y[0] + y[1] + y[2]).is_zero());
    EXPECT_EQ(y[0] * y[1] + y[0] * y[2] + y[1] * y[2], R(-3, 4));
    EXPECT_EQ(y[0] * y[1] * y[2], u / R(4));
    EXPECT_NEAR(y[0].approx(), std::cos(std::acos(u.approx()) / 3), 1e-12);
  }
}

TEST(SolveCubic, CriticalValueIdentity) {
  for (auto [p, q] : {std::pair{R(-3), R(1)}, std::pair{R(-7, 3), R(-7, 27)}, std::pair{R(-1), R(5)}}) {
    auto [F, k] = adjoin_sqrt(p.tower(), -p / R(3));
    auto f = [&](const AN& x) { return x * x * x + p * x + q; };
    EXPECT_EQ(f(k) * f(-k), -discriminant_cubic({p, q}) / R(27));
  }
}

TEST(TotallyRealCubic, Examples) {
  ReducedCubic hept{R(-7, 3), R(-7, 27)};
  EXPECT_TRUE(is_totally_real_cubic(hept));
  EXPECT_EQ(cubic_splitting_degree(hept), 3);

  AN s2 = sqrt(R(2));
  AN up = sqrt(R(2) + s2);
  ReducedCubic c{R(-3, 4), -up / R(4)};
  EXPECT_FALSE(is_totally_real_cubic(c));
  EXPECT_LT(discriminant_cubic(c).sign(), 0);
  EXPECT_EQ(discriminant_cubic(c), R(27) * (R(1) - up * up) / R(16));

  EXPECT_FALSE(is_totally_real_cubic(RatPolynomial::from_descending({1, 0, 0, -2})));
  // monic form of 8x^3 - 6x - 1 has discriminant 81/64
  EXPECT_EQ(cubic_splitting_degree(reduce_cubic(RatPolynomial::from_descending({8, 0, -6, -1}))), 3);
  EXPECT_EQ(cubic_splitting_degree(reduce_cubic(RatPolynomial::from_descending({1, 0, -4, 1}))), 6);
}

TEST(TotallyRealCubic, Errors) {
  EXPECT_EQ(code_of([] { is_totally_real_cubic(RatPolynomial::from_descending({1, 0, -1})); }), ErrorCode::NotCubic);
  EXPECT_EQ(code_of([] { is_totally_real_cubic(RatPolynomial::from_descending({1, 0, -1, 0})); }),
            ErrorCode::NotIrreducible);
}

TEST(TotallyRealCubic, ImpliesSolvable) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-9, 9);
  int seen = 0;
  for (int i = 0; i < 200 && seen < 20; ++i) {
    RatPolynomial f = RatPolynomial::from_descending({1, d(rng), d(rng), d(rng)});
    if (!rational_roots(f).empty()) continue;
    if (!is_totally_real_cubic(f)) continue;
    ++seen;
    CubicSolution s = solve_totally_real_cubic(reduce_cubic(f));
    for (const auto& r : s.roots) EXPECT_TRUE(is_totally_real(r));
  }
  EXPECT_GT(seen, 5);
}
