#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "origami/errors.hpp"
#include "origami/tower.hpp"

using namespace origami;

namespace {

const TowerPtr Q = TowerField::rationals();

AlgebraicNumber root2() { return sqrt(AlgebraicNumber(2)); }

RatPolynomial P(std::initializer_list<long> desc) {
  std::vector<Rational> c;
  for (long v : desc) c.emplace_back(v);
  return RatPolynomial::from_descending(c);
}

// t = 2cos(2pi/7) solves t^3 + t^2 - 2t - 1 = 0; with z = t + 1/3 = (2 sqrt7 / 3) w
// the cubic becomes 4w^3 - 3w = 1/sqrt28.
AlgebraicNumber cos_2pi_7() {
  auto [F, r28] = adjoin_sqrt(Q, AlgebraicNumber(28));
  auto [G, w] = adjoin_trisection_root(F, AlgebraicNumber(1) / r28);
  AlgebraicNumber sqrt7 = r28 / AlgebraicNumber(2);
  AlgebraicNumber t = (AlgebraicNumber(2) * sqrt7 * w - AlgebraicNumber(1)) / AlgebraicNumber(3);
  return t / AlgebraicNumber(2);
}

}  // namespace

TEST(FieldOps, DefiningRelation) {
  AlgebraicNumber r = root2();
  EXPECT_EQ(r * r, AlgebraicNumber(2));
  EXPECT_EQ(r.tower()->degree(), 2u);
}

TEST(FieldOps, InverseOfOnePlusRoot2) {
  AlgebraicNumber r = root2();
  AlgebraicNumber x = AlgebraicNumber(1) / (AlgebraicNumber(1) + r);
  EXPECT_EQ(x * (AlgebraicNumber(1) + r), AlgebraicNumber(1));
  EXPECT_EQ(x, r - AlgebraicNumber(1));
}

TEST(FieldOps, AdditiveIdentityOnRandomElements) {
  auto [F, a] = adjoin_sqrt(Q, AlgebraicNumber(3));
  auto [G, b] = adjoin_trisection_root(F, AlgebraicNumber(Rational(1, 3)));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int i = 0; i < 20; ++i) {
    std::vector<Rational> c(G->degree());
    for (auto& v : c) v = Rational(d(rng)) / (1 + std::abs(d(rng)));
    AlgebraicNumber x(G, c);
    EXPECT_EQ(x + AlgebraicNumber(0), x);
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), AlgebraicNumber(1));
      EXPECT_EQ((x * x) / x, x);
    }
  }
}

TEST(FieldOps, DivisionByZeroAndIncompatibleTowers) {
  try {
    (void)(root2() / AlgebraicNumber(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
  AlgebraicNumber a = sqrt(AlgebraicNumber(2));
  AlgebraicNumber b = sqrt(AlgebraicNumber(3));
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompatibleTowers);
  }
}

TEST(Sign, Examples) {
  EXPECT_EQ(sign_of(AlgebraicNumber(0)), 0);
  EXPECT_EQ(sign_of(root2() - AlgebraicNumber(1)), 1);
  auto [F, s2] = adjoin_sqrt(Q, AlgebraicNumber(2));
  auto [G, s3] = adjoin_sqrt(F, AlgebraicNumber(3));
  auto [H, s] = adjoin_sqrt(G, AlgebraicNumber(5) + AlgebraicNumber(2) * s2.lift_to(G) * s3);
  EXPECT_EQ(H, G);  // 5 + 2 sqrt6 is a square in Q(sqrt2, sqrt3)
  EXPECT_EQ(sign_of(s2.lift_to(H) + s3.lift_to(H) - s), 0);
}

TEST(Sign, AgreesWithNarrowInterval) {
  auto [F, a] = adjoin_sqrt(Q, AlgebraicNumber(5));
  auto [G, b] = adjoin_trisection_root(F, AlgebraicNumber(Rational(2, 7)));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-5, 5);
  Rational width = Rational(1) / Rational(Integer("1000000000000000000000000000000"));
  for (int i = 0; i < 1000; ++i) {
    std::vector<Rational> c(G->degree());
    for (auto& v : c) v = d(rng);
    AlgebraicNumber x(G, c);
    int s = sign_of(x);
    if (x.is_zero()) {
      EXPECT_EQ(s, 0);
      continue;
    }
    Interval iv = x.enclose(width);
    EXPECT_EQ(s, sgn(iv.midpoint()));
    EXPECT_EQ(s, iv.certain_sign());
  }
}

TEST(AdjoinSqrt, Examples) {
  auto [F, r] = adjoin_sqrt(Q, AlgebraicNumber(2));
  EXPECT_EQ(F->degree(), 2u);
  EXPECT_TRUE(F->is_totally_real());
  EXPECT_EQ(r * r, AlgebraicNumber(2));

  auto [G, s] = adjoin_sqrt(F, AlgebraicNumber(1) + r);
  EXPECT_EQ(G->degree(), 4u);
  EXPECT_FALSE(G->is_totally_real());
  EXPECT_EQ(embeddings_of(G).size(), 2u);

  auto [H, t] = adjoin_sqrt(F, AlgebraicNumber(2) + r);
  EXPECT_EQ(H->degree(), 4u);
  EXPECT_TRUE(H->is_totally_real());
  EXPECT_EQ(sturm_real_root_count(P({1, 0, -4, 0, 2})), 4);
  EXPECT_EQ(minimal_polynomial(t), P({1, 0, -4, 0, 2}));
}

TEST(AdjoinSqrt, ExistingSquareAddsNoLevel) {
  auto [F, r] = adjoin_sqrt(Q, AlgebraicNumber(Rational(9, 4)));
  EXPECT_EQ(F, Q);
  EXPECT_EQ(r, AlgebraicNumber(Rational(3, 2)));
  auto [G, s] = adjoin_sqrt(Q, AlgebraicNumber(8));
  auto [H, t] = adjoin_sqrt(G, AlgebraicNumber(2));
  EXPECT_EQ(H, G);
  EXPECT_EQ(t * AlgebraicNumber(2), s);
}

TEST(AdjoinSqrt, NegativeRadicand) {
  try {
    (void)adjoin_sqrt(Q, AlgebraicNumber(-1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeRadicand);
  }
}

TEST(AdjoinSqrt, SquaringRandomTotallyPositive) {
  auto [F, r] = adjoin_sqrt(Q, AlgebraicNumber(3));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(1, 30);
  int done = 0;
  while (done < 100) {
    // a + b sqrt3 with a > |b| sqrt3 is totally positive
    long b = d(rng) - 15;
    long a = 2 * std::abs(b) + d(rng);
    AlgebraicNumber x = AlgebraicNumber(a) + AlgebraicNumber(b) * r;
    ASSERT_TRUE(is_totally_positive(x));
    auto [G, y] = adjoin_sqrt(F, x);
    EXPECT_EQ(y * y, x);
    EXPECT_GE(sign_of(y), 0);
    EXPECT_TRUE(G->is_totally_real());
    EXPECT_EQ(embeddings_of(G).size(), 2 * embeddings_of(F).size() / (G == F ? 2 : 1));
    ++done;
  }
}

TEST(AdjoinTrisection, ZeroFallsBackToSquareRoot) {
  auto [F, y] = adjoin_trisection_root(Q, AlgebraicNumber(0));
  EXPECT_EQ(F->degree(), 2u);
  EXPECT_EQ(F->step().kind, StepKind::SquareRoot);
  EXPECT_EQ(AlgebraicNumber(4) * y * y, AlgebraicNumber(3));
  EXPECT_EQ(sign_of(y), 1);
}

TEST(AdjoinTrisection, HeptagonParameter) {
  auto [F, r28] = adjoin_sqrt(Q, AlgebraicNumber(28));
  AlgebraicNumber u = AlgebraicNumber(1) / r28;
  auto [G, w] = adjoin_trisection_root(F, u);
  EXPECT_EQ(G->degree(), 6u);
  EXPECT_EQ(AlgebraicNumber(4) * w.pow(3) - AlgebraicNumber(3) * w, u.lift_to(G));
  double theta = std::acos(1.0 / std::sqrt(28.0)) / 3.0;
  EXPECT_NEAR(w.approx(), std::cos(theta), 1e-12);
  EXPECT_TRUE(G->is_totally_real());
}

TEST(AdjoinTrisection, CosTwentyDegrees) {
  auto [F, y] = adjoin_trisection_root(Q, AlgebraicNumber(Rational(1, 2)));
  EXPECT_NEAR(y.approx(), std::cos(std::numbers::pi / 9), 1e-15);
  EXPECT_NEAR(y.approx(), 0.9396926, 1e-7);
  EXPECT_EQ(minimal_polynomial(y), P({8, 0, -6, -1}));
  EXPECT_EQ(embeddings_of(F).size(), 3u);
}

TEST(AdjoinTrisection, Errors) {
  auto code_of = [](const AlgebraicNumber& u) {
    try {
      (void)adjoin_trisection_root(Q, u);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  EXPECT_EQ(code_of(AlgebraicNumber(Rational(3, 2))), ErrorCode::OutOfRange);
  EXPECT_EQ(code_of(AlgebraicNumber(1)), ErrorCode::DegenerateTrisection);
  EXPECT_EQ(code_of(AlgebraicNumber(-1)), ErrorCode::DegenerateTrisection);
}

TEST(AdjoinTrisection, RandomRationalParameters) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-999, 999);
  for (int i = 0; i < 100; ++i) {
    Rational u = Rational(d(rng)) / 1000;
    auto [F, y] = adjoin_trisection_root(Q, AlgebraicNumber(u));
    EXPECT_EQ(AlgebraicNumber(4) * y.pow(3) - AlgebraicNumber(3) * y, AlgebraicNumber(u));
    EXPECT_NEAR(y.approx(), std::cos(std::acos(u.get_d()) / 3), 1e-12);
    EXPECT_TRUE(F->is_totally_real());
  }
}

TEST(Embeddings, Counts) {
  auto [F, r] = adjoin_sqrt(Q, AlgebraicNumber(2));
  auto es = embeddings_of(F);
  ASSERT_EQ(es.size(), 2u);
  EXPECT_NEAR(r.evaluate(es[0], 64).approx(), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r.evaluate(es[1], 64).approx(), -std::sqrt(2.0), 1e-15);
  EXPECT_TRUE(es[0].is_principal());
}

TEST(Embeddings, HeptagonConjugates) {
  AlgebraicNumber c = cos_2pi_7();
  RatPolynomial f = minimal_polynomial(c);
  // oracle: t^3 + t^2 - 2t - 1 with t = 2x
  RatPolynomial t = P({1, 1, -2, -1}).scaled(Rational(2));
  EXPECT_EQ(f, t.primitive());
  EXPECT_EQ(sturm_real_root_count(f), 3);
  std::set<long> seen;
  for (const auto& e : embeddings_of(c.tower())) {
    double v = c.evaluate(e, 80).approx();
    for (int k = 1; k <= 3; ++k)
      if (std::fabs(v - std::cos(2 * k * std::numbers::pi / 7)) < 1e-12) seen.insert(k);
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(MinimalPolynomial, Examples) {
  EXPECT_EQ(minimal_polynomial(root2()), P({1, 0, -2}));
  AlgebraicNumber s5 = sqrt(AlgebraicNumber(5));
  AlgebraicNumber c = (s5 - AlgebraicNumber(1)) / AlgebraicNumber(4);
  // oracle: t^2 + t - 1 with t = 2c, i.e. 4c^2 + 2c - 1
  RatPolynomial want = P({1, 1, -1}).scaled(Rational(2)).primitive();
  EXPECT_EQ(minimal_polynomial(c), want);
  EXPECT_EQ(want, P({4, 2, -1}));
}

TEST(MinimalPolynomial, VanishesAndDividesDegree) {
  auto [F, a] = adjoin_sqrt(Q, AlgebraicNumber(2));
  auto [G, b] = adjoin_trisection_root(F, a / AlgebraicNumber(3));
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int i = 0; i < 30; ++i) {
    std::vector<Rational> co(G->degree());
    for (auto& v : co) v = d(rng);
    AlgebraicNumber x(G, co);
    RatPolynomial f = minimal_polynomial(x);
    EXPECT_TRUE(evaluate(f, x).is_zero());
    EXPECT_EQ(static_cast<int>(G->degree()) % f.degree(), 0);
    int n = sturm_real_root_count(f);
    EXPECT_GE(n, 1);
    EXPECT_LE(n, f.degree());
  }
}

TEST(Predicates, TotallyReal) {
  EXPECT_TRUE(is_totally_real(root2()));
  auto [F, r] = adjoin_sqrt(Q, AlgebraicNumber(2));
  auto [G, s] = adjoin_sqrt(F, AlgebraicNumber(1) + r);
  EXPECT_FALSE(is_totally_real(s));
  EXPECT_EQ(minimal_polynomial(s), P({1, 0, -2, 0, -1}));
  EXPECT_TRUE(is_totally_real(cos_2pi_7()));
}

TEST(Predicates, TotallyPositive) {
  EXPECT_TRUE(is_totally_positive(AlgebraicNumber(5)));
  AlgebraicNumber r = root2();
  EXPECT_FALSE(is_totally_positive(AlgebraicNumber(1) + r));
  EXPECT_TRUE(is_totally_positive(AlgebraicNumber(2) + r));
}

TEST(Tower, DepthCap) {
  TowerPtr F = Q;
  long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  AlgebraicNumber x;
  TowerField::set_max_height(4);
  try {
    for (long p : primes) std::tie(F, x) = adjoin_sqrt(F, AlgebraicNumber(p));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TowerDepthExceeded);
  }
  TowerField::set_max_height(TowerField::kDefaultMaxHeight);
  EXPECT_EQ(F->height(), 4);
}

TEST(Tower, SqrtInCubicTop) {
  // In Q(sqrt7)(w) the element 3(1 - w^2) is a square.
  auto [F, r28] = adjoin_sqrt(Q, AlgebraicNumber(28));
  auto [G, w] = adjoin_trisection_root(F, AlgebraicNumber(1) / r28);
  AlgebraicNumber x = AlgebraicNumber(3) * (AlgebraicNumber(1) - w * w);
  auto y = sqrt_in_field(x);
  double want = std::sqrt(3 * (1 - w.approx() * w.approx()));
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(*y * *y, x);
  EXPECT_NEAR(std::fabs(y->approx()), want, 1e-12);
  auto [H, z] = adjoin_sqrt(G, x);
  EXPECT_EQ(H, G);
  EXPECT_EQ(z * z, x.lift_to(H));
  EXPECT_NEAR(z.approx(), want, 1e-12);
}
