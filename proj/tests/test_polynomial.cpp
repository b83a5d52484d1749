#include <gtest/gtest.h>

#include <random>
#include <set>

#include "origami/factor.hpp"
#include "origami/polynomial.hpp"

using namespace origami;

namespace {

RatPolynomial P(std::initializer_list<long> desc) {
  std::vector<Rational> c;
  for (long v : desc) c.emplace_back(v);
  return RatPolynomial::from_descending(c);
}

// Counts sign changes of f on a fine rational grid; only trusted for
// well-separated simple roots.
int grid_root_count(const RatPolynomial& f, int lo, int hi, int steps) {
  int count = 0;
  Rational prev_x(lo);
  int prev = f.sign_at(prev_x);
  for (int i = 1; i <= steps; ++i) {
    Rational x = Rational(lo) + Rational(hi - lo) * Rational(Rational(i) / steps);
    int s = f.sign_at(x);
    if (s == 0) {
      ++count;
      s = f.sign_at(x + Rational(1, 10 * steps));
    } else if (prev != 0 && s != prev) {
      ++count;
    }
    prev = s;
  }
  return count;
}

}  // namespace

TEST(Sturm, CountsRealRoots) {
  EXPECT_EQ(sturm_real_root_count(P({1, 0, -2})), 2);
  EXPECT_EQ(sturm_real_root_count(P({1, 0, -2, 0, -1})), 2);
  EXPECT_EQ(sturm_real_root_count(P({8, 4, -4, -1})), 3);
  EXPECT_EQ(sturm_real_root_count(P({1, 0, 1})), 0);
}

TEST(Sturm, HalfOpenInterval) {
  RatPolynomial f = P({1, 0, -1});  // roots -1, 1
  EXPECT_EQ(sturm_real_root_count(f, Rational(-1), Rational(1)), 1);
  EXPECT_EQ(sturm_real_root_count(f, Rational(0), std::nullopt), 1);
  EXPECT_EQ(sturm_real_root_count(f, Rational(-2), Rational(-1)), 1);
}

TEST(Sturm, TakesSquareFreePart) {
  RatPolynomial f = P({1, 0, -2}) * P({1, 0, -2}) * P({1, -3});
  EXPECT_EQ(sturm_real_root_count(f), 3);
}

TEST(Sturm, AgreesWithGridOnProductsOfLinears) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> root(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    RatPolynomial f = RatPolynomial::constant(1);
    std::set<int> roots;
    int n = 1 + trial % 5;
    for (int i = 0; i < n; ++i) {
      int r = root(rng);
      roots.insert(r);
      f = f * P({1, -r});
    }
    f = f * P({1, 0, 1});
    EXPECT_EQ(sturm_real_root_count(f), static_cast<int>(roots.size()));
    EXPECT_EQ(grid_root_count(squarefree_part(f), -10, 10, 400), static_cast<int>(roots.size()));
  }
}

TEST(Isolation, IntervalsBracketRoots) {
  RatPolynomial f = P({8, 4, -4, -1});
  auto iv = isolate_real_roots(f);
  ASSERT_EQ(iv.size(), 3u);
  for (const auto& r : iv) {
    EXPECT_LE(r.lo, r.hi);
    EXPECT_LE(f.sign_at(r.lo) * f.sign_at(r.hi), 0);
  }
  for (size_t i = 0; i + 1 < iv.size(); ++i) {
    EXPECT_LE(iv[i].hi, iv[i + 1].lo);
    if (iv[i].hi == iv[i + 1].lo) EXPECT_NE(f.sign_at(iv[i].hi), 0);
  }
}

TEST(RationalRoots, FindsExactRoots) {
  RatPolynomial f = P({6, -5, 1}) * P({3, -1});  // (6x^2-5x+1)(3x-1)
  auto rs = rational_roots(f);
  std::vector<Rational> want{Rational(1, 3), Rational(1, 2)};
  EXPECT_EQ(rs, want);
}

TEST(Factor, SplitsProducts) {
  RatPolynomial a = P({1, 0, -2});
  RatPolynomial b = P({8, 0, -6, -1});
  RatPolynomial c = P({1, 1, 1});
  auto fs = factor_rational(a * b * c);
  ASSERT_EQ(fs.size(), 3u);
  RatPolynomial prod = RatPolynomial::constant(1);
  for (const auto& f : fs) {
    EXPECT_TRUE(is_irreducible(f));
    prod = prod * f;
  }
  EXPECT_EQ(prod.primitive(), (a * b * c).primitive());
}

TEST(Factor, IrreducibleSwinnertonDyer) {
  // minimal polynomial of sqrt2 + sqrt3: factors into quadratics mod every prime
  EXPECT_TRUE(is_irreducible(P({1, 0, -10, 0, 1})));
  EXPECT_FALSE(is_irreducible(P({1, 0, -4})));
  EXPECT_FALSE(is_irreducible(P({1, 0, 0, 0, 4})));  // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
}
