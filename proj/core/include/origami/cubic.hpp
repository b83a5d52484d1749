#pragma once

#include <array>
#include <vector>

#include "origami/tower.hpp"

namespace origami {

// x^3 + p x + q
struct ReducedCubic {
  AlgebraicNumber p;
  AlgebraicNumber q;
};

struct CubicSolution {
  // Descending under the principal embedding when the roots are distinct.
  std::array<AlgebraicNumber, 3> roots;
  std::array<int, 3> multiplicity{1, 1, 1};
  // y = x / m with m = sqrt(-4p/3) and u = 4y^3 - 3y
  AlgebraicNumber scale;
  AlgebraicNumber u;
};

AlgebraicNumber discriminant_quadratic(const AlgebraicNumber& b, const AlgebraicNumber& c);

// x^3 + A x^2 + B x + C -> y^3 + p y + q with y = x + A/3.
ReducedCubic reduce_cubic(const AlgebraicNumber& A, const AlgebraicNumber& B, const AlgebraicNumber& C);
ReducedCubic reduce_cubic(const RatPolynomial& f);  // any cubic; made monic first

// -(27 q^2 + 4 p^3)
AlgebraicNumber discriminant_cubic(const ReducedCubic& c);

// Largest real root of 4y^3 - 3y - u.
AlgebraicNumber trisect_cos(const AlgebraicNumber& u);

// All three roots of a reduced cubic with positive discriminant, by one
// trisection and square roots. Throws NotTotallyReal otherwise.
CubicSolution solve_totally_real_cubic(const ReducedCubic& c);

// For an irreducible cubic over a totally real field K: whether its splitting
// field is totally real, i.e. whether the discriminant is totally positive.
// Throws NotIrreducible when the cubic has a root in K.
bool is_totally_real_cubic(const ReducedCubic& c);
bool is_totally_real_cubic(const RatPolynomial& f);  // over Q; throws NotCubic

// [L:K] for the splitting field L: 3 when the discriminant is a square in K,
// otherwise 6.
int cubic_splitting_degree(const ReducedCubic& c);

}  // namespace origami
