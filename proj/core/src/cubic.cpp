#include "origami/cubic.hpp"

#include "origami/errors.hpp"

namespace origami {

AlgebraicNumber discriminant_quadratic(const AlgebraicNumber& b, const AlgebraicNumber& c) {
  return b * b - AlgebraicNumber(4) * c;
}

ReducedCubic reduce_cubic(const AlgebraicNumber& A, const AlgebraicNumber& B, const AlgebraicNumber& C) {
  // x = y - A/3
  AlgebraicNumber s = A / AlgebraicNumber(3);
  AlgebraicNumber p = B - A * s;
  AlgebraicNumber q = C - B * s + AlgebraicNumber(2) * s * s * s;
  return {p, q};
}

ReducedCubic reduce_cubic(const RatPolynomial& f) {
  if (f.degree() != 3) fail(ErrorCode::NotCubic, "expected a cubic, got degree " + std::to_string(f.degree()));
  RatPolynomial g = f.monic();
  return reduce_cubic(g.coeff(2), g.coeff(1), g.coeff(0));
}

AlgebraicNumber discriminant_cubic(const ReducedCubic& c) {
  return -(AlgebraicNumber(27) * c.q * c.q + AlgebraicNumber(4) * c.p * c.p * c.p);
}

AlgebraicNumber trisect_cos(const AlgebraicNumber& u) { return adjoin_trisection_root(u.tower(), u).second; }

CubicSolution solve_totally_real_cubic(const ReducedCubic& c) {
  TowerPtr T = common_tower(c.p.tower(), c.q.tower());
  if (discriminant_cubic(c).sign() <= 0)
    fail(ErrorCode::NotTotallyReal, "cubic discriminant is not positive");
  auto [Tm, m] = adjoin_sqrt(T, AlgebraicNumber(-4) * c.p / AlgebraicNumber(3));
  AlgebraicNumber u = AlgebraicNumber(-4) * c.q.lift_to(Tm) / (m * m * m);
  auto [Ty, y1] = adjoin_trisection_root(Tm, u);
  // cos(theta +- 2pi/3) = (-y1 -+ sqrt(3 (1 - y1^2))) / 2
  auto [Ts, s] = adjoin_sqrt(Ty, AlgebraicNumber(3) * (AlgebraicNumber(1) - y1 * y1));
  y1 = y1.lift_to(Ts);
  AlgebraicNumber y2 = (-y1 + s) / AlgebraicNumber(2);
  AlgebraicNumber y3 = (-y1 - s) / AlgebraicNumber(2);
  AlgebraicNumber mm = m.lift_to(Ts);
  CubicSolution out{{mm * y1, mm * y2, mm * y3}, {1, 1, 1}, mm, u.lift_to(Ts)};
  for (const auto& r : out.roots) {
    if (!(r * r * r + c.p * r + c.q).is_zero())
      throw std::logic_error("cubic root failed exact residual check");
  }
  return out;
}

namespace {

void require_irreducible(const ReducedCubic& c) {
  TowerPtr T = common_tower(c.p.tower(), c.q.tower());
  if (!roots_in_field(T, {c.q, c.p, AlgebraicNumber(0), AlgebraicNumber(1)}).empty())
    fail(ErrorCode::NotIrreducible, "cubic has a root in its coefficient field");
}

}  // namespace

bool is_totally_real_cubic(const ReducedCubic& c) {
  require_irreducible(c);
  AlgebraicNumber d = discriminant_cubic(c);
  return !d.is_zero() && is_totally_positive(d);
}

bool is_totally_real_cubic(const RatPolynomial& f) { return is_totally_real_cubic(reduce_cubic(f)); }

int cubic_splitting_degree(const ReducedCubic& c) {
  require_irreducible(c);
  return sqrt_in_field(discriminant_cubic(c)) ? 3 : 6;
}

}  // namespace origami
