#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "origami/rational.hpp"

namespace origami {

// Dense univariate polynomial over Q. coeffs[i] multiplies x^i; the leading
// coefficient is nonzero unless the polynomial is zero (empty vector).
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);
  RatPolynomial(std::initializer_list<Rational> coeffs);

  static RatPolynomial constant(const Rational& c);
  static RatPolynomial monomial(const Rational& c, int degree);
  // Coefficients listed from the leading term down, the CLI's convention.
  static RatPolynomial from_descending(const std::vector<Rational>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const;
  int sign_at_pos_infinity() const;
  int sign_at_neg_infinity() const;

  RatPolynomial derivative() const;
  RatPolynomial monic() const;
  // Integer coefficients with gcd 1 and positive leading coefficient.
  RatPolynomial primitive() const;
  std::vector<Integer> integer_coeffs() const;
  // p(x + c)
  RatPolynomial shifted(const Rational& c) const;
  // p(c * x)
  RatPolynomial scaled(const Rational& c) const;

  RatPolynomial& operator+=(const RatPolynomial& o);
  RatPolynomial& operator-=(const RatPolynomial& o);
  RatPolynomial& operator*=(const RatPolynomial& o);
  RatPolynomial& operator*=(const Rational& c);

  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(RatPolynomial a, const RatPolynomial& b) { return a *= b; }
  friend RatPolynomial operator*(RatPolynomial a, const Rational& c) { return a *= c; }
  RatPolynomial operator-() const;

  friend bool operator==(const RatPolynomial& a, const RatPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);
RatPolynomial squarefree_part(const RatPolynomial& f);

std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& f);

// Number of distinct real roots of f in the half-open interval (lo, hi];
// an absent bound means -inf / +inf. Throws ZeroPolynomial.
int sturm_real_root_count(const RatPolynomial& f,
                          const std::optional<Rational>& lo = std::nullopt,
                          const std::optional<Rational>& hi = std::nullopt);

struct RootInterval {
  Rational lo;
  Rational hi;  // exactly one root in [lo, hi]; lo == hi for an exact rational root
};

// Disjoint isolating intervals for the distinct real roots, ascending.
std::vector<RootInterval> isolate_real_roots(const RatPolynomial& f);

// Shrinks an isolating interval of a square-free f to width <= width.
RootInterval refine_root(const RatPolynomial& f, RootInterval iv, const Rational& width);

// Rational roots, ascending, found by isolation plus bounded-denominator
// reconstruction (any rational root p/q of a primitive f has q | lc).
std::vector<Rational> rational_roots(const RatPolynomial& f);

}  // namespace origami
