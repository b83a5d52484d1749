#pragma once

#include <mpfr.h>

#include <string>

#include "origami/rational.hpp"

namespace origami {

// Closed real interval with MPFR endpoints rounded outward, so every
// operation encloses the exact result. Precision is in bits.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(const Rational& q, mpfr_prec_t prec);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  mpfr_prec_t precision() const { return prec_; }

  Rational lower() const;
  Rational upper() const;
  Rational width() const;
  Rational midpoint() const;
  double approx() const;

  // +1 / -1 when the interval excludes zero, 0 when it straddles it.
  int certain_sign() const;
  bool contains(const Rational& q) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  // Requires b to exclude zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

  // Square root of the nonnegative part.
  Interval sqrt() const;
  Interval hull(const Interval& o) const;

  // Decimal rendering of the midpoint with the given significant digits.
  std::string decimal(int digits) const;

 private:
  mpfr_prec_t prec_;
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace origami
