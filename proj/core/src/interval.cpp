#include "origami/interval.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "origami/errors.hpp"

namespace origami {

namespace {

Rational to_rational(const mpfr_t v) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v);
  return q;
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, mpfr_prec_t prec) : Interval(q, q, prec) {}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o.prec_) {
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    prec_ = o.prec_;
    mpfr_set_prec(lo_, prec_);
    mpfr_set_prec(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  std::swap(prec_, o.prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Rational Interval::lower() const { return to_rational(lo_); }
Rational Interval::upper() const { return to_rational(hi_); }
Rational Interval::width() const { return upper() - lower(); }
Rational Interval::midpoint() const { return (lower() + upper()) / 2; }

double Interval::approx() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

int Interval::certain_sign() const {
  if (mpfr_sgn(lo_) > 0) return 1;
  if (mpfr_sgn(hi_) < 0) return -1;
  return 0;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  mpfr_prec_t prec = std::max(a.prec_, b.prec_);
  Interval r(prec);
  mpfr_t t;
  mpfr_init2(t, prec);
  const mpfr_srcptr as[2] = {a.lo_, a.hi_};
  const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
  bool first = true;
  for (auto x : as) {
    for (auto y : bs) {
      mpfr_mul(t, x, y, MPFR_RNDD);
      if (first || mpfr_cmp(t, r.lo_) < 0) mpfr_set(r.lo_, t, MPFR_RNDD);
      mpfr_mul(t, x, y, MPFR_RNDU);
      if (first || mpfr_cmp(t, r.hi_) > 0) mpfr_set(r.hi_, t, MPFR_RNDU);
      first = false;
    }
  }
  mpfr_clear(t);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.certain_sign() == 0) fail(ErrorCode::DivisionByZero, "interval division by an interval containing zero");
  mpfr_prec_t prec = std::max(a.prec_, b.prec_);
  Interval inv(prec);
  mpfr_t one;
  mpfr_init2(one, 2);
  mpfr_set_ui(one, 1, MPFR_RNDN);
  mpfr_div(inv.lo_, one, b.hi_, MPFR_RNDD);
  mpfr_div(inv.hi_, one, b.lo_, MPFR_RNDU);
  mpfr_clear(one);
  return a * inv;
}

Interval Interval::operator-() const {
  Interval r(prec_);
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  Interval r(prec_);
  if (mpfr_sgn(lo_) <= 0) mpfr_set_zero(r.lo_, 1);
  else mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  if (mpfr_sgn(hi_) <= 0) mpfr_set_zero(r.hi_, 1);
  else mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::hull(const Interval& o) const {
  Interval r(std::max(prec_, o.prec_));
  mpfr_min(r.lo_, lo_, o.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, hi_, o.hi_, MPFR_RNDU);
  return r;
}

std::string Interval::decimal(int digits) const {
  mpfr_t mid;
  mpfr_init2(mid, prec_ + 2);
  mpfr_add(mid, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, mid);
  mpfr_clear(mid);
  std::string s(buf.data());
  if (s == "-0") s = "0";
  return s;
}

}  // namespace origami
