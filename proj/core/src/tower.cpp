#include "origami/tower.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <sstream>

#include "origami/errors.hpp"
#include "origami/factor.hpp"
#include "tower_detail.hpp"

namespace origami {

namespace detail {

bool all_zero(CSpan a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Coords zeros(size_t n) { return Coords(n); }

void add_into(Coords& acc, CSpan b) {
  for (size_t i = 0; i < b.size(); ++i) acc[i] += b[i];
}

void sub_into(Coords& acc, CSpan b) {
  for (size_t i = 0; i < b.size(); ++i) acc[i] -= b[i];
}

Coords scaled(CSpan a, const Rational& c) {
  Coords r(a.begin(), a.end());
  for (auto& v : r) v *= c;
  return r;
}

namespace {

CSpan block(CSpan a, size_t k, size_t m) { return a.subspan(k * m, m); }

Coords concat(const std::vector<Coords>& blocks) {
  Coords r;
  for (const auto& b : blocks) r.insert(r.end(), b.begin(), b.end());
  return r;
}

}  // namespace

Coords mul(const TowerField& F, CSpan a, CSpan b) {
  if (F.is_base()) return {a[0] * b[0]};
  const TowerField& K = *F.parent();
  const size_t m = K.degree();
  const int d = F.step().degree();
  CSpan param = F.step().param->coords();

  std::vector<Coords> t(static_cast<size_t>(2 * d - 1), zeros(m));
  std::vector<bool> az(static_cast<size_t>(d)), bz(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    az[static_cast<size_t>(i)] = all_zero(block(a, static_cast<size_t>(i), m));
    bz[static_cast<size_t>(i)] = all_zero(block(b, static_cast<size_t>(i), m));
  }
  for (int i = 0; i < d; ++i) {
    if (az[static_cast<size_t>(i)]) continue;
    for (int j = 0; j < d; ++j) {
      if (bz[static_cast<size_t>(j)]) continue;
      add_into(t[static_cast<size_t>(i + j)], mul(K, block(a, static_cast<size_t>(i), m), block(b, static_cast<size_t>(j), m)));
    }
  }
  if (d == 2) {
    // g^2 = a
    if (!all_zero(t[2])) add_into(t[0], mul(K, t[2], param));
    return concat({t[0], t[1]});
  }
  // g^3 = (3g + u)/4, g^4 = (3g^2 + u g)/4
  static const Rational three_quarters(3, 4);
  static const Rational quarter(1, 4);
  if (!all_zero(t[4])) {
    add_into(t[2], scaled(t[4], three_quarters));
    add_into(t[1], scaled(mul(K, t[4], param), quarter));
  }
  if (!all_zero(t[3])) {
    add_into(t[1], scaled(t[3], three_quarters));
    add_into(t[0], scaled(mul(K, t[3], param), quarter));
  }
  return concat({t[0], t[1], t[2]});
}

Coords inv(const TowerField& F, CSpan a) {
  if (all_zero(a)) fail(ErrorCode::DivisionByZero, "division by exact zero");
  if (F.is_base()) return {1 / a[0]};
  const TowerField& K = *F.parent();
  const size_t m = K.degree();
  CSpan param = F.step().param->coords();
  if (F.step().degree() == 2) {
    CSpan x0 = block(a, 0, m), x1 = block(a, 1, m);
    Coords den = mul(K, x0, x0);
    sub_into(den, mul(K, mul(K, x1, x1), param));
    Coords di = inv(K, den);
    Coords r0 = mul(K, x0, di);
    Coords r1 = scaled(mul(K, x1, di), -1);
    return concat({r0, r1});
  }
  // Adjugate of the multiplication matrix over K; first column only.
  auto M = multiplication_matrix(F, a);
  auto at = [&](int r, int c) -> CSpan { return M[static_cast<size_t>(c)][static_cast<size_t>(r)]; };
  auto minor = [&](int r0, int c0, int r1, int c1) {
    Coords v = mul(K, at(r0, c0), at(r1, c1));
    sub_into(v, mul(K, at(r0, c1), at(r1, c0)));
    return v;
  };
  Coords y0 = minor(1, 1, 2, 2);
  Coords y1 = scaled(minor(1, 0, 2, 2), -1);
  Coords y2 = minor(1, 0, 2, 1);
  Coords det = mul(K, at(0, 0), y0);
  add_into(det, mul(K, at(0, 1), y1));
  add_into(det, mul(K, at(0, 2), y2));
  Coords di = inv(K, det);
  return concat({mul(K, y0, di), mul(K, y1, di), mul(K, y2, di)});
}

std::vector<std::vector<Coords>> multiplication_matrix(const TowerField& F, CSpan a) {
  // Columns are a * g^j split into parent blocks.
  const size_t m = F.parent()->degree();
  const int d = F.step().degree();
  std::vector<std::vector<Coords>> cols;
  Coords gen = zeros(F.degree());
  gen[m] = 1;
  Coords cur(a.begin(), a.end());
  for (int j = 0; j < d; ++j) {
    std::vector<Coords> col;
    for (int r = 0; r < d; ++r) {
      CSpan b = CSpan(cur).subspan(static_cast<size_t>(r) * m, m);
      col.emplace_back(b.begin(), b.end());
    }
    cols.push_back(std::move(col));
    if (j + 1 < d) cur = mul(F, cur, gen);
  }
  return cols;
}

Coords norm_down(const TowerField& F, CSpan a) {
  if (F.is_base()) return {a[0]};
  const TowerField& K = *F.parent();
  const size_t m = K.degree();
  CSpan param = F.step().param->coords();
  if (F.step().degree() == 2) {
    CSpan x0 = a.subspan(0, m), x1 = a.subspan(m, m);
    Coords n = mul(K, x0, x0);
    sub_into(n, mul(K, mul(K, x1, x1), param));
    return n;
  }
  auto M = multiplication_matrix(F, a);
  auto at = [&](int r, int c) -> CSpan { return M[static_cast<size_t>(c)][static_cast<size_t>(r)]; };
  auto minor = [&](int r0, int c0, int r1, int c1) {
    Coords v = mul(K, at(r0, c0), at(r1, c1));
    sub_into(v, mul(K, at(r0, c1), at(r1, c0)));
    return v;
  };
  Coords det = mul(K, at(0, 0), minor(1, 1, 2, 2));
  sub_into(det, mul(K, at(0, 1), minor(1, 0, 2, 2)));
  add_into(det, mul(K, at(0, 2), minor(1, 0, 2, 1)));
  return det;
}

}  // namespace detail

using detail::Coords;
using detail::CSpan;

// ---------------------------------------------------------------------------
// Embedding / TowerField

bool Embedding::is_principal() const {
  return std::all_of(root_choices.begin(), root_choices.end(), [](int c) { return c == 0; });
}

namespace {
std::atomic<int> g_max_height{TowerField::kDefaultMaxHeight};
}

void TowerField::set_max_height(int h) { g_max_height = h; }
int TowerField::max_height() { return g_max_height; }

TowerField::TowerField() { embeddings_.push_back(Embedding{}); }

TowerField::TowerField(TowerPtr parent, Step step)
    : parent_(std::move(parent)), step_(std::move(step)) {
  height_ = parent_->height_ + 1;
  degree_ = parent_->degree_ * static_cast<size_t>(step_->degree());
}

TowerPtr TowerField::rationals() {
  static const TowerPtr base = std::make_shared<TowerField>();
  return base;
}

std::vector<const TowerField*> TowerField::chain() const {
  std::vector<const TowerField*> out;
  for (const TowerField* t = this; t; t = t->parent_.get()) out.push_back(t);
  return out;
}

const TowerField* TowerField::level(int h) const {
  const TowerField* t = this;
  while (t && t->height_ > h) t = t->parent_.get();
  return t;
}

bool TowerField::is_prefix_of(const TowerField& other) const {
  return other.level(height_) == this;
}

void TowerField::enumerate_embeddings() {
  const AlgebraicNumber& p = *step_->param;
  for (const auto& pe : parent_->embeddings_) {
    auto extend = [&](int choice, int branch) {
      Embedding e = pe;
      e.root_choices.push_back(choice);
      e.branches.push_back(branch);
      embeddings_.push_back(std::move(e));
    };
    if (step_->kind == StepKind::SquareRoot) {
      int s = p.sign_under(pe);
      if (s > 0) {
        extend(0, 0);
        extend(1, 1);
      }
    } else {
      AlgebraicNumber gap = AlgebraicNumber(1) - p * p;
      int s = gap.sign_under(pe);
      if (s > 0) {
        extend(0, 0);
        extend(1, 1);
        extend(2, 2);
      } else {
        extend(0, p.sign_under(pe) > 0 ? 0 : 2);
      }
    }
  }
}

namespace {

// Root of 4x^3 - 3x = c on a monotone branch [lo, hi], bracketed to 2^-bits.
// Returns (a, b) with a <= root <= b.
std::pair<Rational, Rational> branch_root(const Rational& c, Rational lo, Rational hi, bool increasing,
                                          mpfr_prec_t bits) {
  auto f = [](const Rational& x) -> Rational { return 4 * x * x * x - 3 * x; };
  Rational eps;
  mpq_set_ui(eps.get_mpq_t(), 1, 1);
  mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  while (hi - lo > eps) {
    Rational mid = (lo + hi) / 2;
    int s = sgn(f(mid) - c);
    if (s == 0) return {mid, mid};
    if ((s < 0) == increasing) lo = mid;
    else hi = mid;
  }
  return {lo, hi};
}

}  // namespace

Interval TowerField::generator_value(const Embedding& e, mpfr_prec_t prec) const {
  std::vector<int> key(e.branches.begin(), e.branches.begin() + height_);
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find({key, prec});
    if (it != cache_.end()) return it->second;
  }
  const int branch = key.back();
  Interval p = step_->param->evaluate(e, prec);
  Interval result(prec);
  if (step_->kind == StepKind::SquareRoot) {
    result = p.sqrt();
    if (branch == 1) result = -result;
  } else {
    Rational ulo = p.lower(), uhi = p.upper();
    Rational big = std::max(Rational(2), Rational(abs(ulo) + 1));
    big = std::max(big, Rational(abs(uhi) + 1));
    auto clamp = [](Rational c, const Rational& a, const Rational& b) -> Rational { return std::min(std::max(c, a), b); };
    Rational lo, hi;
    const mpfr_prec_t bits = prec + 8;
    if (branch == 0) {
      lo = branch_root(clamp(ulo, -1, 4 * big * big * big), Rational(1, 2), big, true, bits).first;
      hi = branch_root(clamp(uhi, -1, 4 * big * big * big), Rational(1, 2), big, true, bits).second;
    } else if (branch == 2) {
      lo = branch_root(clamp(ulo, -4 * big * big * big, 1), -big, Rational(-1, 2), true, bits).first;
      hi = branch_root(clamp(uhi, -4 * big * big * big, 1), -big, Rational(-1, 2), true, bits).second;
    } else {
      lo = branch_root(clamp(uhi, -1, 1), Rational(-1, 2), Rational(1, 2), false, bits).first;
      hi = branch_root(clamp(ulo, -1, 1), Rational(-1, 2), Rational(1, 2), false, bits).second;
    }
    result = Interval(lo, hi, prec);
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.emplace(std::make_pair(key, prec), result);
  return result;
}

std::string TowerField::describe() const {
  if (is_base()) return "Q";
  std::ostringstream os;
  os << parent_->describe() << (step_->kind == StepKind::SquareRoot ? "(sqrt[" : "(tri[")
     << step_->param->decimal(12) << "])";
  return os.str();
}

AlgebraicNumber TowerField::primitive_element() const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (primitive_) return *primitive_;
  }
  TowerPtr self = shared_from_this();
  std::vector<AlgebraicNumber> gens;
  for (const TowerField* t : chain()) {
    if (t->is_base()) break;
    gens.push_back(AlgebraicNumber::generator(t->shared_from_this()).lift_to(self));
  }
  AlgebraicNumber theta;
  for (long trial = 0;; ++trial) {
    theta = AlgebraicNumber(TowerField::rationals(), {Rational(0)}).lift_to(self);
    for (size_t i = 0; i < gens.size(); ++i) {
      long c = static_cast<long>(i) + 1 + trial * static_cast<long>(i * i + 1);
      theta += gens[i] * AlgebraicNumber(c);
    }
    if (minimal_polynomial(theta).degree() == static_cast<int>(degree_)) break;
    if (trial > 64) fail(ErrorCode::ComputationLimit, "no primitive element found");
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  primitive_ = std::make_shared<const AlgebraicNumber>(theta);
  return theta;
}

TowerPtr make_extension(const TowerPtr& F, StepKind kind, const AlgebraicNumber& param) {
  if (F->height() + 1 > TowerField::max_height())
    fail(ErrorCode::TowerDepthExceeded, "tower height would exceed " + std::to_string(TowerField::max_height()));
  AlgebraicNumber p = param.lift_to(F);
  auto find = [&]() -> TowerPtr {
    for (const auto& w : F->children_)
      if (auto c = w.lock(); c && c->step().kind == kind && c->step().param->coords() == p.coords()) return c;
    return nullptr;
  };
  {
    std::lock_guard lock(F->cache_mutex_);
    if (auto c = find()) return c;
  }
  // Embeddings are enumerated outside the lock; they read F's caches.
  TowerField::Step step{kind, std::make_shared<const AlgebraicNumber>(p)};
  auto t = std::make_shared<TowerField>(F, std::move(step));
  t->enumerate_embeddings();
  std::lock_guard lock(F->cache_mutex_);
  if (auto c = find()) return c;
  std::erase_if(F->children_, [](const auto& w) { return w.expired(); });
  F->children_.push_back(t);
  return t;
}

// ---------------------------------------------------------------------------
// AlgebraicNumber

AlgebraicNumber::AlgebraicNumber() : tower_(TowerField::rationals()), coords_{Rational(0)} {}

AlgebraicNumber::AlgebraicNumber(const Rational& q) : tower_(TowerField::rationals()), coords_{q} {}

AlgebraicNumber::AlgebraicNumber(long v) : tower_(TowerField::rationals()), coords_{Rational(v)} {}

AlgebraicNumber::AlgebraicNumber(TowerPtr tower, std::vector<Rational> coords)
    : tower_(std::move(tower)), coords_(std::move(coords)) {
  if (coords_.size() != tower_->degree())
    throw std::invalid_argument("coordinate count does not match tower degree");
  for (auto& c : coords_) c.canonicalize();
}

AlgebraicNumber AlgebraicNumber::generator(const TowerPtr& tower) {
  if (tower->is_base()) return AlgebraicNumber(1);
  Coords c(tower->degree());
  c[tower->parent()->degree()] = 1;
  return AlgebraicNumber(tower, std::move(c));
}

bool AlgebraicNumber::is_zero() const { return detail::all_zero(coords_); }

bool AlgebraicNumber::is_rational() const {
  return detail::all_zero(CSpan(coords_).subspan(1));
}

Rational AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("not a rational number");
  return coords_[0];
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
  if (a == b) return a;
  if (a->height() <= b->height()) {
    if (a->is_prefix_of(*b)) return b;
  } else if (b->is_prefix_of(*a)) {
    return a;
  }
  fail(ErrorCode::IncompatibleTowers, "numbers live in towers where neither is a prefix of the other");
}

AlgebraicNumber AlgebraicNumber::lift_to(const TowerPtr& target) const {
  if (target == tower_) return *this;
  if (!tower_->is_prefix_of(*target))
    fail(ErrorCode::IncompatibleTowers, "cannot lift into a tower that does not extend this one");
  Coords c = coords_;
  c.resize(target->degree());
  return AlgebraicNumber(target, std::move(c));
}

AlgebraicNumber AlgebraicNumber::compacted() const {
  TowerPtr t = tower_;
  size_t used = coords_.size();
  while (used > 1 && sgn(coords_[used - 1]) == 0) --used;
  while (!t->is_base() && t->parent()->degree() >= used) t = t->parent();
  Coords c(coords_.begin(), coords_.begin() + static_cast<long>(t->degree()));
  return AlgebraicNumber(t, std::move(c));
}

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
  TowerPtr t = common_tower(tower_, o.tower_);
  if (t != tower_) *this = lift_to(t);
  detail::add_into(coords_, o.lift_to(t).coords_);
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
  TowerPtr t = common_tower(tower_, o.tower_);
  if (t != tower_) *this = lift_to(t);
  detail::sub_into(coords_, o.lift_to(t).coords_);
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
  TowerPtr t = common_tower(tower_, o.tower_);
  AlgebraicNumber a = lift_to(t), b = o.lift_to(t);
  if (b.is_rational()) {
    coords_ = detail::scaled(a.coords_, b.coords_[0]);
  } else if (a.is_rational()) {
    coords_ = detail::scaled(b.coords_, a.coords_[0]);
  } else {
    coords_ = detail::mul(*t, a.coords_, b.coords_);
  }
  tower_ = t;
  return *this;
}

AlgebraicNumber& AlgebraicNumber::operator/=(const AlgebraicNumber& o) { return *this *= o.inverse(); }

AlgebraicNumber AlgebraicNumber::operator-() const {
  return AlgebraicNumber(tower_, detail::scaled(coords_, -1));
}

AlgebraicNumber AlgebraicNumber::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "division by exact zero");
  if (is_rational()) {
    Coords c(coords_.size());
    c[0] = 1 / coords_[0];
    return AlgebraicNumber(tower_, std::move(c));
  }
  AlgebraicNumber small = compacted();
  return AlgebraicNumber(small.tower_, detail::inv(*small.tower_, small.coords_)).lift_to(tower_);
}

AlgebraicNumber AlgebraicNumber::pow(unsigned n) const {
  AlgebraicNumber result = AlgebraicNumber(1).lift_to(tower_);
  AlgebraicNumber base = *this;
  while (n) {
    if (n & 1u) result *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return result;
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  TowerPtr t = common_tower(a.tower_, b.tower_);
  return a.lift_to(t).coords_ == b.lift_to(t).coords_;
}

namespace {

Interval eval_coords(const TowerField& F, CSpan a, const Embedding& e, mpfr_prec_t prec) {
  if (F.is_base()) return Interval(a[0], prec);
  const TowerField& K = *F.parent();
  const size_t m = K.degree();
  const int d = F.step().degree();
  // Horner in the generator, skipping zero blocks cheaply.
  Interval g = F.generator_value(e, prec);
  Interval acc(prec);
  bool started = false;
  for (int k = d - 1; k >= 0; --k) {
    CSpan b = a.subspan(static_cast<size_t>(k) * m, m);
    if (started) acc = acc * g;
    if (!detail::all_zero(b)) {
      Interval v = eval_coords(K, b, e, prec);
      acc = started ? acc + v : v;
      started = true;
    }
  }
  return acc;
}

}  // namespace

Interval AlgebraicNumber::evaluate(const Embedding& e, mpfr_prec_t prec) const {
  if (e.branches.size() < static_cast<size_t>(tower_->height()))
    throw std::invalid_argument("embedding does not cover the number's tower");
  return eval_coords(*tower_, coords_, e, prec);
}

Interval AlgebraicNumber::enclose(const Embedding& e, const Rational& width) const {
  mpfr_prec_t prec = 64 + 8 * tower_->height();
  if (sgn(width) > 0) {
    // Start near the bit size the width asks for.
    double lw = std::log2(std::max(1e-300, width.get_d()));
    if (lw < -static_cast<double>(prec)) prec = static_cast<mpfr_prec_t>(-lw) + 16;
  }
  while (true) {
    Interval v = evaluate(e, prec);
    if (v.width() <= width) return v;
    prec *= 2;
    if (prec > (mpfr_prec_t{1} << 22)) fail(ErrorCode::ComputationLimit, "interval refinement did not converge");
  }
}

Interval AlgebraicNumber::enclose(const Rational& width) const { return enclose(tower_->principal(), width); }

int AlgebraicNumber::sign_under(const Embedding& e) const {
  if (is_zero()) return 0;
  if (is_rational()) return sgn(coords_[0]);
  mpfr_prec_t prec = 64 + 8 * tower_->height();
  while (true) {
    int s = evaluate(e, prec).certain_sign();
    if (s != 0) return s;
    prec *= 2;
    // Terminates: the embedding is injective, so the value is nonzero.
    if (prec > (mpfr_prec_t{1} << 22)) fail(ErrorCode::ComputationLimit, "sign refinement did not converge");
  }
}

int AlgebraicNumber::sign() const { return sign_under(tower_->principal()); }

int sign_of(const AlgebraicNumber& x) { return x.sign(); }

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& x) {
  os << x.decimal(20) << " [";
  for (size_t i = 0; i < x.coords().size(); ++i) os << (i ? " " : "") << x.coords()[i];
  return os << "]";
}

double AlgebraicNumber::approx() const {
  if (is_rational()) return coords_[0].get_d();
  return enclose(Rational(1, 1) / Rational(Integer(1) << 60)).approx();
}

std::string AlgebraicNumber::decimal(int digits) const {
  if (is_zero()) return "0";
  if (is_rational() && coords_[0].get_den() == 1) return coords_[0].get_num().get_str();
  // Coarse magnitude first, then a width well below the last requested digit.
  Interval coarse = enclose(tower_->principal(), Rational(1, 1 << 20));
  Rational mag = std::max(abs(coarse.lower()), abs(coarse.upper()));
  int e10 = 0;
  if (sgn(mag) > 0) e10 = static_cast<int>(std::floor(std::log10(mag.get_d())));
  if (sgn(coarse.lower()) * sgn(coarse.upper()) <= 0) {
    Interval fine = enclose(tower_->principal(), Rational(1, 1 << 30));
    while (fine.certain_sign() == 0) fine = enclose(tower_->principal(), fine.width() / (1 << 20));
    double m = std::max(std::fabs(fine.lower().get_d()), std::fabs(fine.upper().get_d()));
    e10 = static_cast<int>(std::floor(std::log10(m)));
  }
  Integer p10;
  int shift = digits + 4 - e10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(shift)));
  Rational width = shift >= 0 ? Rational(1) / Rational(p10) : Rational(p10);
  Interval v = enclose(tower_->principal(), width);
  return v.decimal(digits);
}

// ---------------------------------------------------------------------------
// Polynomials over a tower field

namespace {

using FPoly = std::vector<AlgebraicNumber>;  // low degree first

void trim(FPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FPoly lifted(const TowerPtr& F, const FPoly& p) {
  FPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.push_back(c.lift_to(F));
  trim(r);
  return r;
}

FPoly poly_mul(const FPoly& a, const FPoly& b, const TowerPtr& F) {
  if (a.empty() || b.empty()) return {};
  FPoly r(a.size() + b.size() - 1, AlgebraicNumber(0).lift_to(F));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

FPoly poly_sub(FPoly a, const FPoly& b, const TowerPtr& F) {
  if (a.size() < b.size()) a.resize(b.size(), AlgebraicNumber(0).lift_to(F));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

FPoly poly_rem(FPoly a, const FPoly& b) {
  AlgebraicNumber lc_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    AlgebraicNumber q = a.back() * lc_inv;
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= q * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

FPoly poly_gcd(FPoly a, FPoly b) {
  while (!b.empty()) {
    FPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    AlgebraicNumber li = a.back().inverse();
    for (auto& c : a) c *= li;
  }
  return a;
}

// p(x + c) by Horner.
FPoly poly_shift(const FPoly& p, const AlgebraicNumber& c, const TowerPtr& F) {
  FPoly r;
  const FPoly lin{c.lift_to(F), AlgebraicNumber(1).lift_to(F)};
  for (size_t k = p.size(); k-- > 0;) {
    r = poly_mul(r, lin, F);
    if (r.empty()) r.push_back(p[k]);
    else r[0] += p[k];
    trim(r);
  }
  return r;
}

FPoly from_rational(const RatPolynomial& f, const TowerPtr& F) {
  FPoly r;
  for (const auto& c : f.coeffs()) r.push_back(AlgebraicNumber(c).lift_to(F));
  trim(r);
  return r;
}

// Norm of p from F down to Q, as a polynomial.
RatPolynomial poly_norm(const TowerPtr& F, const FPoly& p) {
  if (F->is_base()) {
    std::vector<Rational> c;
    for (const auto& a : p) c.push_back(a.coords()[0]);
    return RatPolynomial(std::move(c));
  }
  const TowerPtr& K = F->parent();
  const size_t m = K->degree();
  const int d = F->step().degree();
  const AlgebraicNumber g = AlgebraicNumber::generator(F);
  // M[r][j]: r-th parent block of p * g^j
  std::vector<std::vector<FPoly>> M(static_cast<size_t>(d), std::vector<FPoly>(static_cast<size_t>(d)));
  FPoly cur = p;
  for (int j = 0; j < d; ++j) {
    for (int r = 0; r < d; ++r) {
      FPoly blk;
      for (const auto& c : cur) {
        const auto& co = c.coords();
        blk.emplace_back(K, std::vector<Rational>(co.begin() + static_cast<long>(static_cast<size_t>(r) * m),
                                                  co.begin() + static_cast<long>(static_cast<size_t>(r + 1) * m)));
      }
      trim(blk);
      M[static_cast<size_t>(r)][static_cast<size_t>(j)] = std::move(blk);
    }
    if (j + 1 < d)
      for (auto& c : cur) c *= g;
  }
  auto at = [&](int r, int c) -> const FPoly& { return M[static_cast<size_t>(r)][static_cast<size_t>(c)]; };
  auto minor = [&](int r0, int c0, int r1, int c1) {
    return poly_sub(poly_mul(at(r0, c0), at(r1, c1), K), poly_mul(at(r0, c1), at(r1, c0), K), K);
  };
  FPoly det;
  if (d == 2) {
    det = minor(0, 0, 1, 1);
  } else {
    det = poly_mul(at(0, 0), minor(1, 1, 2, 2), K);
    det = poly_sub(det, poly_mul(at(0, 1), minor(1, 0, 2, 2), K), K);
    FPoly t = poly_mul(at(0, 2), minor(1, 0, 2, 1), K);
    for (auto& c : t) c = -c;
    det = poly_sub(det, t, K);
  }
  return poly_norm(K, det);
}

AlgebraicNumber block_of(const AlgebraicNumber& x, int r) {
  const TowerPtr& K = x.tower()->parent();
  const size_t m = K->degree();
  const auto& co = x.coords();
  return AlgebraicNumber(K, std::vector<Rational>(co.begin() + static_cast<long>(static_cast<size_t>(r) * m),
                                                  co.begin() + static_cast<long>(static_cast<size_t>(r + 1) * m)));
}

bool in_parent(const AlgebraicNumber& x) {
  const size_t m = x.tower()->parent()->degree();
  return detail::all_zero(CSpan(x.coords()).subspan(m));
}

}  // namespace

std::vector<AlgebraicNumber> roots_in_field(const TowerPtr& F, const std::vector<AlgebraicNumber>& poly) {
  FPoly P = lifted(F, poly);
  if (P.empty()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no finite root set");
  if (P.size() == 1) return {};
  if (P.size() == 2) return {-(P[0] / P[1])};
  if (F->is_base()) {
    std::vector<Rational> c;
    for (const auto& a : P) c.push_back(a.coords()[0]);
    std::vector<AlgebraicNumber> out;
    for (const auto& r : rational_roots(RatPolynomial(std::move(c)))) out.emplace_back(r);
    return out;
  }
  // Trager: shift by a multiple of a primitive element until the norm is
  // square-free, then split the norm over Q and pull factors back by gcd.
  const AlgebraicNumber theta = F->primitive_element();
  const int D = static_cast<int>(F->degree());
  for (long k : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 5L, -5L, 7L, 11L, 13L, -17L, 19L, 23L}) {
    AlgebraicNumber kt = theta * AlgebraicNumber(k);
    FPoly Q = k == 0 ? P : poly_shift(P, -kt, F);
    RatPolynomial N = poly_norm(F, Q);
    if (gcd(N, N.derivative()).degree() > 0) continue;
    std::vector<AlgebraicNumber> out;
    // Every factor of N has degree a multiple of D, so degree-D divisors are
    // exactly the irreducible ones that can carry a root.
    for (const auto& f : factors_of_degree(N, D)) {
      FPoly G = from_rational(f, F);
      if (k != 0) G = poly_shift(G, kt, F);
      FPoly h = poly_gcd(P, G);
      if (h.size() == 2) out.push_back(-h[0]);
    }
    return out;
  }
  fail(ErrorCode::ComputationLimit, "no square-free norm shift found");
}

std::optional<AlgebraicNumber> sqrt_in_field(const AlgebraicNumber& x) {
  const TowerPtr& F = x.tower();
  if (x.is_zero()) return x;
  if (x.sign() < 0) return std::nullopt;
  if (F->is_base()) {
    auto r = rational_sqrt(x.coords()[0]);
    if (!r) return std::nullopt;
    return AlgebraicNumber(*r);
  }
  // N(y^2) = N(y)^2, so a non-square norm rules x out cheaply
  if (!rational_sqrt(norm(x))) return std::nullopt;
  const AlgebraicNumber g = AlgebraicNumber::generator(F);
  if (F->step().kind == StepKind::SquareRoot) {
    const AlgebraicNumber& d = *F->step().param;
    AlgebraicNumber x0 = block_of(x, 0), x1 = block_of(x, 1);
    if (x1.is_zero()) {
      if (auto y = sqrt_in_field(x0)) return y->lift_to(F);
      if (auto z = sqrt_in_field(x0 / d)) return (*z * g).lift_to(F);
      return std::nullopt;
    }
    auto n = sqrt_in_field(x0 * x0 - d * x1 * x1);
    if (!n) return std::nullopt;
    for (const auto& t : {(x0 + *n) / AlgebraicNumber(2), (x0 - *n) / AlgebraicNumber(2)}) {
      auto y0 = sqrt_in_field(t);
      if (!y0 || y0->is_zero()) continue;
      AlgebraicNumber y1 = x1 / (AlgebraicNumber(2) * *y0);
      return (*y0 + y1 * g).lift_to(F);
    }
    return std::nullopt;
  }
  // Odd-degree step: a square root of an element of K lies in K if anywhere.
  if (in_parent(x)) {
    if (auto y = sqrt_in_field(block_of(x, 0))) return y->lift_to(F);
    return std::nullopt;
  }
  // the relative norm of a square is a square one level down
  if (!sqrt_in_field(AlgebraicNumber(F->parent(), detail::norm_down(*F, x.coords())))) return std::nullopt;
  auto roots = roots_in_field(F, {-x, AlgebraicNumber(0), AlgebraicNumber(1)});
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

namespace {

// Roots in F of 4y^3 - 3y - u.
std::vector<AlgebraicNumber> trisection_roots(const TowerPtr& F, const AlgebraicNumber& u) {
  if (F->is_base() || F->step().kind == StepKind::SquareRoot) {
    if (F->is_base()) return roots_in_field(F, {-u, AlgebraicNumber(-3), AlgebraicNumber(0), AlgebraicNumber(4)});
    if (in_parent(u)) {
      // An irreducible cubic over K stays irreducible over a quadratic extension.
      auto below = trisection_roots(F->parent(), block_of(u, 0));
      std::vector<AlgebraicNumber> out;
      for (const auto& r : below) out.push_back(r.lift_to(F));
      if (out.size() != 1) return out;
      const AlgebraicNumber r = out[0];
      if (auto s = sqrt_in_field((AlgebraicNumber(3) * (AlgebraicNumber(1) - r * r)).lift_to(F))) {
        if (!s->is_zero()) {
          out.push_back((-r + *s) / AlgebraicNumber(2));
          out.push_back((-r - *s) / AlgebraicNumber(2));
        }
      }
      return out;
    }
  }
  return roots_in_field(F, {-u, AlgebraicNumber(-3), AlgebraicNumber(0), AlgebraicNumber(4)});
}

}  // namespace

std::pair<TowerPtr, AlgebraicNumber> adjoin_sqrt(const TowerPtr& F, const AlgebraicNumber& a) {
  TowerPtr T = common_tower(F, a.tower());
  AlgebraicNumber x = a.lift_to(T);
  int s = x.sign();
  if (s < 0) fail(ErrorCode::NegativeRadicand, "square root of a negative number");
  if (s == 0) return {T, x};
  if (auto y = sqrt_in_field(x)) {
    if (y->sign() < 0) *y = -*y;
    return {T, *y};
  }
  TowerPtr E = make_extension(T, StepKind::SquareRoot, x);
  return {E, AlgebraicNumber::generator(E)};
}

AlgebraicNumber sqrt(const AlgebraicNumber& a) { return adjoin_sqrt(a.tower(), a).second; }

std::pair<TowerPtr, AlgebraicNumber> adjoin_trisection_root(const TowerPtr& F, const AlgebraicNumber& u) {
  TowerPtr T = common_tower(F, u.tower());
  AlgebraicNumber v = u.lift_to(T);
  int c = (v * v - AlgebraicNumber(1)).sign();
  if (c > 0) fail(ErrorCode::OutOfRange, "trisection parameter outside [-1, 1]");
  if (c == 0) fail(ErrorCode::DegenerateTrisection, "trisection parameter is +-1");
  auto roots = trisection_roots(T, v);
  if (!roots.empty()) {
    const AlgebraicNumber half(Rational(1, 2));
    for (const auto& r : roots)
      if (r.compare(half) > 0) return {T, r};
    const AlgebraicNumber& r = roots.front();
    auto [E, s] = adjoin_sqrt(T, AlgebraicNumber(3) * (AlgebraicNumber(1) - r * r));
    return {E, ((-r + s) / AlgebraicNumber(2)).lift_to(E)};
  }
  TowerPtr E = make_extension(T, StepKind::TrisectionRoot, v);
  return {E, AlgebraicNumber::generator(E)};
}

std::vector<Embedding> embeddings_of(const TowerPtr& F) { return F->embeddings(); }

Rational norm(const AlgebraicNumber& x) {
  const TowerField* F = x.tower().get();
  Coords c = x.coords();
  while (!F->is_base()) {
    c = detail::norm_down(*F, c);
    F = F->parent().get();
  }
  return c[0];
}

RatPolynomial minimal_polynomial(const AlgebraicNumber& x) {
  const AlgebraicNumber y = x.compacted();
  const size_t D = y.tower()->degree();
  // Echelon rows: reduced vector, pivot, and the combination of powers it equals.
  struct Row {
    Coords v;
    size_t pivot;
    Coords comb;
  };
  std::vector<Row> rows;
  AlgebraicNumber power = AlgebraicNumber(1).lift_to(y.tower());
  for (size_t k = 0; k <= D; ++k) {
    Coords v = power.coords();
    Coords comb(k + 1);
    comb[k] = 1;
    for (const auto& r : rows) {
      if (sgn(v[r.pivot]) == 0) continue;
      Rational f = v[r.pivot] / r.v[r.pivot];
      for (size_t i = 0; i < D; ++i) v[i] -= f * r.v[i];
      for (size_t i = 0; i < r.comb.size(); ++i) comb[i] -= f * r.comb[i];
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& q) { return sgn(q) != 0; });
    if (nz == v.end()) return RatPolynomial(std::move(comb)).primitive();
    const auto pivot = static_cast<size_t>(nz - v.begin());
    rows.push_back({std::move(v), pivot, std::move(comb)});
    power *= y;
  }
  throw std::logic_error("minimal polynomial search exceeded field degree");
}

AlgebraicNumber evaluate(const RatPolynomial& f, const AlgebraicNumber& x) {
  AlgebraicNumber acc = AlgebraicNumber(0).lift_to(x.tower());
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + AlgebraicNumber(f.coeff(i));
  return acc;
}

bool is_totally_real(const AlgebraicNumber& x) {
  RatPolynomial f = minimal_polynomial(x);
  return sturm_real_root_count(f, std::nullopt, std::nullopt) == f.degree();
}

bool is_totally_positive(const AlgebraicNumber& x) {
  RatPolynomial f = minimal_polynomial(x);
  bool ok = sturm_real_root_count(f, Rational(0), std::nullopt) == f.degree();
  if (x.tower()->is_totally_real()) {
    bool all = true;
    for (const auto& e : x.tower()->embeddings()) all = all && x.sign_under(e) > 0;
    if (all != ok) throw std::logic_error("total positivity checks disagree");
  }
  return ok;
}

}  // namespace origami
