#include "origami/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "origami/errors.hpp"

namespace origami {

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPolynomial::RatPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPolynomial RatPolynomial::constant(const Rational& c) { return RatPolynomial({c}); }

RatPolynomial RatPolynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::from_descending(const std::vector<Rational>& coeffs) {
  return RatPolynomial(std::vector<Rational>(coeffs.rbegin(), coeffs.rend()));
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RatPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

Rational RatPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int RatPolynomial::sign_at(const Rational& x) const { return sgn((*this)(x)); }

int RatPolynomial::sign_at_pos_infinity() const { return is_zero() ? 0 : sgn(leading()); }

int RatPolynomial::sign_at_neg_infinity() const {
  if (is_zero()) return 0;
  int s = sgn(leading());
  return degree() % 2 == 0 ? s : -s;
}

RatPolynomial RatPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return {};
  RatPolynomial r = *this;
  Rational inv = 1 / leading();
  r *= inv;
  return r;
}

RatPolynomial RatPolynomial::primitive() const {
  if (is_zero()) return {};
  Integer den = 1;
  for (const auto& c : coeffs_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  Integer g = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (sgn(ints.back()) < 0) g = -g;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Integer(v / g));
  return RatPolynomial(std::move(out));
}

std::vector<Integer> RatPolynomial::integer_coeffs() const {
  std::vector<Integer> out;
  for (const auto& c : primitive().coeffs_) out.push_back(c.get_num());
  return out;
}

RatPolynomial RatPolynomial::shifted(const Rational& c) const {
  // Horner in the polynomial ring: ((a_n)(x+c) + a_{n-1})(x+c) + ...
  RatPolynomial acc;
  RatPolynomial lin({c, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lin;
    acc += RatPolynomial::constant(*it);
  }
  return acc;
}

RatPolynomial RatPolynomial::scaled(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  Rational p = 1;
  for (auto& a : v) {
    a *= p;
    p *= c;
  }
  return RatPolynomial(std::move(v));
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const RatPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  trim();
  return *this;
}

RatPolynomial RatPolynomial::operator-() const {
  RatPolynomial r = *this;
  for (auto& a : r.coeffs_) a = -a;
  return r;
}

std::string RatPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<size_t>(i)];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || i == 0) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {RatPolynomial(), a};
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - db) + 1);
  Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Rational c = rem[static_cast<size_t>(i)] * inv;
    quo[static_cast<size_t>(i - db)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<size_t>(i - db + j)] -= c * b.coeffs()[static_cast<size_t>(j)];
  }
  rem.resize(static_cast<size_t>(db));
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive();
  }
  return a.monic();
}

RatPolynomial squarefree_part(const RatPolynomial& f) {
  if (f.degree() < 1) return f.monic();
  RatPolynomial g = gcd(f, f.derivative());
  return divmod(f, g).first.monic();
}

std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& f) {
  std::vector<RatPolynomial> seq;
  seq.push_back(f);
  if (f.degree() < 1) return seq;
  seq.push_back(f.derivative());
  while (true) {
    auto r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps signs and tames coefficient growth.
    RatPolynomial p = r.primitive();
    if (sgn(p.leading()) != sgn(r.leading())) p = -p;
    seq.push_back(-p);
  }
  return seq;
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<RatPolynomial>& seq, const std::optional<Rational>& x, bool pos) {
  std::vector<int> s;
  s.reserve(seq.size());
  for (const auto& p : seq) {
    if (x) s.push_back(p.sign_at(*x));
    else s.push_back(pos ? p.sign_at_pos_infinity() : p.sign_at_neg_infinity());
  }
  return variations(s);
}

// Cauchy bound: every root has |x| < 1 + max|a_i / a_n|.
Rational root_bound(const RatPolynomial& f) {
  Rational m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, Rational(abs(f.coeff(i) / f.leading())));
  return m + 1;
}

// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_between(Rational lo, Rational hi) {
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_between(-hi, -lo);
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl) == lo) return lo;
  if (Rational(fl + 1) <= hi) return Rational(fl + 1);
  // lo, hi share integer part fl; recurse on reciprocals of fractional parts.
  Rational r = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return Rational(fl) + 1 / r;
}

}  // namespace

int sturm_real_root_count(const RatPolynomial& f, const std::optional<Rational>& lo,
                          const std::optional<Rational>& hi) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "Sturm count of the zero polynomial");
  RatPolynomial g = squarefree_part(f);
  if (g.degree() < 1) return 0;
  if (lo && hi && *hi <= *lo) return 0;
  auto seq = sturm_sequence(g);
  return variations_at(seq, lo, false) - variations_at(seq, hi, true);
}

std::vector<RootInterval> isolate_real_roots(const RatPolynomial& f) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "root isolation of the zero polynomial");
  RatPolynomial g = squarefree_part(f);
  std::vector<RootInterval> out;
  if (g.degree() < 1) return out;
  auto seq = sturm_sequence(g);
  auto count = [&](const Rational& a, const Rational& b) {
    return variations_at(seq, a, false) - variations_at(seq, b, true);
  };
  Rational bound = root_bound(g);
  // Work list of half-open intervals (a, b] with their root counts.
  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int n = count(a, b);
    if (n == 0) continue;
    if (n == 1) {
      // Keep the left endpoint off any neighbouring root.
      while (g.sign_at(b) != 0 && g.sign_at(a) == 0) {
        Rational mid = (a + b) / 2;
        if (count(mid, b) == 1) a = mid;
        else b = mid;
      }
      if (g.sign_at(b) == 0) out.push_back({b, b});
      else out.push_back({a, b});
      continue;
    }
    Rational mid = (a + b) / 2;
    stack.push_back({mid, b});
    stack.push_back({a, mid});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.hi < y.hi; });
  return out;
}

RootInterval refine_root(const RatPolynomial& f, RootInterval iv, const Rational& width) {
  if (iv.lo == iv.hi) return iv;
  int slo = f.sign_at(iv.lo);
  if (slo == 0) return {iv.lo, iv.lo};
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = f.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (sm == slo) iv.lo = mid;
    else iv.hi = mid;
  }
  return iv;
}

std::vector<Rational> rational_roots(const RatPolynomial& f) {
  std::vector<Rational> out;
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "rational roots of the zero polynomial");
  RatPolynomial g = squarefree_part(f).primitive();
  if (g.degree() < 1) return out;
  Rational lc = abs(g.leading());
  Rational width = 1 / (lc * lc * 4);
  for (auto iv : isolate_real_roots(g)) {
    if (iv.lo == iv.hi) {
      out.push_back(iv.lo);
      continue;
    }
    iv = refine_root(g, iv, width);
    Rational cand = simplest_between(iv.lo, iv.hi);
    if (g.sign_at(cand) == 0) out.push_back(cand);
  }
  return out;
}

}  // namespace origami
