#include "origami/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "origami/errors.hpp"

namespace origami {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// ---------------------------------------------------------------------------
// Polynomials over Z/p for a word-size prime, low degree first, trimmed.

using SmallPoly = std::vector<u64>;

struct SmallField {
  u64 p;

  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 from(const Integer& v) const { return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p)); }

  static void trim(SmallPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  SmallPoly sub(SmallPoly a, const SmallPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i]);
    trim(a);
    return a;
  }
  SmallPoly mul(const SmallPoly& a, const SmallPoly& b) const {
    if (a.empty() || b.empty()) return {};
    std::vector<u128> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
      if (!a[i]) continue;
      for (size_t j = 0; j < b.size(); ++j) {
        acc[i + j] += static_cast<u128>(a[i]) * b[j];
        if (acc[i + j] >> 120) acc[i + j] %= p;
      }
    }
    SmallPoly r(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u64>(acc[i] % p);
    trim(r);
    return r;
  }
  // a mod b, quotient into q when given
  SmallPoly rem(SmallPoly a, const SmallPoly& b, SmallPoly* q = nullptr) const {
    const size_t db = b.size() - 1;
    const u64 li = inv(b.back());
    if (q) q->assign(a.size() >= b.size() ? a.size() - db : 0, 0);
    while (a.size() >= b.size()) {
      u64 c = mul(a.back(), li);
      size_t shift = a.size() - b.size();
      if (q) (*q)[shift] = c;
      for (size_t j = 0; j <= db; ++j) a[shift + j] = sub(a[shift + j], mul(c, b[j]));
      trim(a);
    }
    return a;
  }
  SmallPoly monic(SmallPoly a) const {
    u64 li = inv(a.back());
    for (auto& c : a) c = mul(c, li);
    return a;
  }
  SmallPoly gcd(SmallPoly a, SmallPoly b) const {
    while (!b.empty()) {
      SmallPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return a.empty() ? a : monic(a);
  }
  // Returns g = gcd(a, b) (monic) with s a + t b = g.
  SmallPoly ext_gcd(const SmallPoly& a, const SmallPoly& b, SmallPoly& s, SmallPoly& t) const {
    SmallPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      SmallPoly q;
      SmallPoly r2 = rem(r0, r1, &q);
      trim(q);
      SmallPoly s2 = sub(s0, mul(q, s1));
      SmallPoly t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r2);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    u64 li = inv(r0.back());
    for (auto& c : s0) c = mul(c, li);
    for (auto& c : t0) c = mul(c, li);
    s = s0;
    t = t0;
    return monic(r0);
  }
  SmallPoly powmod(SmallPoly base, const Integer& e, const SmallPoly& m) const {
    SmallPoly r{1};
    base = rem(base, m);
    const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }
  SmallPoly derivative(const SmallPoly& a) const {
    SmallPoly d;
    for (size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], i % p));
    trim(d);
    return d;
  }
};

struct DegreeBlock {
  SmallPoly poly;  // product of all irreducible factors of degree `degree`
  int degree;
};

std::vector<DegreeBlock> distinct_degree(const SmallPoly& f, const SmallField& K) {
  std::vector<DegreeBlock> blocks;
  SmallPoly g = f;
  const SmallPoly x{0, 1};
  SmallPoly h = x;
  int d = 0;
  const Integer p(static_cast<unsigned long>(K.p));
  while (static_cast<int>(g.size()) - 1 >= 2 * (d + 1)) {
    ++d;
    h = K.powmod(h, p, g);
    SmallPoly c = K.gcd(g, K.sub(h, x));
    if (c.size() > 1) {
      blocks.push_back({c, d});
      SmallPoly q;
      K.rem(g, c, &q);
      SmallField::trim(q);
      g = K.monic(q);
      h = K.rem(h, g);
    }
  }
  if (g.size() > 1) blocks.push_back({g, static_cast<int>(g.size()) - 1});
  return blocks;
}

std::vector<SmallPoly> equal_degree(const DegreeBlock& block, const SmallField& K, std::mt19937_64& rng) {
  std::vector<SmallPoly> out;
  std::vector<SmallPoly> work{block.poly};
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(K.p), static_cast<unsigned long>(block.degree));
  e = (e - 1) / 2;
  while (!work.empty()) {
    SmallPoly u = work.back();
    work.pop_back();
    const int n = static_cast<int>(u.size()) - 1;
    if (n == block.degree) {
      out.push_back(u);
      continue;
    }
    while (true) {
      SmallPoly a(static_cast<size_t>(n));
      for (auto& c : a) c = rng() % K.p;
      SmallField::trim(a);
      if (a.size() < 2) continue;
      SmallPoly b = K.sub(K.powmod(a, e, u), SmallPoly{1});
      SmallPoly c = K.gcd(u, b);
      const int dc = static_cast<int>(c.size()) - 1;
      if (dc > 0 && dc < n) {
        SmallPoly q;
        K.rem(u, c, &q);
        SmallField::trim(q);
        work.push_back(c);
        work.push_back(K.monic(q));
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials over Z/m for m = p^k, as Integers in [0, m).

using BigPoly = std::vector<Integer>;

struct BigRing {
  Integer m;

  Integer red(const Integer& v) const {
    Integer r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  static void trim(BigPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  BigPoly reduce(BigPoly a) const {
    for (auto& c : a) c = red(c);
    trim(a);
    return a;
  }
  BigPoly add(BigPoly a, const BigPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return reduce(std::move(a));
  }
  BigPoly sub(BigPoly a, const BigPoly& b) const {
    if (a.size() < b.size()) a.resize(b.size(), Integer(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return reduce(std::move(a));
  }
  BigPoly mul(const BigPoly& a, const BigPoly& b) const {
    if (a.empty() || b.empty()) return {};
    BigPoly r(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return reduce(std::move(r));
  }
  // Division by a monic polynomial.
  std::pair<BigPoly, BigPoly> divmod(BigPoly a, const BigPoly& b) const {
    const size_t db = b.size() - 1;
    BigPoly q(a.size() >= b.size() ? a.size() - db : 0, Integer(0));
    while (a.size() >= b.size()) {
      Integer c = a.back();
      size_t shift = a.size() - b.size();
      q[shift] = c;
      for (size_t j = 0; j <= db; ++j) a[shift + j] = red(a[shift + j] - c * b[j]);
      trim(a);
    }
    trim(q);
    return {q, a};
  }
};

BigPoly lift_small(const SmallPoly& a) {
  BigPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

// One quadratic Hensel step from modulus m to m^2: f = g h, s g + t h = 1,
// h monic. After the call the same relations hold modulo m^2.
void hensel_step(const BigPoly& f, BigPoly& g, BigPoly& h, BigPoly& s, BigPoly& t, const BigRing& R2) {
  BigPoly e = R2.sub(R2.reduce(f), R2.mul(g, h));
  auto [q, r] = R2.divmod(R2.mul(s, e), h);
  BigPoly g2 = R2.add(R2.add(g, R2.mul(t, e)), R2.mul(q, g));
  BigPoly h2 = R2.add(h, r);
  BigPoly b = R2.sub(R2.add(R2.mul(s, g2), R2.mul(t, h2)), BigPoly{Integer(1)});
  auto [c, d] = R2.divmod(R2.mul(s, b), h2);
  BigPoly s2 = R2.sub(s, d);
  BigPoly t2 = R2.sub(R2.sub(t, R2.mul(t, b)), R2.mul(c, g2));
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

// Lifts f = lc * prod(u_i) mod p (u_i monic) to monic factors modulo p^k.
std::vector<BigPoly> hensel_lift(const BigPoly& f, const std::vector<SmallPoly>& us, const SmallField& K, int k) {
  std::vector<BigPoly> out;
  BigPoly cur = f;  // the part still to split, known modulo p^k
  Integer pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(K.p), static_cast<unsigned long>(k));
  BigRing Rk{pk};
  for (size_t i = 0; i + 1 < us.size(); ++i) {
    // g: leading coefficient of cur times u_i; h: product of the rest (monic)
    SmallPoly rest{1};
    for (size_t j = i + 1; j < us.size(); ++j) rest = K.mul(rest, us[j]);
    SmallPoly gs = us[i];
    u64 lc = K.from(cur.back());
    for (auto& c : gs) c = K.mul(c, lc);
    SmallPoly s, t;
    K.ext_gcd(gs, rest, s, t);
    BigPoly g = lift_small(gs), h = lift_small(rest), sb = lift_small(s), tb = lift_small(t);
    Integer m(static_cast<unsigned long>(K.p));
    while (m < pk) {
      m = m * m;
      if (m > pk) m = pk;
      hensel_step(cur, g, h, sb, tb, BigRing{m});
    }
    // g's leading coefficient is lc(cur); make it monic.
    Integer li;
    mpz_invert(li.get_mpz_t(), g.back().get_mpz_t(), pk.get_mpz_t());
    for (auto& c : g) c = Rk.red(c * li);
    out.push_back(g);
    cur = h;
  }
  out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------------------

Integer norm2_ceil(const std::vector<Integer>& f) {
  Integer s = 0;
  for (const auto& c : f) s += c * c;
  Integer r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

RatPolynomial from_ints(const std::vector<Integer>& v) {
  std::vector<Rational> c;
  for (const auto& x : v) c.emplace_back(x);
  return RatPolynomial(std::move(c));
}

bool subset_sum_reaches(const std::vector<int>& degs, int target) {
  std::vector<bool> can(static_cast<size_t>(target) + 1, false);
  can[0] = true;
  for (int d : degs)
    for (int s = target; s >= d; --s)
      if (can[static_cast<size_t>(s - d)]) can[static_cast<size_t>(s)] = true;
  return can[static_cast<size_t>(target)];
}

struct ModularImage {
  SmallField K;
  std::vector<DegreeBlock> blocks;
  std::vector<int> degrees;  // degree of every irreducible factor mod p
};

// Distinct-degree data for a few good word-size primes.
std::vector<ModularImage> modular_images(const std::vector<Integer>& fi, int how_many) {
  std::vector<ModularImage> out;
  u64 p = 1u << 20;
  const int n = static_cast<int>(fi.size()) - 1;
  while (static_cast<int>(out.size()) < how_many) {
    Integer pz(static_cast<unsigned long>(p));
    mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
    p = pz.get_ui();
    SmallField K{p};
    if (K.from(fi.back()) == 0) continue;
    SmallPoly fm;
    for (const auto& c : fi) fm.push_back(K.from(c));
    SmallField::trim(fm);
    if (static_cast<int>(fm.size()) - 1 != n) continue;
    if (K.gcd(fm, K.derivative(fm)).size() != 1) continue;
    ModularImage img{K, distinct_degree(K.monic(fm), K), {}};
    for (const auto& b : img.blocks) {
      int count = (static_cast<int>(b.poly.size()) - 1) / b.degree;
      for (int i = 0; i < count; ++i) img.degrees.push_back(b.degree);
    }
    out.push_back(std::move(img));
  }
  return out;
}

// Lifted monic factors of f modulo p^k > 2 * (coefficient bound), using the
// image with the fewest factors.
struct Lifted {
  std::vector<BigPoly> factors;
  Integer modulus;
};

Lifted lift_factors(const std::vector<Integer>& fi, const ModularImage& img) {
  const int n = static_cast<int>(fi.size()) - 1;
  Integer lc = fi.back();
  Integer bound = abs(lc) * norm2_ceil(fi);
  bound <<= static_cast<unsigned long>(n);
  bound = 2 * bound + 1;
  int k = 1;
  Integer pk(static_cast<unsigned long>(img.K.p));
  while (pk <= bound) {
    pk *= static_cast<unsigned long>(img.K.p);
    ++k;
  }
  std::mt19937_64 rng(0x5eed);
  std::vector<SmallPoly> us;
  for (const auto& b : img.blocks)
    for (auto& u : equal_degree(b, img.K, rng)) us.push_back(std::move(u));
  std::sort(us.begin(), us.end());
  BigPoly f;
  for (const auto& c : fi) f.push_back(c);
  if (us.size() == 1) return {{BigRing{pk}.reduce(f)}, pk};
  return {hensel_lift(f, us, img.K, k), pk};
}

// Tries subsets of the lifted factors (of the given sizes/degrees) as true
// factors of rest. `accept` filters by degree.
template <typename Accept>
std::vector<RatPolynomial> recombine(RatPolynomial rest, const Lifted& L, long max_subsets, Accept accept,
                                     bool keep_rest) {
  const BigRing R{L.modulus};
  auto symmetric = [&](const Integer& v) {
    Integer r = R.red(v);
    if (r > L.modulus / 2) r -= L.modulus;
    return r;
  };
  const auto& mods = L.factors;
  std::vector<RatPolynomial> result;
  std::vector<bool> used(mods.size(), false);
  long trials = 0;
  int remaining = static_cast<int>(mods.size());
  for (int size = 1; 2 * size <= remaining || (!keep_rest && size <= remaining); ++size) {
    std::vector<int> idx;
    for (size_t i = 0; i < mods.size(); ++i)
      if (!used[i]) idx.push_back(static_cast<int>(i));
    if (static_cast<int>(idx.size()) < size) break;
    std::vector<int> pick(static_cast<size_t>(size));
    std::iota(pick.begin(), pick.end(), 0);
    bool restart = false;
    while (true) {
      int deg = 0;
      for (int k : pick) deg += static_cast<int>(mods[static_cast<size_t>(idx[static_cast<size_t>(k)])].size()) - 1;
      if (accept(deg)) {
        if (++trials > max_subsets)
          fail(ErrorCode::ComputationLimit, "factor recombination exceeded its subset budget");
        std::vector<Integer> ri = rest.integer_coeffs();
        const Integer& lr = ri.back();
        // Cheap constant-term screen before forming the full product.
        Integer c0 = R.red(lr);
        for (int k : pick) c0 = R.red(c0 * mods[static_cast<size_t>(idx[static_cast<size_t>(k)])][0]);
        Integer sc = symmetric(c0);
        bool plausible = sc != 0 && mpz_divisible_p(Integer(lr * ri.front()).get_mpz_t(), sc.get_mpz_t());
        if (ri.front() == 0) plausible = true;
        if (plausible) {
          BigPoly prod{R.red(lr)};
          for (int k : pick) prod = R.mul(prod, mods[static_cast<size_t>(idx[static_cast<size_t>(k)])]);
          std::vector<Integer> gi;
          for (const auto& c : prod) gi.push_back(symmetric(c));
          RatPolynomial g = from_ints(gi).primitive();
          auto [q, r] = divmod(rest, g);
          if (r.is_zero() && g.degree() == deg) {
            result.push_back(g);
            rest = q.primitive();
            for (int k : pick) used[static_cast<size_t>(idx[static_cast<size_t>(k)])] = true;
            remaining -= size;
            restart = true;
            break;
          }
        }
      }
      int i = size - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == static_cast<int>(idx.size()) - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < size; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    if (restart) --size;
  }
  if (keep_rest && rest.degree() >= 1) result.push_back(rest);
  return result;
}

const ModularImage& best_image(const std::vector<ModularImage>& imgs) {
  return *std::min_element(imgs.begin(), imgs.end(), [](const ModularImage& a, const ModularImage& b) {
    return a.degrees.size() < b.degrees.size();
  });
}

std::vector<RatPolynomial> factor_squarefree(const RatPolynomial& f0, long max_subsets) {
  RatPolynomial f = f0.primitive();
  if (f.degree() <= 1) return {f};
  std::vector<Integer> fi = f.integer_coeffs();
  auto imgs = modular_images(fi, 3);
  const ModularImage& img = best_image(imgs);
  if (img.degrees.size() <= 1) return {f};
  Lifted L = lift_factors(fi, img);
  return recombine(f, L, max_subsets, [](int) { return true; }, true);
}

}  // namespace

std::vector<RatPolynomial> factor_rational(const RatPolynomial& f, long max_subsets) {
  if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "factoring the zero polynomial");
  std::vector<RatPolynomial> out;
  RatPolynomial rest = f.primitive();
  // Square-free decomposition by repeated gcd with the derivative.
  while (rest.degree() >= 1) {
    RatPolynomial sf = squarefree_part(rest).primitive();
    for (auto& g : factor_squarefree(sf, max_subsets)) out.push_back(g);
    rest = divmod(rest, sf).first.primitive();
  }
  std::sort(out.begin(), out.end(), [](const RatPolynomial& a, const RatPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.to_string() < b.to_string();
  });
  return out;
}

std::vector<RatPolynomial> factors_of_degree(const RatPolynomial& f0, int d, long max_subsets) {
  RatPolynomial f = f0.primitive();
  if (f.degree() < d || d < 1) return {};
  if (f.degree() == d) return {f};
  std::vector<Integer> fi = f.integer_coeffs();
  auto imgs = modular_images(fi, 4);
  for (const auto& img : imgs)
    if (!subset_sum_reaches(img.degrees, d)) return {};
  const ModularImage& img = best_image(imgs);
  Lifted L = lift_factors(fi, img);
  auto out = recombine(f, L, max_subsets, [d](int deg) { return deg == d; }, false);
  std::sort(out.begin(), out.end(), [](const RatPolynomial& a, const RatPolynomial& b) {
    return a.to_string() < b.to_string();
  });
  return out;
}

bool is_irreducible(const RatPolynomial& f) {
  if (f.degree() < 1) return false;
  return factor_rational(f).size() == 1;
}

}  // namespace origami
