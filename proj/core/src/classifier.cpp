#include "origami/classifier.hpp"

#include <algorithm>

#include "origami/cubic.hpp"
#include "origami/errors.hpp"
#include "origami/factor.hpp"

namespace origami {

using AN = AlgebraicNumber;
using CC = ConstructionClass;

std::string_view class_symbol(CC c) {
  switch (c) {
    case CC::Pythagorean: return "P";
    case CC::TotallyRealOrigami: return "BT";
    case CC::Euclidean: return "E";
    case CC::EuclideanTrisection: return "ET";
    case CC::Unknown: return "Unknown";
    case CC::NotInET: return "NotInET";
  }
  return "?";
}

bool class_leq(CC a, CC b) {
  if (a == CC::Unknown || a == CC::NotInET || b == CC::Unknown || b == CC::NotInET) return a == b;
  if (a == b || a == CC::Pythagorean || b == CC::EuclideanTrisection) return true;
  return false;
}

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::TotallyPositive: return "totally_positive";
    case Condition::PositiveAtPrincipal: return "nonnegative_at_principal";
    case Condition::TotallyInUnit: return "totally_in_unit_interval";
    case Condition::InUnitAtPrincipal: return "in_unit_interval_at_principal";
    case Condition::NegativeAtPrincipal: return "negative_at_principal";
    case Condition::NoRootInField: return "no_root_in_field";
    case Condition::DegreeOf2a3b: return "degree_2a3b";
    case Condition::TotallyRealNumber: return "totally_real";
  }
  return "?";
}

std::string_view evidence_name(EvidenceKind e) {
  switch (e) {
    case EvidenceKind::Witness: return "witness";
    case EvidenceKind::Obstruction: return "obstruction";
    case EvidenceKind::Profile: return "profile";
    case EvidenceKind::None: return "none";
  }
  return "?";
}

bool check_degree_condition(const AN& x) {
  int d = minimal_polynomial(x).degree();
  while (d % 2 == 0) d /= 2;
  while (d % 3 == 0) d /= 3;
  return d == 1;
}

bool run_check(const Check& c) {
  switch (c.condition) {
    case Condition::TotallyPositive: return is_totally_positive(c.value);
    case Condition::PositiveAtPrincipal: return c.value.sign() >= 0;
    case Condition::TotallyInUnit: return is_totally_positive(AN(1) - c.value * c.value);
    case Condition::InUnitAtPrincipal: return (AN(1) - c.value * c.value).sign() > 0;
    case Condition::NegativeAtPrincipal: return c.value.sign() < 0;
    case Condition::NoRootInField: return roots_in_field(c.field, c.poly).empty();
    case Condition::DegreeOf2a3b: return check_degree_condition(c.value);
    case Condition::TotallyRealNumber: return is_totally_real(c.value);
  }
  return false;
}

namespace {

Check make_check(int level, std::optional<StepKind> kind, Condition cond, const AN& v) {
  Check c{level, kind, cond, v, {}, nullptr, false};
  c.passed = run_check(c);
  return c;
}

bool has_trisection(const TowerPtr& F) {
  for (const TowerField* t : F->chain()) {
    if (!t->is_base() && t->step().kind == StepKind::TrisectionRoot) return true;
  }
  return false;
}

// Walks the tower from the bottom, stopping at the first failing step.
ClassificationReport walk(const TowerPtr& F, Condition on_sqrt, Condition on_trisect) {
  ClassificationReport r;
  r.tower = F;
  for (int h = 1; h <= F->height(); ++h) {
    const auto& st = F->level(h)->step();
    Condition cond = st.kind == StepKind::SquareRoot ? on_sqrt : on_trisect;
    r.checks.push_back(make_check(h, st.kind, cond, *st.param));
    if (!r.checks.back().passed) {
      r.evidence = EvidenceKind::Obstruction;
      return r;
    }
  }
  r.evidence = EvidenceKind::Witness;
  return r;
}

}  // namespace

ClassificationReport certify_totally_real_tower(const TowerPtr& F) {
  ClassificationReport r = walk(F, Condition::TotallyPositive, Condition::TotallyInUnit);
  bool tri = has_trisection(F);
  if (r.evidence == EvidenceKind::Witness) {
    r.label = tri ? CC::TotallyRealOrigami : CC::Pythagorean;
    r.reason = "every radicand totally positive and every trisection parameter in [-1, 1] under all embeddings";
  } else {
    // The field has a non-real conjugate, so it is outside BT. As a real tower
    // it still lies in E or ET.
    r.label = tri ? CC::EuclideanTrisection : CC::Euclidean;
    r.reason = "step " + std::to_string(r.checks.back().level) + " fails " +
               std::string(condition_name(r.checks.back().condition)) + ": the field is not totally real";
  }
  return r;
}

ClassificationReport certify_et_tower(const TowerPtr& F) {
  ClassificationReport r = walk(F, Condition::PositiveAtPrincipal, Condition::InUnitAtPrincipal);
  if (r.evidence == EvidenceKind::Witness) {
    r.label = has_trisection(F) ? CC::EuclideanTrisection : CC::Euclidean;
    r.reason = "every radicand nonnegative and every trisection parameter in [-1, 1]";
  } else {
    r.label = CC::Unknown;
    r.reason = "step " + std::to_string(r.checks.back().level) + " is not a real construction step";
  }
  return r;
}

ConstructionClass classify_trace(const ConstructionTrace& t) {
  validate(t);
  auto prof = t.profile();
  bool e = prof.count(Axiom::E) > 0, tr = prof.count(Axiom::T) > 0;
  if (e && tr) return CC::EuclideanTrisection;
  if (e) return CC::Euclidean;
  if (tr) return CC::TotallyRealOrigami;
  return CC::Pythagorean;
}

ClassificationReport classify_trace_report(const ConstructionTrace& t) {
  CC label = classify_trace(t);
  bool real_only = label == CC::Pythagorean || label == CC::TotallyRealOrigami;
  ClassificationReport r = real_only ? certify_totally_real_tower(t.tower()) : certify_et_tower(t.tower());
  // The tower may be coarser than the profile (a P trace never adjoins a
  // trisection root, but the converse is not guaranteed), so the profile label
  // stands and the tower checks ride along.
  if (r.evidence == EvidenceKind::Witness && class_leq(r.label, label)) {
    r.reason = "axiom profile; " + r.reason;
  } else {
    r.evidence = EvidenceKind::Profile;
    r.reason = "axiom profile";
  }
  r.label = label;
  return r;
}

std::optional<ClassificationReport> refute_via_theorem51(const std::vector<AN>& coeffs, const TowerPtr& K) {
  if (coeffs.size() != 4 || coeffs[3].is_zero()) fail(ErrorCode::NotCubic, "expected a cubic");
  std::vector<AN> f;
  for (const AN& c : coeffs) f.push_back(c.lift_to(common_tower(K, c.tower())));
  if (f[0].tower() != K) fail(ErrorCode::IncompatibleTowers, "coefficients do not live in the given field");
  if (!roots_in_field(K, f).empty()) fail(ErrorCode::NotIrreducible, "the cubic has a root in the field");
  ClassificationReport field = certify_et_tower(K);
  if (field.evidence != EvidenceKind::Witness) return std::nullopt;
  ReducedCubic red = reduce_cubic(f[2] / f[3], f[1] / f[3], f[0] / f[3]);
  AN disc = discriminant_cubic(red);
  // Over the real field K one negative discriminant means one real root and
  // a complex pair. Either way no root generates a field inside ET: a real
  // root would need a degree 3 step over K, which is a trisection and so has
  // three real roots; a complex root has the real root as minus the sum of
  // the pair, which falls back to the first case.
  if (disc.sign() >= 0) return std::nullopt;
  ClassificationReport r;
  r.label = CC::NotInET;
  r.evidence = EvidenceKind::Obstruction;
  r.tower = K;
  r.checks = field.checks;
  Check irr{0, std::nullopt, Condition::NoRootInField, AN(0), f, K, true};
  r.checks.push_back(irr);
  r.checks.push_back(make_check(0, std::nullopt, Condition::NegativeAtPrincipal, disc));
  r.reason = "irreducible cubic over a field inside ET with negative discriminant: no root lies in ET";
  bool rational = std::all_of(f.begin(), f.end(), [](const AN& c) { return c.is_rational(); });
  if (rational) {
    std::vector<Rational> q;
    for (const AN& c : f) q.push_back(c.rational_value());
    r.polynomial = RatPolynomial(q);
  }
  return r;
}

std::optional<ClassificationReport> refute_via_theorem51(const RatPolynomial& f) {
  if (f.degree() != 3) fail(ErrorCode::NotCubic, "expected a cubic");
  std::vector<AN> c;
  for (const Rational& x : f.coeffs()) c.emplace_back(x);
  return refute_via_theorem51(c, TowerField::rationals());
}

namespace {

bool is_2a3b(int d) {
  while (d % 2 == 0) d /= 2;
  while (d % 3 == 0) d /= 3;
  return d == 1;
}

struct Witness {
  TowerPtr tower;
  AN root;
};

// Largest real root of an irreducible f by a tower of at most `depth` steps.
std::optional<Witness> find_witness(const RatPolynomial& f, int depth) {
  if (f.degree() == 1) return Witness{TowerField::rationals(), AN(-f.coeff(0) / f.coeff(1))};
  if (depth <= 0) return std::nullopt;
  if (f.degree() == 2) {
    Rational a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    Rational d = b * b - 4 * a * c;
    if (d < 0) return std::nullopt;
    auto [F, r] = adjoin_sqrt(TowerField::rationals(), AN(d));
    AN root = (AN(-b) + (a > 0 ? r : -r)) / AN(Rational(2 * a));
    return Witness{F, root};
  }
  if (f.degree() == 3) {
    ReducedCubic red = reduce_cubic(f);
    if (discriminant_cubic(red).sign() <= 0 || depth < 2) return std::nullopt;
    CubicSolution s = solve_totally_real_cubic(red);
    AN root = s.roots[0] - AN(Rational(f.coeff(2) / f.coeff(3) / 3));
    return Witness{root.tower(), root};
  }
  // f(x) = g(x^2): the root is the square root of the largest root of g
  bool even = true;
  for (int i = 1; i <= f.degree(); i += 2) even = even && f.coeff(i) == 0;
  if (even) {
    std::vector<Rational> g;
    for (int i = 0; i <= f.degree(); i += 2) g.push_back(f.coeff(i));
    auto w = find_witness(RatPolynomial(g), depth - 1);
    if (!w || w->root.sign() <= 0) return std::nullopt;
    auto [F, r] = adjoin_sqrt(w->tower, w->root);
    return Witness{F, r};
  }
  return std::nullopt;
}

}  // namespace

ClassificationReport classify_polynomial(const RatPolynomial& input, int max_depth) {
  if (input.degree() < 1) fail(ErrorCode::NotIrreducible, "constant polynomial");
  RatPolynomial f = input.primitive();
  if (!is_irreducible(f)) fail(ErrorCode::NotIrreducible, "polynomial factors over Q");
  max_depth = std::clamp(max_depth, 0, 3);
  ClassificationReport r;
  r.polynomial = f;
  const int d = f.degree();
  int real_roots = sturm_real_root_count(f);
  if (real_roots == 0) {
    r.label = CC::NotInET;
    r.evidence = EvidenceKind::Obstruction;
    r.reason = "no real root";
    return r;
  }
  if (!is_2a3b(d)) {
    r.label = CC::NotInET;
    r.evidence = EvidenceKind::Obstruction;
    r.reason = "degree " + std::to_string(d) + " is not of the form 2^a 3^b";
    return r;
  }
  if (d == 3) {
    if (auto ob = refute_via_theorem51(f)) {
      ob->polynomial = f;
      return *ob;
    }
  }
  if (auto w = find_witness(f, max_depth)) {
    ClassificationReport bt = certify_totally_real_tower(w->tower);
    r = bt.evidence == EvidenceKind::Witness ? bt : certify_et_tower(w->tower);
    r.polynomial = f;
    r.root = w->root;
    return r;
  }
  r.label = CC::Unknown;
  r.evidence = EvidenceKind::None;
  r.reason = real_roots == d ? "totally real of degree " + std::to_string(d) + ", no witness tower within depth " +
                                   std::to_string(max_depth)
                             : "not totally real, so outside BT; ET membership undecided";
  return r;
}

ClassificationReport classify_number(const AN& x, int max_depth) {
  ClassificationReport bt = certify_totally_real_tower(x.tower());
  if (bt.evidence == EvidenceKind::Witness) {
    bt.root = x;
    return bt;
  }
  if (is_totally_real(x) && minimal_polynomial(x).degree() <= 3) {
    // the tower is wider than the number needs
    ClassificationReport r = classify_polynomial(minimal_polynomial(x), max_depth);
    if (r.evidence == EvidenceKind::Witness && r.root && *r.root == x) return r;
  }
  ClassificationReport et = certify_et_tower(x.tower());
  et.root = x;
  if (et.evidence == EvidenceKind::Witness) {
    et.checks.push_back(make_check(0, std::nullopt, Condition::TotallyRealNumber, x));
    if (et.checks.back().passed) et.reason += "; BT membership undecided";
    else et.reason += "; not totally real, so outside BT";
  }
  return et;
}

bool revalidate(const ClassificationReport& r) {
  for (const Check& c : r.checks) {
    if (run_check(c) != c.passed) return false;
  }
  if (r.evidence == EvidenceKind::Witness) {
    if (!r.tower) return false;
    // tower steps must hold; checks outside the tower are side facts
    if (!std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.level == 0 || c.passed; }))
      return false;
    if (r.root && !r.root->tower()->is_prefix_of(*r.tower)) return false;
    if (r.root && r.polynomial && !evaluate(*r.polynomial, *r.root).is_zero()) return false;
  }
  if (r.evidence == EvidenceKind::Obstruction && r.label == CC::NotInET && r.tower) {
    // a discriminant obstruction: field checks, irreducibility, negative discriminant
    if (r.checks.size() < 2) return false;
    return std::all_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return c.passed; });
  }
  if (r.evidence == EvidenceKind::Obstruction && r.tower) {
    return !r.checks.empty() && !r.checks.back().passed;
  }
  return true;
}

bool Corollary52Report::ok() const {
  return u_within_unit && u_prime_exceeds_one && e_certificate.evidence == EvidenceKind::Witness &&
         e_certificate.label == CC::EuclideanTrisection && revalidate(e_certificate) &&
         e_bt_check.evidence == EvidenceKind::Obstruction && revalidate(e_bt_check) &&
         e_prime_obstruction.evidence == EvidenceKind::Obstruction && revalidate(e_prime_obstruction);
}

Corollary52Report corollary52_demo() {
  auto [K, r2] = adjoin_sqrt(TowerField::rationals(), AN(2));
  auto [Ku, u] = adjoin_sqrt(K, AN(2) - r2);
  auto [E, alpha] = adjoin_trisection_root(Ku, u);
  auto [Kp, up] = adjoin_sqrt(K, AN(2) + r2);
  Corollary52Report rep{u, alpha, up, (AN(1) - u * u).sign() > 0, (up - AN(1)).sign() > 0, {}, {}, {}};
  rep.e_certificate = certify_et_tower(E);
  rep.e_certificate.root = alpha;
  rep.e_bt_check = certify_totally_real_tower(E);
  auto ob = refute_via_theorem51({-up, AN(-3), AN(0), AN(4)}, Kp);
  if (ob) rep.e_prime_obstruction = *ob;
  return rep;
}

}  // namespace origami
