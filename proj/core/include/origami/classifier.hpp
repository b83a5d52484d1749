#pragma once

#include <optional>
#include <string>
#include <vector>

#include "origami/trace.hpp"

namespace origami {

// P <= BT <= ET and P <= E <= ET. Unknown and NotInET sit outside the order.
enum class ConstructionClass { Pythagorean, TotallyRealOrigami, Euclidean, EuclideanTrisection, Unknown, NotInET };

std::string_view class_symbol(ConstructionClass c);  // "P", "BT", "E", "ET", "Unknown", "NotInET"
bool class_leq(ConstructionClass a, ConstructionClass b);

enum class Condition {
  TotallyPositive,      // every real embedding of value is > 0, none complex
  PositiveAtPrincipal,  // value >= 0 under the principal embedding
  TotallyInUnit,        // 1 - value^2 totally positive
  InUnitAtPrincipal,    // 1 - value^2 > 0 under the principal embedding
  NegativeAtPrincipal,  // value < 0 under the principal embedding
  NoRootInField,        // `poly` has no root in `field`
  DegreeOf2a3b,         // degree of value's minimal polynomial is 2^a 3^b
  TotallyRealNumber,    // every conjugate of value is real
};

std::string_view condition_name(Condition c);

// One exactly decidable fact about one number. `level` is the tower step it
// belongs to (1-based), or 0 when it is not tied to a step.
struct Check {
  int level = 0;
  std::optional<StepKind> kind;
  Condition condition;
  AlgebraicNumber value;
  std::vector<AlgebraicNumber> poly;  // NoRootInField only, low degree first
  TowerPtr field;                     // NoRootInField only
  bool passed = false;
};

bool run_check(const Check& c);

enum class EvidenceKind { Witness, Obstruction, Profile, None };

std::string_view evidence_name(EvidenceKind e);

struct ClassificationReport {
  ConstructionClass label = ConstructionClass::Unknown;
  EvidenceKind evidence = EvidenceKind::None;
  std::string reason;
  TowerPtr tower;            // witness or obstructed tower, if any
  std::vector<Check> checks;  // in tower order; an obstruction ends with the failing check
  std::optional<RatPolynomial> polynomial;  // the polynomial examined, when there is one
  std::optional<AlgebraicNumber> root;      // witness root inside `tower`
};

// Label from the trace's axiom profile. Validates the trace first.
ConstructionClass classify_trace(const ConstructionTrace& t);
// Same label, with the tower's side conditions attached as evidence.
ClassificationReport classify_trace_report(const ConstructionTrace& t);

// Degree of the minimal polynomial has no prime factors besides 2 and 3.
// Necessary only.
bool check_degree_condition(const AlgebraicNumber& x);

// Totally-real tower check: radicands totally positive, trisection
// parameters within [-1, 1] under every embedding of the parent.
ClassificationReport certify_totally_real_tower(const TowerPtr& F);
// Real tower check: radicands positive and trisection parameters in [-1, 1]
// under the principal embedding only. Success puts the field inside ET.
ClassificationReport certify_et_tower(const TowerPtr& F);

// Discriminant obstruction for a cubic c3 x^3 + c2 x^2 + c1 x + c0 over K
// (coefficients low degree first): when the cubic is irreducible over K and
// not totally real (negative discriminant), no root lies in ET.
// NotIrreducible when the cubic has a root in K; NotCubic for wrong degree.
std::optional<ClassificationReport> refute_via_theorem51(const std::vector<AlgebraicNumber>& coeffs,
                                                          const TowerPtr& K);
std::optional<ClassificationReport> refute_via_theorem51(const RatPolynomial& f);

// Classes of a real root of an irreducible f over Q, for numbers given
// without a construction. Certifies by building a witness tower of at most
// max_depth steps; refutes by degree, total reality or the discriminant obstruction; otherwise
// Unknown.
ClassificationReport classify_polynomial(const RatPolynomial& f, int max_depth = 3);

// Class of a number from its own tower, falling back on its minimal polynomial.
ClassificationReport classify_number(const AlgebraicNumber& x, int max_depth = 3);

// Re-runs every check recorded in a report. True when they all reproduce.
bool revalidate(const ClassificationReport& r);

struct Corollary52Report {
  AlgebraicNumber u;        // sqrt(2 - sqrt2)
  AlgebraicNumber alpha;    // root of 4x^3 - 3x - u
  AlgebraicNumber u_prime;  // sqrt(2 + sqrt2)
  bool u_within_unit;       // 1 - u^2 > 0
  bool u_prime_exceeds_one;
  ClassificationReport e_certificate;     // E = Q(u, alpha) inside ET
  ClassificationReport e_bt_check;        // E is not a totally real tower
  ClassificationReport e_prime_obstruction;  // 4x^3 - 3x - u' over Q(u')
  bool ok() const;
};
Corollary52Report corollary52_demo();

}  // namespace origami
