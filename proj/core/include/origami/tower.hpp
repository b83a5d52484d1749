#pragma once

#include <map>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "origami/interval.hpp"
#include "origami/polynomial.hpp"
#include "origami/rational.hpp"

namespace origami {

class TowerField;
class AlgebraicNumber;
using TowerPtr = std::shared_ptr<const TowerField>;

enum class StepKind { SquareRoot, TrisectionRoot };

// One real embedding of a tower: at each level, which real root of the
// level's defining polynomial (under the lower embedding) the generator maps
// to, counted in descending order. The principal embedding is all zeros.
struct Embedding {
  std::vector<int> root_choices;
  // Internal branch id per level: for square roots 0 = +, 1 = -; for
  // trisection roots 0/1/2 = largest/middle/smallest monotone branch of
  // 4x^3 - 3x.
  std::vector<int> branches;

  bool is_principal() const;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

// Q = F0 < F1 < ... < Fn. Each level adjoins sqrt(a) (a >= 0) or the
// largest real root of 4x^3 - 3x - u (|u| < 1) under the principal
// embedding. Towers are immutable and shared; a tower is a prefix of another
// iff it appears on the other's parent chain.
class TowerField : public std::enable_shared_from_this<TowerField> {
 public:
  struct Step {
    StepKind kind;
    // radicand for SquareRoot, u for TrisectionRoot; lives in the parent tower
    std::shared_ptr<const AlgebraicNumber> param;
    int degree() const { return kind == StepKind::SquareRoot ? 2 : 3; }
  };

  // Default cap on tower height; beyond it adjoin_* throws TowerDepthExceeded.
  static constexpr int kDefaultMaxHeight = 12;
  static void set_max_height(int h);
  static int max_height();

  static TowerPtr rationals();

  // Only for the factory functions below; use adjoin_sqrt / adjoin_trisection_root.
  TowerField(TowerPtr parent, Step step);
  TowerField();

  const TowerPtr& parent() const { return parent_; }
  const Step& step() const { return *step_; }
  bool is_base() const { return !parent_; }
  int height() const { return height_; }
  size_t degree() const { return degree_; }
  bool is_totally_real() const { return embeddings_.size() == degree_; }
  const std::vector<Embedding>& embeddings() const { return embeddings_; }
  const Embedding& principal() const { return embeddings_.front(); }

  // Self first, then parent, ..., base last.
  std::vector<const TowerField*> chain() const;
  const TowerField* level(int h) const;
  bool is_prefix_of(const TowerField& other) const;

  // Certified value of this level's generator under `e`, at roughly `prec` bits.
  Interval generator_value(const Embedding& e, mpfr_prec_t prec) const;

  std::string describe() const;

  // A Q-primitive element of the whole tower (cached).
  AlgebraicNumber primitive_element() const;

 private:
  friend TowerPtr make_extension(const TowerPtr&, StepKind, const AlgebraicNumber&);
  void enumerate_embeddings();

  TowerPtr parent_;
  std::optional<Step> step_;
  int height_ = 0;
  size_t degree_ = 1;
  std::vector<Embedding> embeddings_;

  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<std::vector<int>, mpfr_prec_t>, Interval> cache_;
  mutable std::shared_ptr<const AlgebraicNumber> primitive_;
  // Extensions already built on top of this field, so adjoining the same
  // element twice yields the same tower.
  mutable std::vector<std::weak_ptr<const TowerField>> children_;
};

// Element of a tower, stored as rational coordinates over the power-product
// basis. Coordinates are blocked by the top generator g: coords[k*m + j] is
// the j-th coordinate (in the parent, of degree m) of the coefficient of g^k.
// Lifting to an extension therefore pads with zeros.
class AlgebraicNumber {
 public:
  AlgebraicNumber();
  AlgebraicNumber(const Rational& q);  // NOLINT: rationals embed implicitly
  AlgebraicNumber(long v);             // NOLINT
  AlgebraicNumber(int v) : AlgebraicNumber(static_cast<long>(v)) {}  // NOLINT
  AlgebraicNumber(TowerPtr tower, std::vector<Rational> coords);

  static AlgebraicNumber generator(const TowerPtr& tower);

  const TowerPtr& tower() const { return tower_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  AlgebraicNumber lift_to(const TowerPtr& target) const;
  // Re-expresses the number in the shortest prefix tower that holds it.
  AlgebraicNumber compacted() const;

  AlgebraicNumber& operator+=(const AlgebraicNumber& o);
  AlgebraicNumber& operator-=(const AlgebraicNumber& o);
  AlgebraicNumber& operator*=(const AlgebraicNumber& o);
  AlgebraicNumber& operator/=(const AlgebraicNumber& o);
  friend AlgebraicNumber operator+(AlgebraicNumber a, const AlgebraicNumber& b) { return a += b; }
  friend AlgebraicNumber operator-(AlgebraicNumber a, const AlgebraicNumber& b) { return a -= b; }
  friend AlgebraicNumber operator*(AlgebraicNumber a, const AlgebraicNumber& b) { return a *= b; }
  friend AlgebraicNumber operator/(AlgebraicNumber a, const AlgebraicNumber& b) { return a /= b; }
  AlgebraicNumber operator-() const;
  AlgebraicNumber inverse() const;
  AlgebraicNumber pow(unsigned n) const;

  // Exact equality: the difference has all-zero coordinates.
  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b);

  // Sign under the principal embedding (exact).
  int sign() const;
  int sign_under(const Embedding& e) const;
  int compare(const AlgebraicNumber& o) const { return (*this - o).sign(); }

  // Certified enclosure of width <= width under the embedding.
  Interval enclose(const Rational& width) const;
  Interval enclose(const Embedding& e, const Rational& width) const;
  Interval evaluate(const Embedding& e, mpfr_prec_t prec) const;
  double approx() const;
  std::string decimal(int digits = 30) const;

 private:
  TowerPtr tower_;
  std::vector<Rational> coords_;
};

// Common tower of two numbers: the taller one when the other is its prefix.
// Throws IncompatibleTowers otherwise.
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

int sign_of(const AlgebraicNumber& x);

// Prints a decimal approximation followed by the exact coordinates.
std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& x);

// Returns (new tower, sqrt(a) >= 0). If a is already a square in F no level is
// added. Throws NegativeRadicand when a < 0.
std::pair<TowerPtr, AlgebraicNumber> adjoin_sqrt(const TowerPtr& F, const AlgebraicNumber& a);
AlgebraicNumber sqrt(const AlgebraicNumber& a);

// Returns (new tower, y) with y the largest real root of 4y^3 - 3y - u.
// When the cubic has a root in F no trisection level is added (a square-root
// level may be, to reach the largest root). Throws OutOfRange when |u| > 1,
// DegenerateTrisection when |u| = 1.
std::pair<TowerPtr, AlgebraicNumber> adjoin_trisection_root(const TowerPtr& F, const AlgebraicNumber& u);

std::vector<Embedding> embeddings_of(const TowerPtr& F);

// Some y in x's tower with y^2 = x, if one exists.
std::optional<AlgebraicNumber> sqrt_in_field(const AlgebraicNumber& x);

// All roots in F of a square-free polynomial with coefficients in F
// (coefficients listed low degree first).
std::vector<AlgebraicNumber> roots_in_field(const TowerPtr& F, const std::vector<AlgebraicNumber>& poly);

// Norm from x's tower down to Q.
Rational norm(const AlgebraicNumber& x);

// Primitive integer polynomial (positive leading coefficient) of least degree
// vanishing at x, found by linear dependency among 1, x, x^2, ...
RatPolynomial minimal_polynomial(const AlgebraicNumber& x);

// Evaluates a rational polynomial at x in x's tower.
AlgebraicNumber evaluate(const RatPolynomial& f, const AlgebraicNumber& x);

bool is_totally_real(const AlgebraicNumber& x);
bool is_totally_positive(const AlgebraicNumber& x);

}  // namespace origami
