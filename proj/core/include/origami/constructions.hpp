#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "origami/trace.hpp"

namespace origami {

// Field arithmetic carried out by folds: a number a is the point (a, 0) of
// the trace. Every operation records its folds, so the trace's profile says
// which axioms the numbers needed.
class FoldArithmetic {
 public:
  explicit FoldArithmetic(ConstructionTrace& t);

  ConstructionTrace& trace() { return t_; }
  AlgebraicNumber value(ObjectId a) const;

  ObjectId zero() const { return ConstructionTrace::kOrigin; }
  ObjectId one() const { return ConstructionTrace::kUnit; }
  ObjectId x_axis() const { return x_axis_; }
  ObjectId y_axis() const { return y_axis_; }

  ObjectId integer(long n);
  ObjectId rational(const Rational& q);
  ObjectId add(ObjectId a, ObjectId b);
  ObjectId neg(ObjectId a);
  ObjectId sub(ObjectId a, ObjectId b);
  ObjectId mul(ObjectId a, ObjectId b);
  ObjectId inv(ObjectId a);  // DivisionByZero
  ObjectId div(ObjectId a, ObjectId b);
  ObjectId half(ObjectId a);
  // sqrt(a^2 + b^2): right triangle on the axes, bisect the angle at O and
  // reflect the hypotenuse onto the x axis.
  ObjectId hyp(ObjectId a, ObjectId b);
  ObjectId hyp(const std::vector<ObjectId>& xs);  // EmptyInput

  ObjectId on_y(ObjectId a);               // (0, a)
  ObjectId point(ObjectId x, ObjectId y);  // (x, y)
  ObjectId project_x(ObjectId p);          // (p.x, 0)

 private:
  bool is_zero(ObjectId a) const { return value(a).is_zero(); }

  ConstructionTrace& t_;
  ObjectId x_axis_, y_axis_, diag_;
  std::map<long, ObjectId> ints_;
  std::map<ObjectId, ObjectId> on_y_;
};

// Perpendiculars at A and B, bisect both right angles, meet the
// bisectors in C and D, fold CD. Uses only L, P and B.
ObjectId perp_bisector_fig2(ConstructionTrace& t, ObjectId a, ObjectId b);

// sqrt(x1^2 + ... + xn^2) by the inductive right-triangle recipe on bare
// values. EmptyInput on an empty list.
AlgebraicNumber hypotenuse_sqrt(const std::vector<AlgebraicNumber>& xs);

struct PolygonConstruction {
  AlgebraicNumber c;  // cos(2 pi / n)
  AlgebraicNumber s;  // sin(2 pi / n)
  std::vector<Point> vertices;
  ConstructionTrace trace;
  std::vector<ObjectId> vertex_ids;  // the same vertices as folded in the trace
};

PolygonConstruction pentagon();
PolygonConstruction heptagon();

// The heptagon numbers on bare values: reduce t^3 + t^2 - 2t - 1, solve the
// reduced cubic by trisection, then cos(pi/7) = sqrt((1 + c)/2),
// cos(3pi/7) = 4cos^3(pi/7) - 3cos(pi/7) and
// sin(2pi/7) = sqrt(3/4 cos^2(pi/7) + cos^4(3pi/7)).
struct HeptagonData {
  AlgebraicNumber p, q;  // reduced cubic z^3 + p z + q
  AlgebraicNumber m, u;  // z = m w with 4 w^3 - 3 w = u
  AlgebraicNumber w, c, cos_pi_7, cos_3pi_7, s;
};
HeptagonData heptagon_pipeline();

struct ArchimedesReport {
  Point P, C, D;
  AlgebraicNumber cos_odp;  // cosine of the angle ODP
  bool c_on_circle;
  bool cd_unit;
  bool collinear;
  bool triple_angle;  // 4 cos^3(ODP) - 3 cos(ODP) = cos(angle at O)
  bool ok() const { return c_on_circle && cd_unit && collinear && triple_angle; }
};

// P is on the unit circle with 0 < angle(OP) <= 90 degrees; NotAcute
// otherwise, DegenerateInput when P is off the circle.
ArchimedesReport archimedes_demo(const Point& p);

// Recipes addressable by name.
struct ConstructionRecipe {
  std::string name;
  std::set<Axiom> axioms;  // declared axiom set
  ConstructionTrace trace;
  std::vector<std::pair<std::string, ObjectId>> outputs;
};

std::vector<std::string> recipe_names();
ConstructionRecipe run_recipe(const std::string& name);  // UnknownRecipe

}  // namespace origami
