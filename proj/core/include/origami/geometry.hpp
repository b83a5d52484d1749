#pragma once

#include <utility>

#include "origami/tower.hpp"

namespace origami {

struct Point {
  AlgebraicNumber x;
  AlgebraicNumber y;

  Point() = default;
  Point(AlgebraicNumber x_, AlgebraicNumber y_);

  TowerPtr tower() const { return x.tower(); }
  Point lift_to(const TowerPtr& t) const { return {x.lift_to(t), y.lift_to(t)}; }
  friend bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
};

// a x + b y + c = 0 with the first nonzero of (a, b) equal to 1, so equal
// lines have equal coefficients.
class Line {
 public:
  Line(AlgebraicNumber a, AlgebraicNumber b, AlgebraicNumber c);

  const AlgebraicNumber& a() const { return a_; }
  const AlgebraicNumber& b() const { return b_; }
  const AlgebraicNumber& c() const { return c_; }
  TowerPtr tower() const { return c_.tower(); }
  Line lift_to(const TowerPtr& t) const;

  AlgebraicNumber residual(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
  bool contains(const Point& p) const { return residual(p).is_zero(); }
  // (b, -a), a direction vector along the line
  std::pair<AlgebraicNumber, AlgebraicNumber> direction() const { return {b_, -a_}; }

  friend bool operator==(const Line& l, const Line& m) { return l.a_ == m.a_ && l.b_ == m.b_ && l.c_ == m.c_; }

 private:
  AlgebraicNumber a_, b_, c_;
};

TowerPtr common_tower(const Point& p, const Point& q);
TowerPtr common_tower(const Line& l, const Line& m);
TowerPtr common_tower(const Point& p, const Line& l);

AlgebraicNumber squared_distance(const Point& p, const Point& q);
AlgebraicNumber dot(const std::pair<AlgebraicNumber, AlgebraicNumber>& u,
                    const std::pair<AlgebraicNumber, AlgebraicNumber>& v);
Point midpoint(const Point& p, const Point& q);

Line line_through(const Point& p, const Point& q);                         // CoincidentPoints
Point intersect(const Line& l1, const Line& l2);                           // ParallelLines, IdenticalLines
bool parallel(const Line& l1, const Line& l2);
Point reflect_point(const Point& p, const Line& l);
Line reflect_line(const Line& m, const Line& l);
Line perpendicular_at(const Line& l, const Point& p);                      // PointNotOnLine
Line perpendicular_from(const Point& p, const Line& l);
Point foot_of_perpendicular(const Point& p, const Line& l);
Line perp_bisector(const Point& p, const Point& q);                        // CoincidentPoints
// Both bisectors of the angles between two crossing lines, normalized with
// sqrt(a^2 + b^2) of each line. The first is n2 l1 - n1 l2 = 0.
std::pair<Line, Line> angle_bisectors(const Line& l1, const Line& l2);  // ParallelLines, IdenticalLines

std::ostream& operator<<(std::ostream& os, const Point& p);
std::ostream& operator<<(std::ostream& os, const Line& l);

}  // namespace origami
