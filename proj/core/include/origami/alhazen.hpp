#pragma once

#include <array>
#include <utility>
#include <vector>

#include "origami/geometry.hpp"

namespace origami {

// Points a, b outside the unit circle; complex numbers as (re, im).
struct AlhazenInstance {
  Point a;
  Point b;
};

// z -> z e^{i theta}
struct Rotation {
  AlgebraicNumber cos, sin;
  Point apply(const Point& p) const;
  Point invert(const Point& p) const;
  Line invert(const Line& l) const;  // the line's preimage
};

// (rotated instance, rotation taking the original to it). After the
// rotation ab is real and positive. DegenerateInput when a or b is 0.
std::pair<AlhazenInstance, Rotation> rotate_normalize(const AlhazenInstance& inst);

// The bisector equation is invariant under the rotation, so the pencil has the same
// parameters lambda in both frames; only the conic coefficients differ.
enum class Frame { Rotated, Original };

struct PencilData {
  AlhazenInstance original, rotated;
  Rotation rotation;
  AlgebraicNumber q, r, s, tau;
  // f(lambda) = lambda^3 + tau lambda + q r s / 2, low degree first. The
  // coefficients are rational for rational a, b and are kept in their
  // smallest field.
  std::vector<AlgebraicNumber> cubic;

  // Coefficients (xx, xy, yy, x, y, 1) of A2 + lambda A1 in the given frame.
  std::array<AlgebraicNumber, 6> conic(const AlgebraicNumber& lambda, Frame f = Frame::Rotated) const;
  AlgebraicNumber A1(const Point& z) const;
  AlgebraicNumber A2(const Point& z, Frame f = Frame::Rotated) const;
};

// Checks the instance (DegenerateInput unless |a| > 1, |b| > 1 and a != b)
// and builds the pencil.
PencilData pencil_data(const AlhazenInstance& inst);

// Im((ab) conj(z)^2) = Im((a + b) conj(z)), exactly, in the frame of inst.
bool verify_equation1(const Point& z, const AlhazenInstance& inst);

// Distinct real roots of a polynomial with real tower coefficients (low
// degree first), by a Sturm sequence evaluated with exact signs.
int real_root_count(const std::vector<AlgebraicNumber>& f);

struct PencilRoots {
  std::array<AlgebraicNumber, 3> roots;  // descending, repeated by multiplicity
  int sturm_count;                       // distinct real roots
};

// ComplexPencil when f has a non-real root. The roots are built on top of
// `over` when given (pass the rotated frame's field to factor there).
PencilRoots solve_pencil_cubic(const PencilData& d, const TowerPtr& over = nullptr);

struct DegenerateConic {
  AlgebraicNumber lambda;
  std::pair<Line, Line> lines;
  Frame frame;
};

// Factors A2 + lambda A1 into two lines: directions from the quadratic part,
// both through the singular point (or a parallel pair). NotDegenerate when
// the product does not reproduce the conic; ComplexLinePair when
// q^2 - lambda^2 < 0. New square roots are adjoined on top of `over`.
DegenerateConic factor_degenerate(const PencilData& d, const AlgebraicNumber& lambda, Frame f = Frame::Rotated,
                                  const TowerPtr& over = nullptr);

// The line pair through a known split of four conic points, checked against
// A2 + lambda A1 exactly. NotDegenerate when it does not match.
DegenerateConic degenerate_through(const PencilData& d, const AlgebraicNumber& lambda, Frame f,
                                   const std::pair<Point, Point>& first, const std::pair<Point, Point>& second);

// Whether the product of the two line forms is a scalar multiple of the conic.
bool line_pair_matches(const std::pair<Line, Line>& lines, const std::array<AlgebraicNumber, 6>& conic);

struct AlhazenSolution {
  Point z;                   // original frame
  std::array<int, 3> lines;  // indices into SolutionSet::lines, one per conic
};

struct SolutionSet {
  std::vector<AlhazenSolution> points;  // four, by angle in [0, 2pi)
  std::vector<Line> lines;              // six, original frame; 2k and 2k+1 from conic k
  std::vector<DegenerateConic> conics;
  PencilData pencil;
  PencilRoots roots;
  // incidence[i][j]: point i lies on line j
  std::vector<std::vector<bool>> incidence() const;
};

// Intersects the lines of the first two conics, keeps the points on both the
// circle and the hyperbola, splits them into the third conic's line pair and
// maps everything to the original frame. DegenerateIntersection when fewer
// than four distinct points survive.
SolutionSet assemble_solutions(const PencilData& d, const PencilRoots& roots,
                               const std::array<DegenerateConic, 2>& first_two);

// Solves and factors in the original frame, where the towers start from the
// field of a and b instead of the rotation's field.
SolutionSet solve_alhazen(const AlhazenInstance& inst);

}  // namespace origami
