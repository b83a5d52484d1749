#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "origami/alhazen.hpp"
#include "origami/trace.hpp"

namespace origami {

// Exact objects to draw. Each is converted once to a rational approximation
// for drawing; nothing computed here goes back into the kernel.
struct RenderScene {
  struct Dot {
    Point p;
    std::string label;
    std::string cls = "point";
  };
  struct FullLine {  // clipped to the viewport
    Line l;
    std::string label;
    std::string cls = "line";
  };
  struct Segment {
    Point a, b;
    std::string cls = "segment";
  };
  struct Circle {
    Point center;
    AlgebraicNumber radius;
    std::string cls = "circle";
  };
  // The smaller angle between the directions of `from` and `to`, seen from
  // the center.
  struct Arc {
    Point center;
    Rational radius;
    Point from, to;
    std::string cls = "arc";
  };
  // xx x^2 + xy xy + yy y^2 + x x + y y + 1 = 0, sampled.
  struct Conic {
    std::array<AlgebraicNumber, 6> coeffs;
    std::string cls = "conic";
  };
  struct Viewport {
    Rational xmin, xmax, ymin, ymax;
  };

  std::string title;
  std::optional<Viewport> viewport;  // fitted to dots and circles when empty
  int width_px = 640;
  int places = 3;  // digits after the point in every coordinate

  std::vector<Circle> circles;
  std::vector<Conic> conics;
  std::vector<FullLine> lines;
  std::vector<Segment> segments;
  std::vector<Arc> arcs;
  std::vector<Dot> dots;
};

// Fixed element order, fixed decimals, no timestamps.
std::string render_svg(const RenderScene& scene);
// IoError when the file cannot be written.
void write_svg(const RenderScene& scene, const std::string& path);

// Every point and line of the trace; points carry their labels.
RenderScene scene_from_trace(const ConstructionTrace& t);

// Archimedes' neusis for P on the unit circle.
RenderScene archimedes_scene(const Point& p);
// The four-fold perpendicular bisector of (0, 0) and (4, 0), replayed.
RenderScene perp_bisector_scene();
// The trisecting fold for P, Q and l through P, with F, G, H, N, P', Q'.
RenderScene trisection_fold_scene(const Point& p, const Point& q, const Line& l);
// Unit circle, hyperbola, the six pencil lines and the four solutions.
RenderScene alhazen_scene(const SolutionSet& s);

// Scenes 1 to 4 (Archimedes, bisector, trisecting fold, Alhazen) with default
// inputs. OutOfRange otherwise.
RenderScene figure_scene(int n);

}  // namespace origami
