#include "origami/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "origami/constructions.hpp"
#include "origami/errors.hpp"

namespace origami {

namespace {

using AN = AlgebraicNumber;

Integer pow10(int n) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(n));
  return p;
}

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

// Nearest rational with a small denominator, well below the drawing grid.
Rational approx(const AN& x, int places) {
  if (x.is_rational()) return x.rational_value();
  Rational w(Integer(1), pow10(places + 4));
  Rational m = x.enclose(w).midpoint() * Rational(pow10(places + 4));
  return Rational(floor_of(m + Rational(1, 2)), pow10(places + 4));
}

std::string fixed(const Rational& q, int places) {
  Integer n = floor_of(q * Rational(pow10(places)) + Rational(1, 2));
  bool neg = sgn(n) < 0;
  std::string digits = Integer(abs(n)).get_str();
  if (places > 0) {
    if (static_cast<int>(digits.size()) <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
  }
  return neg ? "-" + digits : digits;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct RPoint {
  Rational x, y;
  friend bool operator==(const RPoint&, const RPoint&) = default;
  friend bool operator<(const RPoint& a, const RPoint& b) { return a.x != b.x ? a.x < b.x : a.y < b.y; }
};

class Canvas {
 public:
  Canvas(const RenderScene::Viewport& v, int width, int places)
      : v_(v), places_(places), scale_(Rational(width) / (v.xmax - v.xmin)) {
    width_ = width;
    height_ = floor_of((v.ymax - v.ymin) * scale_ + Rational(1, 2)).get_si();
  }

  int width() const { return width_; }
  int height() const { return height_; }
  const RenderScene::Viewport& view() const { return v_; }

  Rational px(const Rational& wx) const { return (wx - v_.xmin) * scale_; }
  Rational py(const Rational& wy) const { return (v_.ymax - wy) * scale_; }
  std::string x(const Rational& wx) const { return fixed(px(wx), places_); }
  std::string y(const Rational& wy) const { return fixed(py(wy), places_); }
  std::string xd(double wx) const { return x(Rational(wx)); }
  std::string yd(double wy) const { return y(Rational(wy)); }
  std::string len(const Rational& l) const { return fixed(l * scale_, places_); }

 private:
  RenderScene::Viewport v_;
  int places_;
  Rational scale_;
  int width_, height_;
};

RenderScene::Viewport fit(const RenderScene& s) {
  std::vector<RPoint> pts;
  auto add = [&](const Point& p) { pts.push_back({approx(p.x, 3), approx(p.y, 3)}); };
  for (const auto& d : s.dots) add(d.p);
  for (const auto& g : s.segments) {
    add(g.a);
    add(g.b);
  }
  for (const auto& c : s.circles) {
    Rational cx = approx(c.center.x, 3), cy = approx(c.center.y, 3), r = approx(c.radius, 3);
    pts.push_back({cx - r, cy - r});
    pts.push_back({cx + r, cy + r});
  }
  if (pts.empty()) return {-1, 1, -1, 1};
  RenderScene::Viewport v{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
  for (const auto& p : pts) {
    v.xmin = std::min(v.xmin, p.x);
    v.xmax = std::max(v.xmax, p.x);
    v.ymin = std::min(v.ymin, p.y);
    v.ymax = std::max(v.ymax, p.y);
  }
  Rational pad = std::max(std::max(Rational(v.xmax - v.xmin), Rational(v.ymax - v.ymin)), Rational(1)) / 8;
  // outward to tenths
  auto down = [](const Rational& q) { return Rational(floor_of(q * 10), 10); };
  auto up = [](const Rational& q) { return Rational(-floor_of(-q * 10), 10); };
  return {down(v.xmin - pad), up(v.xmax + pad), down(v.ymin - pad), up(v.ymax + pad)};
}

// Ends of a x + b y + c = 0 inside the viewport, if it crosses it.
std::optional<std::pair<RPoint, RPoint>> clip(const Rational& a, const Rational& b, const Rational& c,
                                              const RenderScene::Viewport& v) {
  std::vector<RPoint> hits;
  if (sgn(b) != 0)
    for (const Rational& x : {v.xmin, v.xmax}) {
      Rational y = -(a * x + c) / b;
      if (v.ymin <= y && y <= v.ymax) hits.push_back({x, y});
    }
  if (sgn(a) != 0)
    for (const Rational& y : {v.ymin, v.ymax}) {
      Rational x = -(b * y + c) / a;
      if (v.xmin <= x && x <= v.xmax) hits.push_back({x, y});
    }
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  if (hits.size() < 2) return std::nullopt;
  return std::make_pair(hits.front(), hits.back());
}

using Polyline = std::vector<std::pair<double, double>>;

// Samples the conic along one axis, solving the quadratic in the other.
// `swap` sweeps y and solves for x.
std::vector<Polyline> sweep(const std::array<double, 6>& k, const RenderScene::Viewport& v, bool swap) {
  const int n = 480;
  double lo = (swap ? v.ymin : v.xmin).get_d(), hi = (swap ? v.ymax : v.xmax).get_d();
  double olo = (swap ? v.xmin : v.ymin).get_d(), ohi = (swap ? v.xmax : v.ymax).get_d();
  double span = ohi - olo;
  double kmax = 0;
  for (double c : k) kmax = std::max(kmax, std::fabs(c));
  const double eps = 1e-12 * kmax;
  // t is the swept coordinate, u the solved one
  double tt = swap ? k[2] : k[0], uu = swap ? k[0] : k[2], t1 = swap ? k[4] : k[3], u1 = swap ? k[3] : k[4];
  std::vector<Polyline> out;
  std::array<Polyline, 2> cur;
  std::array<double, 2> prev{};
  auto flush = [&](int b) {
    if (cur[b].size() >= 2) out.push_back(cur[b]);
    cur[b].clear();
  };
  for (int i = 0; i <= n; ++i) {
    double t = lo + (hi - lo) * i / n;
    double a2 = uu, a1 = k[1] * t + u1, a0 = tt * t * t + t1 * t + k[5];
    std::vector<double> us;
    if (std::fabs(a2) <= eps) {
      if (std::fabs(a1) > eps) us.push_back(-a0 / a1);
    } else {
      double disc = a1 * a1 - 4 * a2 * a0;
      if (disc >= 0) {
        double r = std::sqrt(disc);
        double u_lo = (-a1 - r) / (2 * a2), u_hi = (-a1 + r) / (2 * a2);
        us = {std::min(u_lo, u_hi), std::max(u_lo, u_hi)};
      }
    }
    for (int b = 0; b < 2; ++b) {
      bool ok = b < static_cast<int>(us.size()) && us[b] >= olo - 0.05 * span && us[b] <= ohi + 0.05 * span;
      if (ok && !cur[b].empty() && std::fabs(us[b] - prev[b]) > 0.5 * span) flush(b);
      if (!ok) {
        flush(b);
        continue;
      }
      cur[b].push_back(swap ? std::make_pair(us[b], t) : std::make_pair(t, us[b]));
      prev[b] = us[b];
    }
  }
  flush(0);
  flush(1);
  return out;
}

void push_line(RenderScene& s, const Line& l, std::string label, std::string cls) {
  s.lines.push_back({l, std::move(label), std::move(cls)});
}

Point plus(const Point& p, const AN& dx, const AN& dy) { return Point(p.x + dx, p.y + dy); }

}  // namespace

std::string render_svg(const RenderScene& s) {
  const int pl = s.places;
  Canvas cv(s.viewport ? *s.viewport : fit(s), s.width_px, pl);
  const auto& v = cv.view();
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cv.width() << "\" height=\"" << cv.height()
     << "\" viewBox=\"0 0 " << cv.width() << ' ' << cv.height() << "\">\n";
  os << "<title>" << escape(s.title) << "</title>\n";
  os << "<style>"
        ".background{fill:#ffffff}"
        ".circle{fill:none;stroke:#1f4e79;stroke-width:1.5}"
        ".conic{fill:none;stroke:#7f3f98;stroke-width:1.5}"
        ".line{stroke:#8c8c8c;stroke-width:1}"
        ".fold{stroke:#c0392b;stroke-width:1.8}"
        ".pencil0{stroke:#d35400;stroke-width:1.2}"
        ".pencil1{stroke:#16a085;stroke-width:1.2}"
        ".pencil2{stroke:#2c3e50;stroke-width:1.2}"
        ".segment{stroke:#222222;stroke-width:1.5}"
        ".ruler{stroke:#c0392b;stroke-width:2}"
        ".arc{fill:none;stroke:#2e8b57;stroke-width:1.2}"
        ".point{fill:#222222}"
        ".solution{fill:#c0392b}"
        ".label{font-family:sans-serif;font-size:14px;fill:#222222}"
        "</style>\n";
  os << "<rect class=\"background\" x=\"0\" y=\"0\" width=\"" << cv.width() << "\" height=\"" << cv.height()
     << "\"/>\n";

  os << "<g id=\"circles\">\n";
  for (const auto& c : s.circles)
    os << "<circle class=\"" << c.cls << "\" cx=\"" << cv.x(approx(c.center.x, pl)) << "\" cy=\""
       << cv.y(approx(c.center.y, pl)) << "\" r=\"" << cv.len(approx(c.radius, pl)) << "\"/>\n";
  os << "</g>\n<g id=\"conics\">\n";
  for (const auto& c : s.conics) {
    std::array<double, 6> k;
    for (int i = 0; i < 6; ++i) k[i] = approx(c.coeffs[i], 12).get_d();
    for (bool swap : {false, true})
      for (const auto& line : sweep(k, v, swap)) {
        os << "<polyline class=\"" << c.cls << "\" points=\"";
        for (size_t i = 0; i < line.size(); ++i)
          os << (i ? " " : "") << cv.xd(line[i].first) << ',' << cv.yd(line[i].second);
        os << "\"/>\n";
      }
  }
  os << "</g>\n<g id=\"lines\">\n";
  std::vector<std::pair<RPoint, std::string>> line_labels;
  for (const auto& l : s.lines) {
    auto ends = clip(approx(l.l.a(), pl + 4), approx(l.l.b(), pl + 4), approx(l.l.c(), pl + 4), v);
    if (!ends) continue;
    os << "<line class=\"" << l.cls << "\" x1=\"" << cv.x(ends->first.x) << "\" y1=\"" << cv.y(ends->first.y)
       << "\" x2=\"" << cv.x(ends->second.x) << "\" y2=\"" << cv.y(ends->second.y) << "\"/>\n";
    if (!l.label.empty()) line_labels.emplace_back(ends->second, l.label);
  }
  os << "</g>\n<g id=\"segments\">\n";
  for (const auto& g : s.segments)
    os << "<line class=\"" << g.cls << "\" x1=\"" << cv.x(approx(g.a.x, pl)) << "\" y1=\"" << cv.y(approx(g.a.y, pl))
       << "\" x2=\"" << cv.x(approx(g.b.x, pl)) << "\" y2=\"" << cv.y(approx(g.b.y, pl)) << "\"/>\n";
  os << "</g>\n<g id=\"arcs\">\n";
  for (const auto& a : s.arcs) {
    double cx = approx(a.center.x, pl).get_d(), cy = approx(a.center.y, pl).get_d(), r = a.radius.get_d();
    double t1 = std::atan2(approx(a.from.y, pl).get_d() - cy, approx(a.from.x, pl).get_d() - cx);
    double t2 = std::atan2(approx(a.to.y, pl).get_d() - cy, approx(a.to.x, pl).get_d() - cx);
    double sweep_angle = std::remainder(t2 - t1, 2 * M_PI);
    if (sweep_angle < 0) std::swap(t1, t2);
    // counterclockwise in the plane is counterclockwise on screen: sweep flag 0
    os << "<path class=\"" << a.cls << "\" d=\"M " << cv.xd(cx + r * std::cos(t1)) << ' ' << cv.yd(cy + r * std::sin(t1))
       << " A " << cv.len(a.radius) << ' ' << cv.len(a.radius) << " 0 0 0 " << cv.xd(cx + r * std::cos(t2)) << ' '
       << cv.yd(cy + r * std::sin(t2)) << "\"/>\n";
  }
  os << "</g>\n<g id=\"points\">\n";
  for (const auto& d : s.dots)
    os << "<circle class=\"" << d.cls << "\" cx=\"" << cv.x(approx(d.p.x, pl)) << "\" cy=\"" << cv.y(approx(d.p.y, pl))
       << "\" r=\"3\"/>\n";
  os << "</g>\n<g id=\"labels\">\n";
  const Rational off(6);
  for (const auto& d : s.dots) {
    if (d.label.empty()) continue;
    os << "<text class=\"label\" x=\"" << fixed(cv.px(approx(d.p.x, pl)) + off, pl) << "\" y=\""
       << fixed(cv.py(approx(d.p.y, pl)) - off, pl) << "\">" << escape(d.label) << "</text>\n";
  }
  for (const auto& [p, label] : line_labels)
    os << "<text class=\"label\" x=\"" << cv.x(p.x) << "\" y=\"" << cv.y(p.y) << "\">" << escape(label) << "</text>\n";
  os << "</g>\n</svg>\n";
  return os.str();
}

void write_svg(const RenderScene& scene, const std::string& path) {
  std::string svg = render_svg(scene);
  std::ofstream f(path, std::ios::binary);
  if (!f) fail(ErrorCode::IoError, "cannot open " + path);
  f << svg;
  if (!f) fail(ErrorCode::IoError, "cannot write " + path);
}

RenderScene scene_from_trace(const ConstructionTrace& t) {
  RenderScene s;
  s.title = "construction trace";
  for (size_t i = 0; i < t.object_count(); ++i) {
    ObjectId id = static_cast<ObjectId>(i);
    if (t.is_point(id))
      s.dots.push_back({t.point(id), t.label(id)});
    else
      push_line(s, t.line(id), t.label(id), "line");
  }
  return s;
}

RenderScene archimedes_scene(const Point& p) {
  ArchimedesReport rep = archimedes_demo(p);
  RenderScene s;
  s.title = "Archimedes trisection";
  const Point O(AN(0), AN(0));
  s.circles.push_back({O, AN(1)});
  push_line(s, Line(AN(0), AN(1), AN(0)), "r", "line");
  s.segments.push_back({O, rep.P});
  s.segments.push_back({O, rep.C});
  s.segments.push_back({rep.D, rep.P, "ruler"});
  s.arcs.push_back({O, Rational(1, 4), Point(AN(1), AN(0)), rep.P});
  s.arcs.push_back({rep.D, Rational(1, 2), O, rep.P});
  s.dots = {{O, "O"}, {rep.P, "P"}, {rep.C, "C"}, {rep.D, "D"}};
  return s;
}

RenderScene perp_bisector_scene() {
  ConstructionTrace t;
  FoldArithmetic F(t);
  ObjectId b = F.integer(4);
  size_t before = t.object_count();
  ObjectId cd = perp_bisector_fig2(t, F.zero(), b);
  RenderScene s;
  s.title = "Perpendicular bisection";
  s.dots.push_back({t.point(F.zero()), "A"});
  s.dots.push_back({t.point(b), "B"});
  const char* names[] = {"C", "D"};
  int k = 0;
  for (size_t i = before; i < t.object_count(); ++i) {
    ObjectId id = static_cast<ObjectId>(i);
    if (t.is_point(id)) {
      s.dots.push_back({t.point(id), k < 2 ? names[k] : ""});
      ++k;
    } else {
      push_line(s, t.line(id), id == cd ? "CD" : "", id == cd ? "fold" : "line");
    }
  }
  return s;
}

RenderScene trisection_fold_scene(const Point& P, const Point& Q, const Line& l) {
  Line l3 = line_through(P, Q);
  Line l1 = perpendicular_at(l3, P);
  Line l2 = perp_bisector(P, Q);
  auto folds = fold_T_lines(P, Q, l);
  if (folds.empty()) fail(ErrorCode::NoRealFold, "no trisecting fold for this configuration");
  const Line& f = folds.front();
  Point N = intersect(l2, l3), F = intersect(f, l), G = intersect(f, l1), H = intersect(f, l2);
  Point P1 = reflect_point(P, f), Q1 = reflect_point(Q, f);
  auto [dx, dy] = l.direction();
  // O on the side of l that makes the angle OPG the one being trisected
  if ((dx * (G.x - P.x) + dy * (G.y - P.y)).sign() < 0) {
    dx = -dx;
    dy = -dy;
  }
  Point O = plus(P, dx * AN(Rational(3, 2)), dy * AN(Rational(3, 2)));
  RenderScene s;
  s.title = "Trisection fold";
  push_line(s, l, "l", "line");
  push_line(s, l1, "l1", "line");
  push_line(s, l2, "l2", "line");
  push_line(s, l3, "l3", "line");
  push_line(s, f, "l'", "fold");
  s.segments = {{P, P1}, {Q, Q1}, {P, H}};
  s.arcs.push_back({P, Rational(1, 3), G, O});
  s.arcs.push_back({P, Rational(1, 2), G, H});
  s.dots = {{P, "P"}, {Q, "Q"}, {N, "N"}, {F, "F"}, {G, "G"}, {H, "H"}, {P1, "P'"}, {Q1, "Q'"}, {O, "O"}};
  return s;
}

RenderScene alhazen_scene(const SolutionSet& sol) {
  const PencilData& d = sol.pencil;
  RenderScene s;
  s.title = "Alhazen pencil";
  s.circles.push_back({Point(AN(0), AN(0)), AN(1)});
  s.conics.push_back({d.conic(AN(0), Frame::Original)});
  for (size_t i = 0; i < sol.lines.size(); ++i) push_line(s, sol.lines[i], "", "pencil" + std::to_string(i / 2));
  auto inverse = [](const Point& a) {
    AN n = a.x * a.x + a.y * a.y;
    return Point(a.x / n, a.y / n);
  };
  s.dots.push_back({d.original.a, "a"});
  s.dots.push_back({d.original.b, "b"});
  s.dots.push_back({inverse(d.original.a), ""});
  s.dots.push_back({inverse(d.original.b), ""});
  for (size_t i = 0; i < sol.points.size(); ++i)
    s.dots.push_back({sol.points[i].z, "z" + std::to_string(i + 1), "solution"});
  return s;
}

RenderScene figure_scene(int n) {
  const AN zero(0);
  switch (n) {
    case 1:
      return archimedes_scene(Point(AN(Rational(3, 5)), AN(Rational(4, 5))));
    case 2:
      return perp_bisector_scene();
    case 3:
      return trisection_fold_scene(Point(zero, zero), Point(zero, AN(2)), Line(AN(4), AN(-3), zero));
    case 4:
      return alhazen_scene(solve_alhazen({Point(AN(2), zero), Point(AN(3), zero)}));
  }
  fail(ErrorCode::OutOfRange, "figures are numbered 1 to 4");
}

}  // namespace origami
