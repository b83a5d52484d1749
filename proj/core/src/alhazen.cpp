#include "origami/alhazen.hpp"

#include <algorithm>
#include <sstream>

#include "origami/cubic.hpp"
#include "origami/errors.hpp"

namespace origami {

using AN = AlgebraicNumber;

namespace {

// Square root adjoined on top of a running tower, so that everything the
// solver produces lives in one chain of fields.
AN root_on(TowerPtr& F, const AN& a) {
  F = common_tower(F, a.tower());
  auto [T, r] = adjoin_sqrt(F, a.lift_to(F));
  F = T;
  return r;
}

// Complex multiplication on (re, im) pairs.
std::pair<AN, AN> cmul(const Point& u, const Point& v) {
  return {u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x};
}

AN norm2(const Point& p) { return p.x * p.x + p.y * p.y; }

std::vector<AN> trim(std::vector<AN> p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

std::vector<AN> poly_rem(std::vector<AN> a, const std::vector<AN>& b) {
  a = trim(std::move(a));
  while (a.size() >= b.size()) {
    AN k = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= k * b[i];
    a.pop_back();
    a = trim(std::move(a));
  }
  return a;
}

std::string describe(const std::vector<Point>& pts) {
  std::ostringstream os;
  for (size_t i = 0; i < pts.size(); ++i) os << (i ? ", " : "") << pts[i];
  return os.str();
}

}  // namespace

Point Rotation::apply(const Point& p) const { return {p.x * cos - p.y * sin, p.x * sin + p.y * cos}; }

Point Rotation::invert(const Point& p) const { return {p.x * cos + p.y * sin, p.y * cos - p.x * sin}; }

Line Rotation::invert(const Line& l) const {
  return Line(l.a() * cos + l.b() * sin, l.b() * cos - l.a() * sin, l.c());
}

std::pair<AlhazenInstance, Rotation> rotate_normalize(const AlhazenInstance& inst) {
  if (norm2(inst.a).is_zero() || norm2(inst.b).is_zero()) fail(ErrorCode::DegenerateInput, "a and b must be nonzero");
  auto [re, im] = cmul(inst.a, inst.b);
  Rotation rot{AN(1), AN(0)};
  if (im.is_zero() && re.sign() < 0) {
    rot = {AN(0), AN(-1)};  // arg(ab) = pi
  } else if (!im.is_zero()) {
    TowerPtr F = common_tower(re.tower(), im.tower());
    AN rho = root_on(F, re * re + im * im);
    // half angle of arg(ab), which lies in (-pi, pi)
    AN ch = root_on(F, (AN(1) + re / rho) / AN(2));
    AN sh = im / (AN(2) * rho * ch);
    rot = {ch, -sh};
  }
  AlhazenInstance out{rot.apply(inst.a), rot.apply(inst.b)};
  auto [re2, im2] = cmul(out.a, out.b);
  if (!im2.is_zero() || re2.sign() <= 0) throw std::logic_error("rotation failed to make ab positive");
  return {out, rot};
}

std::array<AN, 6> PencilData::conic(const AN& l, Frame f) const {
  if (f == Frame::Rotated) return {l, AN(2) * q, l, s, -r, -l};
  // Im((a + b) conj z) - Im(ab conj(z)^2) written out in the original frame
  auto [pr, pi] = cmul(original.a, original.b);
  AN sr = original.a.x + original.b.x, si = original.a.y + original.b.y;
  return {l - pi, AN(2) * pr, l + pi, si, -sr, -l};
}

AN PencilData::A1(const Point& z) const { return norm2(z) - AN(1); }

AN PencilData::A2(const Point& z, Frame f) const {
  auto c = conic(AN(0), f);
  return c[0] * z.x * z.x + c[1] * z.x * z.y + c[2] * z.y * z.y + c[3] * z.x + c[4] * z.y;
}

PencilData pencil_data(const AlhazenInstance& inst) {
  if ((norm2(inst.a) - AN(1)).sign() <= 0 || (norm2(inst.b) - AN(1)).sign() <= 0)
    fail(ErrorCode::DegenerateInput, "a and b must lie outside the unit circle");
  if (inst.a == inst.b) fail(ErrorCode::DegenerateInput, "a and b must differ");
  auto [rotated, rot] = rotate_normalize(inst);
  PencilData d{inst, rotated, rot, AN(0), AN(0), AN(0), AN(0), {}};
  d.q = cmul(rotated.a, rotated.b).first;
  d.r = rotated.a.x + rotated.b.x;
  d.s = rotated.a.y + rotated.b.y;
  if (d.q.sign() <= 0) throw std::logic_error("q must be positive after rotation");
  d.tau = ((d.s * d.s + d.r * d.r - AN(4) * d.q * d.q) / AN(4)).compacted();
  d.cubic = {(d.q * d.r * d.s / AN(2)).compacted(), d.tau, AN(0), AN(1)};
  return d;
}

bool verify_equation1(const Point& z, const AlhazenInstance& inst) {
  auto [pre, pim] = cmul(inst.a, inst.b);
  AN sre = inst.a.x + inst.b.x, sim = inst.a.y + inst.b.y;
  AN lhs = pim * (z.x * z.x - z.y * z.y) - AN(2) * pre * z.x * z.y;
  AN rhs = sim * z.x - sre * z.y;
  return lhs == rhs;
}

int real_root_count(const std::vector<AN>& f0) {
  std::vector<AN> f = trim(f0);
  if (f.empty()) fail(ErrorCode::ZeroPolynomial, "zero polynomial");
  std::vector<std::vector<AN>> seq{f};
  std::vector<AN> df;
  for (size_t i = 1; i < f.size(); ++i) df.push_back(AN(static_cast<long>(i)) * f[i]);
  df = trim(df);
  if (!df.empty()) seq.push_back(df);
  while (seq.back().size() > 1) {
    std::vector<AN> r = poly_rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (AN& c : r) c = -c;
    seq.push_back(r);
  }
  auto changes = [&](bool at_neg) {
    int n = 0, prev = 0;
    for (const auto& p : seq) {
      int sg = p.back().sign();
      if (at_neg && (p.size() - 1) % 2 == 1) sg = -sg;
      if (prev != 0 && sg != prev) ++n;
      prev = sg;
    }
    return n;
  };
  return changes(true) - changes(false);
}

PencilRoots solve_pencil_cubic(const PencilData& d, const TowerPtr& over) {
  TowerPtr F = common_tower(d.cubic[0].tower(), d.tau.tower());
  if (over) F = common_tower(F, over);
  const AN c0 = d.cubic[0].lift_to(F);
  const AN tau = d.tau.lift_to(F);
  ReducedCubic red{tau, c0};
  AN disc = discriminant_cubic(red);
  int count = real_root_count(d.cubic);
  if (disc.sign() < 0)
    fail(ErrorCode::ComplexPencil, "pencil cubic has " + std::to_string(count) + " real roots, expected 3");
  const std::vector<AN> cubic{c0, tau, AN(0), AN(1)};
  PencilRoots out{{AN(0), AN(0), AN(0)}, count};
  if (c0.is_zero()) {
    // qrs = 0: lambda (lambda^2 + tau)
    if (!tau.is_zero()) {
      AN t = root_on(F, -tau);
      out.roots = {t, AN(0), -t};
    }
  } else if (disc.is_zero()) {
    AN dbl = AN(-3) * c0 / (AN(2) * tau), single = AN(3) * c0 / tau;
    out.roots = single.compare(dbl) > 0 ? std::array<AN, 3>{single, dbl, dbl} : std::array<AN, 3>{dbl, dbl, single};
  } else if (auto in_field = roots_in_field(F, cubic); !in_field.empty()) {
    // deflate: lambda^2 + rho lambda + (tau + rho^2)
    AN rho = in_field.front();
    AN t = root_on(F, AN(-3) * rho * rho - AN(4) * tau);
    out.roots = {rho, (-rho + t) / AN(2), (-rho - t) / AN(2)};
  } else {
    out.roots = solve_totally_real_cubic(red).roots;
  }
  TowerPtr T = F;
  for (const AN& x : out.roots) T = common_tower(T, x.tower());
  for (AN& x : out.roots) x = x.lift_to(T);
  std::sort(out.roots.begin(), out.roots.end(), [](const AN& a, const AN& b) { return a.compare(b) > 0; });
  for (const AN& x : out.roots) {
    if (!(x * x * x + tau * x + c0).is_zero()) throw std::logic_error("pencil root failed residual check");
  }
  return out;
}

bool line_pair_matches(const std::pair<Line, Line>& lp, const std::array<AN, 6>& C) {
  const Line& l = lp.first;
  const Line& m = lp.second;
  std::array<AN, 6> P{l.a() * m.a(), l.a() * m.b() + l.b() * m.a(), l.b() * m.b(),
                      l.a() * m.c() + l.c() * m.a(), l.b() * m.c() + l.c() * m.b(), l.c() * m.c()};
  auto k = std::find_if(C.begin(), C.end(), [](const AN& x) { return !x.is_zero(); });
  if (k == C.end()) return false;
  size_t piv = static_cast<size_t>(k - C.begin());
  if (P[piv].is_zero()) return false;
  for (size_t i = 0; i < 6; ++i) {
    if (!(P[i] * C[piv] == P[piv] * C[i])) return false;
  }
  return true;
}

DegenerateConic factor_degenerate(const PencilData& d, const AN& lambda, Frame frame, const TowerPtr& over) {
  if (!(lambda * lambda * lambda + d.tau * lambda + d.cubic[0]).is_zero())
    fail(ErrorCode::NotDegenerate, "lambda is not a root of the pencil cubic");
  const auto C = d.conic(lambda, frame);
  const AN &A = C[0], &B = C[1], &Cy = C[2], &D = C[3], &E = C[4], &F0 = C[5];
  AN disc = B * B - AN(4) * A * Cy;  // 4 (q^2 - lambda^2) in either frame
  if (disc.sign() < 0) fail(ErrorCode::ComplexLinePair, "q^2 - lambda^2 < 0");
  TowerPtr F = lambda.tower();
  for (const AN& c : C) F = common_tower(F, c.tower());
  if (over) F = common_tower(F, over);
  std::optional<std::pair<Line, Line>> lines;
  if (!disc.is_zero()) {
    // both lines pass through the singular point, where the gradient vanishes
    AN det = -disc;
    AN x0 = (AN(-2) * Cy * D + B * E) / det;
    AN y0 = (AN(-2) * A * E + B * D) / det;
    if (!A.is_zero()) {
      // directions x = t y from A t^2 + B t + C = 0
      AN w = root_on(F, disc);
      AN t1 = (-B + w) / (AN(2) * A), t2 = (-B - w) / (AN(2) * A);
      lines.emplace(Line(AN(1), -t1, t1 * y0 - x0), Line(AN(1), -t2, t2 * y0 - x0));
    } else {
      // y (B x + C y)
      lines.emplace(Line(AN(0), AN(1), -y0), Line(B, Cy, -B * x0 - Cy * y0));
    }
  } else if (!A.is_zero()) {
    // A (x - t y + c1)(x - t y + c2) with c1 + c2 = D / A and c1 c2 = F / A
    AN t = -B / (AN(2) * A);
    AN rad = D * D - AN(4) * A * F0;
    if (rad.sign() < 0) fail(ErrorCode::ComplexLinePair, "parallel pair is not real");
    AN w = root_on(F, rad);
    AN c1 = (D + w) / (AN(2) * A), c2 = (D - w) / (AN(2) * A);
    lines.emplace(Line(AN(1), -t, c1), Line(AN(1), -t, c2));
  } else if (!Cy.is_zero()) {
    AN rad = E * E - AN(4) * Cy * F0;
    if (rad.sign() < 0) fail(ErrorCode::ComplexLinePair, "parallel pair is not real");
    AN w = root_on(F, rad);
    lines.emplace(Line(AN(0), AN(1), (E + w) / (AN(2) * Cy)), Line(AN(0), AN(1), (E - w) / (AN(2) * Cy)));
  } else {
    fail(ErrorCode::NotDegenerate, "conic has no quadratic part");
  }
  if (!line_pair_matches(*lines, C)) fail(ErrorCode::NotDegenerate, "line pair does not reproduce the conic");
  return {lambda, *lines, frame};
}

DegenerateConic degenerate_through(const PencilData& d, const AN& lambda, Frame frame,
                                   const std::pair<Point, Point>& first, const std::pair<Point, Point>& second) {
  std::pair<Line, Line> lines{line_through(first.first, first.second), line_through(second.first, second.second)};
  if (!line_pair_matches(lines, d.conic(lambda, frame)))
    fail(ErrorCode::NotDegenerate, "line pair does not reproduce the conic");
  return {lambda, lines, frame};
}

std::vector<std::vector<bool>> SolutionSet::incidence() const {
  std::vector<std::vector<bool>> m;
  for (const auto& p : points) {
    std::vector<bool> row;
    for (const Line& l : lines) row.push_back(l.contains(p.z));
    m.push_back(row);
  }
  return m;
}

SolutionSet assemble_solutions(const PencilData& d, const PencilRoots& roots,
                               const std::array<DegenerateConic, 2>& first_two) {
  const Frame frame = first_two[0].frame;
  if (first_two[1].frame != frame) throw std::logic_error("conics factored in different frames");
  auto to_original = [&](const Point& p) { return frame == Frame::Rotated ? d.rotation.invert(p) : p; };
  auto line_to_original = [&](const Line& l) { return frame == Frame::Rotated ? d.rotation.invert(l) : l; };
  const auto& [l11, l12] = first_two[0].lines;
  const auto& [l21, l22] = first_two[1].lines;
  // grid[i][j] = line i of the first conic meets line j of the second
  std::vector<Point> found;
  std::array<std::array<std::optional<Point>, 2>, 2> grid;
  const std::array<const Line*, 2> a{&l11, &l12}, b{&l21, &l22};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      try {
        Point p = intersect(*a[i], *b[j]);
        if (!d.A1(p).is_zero() || !d.A2(p, frame).is_zero()) continue;
        if (std::find(found.begin(), found.end(), p) != found.end()) continue;
        found.push_back(p);
        grid[i][j] = p;
      } catch (const Error&) {
      }
    }
  }
  if (found.size() < 4) {
    std::vector<Point> orig;
    for (const auto& p : found) orig.push_back(to_original(p));
    fail(ErrorCode::DegenerateIntersection,
         "found " + std::to_string(found.size()) + " of 4 points: " + describe(orig));
  }
  // the remaining root, removing the two already used once each
  std::vector<AN> rest(roots.roots.begin(), roots.roots.end());
  for (const auto& c : first_two) {
    auto it = std::find(rest.begin(), rest.end(), c.lambda);
    if (it == rest.end()) throw std::logic_error("conic parameter is not a pencil root");
    rest.erase(it);
  }
  DegenerateConic third = degenerate_through(d, rest.front(), frame, {*grid[0][0], *grid[1][1]}, {*grid[0][1], *grid[1][0]});

  SolutionSet out;
  out.pencil = d;
  out.roots = roots;
  out.conics = {first_two[0], first_two[1], third};
  for (const auto& c : out.conics) {
    out.lines.push_back(line_to_original(c.lines.first));
    out.lines.push_back(line_to_original(c.lines.second));
  }
  for (const Point& p : found) {
    AlhazenSolution sol{to_original(p), {-1, -1, -1}};
    for (int k = 0; k < 3; ++k) {
      for (int e = 0; e < 2; ++e) {
        if (out.lines[2 * k + e].contains(sol.z)) sol.lines[k] = 2 * k + e;
      }
    }
    if (!verify_equation1(sol.z, d.original) || !(norm2(sol.z) == AN(1)))
      throw std::logic_error("solution failed the exact checks");
    out.points.push_back(sol);
  }
  // counterclockwise from the positive x axis
  auto half = [](const Point& p) { return p.y.sign() > 0 || (p.y.is_zero() && p.x.sign() > 0) ? 0 : 1; };
  std::sort(out.points.begin(), out.points.end(), [&](const AlhazenSolution& u, const AlhazenSolution& v) {
    int hu = half(u.z), hv = half(v.z);
    if (hu != hv) return hu < hv;
    return (u.z.x * v.z.y - u.z.y * v.z.x).sign() > 0;
  });
  return out;
}

SolutionSet solve_alhazen(const AlhazenInstance& inst) {
  PencilData d = pencil_data(inst);
  PencilRoots roots = solve_pencil_cubic(d);
  // Factor the roots whose line pairs need the fewest new square roots first;
  // the third pair then follows from the four points.
  std::vector<AN> order(roots.roots.begin(), roots.roots.end());
  std::stable_sort(order.begin(), order.end(), [](const AN& a, const AN& b) {
    return a.is_rational() && !b.is_rational();
  });
  DegenerateConic c1 = factor_degenerate(d, order[0], Frame::Original);
  TowerPtr top = common_tower(c1.lines.first.tower(), c1.lines.second.tower());
  DegenerateConic c2 = factor_degenerate(d, order[1], Frame::Original, top);
  return assemble_solutions(d, roots, {c1, c2});
}

}  // namespace origami
