#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "origami/geometry.hpp"

namespace origami::support {

// Solutions on the unit circle of Im((a + b) conj z) = Im(ab conj(z)^2),
// by a dense angular scan and bisection.
inline std::vector<std::complex<double>> scan_oracle(std::complex<double> a, std::complex<double> b) {
  using cd = std::complex<double>;
  auto g = [&](double t) {
    cd z = std::polar(1.0, t);
    return std::imag((a + b) * std::conj(z)) - std::imag(a * b * std::conj(z) * std::conj(z));
  };
  const int n = 20000;
  std::vector<cd> out;
  for (int i = 0; i < n; ++i) {
    double lo = 2 * M_PI * i / n, hi = 2 * M_PI * (i + 1) / n;
    double glo = g(lo), ghi = g(hi);
    if (glo == 0) {
      out.push_back(std::polar(1.0, lo));
      continue;
    }
    if ((glo < 0) == (ghi < 0)) continue;
    for (int k = 0; k < 60; ++k) {
      double mid = (lo + hi) / 2;
      if ((g(mid) < 0) == (glo < 0)) lo = mid; else hi = mid;
    }
    out.push_back(std::polar(1.0, (lo + hi) / 2));
  }
  return out;
}

// cos(angle at vertex v between rays to a and b) = w, with w given, checked
// for 4c^3 - 3c: squared and with signs so no square roots are needed.
inline bool triple_cosine_is(const Point& v, const Point& a, const Point& b, const AlgebraicNumber& w) {
  using AN = AlgebraicNumber;
  AN ax = a.x - v.x, ay = a.y - v.y, bx = b.x - v.x, by = b.y - v.y;
  AN d = ax * bx + ay * by, A = ax * ax + ay * ay, B = bx * bx + by * by;
  AN num = d * (AN(4) * d * d - AN(3) * A * B);  // 4c^3 - 3c = num / (AB)^(3/2)
  if (num.sign() != w.sign()) return false;
  AN AB = A * B;
  return num * num == w * w * AB * AB * AB;
}

// Forward construction of the triple-angle proof for the fold through P, Q
// and l: G = fold ∩ l1, H = fold ∩ l2, O another point of l. True when
// cos(OPG) = 4c^3 - 3c with c = cos(OPH).
inline bool triple_angle_holds(const Point& P, const Point& Q, const Line& l, const Line& fold) {
  using AN = AlgebraicNumber;
  Line pq = line_through(P, Q);
  Line l1 = perpendicular_at(pq, P);
  Line l2 = perp_bisector(P, Q);
  Point G = intersect(fold, l1), H = intersect(fold, l2);
  auto [dx, dy] = l.direction();
  Point O(P.x + dx, P.y + dy);
  auto vec = [](const Point& a, const Point& b) { return std::make_pair(b.x - a.x, b.y - a.y); };
  auto po = vec(P, O), ph = vec(P, H), pg = vec(P, G);
  AN a = dot(po, ph), A = dot(po, po), B = dot(ph, ph);
  AN g = dot(po, pg), G2 = dot(pg, pg);
  AN rhs_num = a * (AN(4) * a * a - AN(3) * A * B);  // 4c^3 - 3c = rhs_num / (AB)^(3/2)
  if (g.sign() != rhs_num.sign()) return false;
  AN AB = A * B;
  return g * g * AB * AB * AB == rhs_num * rhs_num * A * G2;
}

}  // namespace origami::support
