#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "origami/errors.hpp"
#include "origami/trace.hpp"

namespace origami::support {

// A random trace over L, P, B and T. Operations that fail on a degenerate
// choice are skipped; square-root and trisection steps stop once the tower
// degree passes max_degree so the exact checks stay cheap.
inline ConstructionTrace random_lpbt_trace(uint64_t seed, int ops = 8, size_t max_degree = 24) {
  std::mt19937_64 rng(seed);
  ConstructionTrace t;
  std::vector<ObjectId> pts{ConstructionTrace::kOrigin, ConstructionTrace::kUnit}, lines;
  lines.push_back(fold_L(t, pts[0], pts[1]));
  lines.push_back(fold_perpendicular(t, pts[0], lines[0]));
  pts.push_back(fold_reflect(t, pts[1], fold_B(t, lines[0], lines[1]).first));  // (0, 1)
  auto pick = [&](const std::vector<ObjectId>& v) { return v[rng() % v.size()]; };
  for (int i = 0; i < ops; ++i) {
    bool small = t.tower()->degree() <= max_degree;
    try {
      switch (rng() % 7) {
        case 0: lines.push_back(fold_L(t, pick(pts), pick(pts))); break;
        case 1: pts.push_back(fold_P(t, pick(lines), pick(lines))); break;
        case 2:
          if (small) lines.push_back(fold_B(t, pick(lines), pick(lines)).first);
          break;
        case 3: lines.push_back(fold_perp_bisector(t, pick(pts), pick(pts))); break;
        case 4: pts.push_back(fold_reflect(t, pick(pts), pick(lines))); break;
        case 5:
          if (small) lines.push_back(trisect_between_lines(t, pick(lines), pick(lines)).first);
          break;
        case 6:
          if (small) {
            FoldResult r = fold_T(t, pick(pts), pick(pts), pick(lines));
            lines.push_back(r.lines.front());
          }
          break;
      }
    } catch (const Error&) {
    }
  }
  return t;
}

}  // namespace origami::support
