#pragma once

// Geometric oracle for the staircase curve: every edge is unrolled to a
// straight segment on the universal cover, and intersections and
// meridian/longitude crossings are found by plain segment tests in doubled
// coordinates against both lifts of the other coordinate.

#include <set>
#include <utility>
#include <vector>

#include "gridlink/grid.hpp"

namespace oracle {

struct Piece {
  bool vertical;
  int at;      // fixed coordinate (doubled)
  int lo, hi;  // lo in [0,N), lo < hi < lo + N
  int N;

  bool interior(int y) const { return (lo < y && y < hi) || (lo < y + N && y + N < hi); }
};

inline void run_pieces(std::vector<Piece>& out, bool vertical, int at, int a, int b, int N) {
  out.push_back({vertical, at, a, b > a ? b : b + N, N});
}

inline std::vector<Piece> curve_pieces(const gridlink::GridDiagram& d) {
  const int n = d.size(), N = 2 * n;
  std::vector<Piece> out;
  for (int c = 0; c < n; ++c) run_pieces(out, true, 2 * c, 2 * d.pos(c), 2 * d.neg(c), N);
  for (int r = 0; r < n; ++r) run_pieces(out, false, 2 * r, 2 * d.neg_col(r), 2 * d.pos_col(r), N);
  return out;
}

// Points where a vertical piece and a horizontal piece cross in both interiors.
inline std::set<std::pair<int, int>> crossings(const gridlink::GridDiagram& d) {
  std::set<std::pair<int, int>> out;
  auto ps = curve_pieces(d);
  for (const auto& v : ps)
    for (const auto& h : ps) {
      if (!v.vertical || h.vertical) continue;
      if (h.interior(v.at) && v.interior(h.at)) out.insert({v.at / 2, h.at / 2});
    }
  return out;
}

// Number of curve pieces meeting the vertical line x = x0 (doubled and odd, so vertex-free).
inline int meridian_hits(const gridlink::GridDiagram& d, int x0) {
  int hits = 0;
  for (const auto& p : curve_pieces(d))
    if (!p.vertical && p.interior(x0)) ++hits;
  return hits;
}

inline int longitude_hits(const gridlink::GridDiagram& d, int y0) {
  int hits = 0;
  for (const auto& p : curve_pieces(d))
    if (p.vertical && p.interior(y0)) ++hits;
  return hits;
}

}  // namespace oracle
