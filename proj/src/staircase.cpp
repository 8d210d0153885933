#include "gridlink/staircase.hpp"

#include <numeric>

namespace gridlink {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

bool strictly_inside(int x, int from, int to, int n) {
  int off = mod(x - from, n);
  return off > 0 && off < mod(to - from, n);
}

StaircaseCurve literal_gamma(const GridDiagram& d) {
  const int n = d.size();
  StaircaseCurve g;
  g.n = n;
  for (int c = 0; c < n; ++c) g.verticals.push_back({c, d.pos(c), d.neg(c)});
  for (int r = 0; r < n; ++r) g.horizontals.push_back({r, d.neg_col(r), d.pos_col(r)});
  return g;
}

}  // namespace

int StaircaseCurve::vertical_span(int col) const {
  const auto& e = verticals[col];
  return mod(e.to_row - e.from_row, n);
}

int StaircaseCurve::horizontal_span(int row) const {
  const auto& e = horizontals[row];
  return mod(e.to_col - e.from_col, n);
}

bool StaircaseCurve::vertical_covers(int col, int row) const {
  const auto& e = verticals[col];
  return strictly_inside(row, e.from_row, e.to_row, n);
}

bool StaircaseCurve::horizontal_covers(int row, int col) const {
  const auto& e = horizontals[row];
  return strictly_inside(col, e.from_col, e.to_col, n);
}

StaircaseCurve gamma(const GridDiagram& d, OrientedType t) {
  const SymmetryOp s = symmetry_for(t);
  if (s == SymmetryOp::Identity) return literal_gamma(d);
  const int n = d.size();
  const StaircaseCurve g = literal_gamma(apply_symmetry(d, s));
  const bool flip_cols = s == SymmetryOp::ReflTheta || s == SymmetryOp::ReflBoth;
  const bool flip_rows = s == SymmetryOp::ReflPhi || s == SymmetryOp::ReflBoth;
  // A reflected counterclockwise interval [a;b] is the counterclockwise
  // interval [s(b);s(a)].
  auto fc = [&](int c) { return flip_cols ? n - 1 - c : c; };
  auto fr = [&](int r) { return flip_rows ? n - 1 - r : r; };
  StaircaseCurve out;
  out.n = n;
  out.verticals.resize(n);
  out.horizontals.resize(n);
  for (const auto& e : g.verticals) {
    int a = fr(e.from_row), b = fr(e.to_row);
    out.verticals[fc(e.col)] = {fc(e.col), flip_rows ? b : a, flip_rows ? a : b};
  }
  for (const auto& e : g.horizontals) {
    int a = fc(e.from_col), b = fc(e.to_col);
    out.horizontals[fr(e.row)] = {fr(e.row), flip_cols ? b : a, flip_cols ? a : b};
  }
  return out;
}

std::vector<DoublePoint> double_points(const StaircaseCurve& g) {
  std::vector<DoublePoint> out;
  for (int c = 0; c < g.n; ++c)
    for (int r = 0; r < g.n; ++r)
      if (g.vertical_covers(c, r) && g.horizontal_covers(r, c)) out.push_back({c, r});
  return out;
}

Omega omega(const GridDiagram& d, OrientedType t) {
  const StaircaseCurve g = gamma(d, t);
  int hsum = 0, vsum = 0;
  for (int i = 0; i < g.n; ++i) {
    hsum += g.horizontal_span(i);
    vsum += g.vertical_span(i);
  }
  return {hsum / g.n, vsum / g.n, static_cast<int>(double_points(g).size())};
}

int meridian_crossings(const StaircaseCurve& g, int c) {
  // The meridian between columns c and c+1 meets a horizontal edge iff the
  // edge's interval contains column c but does not end there.
  int count = 0;
  for (const auto& e : g.horizontals) {
    int off = mod(c - e.from_col, g.n);
    if (off < mod(e.to_col - e.from_col, g.n)) ++count;
  }
  return count;
}

int longitude_crossings(const StaircaseCurve& g, int r) {
  int count = 0;
  for (const auto& e : g.verticals) {
    int off = mod(r - e.from_row, g.n);
    if (off < mod(e.to_row - e.from_row, g.n)) ++count;
  }
  return count;
}

int curve_component_count(const StaircaseCurve& g) {
  // Union-find over edges: columns 0..n-1 then rows n..2n-1.
  std::vector<int> parent(2 * g.n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.verticals) {
    parent[find(e.col)] = find(g.n + e.from_row);
    parent[find(e.col)] = find(g.n + e.to_row);
  }
  int roots = 0;
  for (int i = 0; i < 2 * g.n; ++i)
    if (find(i) == i) ++roots;
  return roots;
}

}  // namespace gridlink
