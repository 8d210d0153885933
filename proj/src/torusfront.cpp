#include "gridlink/torusfront.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <set>

namespace gridlink {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

enum Port { E = 0, N = 1, W = 2, S = 3 };

TorusFront make_front(const GridDiagram& d, OrientedType t) {
  auto cs = curve_structure(d);
  return {d, t, std::move(cs.crossings), std::move(cs.arcs), cs.closed};
}

// Arc leaving (out) or entering (in) each crossing through each port.
struct Ports {
  std::vector<std::array<int, 4>> arc;

  explicit Ports(const TorusFront& f) : arc(f.crossings.size(), {-1, -1, -1, -1}) {
    for (int i = 0; i < int(f.arcs.size()); ++i) {
      const auto& a = f.arcs[i];
      arc[a.start][a.start_vertical ? N : E] = i;
      arc[a.end][a.end_vertical ? S : W] = i;
    }
  }
};

// Vertices met walking the curve forward from crossing `from` to crossing `to`,
// exclusive. The flags say whether each crossing is passed on its vertical strand.
std::vector<Vertex> between(const GridDiagram& d, DoublePoint from, bool from_vertical, DoublePoint to,
                            bool to_vertical) {
  const int n = d.size();
  auto ahead = [n](int cur, int target, int end) {
    const int t = mod(target - cur, n);
    return t > 0 && t < mod(end - cur, n);
  };
  std::vector<Vertex> out;
  bool vertical = from_vertical;
  int c = from.col, r = from.row;
  for (int guard = 0; guard <= 2 * n; ++guard) {
    if (vertical) {
      if (to_vertical && to.col == c && ahead(r, to.row, d.neg(c))) return out;
      r = d.neg(c);
      out.push_back({c, r, Sign::Neg});
    } else {
      if (!to_vertical && to.row == r && ahead(c, to.col, d.pos_col(r))) return out;
      c = d.pos_col(r);
      out.push_back({c, r, Sign::Pos});
    }
    vertical = !vertical;
  }
  throw Error(ErrorCode::InvalidFrontMove, "crossing not reached along the strand");
}

struct Triangle {
  int apex, z, y;
  bool se;  // apex quadrant SE (else NW)
};

std::optional<Triangle> triangle_at(const TorusFront& f, const Ports& p, int x, Quadrant q) {
  if (q == Quadrant::SE) {
    const auto& b = f.arcs[p.arc[x][S]];
    const auto& a = f.arcs[p.arc[x][E]];
    if (!b.start_vertical || a.end_vertical) return std::nullopt;
    const int z = b.start, y = a.end;
    const int c = p.arc[z][E];
    if (c < 0 || f.arcs[c].end != y || !f.arcs[c].end_vertical) return std::nullopt;
    return Triangle{x, z, y, true};
  }
  if (q == Quadrant::NW) {
    const auto& l1 = f.arcs[p.arc[x][W]];
    const auto& l2 = f.arcs[p.arc[x][N]];
    if (l1.start_vertical || !l2.end_vertical) return std::nullopt;
    const int z = l1.start, y = l2.end;
    const int c = p.arc[z][N];
    if (c < 0 || f.arcs[c].end != y || f.arcs[c].end_vertical) return std::nullopt;
    return Triangle{x, z, y, false};
  }
  return std::nullopt;
}

// Push the strand opposite the apex across it. Lines are doubled so that the
// rerouted strand can run half a step beside the two apex strands.
GridDiagram rewrite_r3(const TorusFront& f, const Triangle& t) {
  const auto& d = f.diagram;
  const DoublePoint x = f.crossings[t.apex], z = f.crossings[t.z], y = f.crossings[t.y];
  std::vector<Vertex> removed, added;
  const int sx = t.se ? -1 : 1, sy = t.se ? 1 : -1;
  auto shifted = [&](const Vertex& v) { return Vertex{2 * v.col + sx, 2 * v.row + sy, v.sign}; };
  if (t.se) {
    removed = between(d, z, false, y, true);
    added.push_back({2 * z.col - 1, 2 * z.row, Sign::Pos});
    for (const auto& v : between(d, z, true, x, true)) added.push_back(shifted(v));
    added.push_back({2 * x.col - 1, 2 * x.row + 1, Sign::Neg});
    for (const auto& v : between(d, x, false, y, false)) added.push_back(shifted(v));
    added.push_back({2 * y.col, 2 * y.row + 1, Sign::Pos});
  } else {
    removed = between(d, z, true, y, false);
    added.push_back({2 * z.col, 2 * z.row - 1, Sign::Neg});
    for (const auto& v : between(d, z, false, x, false)) added.push_back(shifted(v));
    added.push_back({2 * x.col + 1, 2 * x.row - 1, Sign::Pos});
    for (const auto& v : between(d, x, true, y, true)) added.push_back(shifted(v));
    added.push_back({2 * y.col + 1, 2 * y.row, Sign::Neg});
  }
  const std::set<Vertex> gone(removed.begin(), removed.end());
  std::vector<Vertex> vs;
  for (const auto& v : d.vertices())
    if (!gone.count(v)) vs.push_back({2 * v.col, 2 * v.row, v.sign});
  vs.insert(vs.end(), added.begin(), added.end());
  return from_vertices(vs);
}

}  // namespace

TorusFront tl_front(const GridDiagram& d, OrientedType t) {
  return make_front(apply_symmetry(d, symmetry_for(t)), t);
}

std::vector<Face> faces(const TorusFront& f) {
  const auto& d = f.diagram;
  const int n = d.size();
  // Unit squares [c,c+1]x[r,r+1], joined across edges the curve does not use.
  std::vector<int> parent(n * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto square = [n](int c, int r) { return mod(r, n) * n + mod(c, n); };
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      const int cr = mod(c + 1, n), rr = mod(r + 1, n);
      if (mod(r - d.pos(cr), n) >= mod(d.neg(cr) - d.pos(cr), n))
        parent[find(square(c, r))] = find(square(cr, r));
      if (mod(c - d.neg_col(rr), n) >= mod(d.pos_col(rr) - d.neg_col(rr), n))
        parent[find(square(c, r))] = find(square(c, rr));
    }
  std::vector<int> region(n * n, -1);
  int count = 0;
  for (int s = 0; s < n * n; ++s)
    if (region[find(s)] < 0) region[find(s)] = count++;
  std::vector<Face> out(count);

  if (f.crossings.empty()) return out;
  const Ports p(f);
  const int E2 = int(f.arcs.size());
  // Dart 2i runs along arc i, dart 2i+1 against it.
  std::vector<char> used(2 * E2, 0);
  for (int start = 0; start < 2 * E2; ++start) {
    if (used[start]) continue;
    std::vector<Corner> cycle;
    int dart = start;
    while (!used[dart]) {
      used[dart] = 1;
      const auto& a = f.arcs[dart / 2];
      const bool forward = dart % 2 == 0;
      const int v = forward ? a.end : a.start;
      const int arrive = forward ? (a.end_vertical ? S : W) : (a.start_vertical ? N : E);
      const int leave = (arrive + 3) % 4;
      cycle.push_back({v, static_cast<Quadrant>(leave)});
      dart = 2 * p.arc[v][leave] + (leave == E || leave == N ? 0 : 1);
    }
    const auto& x = f.crossings[cycle.front().crossing];
    const auto q = cycle.front().quadrant;
    const int sc = x.col - (q == Quadrant::NW || q == Quadrant::SW ? 1 : 0);
    const int sr = x.row - (q == Quadrant::SW || q == Quadrant::SE ? 1 : 0);
    auto& face = out[region[find(square(sc, sr))]];
    face.corners.insert(face.corners.end(), cycle.begin(), cycle.end());
    ++face.boundary_cycles;
  }
  return out;
}

std::vector<FrontMove> r3_sites(const TorusFront& f) {
  std::vector<FrontMove> out;
  if (f.crossings.empty()) return out;
  const Ports p(f);
  const auto fs = faces(f);
  for (int i = 0; i < int(fs.size()); ++i) {
    const auto& c = fs[i].corners;
    if (c.size() != 3 || !fs[i].is_disk()) continue;
    if (c[0].crossing == c[1].crossing || c[1].crossing == c[2].crossing || c[0].crossing == c[2].crossing)
      continue;
    for (const auto& corner : c)
      if (triangle_at(f, p, corner.crossing, corner.quadrant)) {
        FrontMove m;
        m.kind = FrontMoveKind::R3;
        m.face = i;
        m.apex = corner.crossing;
        out.push_back(m);
      }
  }
  return out;
}

std::vector<FrontMove> front_exchange_candidates(const TorusFront& f) {
  const auto& d = f.diagram;
  const int n = d.size();
  const auto g = gamma(d);
  std::vector<FrontMove> out;
  for (int i = 0; i < n; ++i) {
    const int j = mod(i + 1, n);
    const bool cols = g.vertical_covers(i, d.pos(j)) && g.vertical_covers(i, d.neg(j)) &&
                      g.vertical_covers(j, d.pos(i)) && g.vertical_covers(j, d.neg(i));
    const bool rows = g.horizontal_covers(i, d.pos_col(j)) && g.horizontal_covers(i, d.neg_col(j)) &&
                      g.horizontal_covers(j, d.pos_col(i)) && g.horizontal_covers(j, d.neg_col(i));
    for (auto [axis, ok] : {std::pair{Axis::Col, cols}, std::pair{Axis::Row, rows}}) {
      if (!ok) continue;
      FrontMove m;
      m.kind = FrontMoveKind::Exchange;
      m.axis = axis;
      m.line = i;
      out.push_back(m);
    }
  }
  return out;
}

TorusFront apply_front_move(const TorusFront& f, const FrontMove& m) {
  const auto listed = m.kind == FrontMoveKind::R3 ? r3_sites(f) : front_exchange_candidates(f);
  if (std::find(listed.begin(), listed.end(), m) == listed.end())
    throw Error(ErrorCode::InvalidFrontMove, "move is not available on this front");
  if (m.kind == FrontMoveKind::Exchange) {
    Move ex;
    ex.kind = MoveKind::Exchange;
    ex.axis = m.axis;
    ex.line = m.line;
    ex.shift = 1;
    return make_front(apply_move(f.diagram, ex), f.type);
  }
  const Ports p(f);
  const auto fs = faces(f);
  const auto& corners = fs[m.face].corners;
  const auto it = std::find_if(corners.begin(), corners.end(), [&](const Corner& c) { return c.crossing == m.apex; });
  const auto t = triangle_at(f, p, m.apex, it->quadrant);
  return make_front(rewrite_r3(f, *t), f.type);
}

bool front_isotopic_rel_X(const TorusFront& a, const TorusFront& b) {
  return homology_code(approximate_front(a)) == homology_code(approximate_front(b));
}

GridDiagram approximate_front(const TorusFront& f) { return f.diagram; }

}  // namespace gridlink
