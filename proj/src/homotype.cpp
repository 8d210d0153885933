#include "gridlink/homotype.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace gridlink {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

void put_word(std::vector<std::uint8_t>& out, int v) {
  out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

int get_word(const std::vector<std::uint8_t>& b, std::size_t i) {
  return (int(b[2 * i]) << 8) | int(b[2 * i + 1]);
}

// Cut lines a quarter unit either side of each given line, in quadrupled
// coordinates, listed counterclockwise starting just below the first one.
std::vector<int> offset_lines(const std::vector<int>& lines, int n) {
  std::vector<int> out;
  for (int x : lines) {
    out.push_back(mod(4 * x - 1, 4 * n));
    out.push_back(mod(4 * x + 1, 4 * n));
  }
  return out;
}

// Strip (between consecutive cut lines) containing quadrupled position p.
int strip_of(int p, const std::vector<int>& cuts, int n) {
  const int base = cuts.front(), N = 4 * n;
  const int off = mod(p - base, N);
  int s = 0;
  for (int j = 1; j < int(cuts.size()); ++j)
    if (mod(cuts[j] - base, N) < off) s = j;
  return s;
}

// Quadrupled point x lies on the counterclockwise run from grid line a to b.
bool run_covers(int x, int a, int b, int n) {
  const int N = 4 * n;
  return mod(x - 4 * a, N) < mod(4 * b - 4 * a, N);
}

}  // namespace

std::string HomologyCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  for (auto b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

HomologyCode HomologyCode::from_hex(std::string_view hex) {
  auto val = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  if (hex.size() % 4 != 0 || hex.size() < 12) throw Error(ErrorCode::SyntaxError, "bad homology code length");
  HomologyCode c;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    int hi = val(hex[i]), lo = val(hex[i + 1]);
    if (hi < 0 || lo < 0) throw Error(ErrorCode::SyntaxError, "bad hex digit in homology code");
    c.bytes.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
  }
  return c;
}

Omega HomologyCode::omega() const {
  if (bytes.size() < 6) return {};
  return {get_word(bytes, 0), get_word(bytes, 1), get_word(bytes, 2)};
}

std::size_t HomologyCodeHash::operator()(const HomologyCode& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto b : c.bytes) h = (h ^ b) * 1099511628211ull;
  return h;
}

HomologyCode homology_code(const GridDiagram& diagram, OrientedType t) {
  const GridDiagram d = apply_symmetry(diagram, symmetry_for(t));
  const int n = d.size();
  const StaircaseCurve g = gamma(d);
  const auto xs = double_points(g);
  const Omega w = omega(d);
  HomologyCode code;
  put_word(code.bytes, w.k);
  put_word(code.bytes, w.l);
  put_word(code.bytes, w.m);
  if (xs.empty()) return code;

  std::set<int> xcol_set, xrow_set;
  std::set<std::pair<int, int>> xset;
  for (const auto& x : xs) {
    xcol_set.insert(x.col);
    xrow_set.insert(x.row);
    xset.insert({x.col, x.row});
  }
  const std::vector<int> xcols(xcol_set.begin(), xcol_set.end()), xrows(xrow_set.begin(), xrow_set.end());
  const int K = int(xcols.size()), L = int(xrows.size());
  const auto tcuts = offset_lines(xcols, n), pcuts = offset_lines(xrows, n);

  // cell[s][t] = {left count, bottom count, crossing flag}
  std::vector<std::vector<std::array<int, 3>>> cell(2 * K, std::vector<std::array<int, 3>>(2 * L, {0, 0, 0}));
  for (const auto& e : g.horizontals) {
    const int t = strip_of(4 * e.row, pcuts, n);
    for (int s = 0; s < 2 * K; ++s)
      if (run_covers(tcuts[s], e.from_col, e.to_col, n)) ++cell[s][t][0];
  }
  for (const auto& e : g.verticals) {
    const int s = strip_of(4 * e.col, tcuts, n);
    for (int t = 0; t < 2 * L; ++t)
      if (run_covers(pcuts[t], e.from_row, e.to_row, n)) ++cell[s][t][1];
  }
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < L; ++j)
      if (xset.count({xcols[i], xrows[j]})) cell[2 * i][2 * j][2] = 1;

  std::vector<int> best, cur;
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < L; ++j) {
      cur.clear();
      for (int s = 0; s < 2 * K; ++s)
        for (int u = 0; u < 2 * L; ++u) {
          const auto& c = cell[(s + 2 * i) % (2 * K)][(u + 2 * j) % (2 * L)];
          cur.insert(cur.end(), c.begin(), c.end());
        }
      if (best.empty() || cur < best) best = cur;
    }
  put_word(code.bytes, K);
  put_word(code.bytes, L);
  for (int v : best) put_word(code.bytes, v);
  return code;
}

bool same_homology_type(const GridDiagram& a, const GridDiagram& b, OrientedType t) {
  return homology_code(a, t) == homology_code(b, t);
}

CurveStructure curve_structure(const GridDiagram& diagram, OrientedType t) {
  const GridDiagram d = apply_symmetry(diagram, symmetry_for(t));
  const int n = d.size();
  const auto g = gamma(d);
  CurveStructure out;
  out.crossings = double_points(g);
  std::sort(out.crossings.begin(), out.crossings.end());
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < int(out.crossings.size()); ++i) index[{out.crossings[i].col, out.crossings[i].row}] = i;

  struct Event {
    int x;
    bool vertical;
    int theta, phi;  // cumulative advance when reached
  };
  std::vector<char> done(n, 0);
  for (int c0 = 0; c0 < n; ++c0) {
    if (done[c0]) continue;
    std::vector<Event> events;
    int theta = 0, phi = 0;
    int c = c0;
    do {
      done[c] = 1;
      // Up the vertical edge of column c.
      const int r0 = d.pos(c), r1 = d.neg(c);
      for (int s = 1; s < mod(r1 - r0, n); ++s) {
        const int r = mod(r0 + s, n);
        if (auto it = index.find({c, r}); it != index.end()) events.push_back({it->second, true, theta, phi + s});
      }
      phi += mod(r1 - r0, n);
      // Right along the horizontal edge of row r1.
      const int c1 = d.pos_col(r1);
      for (int s = 1; s < mod(c1 - c, n); ++s) {
        const int cc = mod(c + s, n);
        if (auto it = index.find({cc, r1}); it != index.end()) events.push_back({it->second, false, theta + s, phi});
      }
      theta += mod(c1 - c, n);
      c = c1;
    } while (c != c0);
    if (events.empty()) {
      const int gdiv = std::gcd(theta / n, phi / n);
      out.closed.theta_class = theta / n / gdiv;
      out.closed.phi_class = phi / n / gdiv;
      ++out.closed.count;
      continue;
    }
    for (std::size_t i = 0; i < events.size(); ++i) {
      const auto& e1 = events[i];
      const auto& e2 = events[(i + 1) % events.size()];
      ArcDescriptor a;
      a.start = e1.x;
      a.end = e2.x;
      a.start_vertical = e1.vertical;
      a.end_vertical = e2.vertical;
      a.theta_advance = e2.theta - e1.theta + (i + 1 == events.size() ? theta : 0);
      a.phi_advance = e2.phi - e1.phi + (i + 1 == events.size() ? phi : 0);
      out.arcs.push_back(a);
    }
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  return out;
}

namespace {

struct Node {
  GridDiagram diagram;
  CanonicalCode parent;
  Move move;  // applied to the parent's diagram
  int depth = 0;
  bool root = false;
};

using Tree = std::unordered_map<CanonicalCode, Node, CanonicalCodeHash>;

MoveSequence path_to(const Tree& tree, const CanonicalCode& key) {
  std::vector<Move> steps;
  const Node* node = &tree.at(key);
  while (!node->root) {
    steps.push_back(node->move);
    node = &tree.at(node->parent);
  }
  std::reverse(steps.begin(), steps.end());
  return {node->diagram, std::move(steps)};
}

// Level-synchronous bidirectional BFS from a to b over moves of type t. When
// `code` is given, only diagrams with that homology code are visited. Returns
// a shortest chain within the explored region, or nothing.
std::optional<MoveSequence> bidirectional(const GridDiagram& a, const GridDiagram& b, OrientedType t,
                                          const HomologyCode* code, int max_size, std::size_t max_states,
                                          std::size_t& states) {
  Tree side[2];
  std::vector<CanonicalCode> frontier[2];
  const GridDiagram start[2] = {a, b};
  for (int s = 0; s < 2; ++s) {
    auto key = canonical_code(start[s]);
    side[s].emplace(key, Node{start[s], key, Move{}, 0, true});
    frontier[s].push_back(key);
  }
  {
    auto key = canonical_code(a);
    if (side[1].count(key)) return MoveSequence{a, {}};
  }
  const MoveSet allowed = MoveSet::for_type(t);
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<CanonicalCode> next;
    std::optional<std::pair<CanonicalCode, int>> best;  // meeting key, total depth
    for (const auto& key : frontier[s]) {
      const Node& node = side[s].at(key);
      const GridDiagram cur = node.diagram;
      const int depth = node.depth;
      for (const auto& m : enumerate_moves(cur, allowed)) {
        if (m.kind == MoveKind::Stab && cur.size() >= max_size) continue;
        GridDiagram nx = apply_move(cur, m);
        auto nkey = canonical_code(nx);
        if (side[s].count(nkey)) continue;
        if (code && homology_code(nx, t) != *code) continue;
        side[s].emplace(nkey, Node{nx, key, m, depth + 1, false});
        ++states;
        if (auto it = side[1 - s].find(nkey); it != side[1 - s].end()) {
          const int total = depth + 1 + it->second.depth;
          if (!best || total < best->second) best = std::pair{nkey, total};
        }
        next.push_back(nkey);
        if (states > max_states) return std::nullopt;
      }
    }
    if (best) {
      MoveSequence left = path_to(side[0], best->first);
      MoveSequence right = path_to(side[1], best->first);
      return concat(left, reversed(right));
    }
    frontier[s] = std::move(next);
  }
  return std::nullopt;
}

}  // namespace

MoveSequence connect_within_type(const GridDiagram& a, const GridDiagram& b, OrientedType t, ConnectLog* log,
                                 const ConnectOptions& opts) {
  const HomologyCode code = homology_code(a, t);
  if (code != homology_code(b, t))
    throw Error(ErrorCode::NotSameType, "diagrams have different homology codes");
  const int max_size = std::max(a.size(), b.size()) + opts.size_slack;
  std::size_t states = 0;
  bool preserving = true;
  auto chain = bidirectional(a, b, t, &code, max_size, opts.max_states, states);
  if (!chain) {
    preserving = false;
    chain = bidirectional(a, b, t, nullptr, max_size, opts.max_states, states);
  }
  if (!chain) throw Error(ErrorCode::InternalNoProgress, "no connecting chain within the search bounds");
  if (canonical_code(replay(*chain)) != canonical_code(b))
    throw Error(ErrorCode::InternalNoProgress, "connecting chain does not reach the target");
  if (log) {
    log->states = states;
    log->code_preserving = preserving;
    log->measure.clear();
    const int len = int(chain->steps.size());
    for (int i = 0; i <= len; ++i) log->measure.push_back(len - i);
  }
  return *chain;
}

}  // namespace gridlink
