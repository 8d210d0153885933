#include "gridlink/moves.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

namespace gridlink {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

int type_index(OrientedType t) { return static_cast<int>(t); }

// The other-axis coordinates of the two vertices on a line.
std::pair<int, int> line_members(const GridDiagram& d, Axis axis, int line) {
  if (axis == Axis::Col) return {d.pos(line), d.neg(line)};
  return {d.pos_col(line), d.neg_col(line)};
}

// x in the closed counterclockwise arc [a;b].
bool in_closed_arc(int x, int a, int b, int n) { return mod(x - a, n) <= mod(b - a, n); }

// Lines passed by moving `line` by `shift` steps.
std::vector<int> passed_lines(int line, int shift, int n) {
  std::vector<int> out;
  for (int t = 1; t <= std::abs(shift); ++t) out.push_back(mod(line + (shift > 0 ? t : -t), n));
  return out;
}

// Doubled coordinate of a line inserted |d| lines away from `line`.
int inserted_position(int line, int d, int n) {
  int p = 2 * line + (d > 0 ? 2 * d - 1 : 2 * d + 1);
  return mod(p, 2 * n);
}

// Index of doubled position p once the occupied doubled positions are compressed.
int compressed_index(int p, const std::vector<int>& occupied) {
  return static_cast<int>(std::count_if(occupied.begin(), occupied.end(), [&](int q) { return q < p; }));
}

bool exchange_ok(const GridDiagram& d, Axis axis, int line, int shift) {
  const int n = d.size();
  if (shift == 0 || std::abs(shift) > n - 2 || line < 0 || line >= n) return false;
  auto [a, b] = line_members(d, axis, line);
  auto passed = passed_lines(line, shift, n);
  for (auto [lo, hi] : {std::pair{a, b}, std::pair{b, a}}) {
    bool clear = std::all_of(passed.begin(), passed.end(), [&](int j) {
      auto [x, y] = line_members(d, axis, j);
      return !in_closed_arc(x, lo, hi, n) && !in_closed_arc(y, lo, hi, n);
    });
    if (clear) return true;
  }
  return false;
}

// Lines covered by a rectangle side starting at `line` extending |d| lines.
std::vector<int> covered(int line, int d, int n) {
  std::vector<int> out{line};
  for (int t = 1; t < std::abs(d); ++t) out.push_back(mod(line + (d > 0 ? t : -t), n));
  return out;
}

bool rectangle_clear(const GridDiagram& d, const std::vector<int>& cols, const std::vector<int>& rows,
                     const std::vector<Vertex>& allowed) {
  const int n = d.size();
  std::vector<char> in_col(n, 0), in_row(n, 0);
  for (int c : cols) in_col[c] = 1;
  for (int r : rows) in_row[r] = 1;
  for (const auto& v : d.vertices()) {
    if (!in_col[v.col] || !in_row[v.row]) continue;
    bool ok = std::any_of(allowed.begin(), allowed.end(),
                          [&](const Vertex& w) { return w.col == v.col && w.row == v.row; });
    if (!ok) return false;
  }
  return true;
}

bool stab_ok(const GridDiagram& d, int c, int r, int dcol, int drow) {
  const int n = d.size();
  if (c < 0 || c >= n || r < 0 || r >= n || !d.occupied(c, r)) return false;
  if (dcol == 0 || drow == 0 || std::abs(dcol) > n - 1 || std::abs(drow) > n - 1) return false;
  Vertex v{c, r, d.sign_at(c, r)};
  return rectangle_clear(d, covered(c, dcol, n), covered(r, drow, n), {v});
}

struct DestabShape {
  int kcol, krow, dcol, drow;
  Sign sign;  // sign of the vertex that remains
};

// Candidate rectangles for removing the corner at (col,row).
std::vector<DestabShape> destab_shapes(const GridDiagram& d, int col, int row) {
  const int n = d.size();
  std::vector<DestabShape> out;
  if (n < 3 || !d.occupied(col, row)) return out;
  const Sign s = d.sign_at(col, row);
  const int ra = s == Sign::Pos ? d.neg(col) : d.pos(col);
  const int cb = s == Sign::Pos ? d.neg_col(row) : d.pos_col(row);
  if (d.occupied(cb, ra)) return out;
  const Vertex corner{col, row, s}, a{col, ra, opposite(s)}, b{cb, row, opposite(s)};
  for (int cdir : {+1, -1}) {
    for (int rdir : {+1, -1}) {
      int dcol = cdir > 0 ? mod(col - cb, n) : -mod(cb - col, n);
      int drow = rdir > 0 ? mod(row - ra, n) : -mod(ra - row, n);
      auto cols = covered(cb, dcol, n);
      cols.push_back(col);
      auto rows = covered(ra, drow, n);
      rows.push_back(row);
      if (rectangle_clear(d, cols, rows, {corner, a, b}))
        out.push_back({cb, ra, dcol, drow, opposite(s)});
    }
  }
  return out;
}

Move normalize(Move m, int n) {
  if (m.kind == MoveKind::Exchange && m.shift == -1) {
    m.line = mod(m.line - 1, n);
    m.shift = 1;
  }
  return m;
}

Move make_exchange(Axis axis, int line, int shift) {
  Move m;
  m.kind = MoveKind::Exchange;
  m.axis = axis;
  m.line = line;
  m.shift = shift;
  return m;
}

Move make_stab(const GridDiagram& d, int c, int r, int dcol, int drow) {
  Move m;
  m.kind = MoveKind::Stab;
  m.col = c;
  m.row = r;
  m.dcol = dcol;
  m.drow = drow;
  m.type = stab_type(d.sign_at(c, r), dcol, drow);
  return m;
}

Move make_destab(int col, int row, const DestabShape& s) {
  Move m;
  m.kind = MoveKind::Destab;
  m.col = col;
  m.row = row;
  m.kcol = s.kcol;
  m.krow = s.krow;
  m.dcol = s.dcol;
  m.drow = s.drow;
  m.type = stab_type(s.sign, s.dcol, s.drow);
  return m;
}

std::vector<Vertex> doubled_vertices(const GridDiagram& d) {
  auto vs = d.vertices();
  for (auto& v : vs) {
    v.col *= 2;
    v.row *= 2;
  }
  return vs;
}

[[noreturn]] void invalid(const Move& m, const std::string& why) {
  throw Error(ErrorCode::InvalidMove, describe(m) + ": " + why);
}

}  // namespace

MoveSet MoveSet::all() {
  MoveSet s;
  s.exchange = true;
  s.stab.fill(true);
  s.destab.fill(true);
  return s;
}

MoveSet MoveSet::exchanges_only() {
  MoveSet s;
  s.exchange = true;
  return s;
}

MoveSet MoveSet::for_type(OrientedType t) {
  MoveSet s;
  s.exchange = true;
  s.stab[type_index(t)] = true;
  s.destab[type_index(t)] = true;
  return s;
}

bool MoveSet::admits(const Move& m) const {
  switch (m.kind) {
    case MoveKind::Exchange: return exchange;
    case MoveKind::Stab: return stab[type_index(m.type)];
    case MoveKind::Destab: return destab[type_index(m.type)];
  }
  return false;
}

OrientedType stab_type(Sign v, int dcol, int drow) {
  // The distinguished new vertex is positive exactly when the retained vertex
  // is positive and sits at the far column of the rectangle, or is negative
  // and sits at the near one.
  const bool fwd = (dcol < 0) == (v == Sign::Pos);
  const bool type_two = (dcol > 0) != (drow > 0);
  if (type_two) return fwd ? OrientedType::II_fwd : OrientedType::II_bwd;
  return fwd ? OrientedType::I_fwd : OrientedType::I_bwd;
}

std::string describe(const Move& m) {
  std::ostringstream os;
  switch (m.kind) {
    case MoveKind::Exchange:
      os << "exchange " << (m.axis == Axis::Col ? "col " : "row ") << m.line << " by " << m.shift;
      break;
    case MoveKind::Stab:
      os << "stab " << type_tag(m.type) << " at (" << m.col << "," << m.row << ") dir (" << m.dcol
         << "," << m.drow << ")";
      break;
    case MoveKind::Destab:
      os << "destab " << type_tag(m.type) << " corner (" << m.col << "," << m.row << ") keep ("
         << m.kcol << "," << m.krow << ")";
      break;
  }
  return os.str();
}

std::vector<Move> enumerate_moves(const GridDiagram& d, const MoveSet& allowed) {
  const int n = d.size();
  std::vector<Move> out;
  if (allowed.exchange) {
    for (Axis axis : {Axis::Col, Axis::Row})
      for (int i = 0; i < n; ++i)
        if (exchange_ok(d, axis, i, 1)) out.push_back(make_exchange(axis, i, 1));
  }
  const bool any_stab = std::any_of(allowed.stab.begin(), allowed.stab.end(), [](bool b) { return b; });
  if (any_stab) {
    for (const auto& v : d.vertices())
      for (auto [dc, dr] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, 1}, std::pair{-1, -1}}) {
        if (!allowed.stab[type_index(stab_type(v.sign, dc, dr))]) continue;
        if (stab_ok(d, v.col, v.row, dc, dr)) out.push_back(make_stab(d, v.col, v.row, dc, dr));
      }
  }
  const bool any_destab =
      std::any_of(allowed.destab.begin(), allowed.destab.end(), [](bool b) { return b; });
  if (any_destab) {
    for (const auto& v : d.vertices())
      for (const auto& shape : destab_shapes(d, v.col, v.row)) {
        Move m = make_destab(v.col, v.row, shape);
        if (allowed.destab[type_index(m.type)] && std::find(out.begin(), out.end(), m) == out.end())
          out.push_back(m);
      }
  }
  return out;
}

bool move_applies(const GridDiagram& d, const Move& m) {
  const int n = d.size();
  switch (m.kind) {
    case MoveKind::Exchange: return exchange_ok(d, m.axis, m.line, m.shift);
    case MoveKind::Stab:
      return stab_ok(d, m.col, m.row, m.dcol, m.drow) &&
             stab_type(d.sign_at(m.col, m.row), m.dcol, m.drow) == m.type;
    case MoveKind::Destab: {
      if (m.col < 0 || m.col >= n || m.row < 0 || m.row >= n) return false;
      for (const auto& s : destab_shapes(d, m.col, m.row))
        if (s.kcol == m.kcol && s.krow == m.krow && s.dcol == m.dcol && s.drow == m.drow &&
            stab_type(s.sign, s.dcol, s.drow) == m.type)
          return true;
      return false;
    }
  }
  return false;
}

GridDiagram apply_move(const GridDiagram& d, const Move& m) {
  if (!move_applies(d, m)) invalid(m, "rectangle conditions fail");
  const int n = d.size();
  switch (m.kind) {
    case MoveKind::Exchange: {
      int target = mod(2 * (m.line + m.shift) + (m.shift > 0 ? 1 : -1), 2 * n);
      auto vs = doubled_vertices(d);
      for (auto& v : vs) {
        int& coord = m.axis == Axis::Col ? v.col : v.row;
        if (coord == 2 * m.line) coord = target;
      }
      return from_vertices(vs);
    }
    case MoveKind::Stab: {
      const int p = inserted_position(m.col, m.dcol, n);
      const int q = inserted_position(m.row, m.drow, n);
      const Sign s = d.sign_at(m.col, m.row);
      auto vs = doubled_vertices(d);
      std::erase_if(vs, [&](const Vertex& v) { return v.col == 2 * m.col && v.row == 2 * m.row; });
      vs.push_back({p, 2 * m.row, s});
      vs.push_back({2 * m.col, q, s});
      vs.push_back({p, q, opposite(s)});
      return from_vertices(vs);
    }
    case MoveKind::Destab: {
      auto vs = d.vertices();
      const Sign keep = opposite(d.sign_at(m.col, m.row));
      // Dropping the corner's column and row removes the corner and both mates.
      std::erase_if(vs, [&](const Vertex& v) { return v.col == m.col || v.row == m.row; });
      vs.push_back({m.kcol, m.krow, keep});
      return from_vertices(vs);
    }
  }
  invalid(m, "unknown kind");
}

Move inverse_move(const GridDiagram& d, const Move& m) {
  const int n = d.size();
  if (!move_applies(d, m)) invalid(m, "rectangle conditions fail");
  switch (m.kind) {
    case MoveKind::Exchange: {
      int target = mod(2 * (m.line + m.shift) + (m.shift > 0 ? 1 : -1), 2 * n);
      std::vector<int> occ;
      for (int j = 0; j < n; ++j)
        if (j != m.line) occ.push_back(2 * j);
      occ.push_back(target);
      return normalize(make_exchange(m.axis, compressed_index(target, occ), -m.shift), n);
    }
    case MoveKind::Stab: {
      const int p = inserted_position(m.col, m.dcol, n);
      const int q = inserted_position(m.row, m.drow, n);
      std::vector<int> occ_c, occ_r;
      for (int j = 0; j < n; ++j) {
        occ_c.push_back(2 * j);
        occ_r.push_back(2 * j);
      }
      occ_c.push_back(p);
      occ_r.push_back(q);
      Move inv;
      inv.kind = MoveKind::Destab;
      inv.type = m.type;
      inv.col = compressed_index(p, occ_c);
      inv.row = compressed_index(q, occ_r);
      inv.kcol = compressed_index(2 * m.col, occ_c);
      inv.krow = compressed_index(2 * m.row, occ_r);
      inv.dcol = m.dcol;
      inv.drow = m.drow;
      return inv;
    }
    case MoveKind::Destab: {
      Move inv;
      inv.kind = MoveKind::Stab;
      inv.type = m.type;
      inv.col = m.kcol - (m.kcol > m.col ? 1 : 0);
      inv.row = m.krow - (m.krow > m.row ? 1 : 0);
      inv.dcol = m.dcol;
      inv.drow = m.drow;
      return inv;
    }
  }
  invalid(m, "unknown kind");
}

std::vector<Move> classify_all(const GridDiagram& d1, const GridDiagram& d2) {
  const int n = d1.size();
  const auto target = canonical_code(d2);
  std::vector<Move> out;
  auto consider = [&](const Move& m) {
    if (move_applies(d1, m) && canonical_code(apply_move(d1, m)) == target) out.push_back(m);
  };
  if (d2.size() == n) {
    for (Axis axis : {Axis::Col, Axis::Row})
      for (int i = 0; i < n; ++i)
        for (int s = 1; s <= n - 2; ++s) {
          consider(make_exchange(axis, i, s));
          if (s > 1) consider(make_exchange(axis, i, -s));
        }
  } else if (d2.size() == n + 1) {
    // Tight candidates first so classify_pair prefers them.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& v : d1.vertices())
        for (int dc = -(n - 1); dc <= n - 1; ++dc)
          for (int dr = -(n - 1); dr <= n - 1; ++dr) {
            if (dc == 0 || dr == 0) continue;
            bool tight = std::abs(dc) == 1 && std::abs(dr) == 1;
            if (tight != (pass == 0)) continue;
            if (stab_ok(d1, v.col, v.row, dc, dr)) consider(make_stab(d1, v.col, v.row, dc, dr));
          }
  } else if (d2.size() == n - 1) {
    for (const auto& m : enumerate_moves(d1, [] {
           MoveSet s;
           s.destab.fill(true);
           return s;
         }()))
      consider(m);
  }
  return out;
}

std::optional<Move> classify_pair(const GridDiagram& d1, const GridDiagram& d2) {
  auto all = classify_all(d1, d2);
  if (all.empty()) return std::nullopt;
  return all.front();
}

GridDiagram replay(const MoveSequence& seq) {
  GridDiagram cur = seq.initial;
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    try {
      cur = apply_move(cur, seq.steps[i]);
    } catch (const Error& e) {
      throw Error(ErrorCode::InvalidStep, "step " + std::to_string(i) + " (" + e.what() + ")");
    }
  }
  return cur;
}

Move rotate_move(const Move& m, int a, int b, int n) {
  Move r = m;
  switch (m.kind) {
    case MoveKind::Exchange:
      r.line = mod(m.line + (m.axis == Axis::Col ? a : b), n);
      break;
    case MoveKind::Stab:
      r.col = mod(m.col + a, n);
      r.row = mod(m.row + b, n);
      break;
    case MoveKind::Destab:
      r.col = mod(m.col + a, n);
      r.row = mod(m.row + b, n);
      r.kcol = mod(m.kcol + a, n);
      r.krow = mod(m.krow + b, n);
      break;
  }
  return r;
}

namespace {

// (a, b) with rotate(from, a, b) == to, for canonically equal diagrams.
std::pair<int, int> rotation_between(const GridDiagram& from, const GridDiagram& to) {
  auto [fa, fb] = canonical_rotation(from);
  auto [ta, tb] = canonical_rotation(to);
  return {fa - ta, fb - tb};
}

}  // namespace

MoveSequence rebase(const MoveSequence& seq, const GridDiagram& start) {
  if (canonical_code(seq.initial) != canonical_code(start))
    throw Error(ErrorCode::PreconditionViolated, "rebase onto a diagram with a different canonical code");
  MoveSequence out{start, {}};
  GridDiagram expected = seq.initial, cur = start;
  for (const auto& m : seq.steps) {
    auto [a, b] = rotation_between(expected, cur);
    Move moved = rotate_move(m, a, b, cur.size());
    expected = apply_move(expected, m);
    cur = apply_move(cur, moved);
    out.steps.push_back(moved);
  }
  return out;
}

MoveSequence concat(const MoveSequence& a, const MoveSequence& b) {
  MoveSequence out = a;
  const auto tail = rebase(b, replay(a));
  out.steps.insert(out.steps.end(), tail.steps.begin(), tail.steps.end());
  return out;
}

MoveSequence reversed(const MoveSequence& seq) {
  std::vector<GridDiagram> states{seq.initial};
  for (const auto& m : seq.steps) states.push_back(apply_move(states.back(), m));
  MoveSequence out{states.back(), {}};
  GridDiagram cur = states.back();
  for (std::size_t i = seq.steps.size(); i-- > 0;) {
    // The inverse is expressed on the diagram the forward step produced.
    Move inv = inverse_move(states[i], seq.steps[i]);
    auto [a, b] = rotation_between(states[i + 1], cur);
    inv = rotate_move(inv, a, b, cur.size());
    cur = apply_move(cur, inv);
    out.steps.push_back(inv);
  }
  return out;
}

std::vector<CanonicalCode> exchange_class(const GridDiagram& d, std::size_t cap) {
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen{canonical_code(d)};
  std::deque<GridDiagram> queue{d};
  const auto moves = MoveSet::exchanges_only();
  while (!queue.empty()) {
    GridDiagram cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& m : enumerate_moves(cur, moves)) {
      GridDiagram next = apply_move(cur, m);
      if (seen.insert(canonical_code(next)).second) {
        if (seen.size() > cap)
          throw Error(ErrorCode::CapExceeded, "exchange class exceeds " + std::to_string(cap));
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<CanonicalCode> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Moves `line` by |shift| tight exchanges, appending them to out and updating
// cur. Returns the line's final index. The line is tracked by the other-axis
// coordinate of its positive vertex, which exchanges on this axis never change.
int push_exchange_steps(std::vector<Move>& out, GridDiagram& cur, Axis axis, int line, int shift) {
  const int key = axis == Axis::Col ? cur.pos(line) : cur.pos_col(line);
  auto where = [&] { return axis == Axis::Col ? cur.pos_col(key) : cur.pos(key); };
  for (int t = 0; t < std::abs(shift); ++t) {
    const int i = where();
    Move step = shift > 0 ? make_exchange(axis, i, 1) : normalize(make_exchange(axis, i, -1), cur.size());
    cur = apply_move(cur, step);
    out.push_back(step);
  }
  return where();
}

}  // namespace

std::vector<Move> decompose_move(const GridDiagram& d, const Move& m) {
  if (!move_applies(d, m)) invalid(m, "rectangle conditions fail");
  std::vector<Move> out;
  GridDiagram cur = d;
  switch (m.kind) {
    case MoveKind::Exchange:
      push_exchange_steps(out, cur, m.axis, m.line, m.shift);
      break;
    case MoveKind::Stab: {
      const int sc = m.dcol > 0 ? 1 : -1, sr = m.drow > 0 ? 1 : -1;
      Move tight = make_stab(d, m.col, m.row, sc, sr);
      Move inv = inverse_move(d, tight);  // locates the new lines
      cur = apply_move(cur, tight);
      out.push_back(tight);
      push_exchange_steps(out, cur, Axis::Col, inv.col, m.dcol - sc);
      push_exchange_steps(out, cur, Axis::Row, inv.row, m.drow - sr);
      break;
    }
    case MoveKind::Destab: {
      const int sc = m.dcol > 0 ? 1 : -1, sr = m.drow > 0 ? 1 : -1;
      // Bring the removed column and row next to the kept vertex first.
      const int col = push_exchange_steps(out, cur, Axis::Col, m.col, -(m.dcol - sc));
      const int row = push_exchange_steps(out, cur, Axis::Row, m.row, -(m.drow - sr));
      bool found = false;
      for (const auto& s : destab_shapes(cur, col, row)) {
        if (s.dcol != sc || s.drow != sr) continue;
        Move tight = make_destab(col, row, s);
        cur = apply_move(cur, tight);
        out.push_back(tight);
        found = true;
        break;
      }
      if (!found) throw Error(ErrorCode::InternalNoProgress, "no tight destabilization after " + describe(m));
      break;
    }
  }
  return out;
}

namespace {

nlohmann::json move_json(const Move& m) {
  nlohmann::json j;
  switch (m.kind) {
    case MoveKind::Exchange:
      j["kind"] = "exchange";
      j["axis"] = m.axis == Axis::Col ? "col" : "row";
      j["line"] = m.line;
      j["shift"] = m.shift;
      break;
    case MoveKind::Stab:
      j["kind"] = "stab";
      j["type"] = std::string(type_tag(m.type));
      j["vertex"] = {m.col, m.row};
      j["dir"] = {m.dcol, m.drow};
      break;
    case MoveKind::Destab:
      j["kind"] = "destab";
      j["type"] = std::string(type_tag(m.type));
      j["corner"] = {m.col, m.row};
      j["keep"] = {m.kcol, m.krow};
      j["dir"] = {m.dcol, m.drow};
      break;
  }
  return j;
}

std::pair<int, int> int_pair(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2)
    throw Error(ErrorCode::SyntaxError, std::string("move needs a pair '") + key + "'");
  return {j[key][0].get<int>(), j[key][1].get<int>()};
}

Move move_from(const nlohmann::json& j) {
  try {
    Move m;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "exchange") {
      m.kind = MoveKind::Exchange;
      const std::string axis = j.at("axis").get<std::string>();
      if (axis != "col" && axis != "row") throw Error(ErrorCode::SyntaxError, "axis must be col or row");
      m.axis = axis == "col" ? Axis::Col : Axis::Row;
      m.line = j.at("line").get<int>();
      m.shift = j.value("shift", 1);
    } else if (kind == "stab") {
      m.kind = MoveKind::Stab;
      m.type = parse_type_tag(j.at("type").get<std::string>());
      std::tie(m.col, m.row) = int_pair(j, "vertex");
      std::tie(m.dcol, m.drow) = int_pair(j, "dir");
    } else if (kind == "destab") {
      m.kind = MoveKind::Destab;
      m.type = parse_type_tag(j.at("type").get<std::string>());
      std::tie(m.col, m.row) = int_pair(j, "corner");
      std::tie(m.kcol, m.krow) = int_pair(j, "keep");
      std::tie(m.dcol, m.drow) = int_pair(j, "dir");
    } else {
      throw Error(ErrorCode::SyntaxError, "unknown move kind '" + kind + "'");
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
}

}  // namespace

std::string move_to_json(const Move& m) { return move_json(m).dump(); }

Move move_from_json(const std::string& text) {
  try {
    return move_from(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
}

std::string sequence_to_json(const MoveSequence& seq) {
  nlohmann::json j;
  j["initial"] = nlohmann::json::parse(to_json(seq.initial));
  j["steps"] = nlohmann::json::array();
  for (const auto& m : seq.steps) j["steps"].push_back(move_json(m));
  return j.dump();
}

MoveSequence sequence_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
  if (!j.is_object() || !j.contains("initial") || !j.contains("steps") || !j["steps"].is_array())
    throw Error(ErrorCode::SyntaxError, "certificate needs 'initial' and 'steps'");
  MoveSequence seq{parse_diagram(j["initial"].dump()), {}};
  for (const auto& s : j["steps"]) seq.steps.push_back(move_from(s));
  return seq;
}

}  // namespace gridlink
