#include "gridlink/grid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace gridlink {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotBijection: return "NotBijection";
    case ErrorCode::CoincidentVertices: return "CoincidentVertices";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidMove: return "InvalidMove";
    case ErrorCode::InvalidStep: return "InvalidStep";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotSameType: return "NotSameType";
    case ErrorCode::InternalNoProgress: return "InternalNoProgress";
    case ErrorCode::InvalidFrontMove: return "InvalidFrontMove";
  }
  return "Unknown";
}

std::string_view type_tag(OrientedType t) {
  switch (t) {
    case OrientedType::I_fwd: return "I+";
    case OrientedType::I_bwd: return "I-";
    case OrientedType::II_fwd: return "II+";
    case OrientedType::II_bwd: return "II-";
  }
  return "?";
}

OrientedType parse_type_tag(std::string_view tag) {
  for (OrientedType t : kAllTypes)
    if (type_tag(t) == tag) return t;
  throw Error(ErrorCode::SyntaxError, "unknown oriented type '" + std::string(tag) + "'");
}

SymmetryOp symmetry_for(OrientedType t) {
  switch (t) {
    case OrientedType::II_fwd: return SymmetryOp::Identity;
    case OrientedType::I_fwd: return SymmetryOp::ReflPhi;
    case OrientedType::I_bwd: return SymmetryOp::ReflTheta;
    case OrientedType::II_bwd: return SymmetryOp::ReflBoth;
  }
  return SymmetryOp::Identity;
}

OrientedType reflect_type(OrientedType t, SymmetryOp s) {
  // A theta reflection swaps type I and II and reverses the arrow; a phi
  // reflection swaps the type and keeps the arrow.
  bool type_two = t == OrientedType::II_fwd || t == OrientedType::II_bwd;
  bool fwd = t == OrientedType::I_fwd || t == OrientedType::II_fwd;
  if (s == SymmetryOp::ReflTheta || s == SymmetryOp::ReflPhi) type_two = !type_two;
  if (s == SymmetryOp::ReflTheta || s == SymmetryOp::ReflBoth) fwd = !fwd;
  if (type_two) return fwd ? OrientedType::II_fwd : OrientedType::II_bwd;
  return fwd ? OrientedType::I_fwd : OrientedType::I_bwd;
}

namespace {

bool is_permutation_of_range(const std::vector<int>& v, int n) {
  std::vector<char> seen(n, 0);
  for (int x : v) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

}  // namespace

GridDiagram GridDiagram::validate(int n, std::vector<int> pos, std::vector<int> neg) {
  if (n < 2) throw Error(ErrorCode::SizeTooSmall, "grid size " + std::to_string(n) + " < 2");
  if (static_cast<int>(pos.size()) != n || static_cast<int>(neg.size()) != n)
    throw Error(ErrorCode::NotBijection, "pos/neg must have exactly n entries");
  if (!is_permutation_of_range(pos, n))
    throw Error(ErrorCode::NotBijection, "positive vertices do not occupy every row once");
  if (!is_permutation_of_range(neg, n))
    throw Error(ErrorCode::NotBijection, "negative vertices do not occupy every row once");
  for (int i = 0; i < n; ++i)
    if (pos[i] == neg[i])
      throw Error(ErrorCode::CoincidentVertices, "column " + std::to_string(i));
  GridDiagram d;
  d.n_ = n;
  d.pos_col_ = inverse(pos);
  d.neg_col_ = inverse(neg);
  d.pos_ = std::move(pos);
  d.neg_ = std::move(neg);
  return d;
}

std::vector<Vertex> GridDiagram::vertices() const {
  std::vector<Vertex> out;
  out.reserve(2 * n_);
  for (int i = 0; i < n_; ++i) {
    out.push_back({i, pos_[i], Sign::Pos});
    out.push_back({i, neg_[i], Sign::Neg});
  }
  return out;
}

GridDiagram from_vertices(const std::vector<Vertex>& vs) {
  std::vector<int> cols, rows;
  for (const auto& v : vs) {
    cols.push_back(v.col);
    rows.push_back(v.row);
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const int n = static_cast<int>(cols.size());
  if (static_cast<int>(rows.size()) != n || static_cast<int>(vs.size()) != 2 * n)
    throw Error(ErrorCode::NotBijection, "vertex set does not have two vertices per line");
  std::vector<int> pos(n, -1), neg(n, -1);
  auto index = [](const std::vector<int>& v, int x) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
  };
  for (const auto& v : vs) {
    int c = index(cols, v.col), r = index(rows, v.row);
    auto& slot = v.sign == Sign::Pos ? pos[c] : neg[c];
    if (slot != -1) throw Error(ErrorCode::NotBijection, "two vertices of one sign in a column");
    slot = r;
  }
  for (int c = 0; c < n; ++c)
    if (pos[c] == -1 || neg[c] == -1)
      throw Error(ErrorCode::NotBijection, "column without a vertex of each sign");
  return GridDiagram::validate(n, std::move(pos), std::move(neg));
}

GridDiagram rotate(const GridDiagram& d, int a, int b) {
  const int n = d.size();
  a = ((a % n) + n) % n;
  b = ((b % n) + n) % n;
  std::vector<int> pos(n), neg(n);
  for (int i = 0; i < n; ++i) {
    pos[(i + a) % n] = (d.pos(i) + b) % n;
    neg[(i + a) % n] = (d.neg(i) + b) % n;
  }
  return GridDiagram::validate(n, std::move(pos), std::move(neg));
}

std::string CanonicalCode::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 15]);
  }
  return s;
}

std::size_t CanonicalCodeHash::operator()(const CanonicalCode& c) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto b : c.bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// Serialization: n, then (pos, neg) interleaved per column, as big-endian u16.
void serialize_rotated(const GridDiagram& d, int a, int b, std::vector<std::uint16_t>& out) {
  const int n = d.size();
  out.assign(2 * n, 0);
  for (int i = 0; i < n; ++i) {
    int c = (i + a) % n;
    out[2 * c] = static_cast<std::uint16_t>((d.pos(i) + b) % n);
    out[2 * c + 1] = static_cast<std::uint16_t>((d.neg(i) + b) % n);
  }
}

}  // namespace

std::pair<int, int> canonical_rotation(const GridDiagram& d) {
  const int n = d.size();
  std::vector<std::uint16_t> best, cur;
  std::pair<int, int> arg{0, 0};
  for (int a = 0; a < n; ++a) {
    // Only rotations putting some column's positive vertex at row 0 in column 0
    // can be minimal, since the first entry is minimized first.
    int b = (n - d.pos(((n - a) % n))) % n;
    serialize_rotated(d, a, b, cur);
    if (best.empty() || cur < best) {
      best = cur;
      arg = {a, b};
    }
  }
  return arg;
}

CanonicalCode canonical_code(const GridDiagram& d) {
  auto [a, b] = canonical_rotation(d);
  std::vector<std::uint16_t> best;
  serialize_rotated(d, a, b, best);
  CanonicalCode code;
  code.bytes.reserve(2 + 2 * best.size());
  code.bytes.push_back(static_cast<std::uint8_t>(d.size() >> 8));
  code.bytes.push_back(static_cast<std::uint8_t>(d.size() & 0xff));
  for (auto v : best) {
    code.bytes.push_back(static_cast<std::uint8_t>(v >> 8));
    code.bytes.push_back(static_cast<std::uint8_t>(v & 0xff));
  }
  return code;
}

GridDiagram apply_symmetry(const GridDiagram& d, SymmetryOp s) {
  const int n = d.size();
  const bool flip_cols = s == SymmetryOp::ReflTheta || s == SymmetryOp::ReflBoth;
  const bool flip_rows = s == SymmetryOp::ReflPhi || s == SymmetryOp::ReflBoth;
  std::vector<int> pos(n), neg(n);
  for (int i = 0; i < n; ++i) {
    int c = flip_cols ? n - 1 - i : i;
    pos[c] = flip_rows ? n - 1 - d.pos(i) : d.pos(i);
    neg[c] = flip_rows ? n - 1 - d.neg(i) : d.neg(i);
  }
  return GridDiagram::validate(n, std::move(pos), std::move(neg));
}

Components components(const GridDiagram& d) {
  const int n = d.size();
  Components out;
  std::vector<char> seen(n, 0);  // by column of the positive vertex
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle;
    int c = start;
    while (!seen[c]) {
      seen[c] = 1;
      // Positive vertex, then along the vertical edge to the negative vertex,
      // then along that row to the row's positive vertex.
      cycle.push_back({c, d.pos(c), Sign::Pos});
      cycle.push_back({c, d.neg(c), Sign::Neg});
      c = d.pos_col(d.neg(c));
    }
    out.cycles.push_back(std::move(cycle));
  }
  out.count = static_cast<int>(out.cycles.size());
  return out;
}

GridDiagram block_sum(const GridDiagram& a, const GridDiagram& b) {
  const int n = a.size() + b.size();
  std::vector<int> pos(a.pos_rows()), neg(a.neg_rows());
  for (int i = 0; i < b.size(); ++i) {
    pos.push_back(b.pos(i) + a.size());
    neg.push_back(b.neg(i) + a.size());
  }
  return GridDiagram::validate(n, std::move(pos), std::move(neg));
}

namespace {

GridDiagram parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("pos") || !j.contains("neg"))
    throw Error(ErrorCode::SyntaxError, "expected an object with keys n, pos, neg");
  const auto& jn = j["n"];
  const auto& jp = j["pos"];
  const auto& jq = j["neg"];
  if (!jn.is_number_integer() || !jp.is_array() || !jq.is_array())
    throw Error(ErrorCode::SyntaxError, "n must be an integer, pos and neg arrays");
  auto ints = [](const nlohmann::json& arr) {
    std::vector<int> v;
    for (const auto& x : arr) {
      if (!x.is_number_integer()) throw Error(ErrorCode::SyntaxError, "non-integer entry");
      v.push_back(x.get<int>());
    }
    return v;
  };
  return GridDiagram::validate(jn.get<int>(), ints(jp), ints(jq));
}

GridDiagram parse_grid_text(std::string_view text) {
  std::vector<std::string> lines;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) lines.push_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == '\n' || ch == '/') {
      flush();
    } else if (ch == 'x' || ch == 'o' || ch == '.') {
      cur.push_back(ch);
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      throw Error(ErrorCode::SyntaxError, std::string("unexpected character '") + ch + "'");
    }
  }
  flush();
  const int n = static_cast<int>(lines.size());
  if (n < 2) throw Error(ErrorCode::SizeTooSmall, "grid text has fewer than two rows");
  std::vector<int> pos(n, -1), neg(n, -1);
  for (int li = 0; li < n; ++li) {
    if (static_cast<int>(lines[li].size()) != n)
      throw Error(ErrorCode::SyntaxError, "grid text is not square");
    const int row = n - 1 - li;
    int xs = 0, os = 0;
    for (int c = 0; c < n; ++c) {
      char ch = lines[li][c];
      if (ch == '.') continue;
      auto& slot = ch == 'x' ? pos[c] : neg[c];
      (ch == 'x' ? xs : os)++;
      if (slot != -1) throw Error(ErrorCode::NotBijection, "column repeats a vertex sign");
      slot = row;
    }
    if (xs != 1 || os != 1)
      throw Error(ErrorCode::NotBijection, "row " + std::to_string(row) + " needs one x and one o");
  }
  for (int c = 0; c < n; ++c)
    if (pos[c] == -1 || neg[c] == -1)
      throw Error(ErrorCode::NotBijection, "column " + std::to_string(c) + " needs one x and one o");
  return GridDiagram::validate(n, std::move(pos), std::move(neg));
}

}  // namespace

GridDiagram parse_diagram(std::string_view text) {
  auto first = std::find_if(text.begin(), text.end(),
                            [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
  if (first == text.end()) throw Error(ErrorCode::SyntaxError, "empty input");
  if (*first == '{') return parse_json(text);
  return parse_grid_text(text);
}

std::string to_json(const GridDiagram& d) {
  nlohmann::json j;
  j["n"] = d.size();
  j["pos"] = d.pos_rows();
  j["neg"] = d.neg_rows();
  return j.dump();
}

std::string to_grid_text(const GridDiagram& d) {
  const int n = d.size();
  std::string s;
  for (int row = n - 1; row >= 0; --row) {
    for (int c = 0; c < n; ++c)
      s.push_back(d.pos(c) == row ? 'x' : d.neg(c) == row ? 'o' : '.');
    s.push_back('\n');
  }
  return s;
}

}  // namespace gridlink
