#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gridlink/grid.hpp"

namespace gridlink {

enum class MoveKind : std::uint8_t { Exchange, Stab, Destab };
enum class Axis : std::uint8_t { Col, Row };

// One elementary move, in the pre-move indices of the diagram it applies to.
//
// Exchange: line `line` on `axis` is moved past |shift| neighbouring lines
//   (forward if shift > 0). The tight form swaps `line` and `line+1`, shift = +1.
// Stab: the vertex at (col,row) is replaced by three vertices on a new column
//   and a new row inserted |dcol| and |drow| lines away in the direction of the
//   signs; dcol = drow = +-1 is the tight form.
// Destab: the vertex at (col,row) is the removed corner; its column mate and
//   row mate go too, and a vertex of their sign appears at (kcol,krow).
struct Move {
  MoveKind kind = MoveKind::Exchange;
  OrientedType type = OrientedType::II_fwd;  // Stab / Destab only
  Axis axis = Axis::Col;                     // Exchange only
  int line = 0;
  int shift = 1;
  int col = 0, row = 0;
  int dcol = 1, drow = 1;
  int kcol = 0, krow = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

// Which kinds of move are admitted.
struct MoveSet {
  bool exchange = false;
  std::array<bool, 4> stab{};
  std::array<bool, 4> destab{};

  static MoveSet all();
  static MoveSet exchanges_only();
  // Exchanges plus (de)stabilizations of one oriented type.
  static MoveSet for_type(OrientedType t);
  bool admits(const Move& m) const;
};

struct MoveSequence {
  GridDiagram initial;
  std::vector<Move> steps;
};

// Oriented type of the stabilization replacing a vertex of the given sign by a
// rectangle extending in the direction of (dcol, drow).
OrientedType stab_type(Sign v, int dcol, int drow);

std::string describe(const Move& m);

// Tight exchanges, tight stabilizations and all destabilizations of the admitted
// kinds, in a fixed order. Every listed move applies.
std::vector<Move> enumerate_moves(const GridDiagram& d, const MoveSet& allowed);

// Throws Error(InvalidMove) when the move's rectangle conditions fail on d.
GridDiagram apply_move(const GridDiagram& d, const Move& m);
bool move_applies(const GridDiagram& d, const Move& m);

// The move undoing m, expressed on apply_move(d, m).
Move inverse_move(const GridDiagram& d, const Move& m);

// All elementary moves (including non-tight ones) taking d1 to a diagram
// combinatorially equivalent to d2.
std::vector<Move> classify_all(const GridDiagram& d1, const GridDiagram& d2);
std::optional<Move> classify_pair(const GridDiagram& d1, const GridDiagram& d2);

// The same move on rotate(d, a, b) for a diagram d of size n.
Move rotate_move(const Move& m, int a, int b, int n);

// Re-expresses seq so that it starts at `start`, which must have the same
// canonical code as seq.initial. The result ends on a diagram canonically equal
// to replay(seq).
MoveSequence rebase(const MoveSequence& seq, const GridDiagram& start);

// Concatenation of certificates; b is rebased onto replay(a).
MoveSequence concat(const MoveSequence& a, const MoveSequence& b);

// Sequence running seq backwards, from replay(seq) to seq.initial.
MoveSequence reversed(const MoveSequence& seq);

// Applies every step; throws Error(InvalidStep) naming the first failing index.
GridDiagram replay(const MoveSequence& seq);

// Canonical codes of the exchange class of d; Error(CapExceeded) past cap.
std::vector<CanonicalCode> exchange_class(const GridDiagram& d, std::size_t cap);

// Splits a move into moves whose rectangles pass no further diagram line.
std::vector<Move> decompose_move(const GridDiagram& d, const Move& m);

// JSON encoding of moves and certificates.
std::string move_to_json(const Move& m);
Move move_from_json(const std::string& text);
std::string sequence_to_json(const MoveSequence& seq);
MoveSequence sequence_from_json(const std::string& text);

}  // namespace gridlink
