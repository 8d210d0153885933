#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gridlink {

enum class ErrorCode {
  NotBijection,
  CoincidentVertices,
  SizeTooSmall,
  SyntaxError,
  InvalidMove,
  InvalidStep,
  CapExceeded,
  PreconditionViolated,
  NotSameType,
  InternalNoProgress,
  InvalidFrontMove,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Sign : std::uint8_t { Pos, Neg };

inline Sign opposite(Sign s) { return s == Sign::Pos ? Sign::Neg : Sign::Pos; }

struct Vertex {
  int col = 0;
  int row = 0;
  Sign sign = Sign::Pos;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Oriented stabilization types. Fwd/Bwd are the right/left arrows.
enum class OrientedType : std::uint8_t { I_fwd, I_bwd, II_fwd, II_bwd };

inline constexpr OrientedType kAllTypes[] = {OrientedType::I_fwd, OrientedType::I_bwd,
                                             OrientedType::II_fwd, OrientedType::II_bwd};

// Command-line / JSON spelling: I+, I-, II+, II-.
std::string_view type_tag(OrientedType t);
OrientedType parse_type_tag(std::string_view tag);

enum class SymmetryOp : std::uint8_t { Identity, ReflTheta, ReflPhi, ReflBoth };

// The reflection conjugating moves of type T to moves of type II_fwd.
SymmetryOp symmetry_for(OrientedType t);
// Image of an oriented type under a reflection.
OrientedType reflect_type(OrientedType t, SymmetryOp s);

// Column i sits at theta = 2*pi*i/n, row j at phi = 2*pi*j/n. pos[i] and neg[i]
// are the rows of the positive and negative vertex in column i.
class GridDiagram {
 public:
  // Throws Error with NotBijection, CoincidentVertices or SizeTooSmall.
  static GridDiagram validate(int n, std::vector<int> pos, std::vector<int> neg);

  int size() const noexcept { return n_; }
  int pos(int col) const { return pos_[col]; }
  int neg(int col) const { return neg_[col]; }
  // Column of the positive / negative vertex on a row.
  int pos_col(int row) const { return pos_col_[row]; }
  int neg_col(int row) const { return neg_col_[row]; }
  const std::vector<int>& pos_rows() const noexcept { return pos_; }
  const std::vector<int>& neg_rows() const noexcept { return neg_; }

  // Sign of the vertex at (col,row), if any.
  bool occupied(int col, int row) const { return pos_[col] == row || neg_[col] == row; }
  Sign sign_at(int col, int row) const { return pos_[col] == row ? Sign::Pos : Sign::Neg; }

  std::vector<Vertex> vertices() const;

  friend bool operator==(const GridDiagram& a, const GridDiagram& b) {
    return a.pos_ == b.pos_ && a.neg_ == b.neg_;
  }

 private:
  GridDiagram() = default;
  int n_ = 0;
  std::vector<int> pos_, neg_;
  std::vector<int> pos_col_, neg_col_;
};

// Builds a diagram from vertices with arbitrary (distinct per line) coordinates,
// compressing the occupied columns and rows to 0..n-1 in increasing order.
GridDiagram from_vertices(const std::vector<Vertex>& vs);

// Rotate columns by a and rows by b: vertex (i,j) goes to (i+a, j+b) mod n.
GridDiagram rotate(const GridDiagram& d, int a, int b);

// Opaque key; equal iff the diagrams agree up to independent cyclic rotations
// of columns and rows.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  std::string hex() const;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

CanonicalCode canonical_code(const GridDiagram& d);

// The rotation (a, b) realizing the canonical code (first one in scan order).
std::pair<int, int> canonical_rotation(const GridDiagram& d);

GridDiagram apply_symmetry(const GridDiagram& d, SymmetryOp s);

struct Components {
  int count = 0;
  // Vertices of each component in traversal order, starting with a positive vertex.
  std::vector<std::vector<Vertex>> cycles;
};

Components components(const GridDiagram& d);

// Direct sum: b is placed in the block above and to the right of a.
GridDiagram block_sum(const GridDiagram& a, const GridDiagram& b);

// JSON {"n":..,"pos":[..],"neg":[..]} or the grid text format; auto-detected.
GridDiagram parse_diagram(std::string_view text);
std::string to_json(const GridDiagram& d);
std::string to_grid_text(const GridDiagram& d);

}  // namespace gridlink
