#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridlink/grid.hpp"
#include "gridlink/moves.hpp"
#include "gridlink/staircase.hpp"

namespace gridlink {

// Canonical key of the homology type of the staircase curve.
//
// Layout (big-endian u16 words): k, l, m, then for m > 0 the counts K, L of
// distinct crossing columns and rows followed by a 2K x 2L cell matrix. The
// cells come from cutting the torus along the lines a quarter unit either side
// of every crossing column and row; each cell stores the number of curve points
// on its left side, on its bottom side, and whether it holds a crossing. The
// matrix is minimized over the K*L rotations that keep crossing strips even.
struct HomologyCode {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const HomologyCode&, const HomologyCode&) = default;
  friend auto operator<=>(const HomologyCode&, const HomologyCode&) = default;
  std::string hex() const;
  // Throws Error(SyntaxError) on malformed input.
  static HomologyCode from_hex(std::string_view hex);
  Omega omega() const;
};

struct HomologyCodeHash {
  std::size_t operator()(const HomologyCode& c) const noexcept;
};

HomologyCode homology_code(const GridDiagram& d, OrientedType t = OrientedType::II_fwd);
bool same_homology_type(const GridDiagram& a, const GridDiagram& b,
                        OrientedType t = OrientedType::II_fwd);

// One arc of the curve between consecutive crossings. Ports record whether the
// arc leaves its start (enters its end) along a vertical edge.
struct ArcDescriptor {
  int start = 0;  // index into CurveStructure::crossings
  int end = 0;
  bool start_vertical = false;
  bool end_vertical = false;
  int theta_advance = 0;  // in grid steps
  int phi_advance = 0;

  friend bool operator==(const ArcDescriptor&, const ArcDescriptor&) = default;
  friend auto operator<=>(const ArcDescriptor&, const ArcDescriptor&) = default;
};

// Closed components avoiding every crossing; all share one primitive class.
struct ClosedComponentClass {
  int theta_class = 0;
  int phi_class = 0;
  int count = 0;
};

struct CurveStructure {
  std::vector<DoublePoint> crossings;
  std::vector<ArcDescriptor> arcs;
  ClosedComponentClass closed;
};

CurveStructure curve_structure(const GridDiagram& d, OrientedType t = OrientedType::II_fwd);

struct ConnectOptions {
  // Intermediate diagrams may grow this far beyond the larger input.
  int size_slack = 4;
  std::size_t max_states = 200000;
};

// Search statistics and the distance measure along the returned chain: entry
// i is the number of moves still needed after step i on a shortest chain of
// code-preserving moves; it drops by one per step.
struct ConnectLog {
  std::vector<int> measure;
  std::size_t states = 0;
  bool code_preserving = true;  // false when the unrestricted fallback was needed
};

// A chain of exchanges and type-t (de)stabilizations from a to a diagram
// canonically equal to b. Throws NotSameType when the homology codes differ and
// InternalNoProgress when no chain is found within the bounds.
MoveSequence connect_within_type(const GridDiagram& a, const GridDiagram& b,
                                 OrientedType t = OrientedType::II_fwd, ConnectLog* log = nullptr,
                                 const ConnectOptions& opts = {});

}  // namespace gridlink
