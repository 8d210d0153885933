#pragma once

#include <vector>

#include "gridlink/grid.hpp"
#include "gridlink/homotype.hpp"
#include "gridlink/moves.hpp"
#include "gridlink/staircase.hpp"

namespace gridlink {

// A positive torus front kept in staircase normal form: the staircase curve of
// `diagram` (always read in the II_fwd frame). At every crossing the vertical
// strand has the larger slope and passes over.
struct TorusFront {
  GridDiagram diagram;
  OrientedType type = OrientedType::II_fwd;  // type the front was built for
  std::vector<DoublePoint> crossings;        // sorted
  std::vector<ArcDescriptor> arcs;           // as in curve_structure
  ClosedComponentClass closed;

  int crossing_count() const { return int(crossings.size()); }
};

// Quadrant of a crossing that a face occupies; NE lies between the outgoing
// horizontal (east) and outgoing vertical (north) strands.
enum class Quadrant : std::uint8_t { NE, NW, SW, SE };

struct Corner {
  int crossing = 0;
  Quadrant quadrant = Quadrant::NE;

  friend bool operator==(const Corner&, const Corner&) = default;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

// One complementary region. Corners are listed boundary cycle by boundary
// cycle, each in order with the face on the left; a disk has one cycle, an
// annulus two. Regions bounded only by crossing-free components have none.
struct Face {
  std::vector<Corner> corners;
  int boundary_cycles = 0;

  int corner_count() const { return int(corners.size()); }
  bool is_disk() const { return boundary_cycles == 1; }
};

enum class FrontMoveKind : std::uint8_t { R3, Exchange };

// R3: the triangle at `face` with apex crossing `apex` (the corner in the SE or
// NW quadrant); the opposite strand is pushed across the apex.
// Exchange: adjacent parallel edges at `line` and `line + 1` whose spans
// together cover the circle are swapped, passing one strand around the torus.
struct FrontMove {
  FrontMoveKind kind = FrontMoveKind::R3;
  int face = -1;
  int apex = -1;
  Axis axis = Axis::Col;
  int line = -1;

  friend bool operator==(const FrontMove&, const FrontMove&) = default;
};

TorusFront tl_front(const GridDiagram& d, OrientedType t = OrientedType::II_fwd);
std::vector<Face> faces(const TorusFront& f);
std::vector<FrontMove> r3_sites(const TorusFront& f);
std::vector<FrontMove> front_exchange_candidates(const TorusFront& f);
// Throws Error(InvalidFrontMove) when the move is not listed for f.
TorusFront apply_front_move(const TorusFront& f, const FrontMove& m);
bool front_isotopic_rel_X(const TorusFront& a, const TorusFront& b);
// A diagram whose II_fwd staircase curve is the front.
GridDiagram approximate_front(const TorusFront& f);

}  // namespace gridlink
