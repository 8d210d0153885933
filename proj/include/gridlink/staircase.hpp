#pragma once

#include <vector>

#include "gridlink/grid.hpp"

namespace gridlink {

// Vertical edge on a column, running counterclockwise in phi from the
// positive vertex's row to the negative vertex's row.
struct VerticalEdge {
  int col;
  int from_row;
  int to_row;
};

// Horizontal edge on a row, running counterclockwise in theta from the
// negative vertex's column to the positive vertex's column.
struct HorizontalEdge {
  int row;
  int from_col;
  int to_col;
};

struct DoublePoint {
  int col;
  int row;

  friend bool operator==(const DoublePoint&, const DoublePoint&) = default;
  friend auto operator<=>(const DoublePoint&, const DoublePoint&) = default;
};

// The staircase curve of a diagram, already pulled back to the diagram's own
// coordinates when built for a type other than II_fwd.
struct StaircaseCurve {
  int n = 0;
  std::vector<VerticalEdge> verticals;      // indexed by column
  std::vector<HorizontalEdge> horizontals;  // indexed by row

  int vertical_span(int col) const;
  int horizontal_span(int row) const;
  // Strict interior containment.
  bool vertical_covers(int col, int row) const;
  bool horizontal_covers(int row, int col) const;
};

struct Omega {
  int k = 0;
  int l = 0;
  int m = 0;

  friend bool operator==(const Omega&, const Omega&) = default;
  friend auto operator<=>(const Omega&, const Omega&) = default;
};

StaircaseCurve gamma(const GridDiagram& d, OrientedType t = OrientedType::II_fwd);
std::vector<DoublePoint> double_points(const StaircaseCurve& g);
Omega omega(const GridDiagram& d, OrientedType t = OrientedType::II_fwd);

// Number of horizontal edges crossing the meridian just after column c
// (between columns c and c+1), and vertical edges crossing the longitude just
// after row r.
int meridian_crossings(const StaircaseCurve& g, int c);
int longitude_crossings(const StaircaseCurve& g, int r);

// Closed components of the curve as cyclic lists of columns visited.
int curve_component_count(const StaircaseCurve& g);

}  // namespace gridlink
