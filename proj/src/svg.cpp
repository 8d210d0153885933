#include "gridlink/svg.hpp"

#include <sstream>

#include "gridlink/staircase.hpp"
#include "gridlink/torusfront.hpp"

namespace gridlink {

namespace {

constexpr int kMargin = 20;

class Canvas {
 public:
  Canvas(int n, int cell) : n_(n), cell_(cell) {
    const int side = n * cell + 2 * kMargin;
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
         << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n"
         << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
            "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#222\"/></marker></defs>\n"
         << "<rect class=\"torus\" x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << n * cell
         << "\" height=\"" << n * cell << "\" fill=\"white\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
  }

  // Grid line i sits in the middle of cell i; rows grow upwards.
  double x(double col) const { return kMargin + (col + 0.5) * cell_; }
  double y(double row) const { return kMargin + (n_ - row - 0.5) * cell_; }

  void grid() {
    for (int i = 0; i < n_; ++i) {
      out_ << "<line class=\"grid\" x1=\"" << x(i) << "\" y1=\"" << kMargin << "\" x2=\"" << x(i) << "\" y2=\""
           << kMargin + n_ * cell_ << "\" stroke=\"#ddd\"/>\n";
      out_ << "<line class=\"grid\" x1=\"" << kMargin << "\" y1=\"" << y(i) << "\" x2=\"" << kMargin + n_ * cell_
           << "\" y2=\"" << y(i) << "\" stroke=\"#ddd\"/>\n";
    }
  }

  void vertex(int col, int row, bool positive) {
    out_ << "<circle class=\"vertex\" cx=\"" << x(col) << "\" cy=\"" << y(row) << "\" r=\"" << cell_ / 5
         << "\" fill=\"" << (positive ? "black" : "white") << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }

  // An edge advancing `span` steps from `start` along the fixed line `at`,
  // split where it leaves the fundamental square.
  void edge(bool vertical, int at, int start, int span) {
    out_ << "<path class=\"edge\" d=\"";
    double u = start, end = start + span;
    while (u < end) {
      double wrap = n_ - 0.5;
      double stop = std::min(end, wrap);
      point('M', vertical, at, u);
      point('L', vertical, at, stop);
      if (stop >= end) break;
      u = -0.5;
      end -= n_;
    }
    out_ << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"2\" marker-end=\"url(#arrow)\"/>\n";
  }

  void crossing(const DoublePoint& p) {
    out_ << "<circle class=\"crossing\" cx=\"" << x(p.col) << "\" cy=\"" << y(p.row) << "\" r=\"" << cell_ / 8
         << "\" fill=\"none\" stroke=\"#c00\"/>\n";
  }

  // Background strip across the horizontal strand so the vertical one reads as over.
  void gap(const DoublePoint& p) {
    const double w = cell_ / 3.0;
    out_ << "<rect class=\"gap\" x=\"" << x(p.col) - w / 2 << "\" y=\"" << y(p.row) - 3 << "\" width=\"" << w
         << "\" height=\"6\" fill=\"white\"/>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  void point(char op, bool vertical, int at, double u) {
    out_ << op << (vertical ? x(at) : x(u)) << ',' << (vertical ? y(u) : y(at)) << (op == 'M' ? " " : " ");
  }

  int n_, cell_;
  std::ostringstream out_;
};

void draw_curve(Canvas& c, const StaircaseCurve& g, bool horizontals, bool verticals) {
  if (horizontals)
    for (const auto& e : g.horizontals) c.edge(false, e.row, e.from_col, g.horizontal_span(e.row));
  if (verticals)
    for (const auto& e : g.verticals) c.edge(true, e.col, e.from_row, g.vertical_span(e.col));
}

}  // namespace

std::string render_svg(const GridDiagram& d, RenderTarget target, const RenderOptions& opts) {
  const int n = d.size();
  if (target == RenderTarget::Diagram) {
    Canvas c(n, opts.cell);
    c.grid();
    for (const auto& v : d.vertices()) c.vertex(v.col, v.row, v.sign == Sign::Pos);
    return c.finish();
  }
  if (target == RenderTarget::Gamma) {
    Canvas c(n, opts.cell);
    c.grid();
    const auto g = gamma(d, opts.type);
    draw_curve(c, g, true, true);
    for (const auto& p : double_points(g)) c.crossing(p);
    return c.finish();
  }
  const auto f = tl_front(d, opts.type);
  const auto g = gamma(f.diagram);
  Canvas c(n, opts.cell);
  draw_curve(c, g, true, false);
  for (const auto& p : f.crossings) c.gap(p);
  draw_curve(c, g, false, true);
  return c.finish();
}

}  // namespace gridlink
