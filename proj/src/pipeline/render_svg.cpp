#include <cmath>
#include <iomanip>
#include <sstream>

#include "slicecert/pipeline.hpp"

namespace slicecert::pipeline {

namespace {

constexpr const char* kPositive = "#1f5fbf";
constexpr const char* kNegative = "#bf3f1f";
constexpr const char* kCurve = "#d01c8b";

std::string header(int w, int h) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
      << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
         "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return out.str();
}

std::string fixed(double v) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << (std::abs(v) < 0.005 ? 0.0 : v);
  return out.str();
}

}  // namespace

std::string render_chord_diagram_svg(const diagrams::ChordDiagram& cd) {
  const int step = 30, left = 20;
  const int width = 2 * left + step * (cd.endpoints + 1);
  int tallest = 0;
  for (const auto& ch : cd.chords) tallest = std::max(tallest, std::abs(ch.over - ch.under) * step / 2);
  const int base = tallest + 40;
  const int height = base + 50;
  auto x = [&](int e) { return left + step * e; };
  std::ostringstream out;
  out << header(width, height);
  out << "<line x1=\"" << left << "\" y1=\"" << base << "\" x2=\"" << width - left << "\" y2=\"" << base
      << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  for (const auto& ch : cd.chords) {
    const int r = std::abs(ch.over - ch.under) * step / 2;
    const int sweep = ch.over > ch.under ? 1 : 0;
    out << "<path d=\"M" << x(ch.under) << "," << base << " A" << r << "," << r << " 0 0 " << sweep << " "
        << x(ch.over) << "," << base << "\" fill=\"none\" stroke=\"" << (ch.sign > 0 ? kPositive : kNegative)
        << "\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
  }
  for (int e = 1; e <= cd.endpoints; ++e) {
    out << "<circle cx=\"" << x(e) << "\" cy=\"" << base << "\" r=\"3\" fill=\"black\"/>\n";
    out << "<text x=\"" << x(e) << "\" y=\"" << base + 16 << "\" font-size=\"10\" text-anchor=\"middle\">" << e
        << "</text>\n";
  }
  for (std::size_t j = 0; j < cd.bridge_segments.size(); ++j) {
    const int sx = x(cd.bridge_segments[j]) + step / 2;
    out << "<text x=\"" << sx << "\" y=\"" << base + 32 << "\" font-size=\"10\" text-anchor=\"middle\" "
        << "fill=\"#555\">b" << j + 1 << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_decker_svg(const decker::DeckerSet& ds, const decker::SliceCurve* curve) {
  decker::SliceCurve grid;
  if (curve) {
    grid = *curve;
  } else {
    grid.M = ds.M;
    grid.rows.assign(ds.L + 1, 1);
  }
  const int M = grid.M, R = grid.total_rows();
  const int cw = M <= 32 ? 24 : 8, rh = R <= 64 ? 24 : 8;
  const int left = 110, top = 20;
  const int width = left + M * cw + 20, height = top + (R + 1) * rh + 20;
  auto x = [&](int lon) { return left + lon * cw + cw / 2; };
  auto y = [&](int row) { return top + (row + 1) * rh; };  // row -1 and R are the poles
  std::ostringstream out;
  out << header(width, height);
  for (int pole : {-1, R}) {
    out << "<line x1=\"" << left << "\" y1=\"" << y(pole) << "\" x2=\"" << left + M * cw << "\" y2=\"" << y(pole)
        << "\" stroke=\"#999\" stroke-width=\"3\"/>\n";
  }
  out << "<text x=\"8\" y=\"" << y(-1) + 4 << "\" font-size=\"11\">N</text>\n";
  out << "<text x=\"8\" y=\"" << y(R) + 4 << "\" font-size=\"11\">S</text>\n";
  for (int l = 1; l <= ds.L; ++l) {
    const int cy = (y(grid.first_row(l) - 1) + y(grid.first_row(l))) / 2;
    const bool over = ds.circle_over[l];
    out << "<line x1=\"" << left << "\" y1=\"" << cy << "\" x2=\"" << left + M * cw << "\" y2=\"" << cy
        << "\" stroke=\"black\" stroke-width=\"1.5\"" << (over ? "" : " stroke-dasharray=\"4,3\"") << "/>\n";
    out << "<text x=\"8\" y=\"" << cy + 4 << "\" font-size=\"10\">" << l << " pair " << ds.circle_pair[l]
        << (over ? " over" : " under") << "</text>\n";
  }
  if (curve) {
    auto seg = [&](int x1, int y1, int x2, int y2) {
      out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
          << "\" stroke=\"" << kCurve << "\" stroke-width=\"2\"/>\n";
    };
    const auto& cyc = grid.cycle;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const auto& a = cyc[i];
      const auto& b = cyc[(i + 1) % cyc.size()];
      if (grid.is_north(a) || grid.is_south(a)) {
        seg(x(b.lon), y(a.row), x(b.lon), y(b.row));
      } else if (grid.is_north(b) || grid.is_south(b)) {
        seg(x(a.lon), y(a.row), x(a.lon), y(b.row));
      } else if (a.row == b.row && std::abs(a.lon - b.lon) > 1) {
        // Wraps across the seam of the cylinder.
        const int lo = std::min(a.lon, b.lon) == a.lon ? a.lon : b.lon;
        const int hi = a.lon == lo ? b.lon : a.lon;
        seg(x(hi), y(a.row), left + M * cw, y(a.row));
        seg(left, y(a.row), x(lo), y(a.row));
      } else {
        seg(x(a.lon), y(a.row), x(b.lon), y(b.row));
      }
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_pd_svg(const diagrams::PDCode& pd) {
  const int n = pd.edge_count();
  const double cx = 200, cy = 200, r = 150;
  std::ostringstream out;
  out << header(400, 400);
  out << "<circle cx=\"200\" cy=\"200\" r=\"150\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  // Passage p (1-based) is the crossing between edges p and p+1.
  auto angle = [&](double pos) { return 2 * M_PI * pos / std::max(n, 1) - M_PI / 2; };
  auto px = [&](double pos, double rad) { return fixed(cx + rad * std::cos(angle(pos))); };
  auto py = [&](double pos, double rad) { return fixed(cy + rad * std::sin(angle(pos))); };
  for (int e = 1; e <= n; ++e) {
    out << "<text x=\"" << px(e - 0.5, r + 14) << "\" y=\"" << py(e - 0.5, r + 14)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << e << "</text>\n";
  }
  for (const auto& c : pd.crossings) {
    const int under = c.edges[0];
    const int b = c.edges[1], d = c.edges[3];
    const int over = (b % n) + 1 == d ? b : d;
    out << "<line x1=\"" << px(under, r) << "\" y1=\"" << py(under, r) << "\" x2=\"" << px(over, r)
        << "\" y2=\"" << py(over, r) << "\" stroke=\"" << (c.sign > 0 ? kPositive : kNegative)
        << "\" stroke-width=\"1.5\" marker-end=\"url(#arrow)\"/>\n";
    out << "<circle cx=\"" << px(under, r) << "\" cy=\"" << py(under, r) << "\" r=\"3\" fill=\"black\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace slicecert::pipeline
