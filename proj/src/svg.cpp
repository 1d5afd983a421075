#include "planeproj/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <tuple>

#include "planeproj/error.hpp"

namespace planeproj {

namespace {

constexpr double kSize = 1000.0;
constexpr double kMargin = 40.0;

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  return s == "-0.000000" ? "0.000000" : s;
}

}  // namespace

std::string render_svg(const PlaneProjection& pp, PlanePair plane) {
  if (!plane.valid_for(pp.dimension())) throw Error(ErrorCode::kBadPlane, "plane not valid for this embedding");
  const std::vector<Point2> pts = project(pp.embedding(), plane);
  const int n = static_cast<int>(pts.size());

  // Rationals are converted to doubles for display only.
  std::vector<double> xs(n), ys(n);
  for (int v = 0; v < n; ++v) {
    xs[v] = pts[v].x.to_double();
    ys[v] = pts[v].y.to_double();
  }
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  if (n > 0) {
    std::tie(min_x, max_x) = std::pair{*std::min_element(xs.begin(), xs.end()), *std::max_element(xs.begin(), xs.end())};
    std::tie(min_y, max_y) = std::pair{*std::min_element(ys.begin(), ys.end()), *std::max_element(ys.begin(), ys.end())};
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-300});
  const double scale = (kSize - 2 * kMargin) / span;
  const double off_x = kMargin + ((kSize - 2 * kMargin) - (max_x - min_x) * scale) / 2;
  const double off_y = kMargin + ((kSize - 2 * kMargin) - (max_y - min_y) * scale) / 2;
  auto sx = [&](int v) { return fixed6(off_x + (xs[v] - min_x) * scale); };
  // SVG y grows downward.
  auto sy = [&](int v) { return fixed6(kSize - off_y - (ys[v] - min_y) * scale); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"1000\" height=\"1000\" "
         "viewBox=\"0 0 1000 1000\">\n"
      << "<title>plane (" << plane.i << "," << plane.j << ")</title>\n"
      << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n"
      << "<g stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const Edge& e : pp.edges_in(plane)) {
    out << "<line x1=\"" << sx(e.u) << "\" y1=\"" << sy(e.u) << "\" x2=\"" << sx(e.v) << "\" y2=\"" << sy(e.v)
        << "\"/>\n";
  }
  out << "</g>\n<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
  for (int v = 0; v < n; ++v) {
    out << "<circle cx=\"" << sx(v) << "\" cy=\"" << sy(v) << "\" r=\"6\" fill=\"#4a7bd0\" stroke=\"black\"/>\n"
        << "<text x=\"" << sx(v) << "\" y=\"" << fixed6(std::stod(sy(v)) - 9) << "\">" << v << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace planeproj
