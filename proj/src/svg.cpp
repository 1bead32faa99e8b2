#include "planecol/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "planecol/errors.hpp"

namespace planecol::svg {

namespace {

std::string px(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

const char* kFills[7] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                         "#59a14f", "#edc949", "#b07aa1"};

}  // namespace

std::string palette_colour(int id) {
  if (id < 0) return "#000000";
  if (id < 7) return kFills[id];
  char buf[48];
  const double hue = std::fmod(double(id) * 137.50776405003785, 360.0);
  std::snprintf(buf, sizeof buf, "hsl(%.2f,65%%,52%%)", hue);
  return buf;
}

std::string render_tiling(const tiling::SquareTilingSpec& spec, const Box& region,
                          double px_per_unit) {
  if (region.isEmpty() || !(px_per_unit > 0.0))
    throw PreconditionError("render_tiling: empty region or non-positive scale");
  const double w = (region.max().x() - region.min().x()) * px_per_unit;
  const double h = (region.max().y() - region.min().y()) * px_per_unit;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(w) << "\" height=\""
      << px(h) << "\" viewBox=\"0 0 " << px(w) << ' ' << px(h) << "\">\n";

  const long long r_lo = (long long)std::floor(region.min().y() / spec.side);
  const long long r_hi = (long long)std::floor(region.max().y() / spec.side);
  for (long long r = r_lo; r <= r_hi; ++r) {
    const double off = spec.shift_sign * double(r) * spec.row_shift;
    const long long n_lo = (long long)std::floor((region.min().x() + off) / spec.side);
    const long long n_hi = (long long)std::floor((region.max().x() + off) / spec.side);
    for (long long n = n_lo; n <= n_hi; ++n) {
      const long long c = ((n % spec.colours) + spec.colours) % spec.colours;
      const double x0 = double(n) * spec.side - off;
      const double y1 = double(r + 1) * spec.side;
      out << "<rect x=\"" << px((x0 - region.min().x()) * px_per_unit) << "\" y=\""
          << px((region.max().y() - y1) * px_per_unit) << "\" width=\""
          << px(spec.side * px_per_unit) << "\" height=\"" << px(spec.side * px_per_unit)
          << "\" fill=\"" << palette_colour((int)c) << "\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_graph(const witness::FiniteGeometricGraph& g,
                         const std::vector<ColourId>* colouring, double px_per_unit) {
  if (colouring && (int)colouring->size() != g.vertex_count())
    throw PreconditionError("render_graph: colouring size mismatch");
  Box box;
  for (const auto& p : g.pts)
    if (p) box.extend(*p);
  if (box.isEmpty()) throw PreconditionError("render_graph: no located vertices");
  const double margin = 0.15 * std::max(box.sizes().maxCoeff(), 1.0);
  box.extend(Point(box.min() - Point(margin, margin)));
  box.extend(Point(box.max() + Point(margin, margin)));

  const auto X = [&](const Point& p) { return px((p.x() - box.min().x()) * px_per_unit); };
  const auto Y = [&](const Point& p) { return px((box.max().y() - p.y()) * px_per_unit); };
  const double w = box.sizes().x() * px_per_unit;
  const double h = box.sizes().y() * px_per_unit;
  const double r = 0.03 * px_per_unit;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(w) << "\" height=\""
      << px(h) << "\" viewBox=\"0 0 " << px(w) << ' ' << px(h) << "\">\n";
  for (const auto& [a, b] : g.edges) {
    if (!g.pts[a] || !g.pts[b]) continue;
    out << "<line x1=\"" << X(*g.pts[a]) << "\" y1=\"" << Y(*g.pts[a]) << "\" x2=\""
        << X(*g.pts[b]) << "\" y2=\"" << Y(*g.pts[b])
        << "\" stroke=\"#555555\" stroke-width=\"" << px(r * 0.25) << "\"/>\n";
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!g.pts[v]) continue;
    const char* stroke = g.precolour.count(v) ? "#000000" : "#333333";
    const std::string fill =
        colouring ? palette_colour((*colouring)[v].v)
                  : (g.precolour.count(v) ? palette_colour(g.precolour.at(v).v) : "#cccccc");
    out << "<circle cx=\"" << X(*g.pts[v]) << "\" cy=\"" << Y(*g.pts[v]) << "\" r=\"" << px(r)
        << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\""
        << px(r * 0.2) << "\"/>\n";
    out << "<text x=\"" << X(*g.pts[v]) << "\" y=\""
        << px((box.max().y() - g.pts[v]->y()) * px_per_unit - 1.4 * r)
        << "\" font-size=\"" << px(r * 1.6) << "\" text-anchor=\"middle\" fill=\"#111111\">"
        << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace planecol::svg
