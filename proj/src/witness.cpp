#include "planecol/witness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "planecol/errors.hpp"

namespace planecol::witness {

int FiniteGeometricGraph::add_vertex(const Point& p) {
  if (!p.allFinite()) throw PreconditionError("FiniteGeometricGraph: non-finite vertex");
  pts.emplace_back(p);
  return vertex_count() - 1;
}

int FiniteGeometricGraph::add_abstract_vertex() {
  pts.emplace_back(std::nullopt);
  return vertex_count() - 1;
}

void FiniteGeometricGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw PreconditionError("FiniteGeometricGraph: edge endpoint out of range");
  if (a == b) throw PreconditionError("FiniteGeometricGraph: loop edge");
  if (has_edge(a, b)) throw PreconditionError("FiniteGeometricGraph: duplicate edge");
  if (pts[a] && pts[b] && !in_interval(*pts[a], *pts[b], edge_rule, tol))
    throw PreconditionError("FiniteGeometricGraph: edge length outside the distance band");
  edges.emplace_back(std::min(a, b), std::max(a, b));
}

bool FiniteGeometricGraph::has_edge(int a, int b) const {
  const std::pair<int, int> e{std::min(a, b), std::max(a, b)};
  return std::find(edges.begin(), edges.end(), e) != edges.end();
}

void FiniteGeometricGraph::set_precolour(int v, ColourId c) {
  if (v < 0 || v >= vertex_count())
    throw PreconditionError("FiniteGeometricGraph: precolour vertex out of range");
  if (c.v < 0) throw PreconditionError("FiniteGeometricGraph: negative precolour");
  precolour[v] = c;
}

void FiniteGeometricGraph::check() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
      throw PreconditionError("FiniteGeometricGraph: edge endpoint out of range");
    if (a == b) throw PreconditionError("FiniteGeometricGraph: loop edge");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw PreconditionError("FiniteGeometricGraph: duplicate edge");
    if (pts[a] && pts[b] && !in_interval(*pts[a], *pts[b], edge_rule, tol))
      throw PreconditionError("FiniteGeometricGraph: edge length outside the distance band");
  }
  for (const auto& [v, c] : precolour) {
    if (v < 0 || v >= vertex_count())
      throw PreconditionError("FiniteGeometricGraph: precolour vertex out of range");
    if (c.v < 0) throw PreconditionError("FiniteGeometricGraph: negative precolour");
  }
}

chromatic::AbstractGraph FiniteGeometricGraph::abstract() const {
  auto g = chromatic::AbstractGraph::with_vertices(vertex_count());
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  for (const auto& [v, c] : precolour) g.set_precolour(v, c);
  return g;
}

FiniteGeometricGraph moser_spindle() {
  FiniteGeometricGraph g{DistanceInterval{1.0, 1.0}};
  const double alpha = 2.0 * std::asin(1.0 / (2.0 * std::sqrt(3.0)));
  const int apex = g.add_vertex(Point::Zero());
  int tips[2] = {0, 0};
  int t = 0;
  for (const double beta :
       {std::numbers::pi / 2 - alpha / 2, std::numbers::pi / 2 + alpha / 2}) {
    const Point a(std::cos(beta - std::numbers::pi / 6), std::sin(beta - std::numbers::pi / 6));
    const Point b(std::cos(beta + std::numbers::pi / 6), std::sin(beta + std::numbers::pi / 6));
    const int va = g.add_vertex(a);
    const int vb = g.add_vertex(b);
    const int vc = g.add_vertex(a + b);
    g.add_edge(apex, va);
    g.add_edge(apex, vb);
    g.add_edge(va, vb);
    g.add_edge(va, vc);
    g.add_edge(vb, vc);
    tips[t++] = vc;
  }
  g.add_edge(tips[0], tips[1]);
  return g;
}

std::pair<double, double> sine_window(RotationMode mode, double eps) {
  if (mode == RotationMode::kSpokesInBand) {
    if (!(eps > 0.0) || !std::isfinite(eps))
      throw PreconditionError("sine_window: eps must be positive and finite");
    return {0.5, (1.0 + eps) / (2.0 + eps)};
  }
  if (!(eps > 0.0) || !(eps < 2.0))
    throw PreconditionError("sine_window: eps must lie in (0, 2)");
  return {0.5, 1.0 / (2.0 * std::sqrt(1.0 - eps * eps / 4.0))};
}

bool admissible_sine(RotationMode mode, double eps, double s) {
  const auto [lo, hi] = sine_window(mode, eps);
  return s > lo && s < hi;
}

RotationSolution solve_odd_rotation(RotationMode mode, double eps) {
  const double hi = sine_window(mode, eps).second;
  constexpr int kMaxOrder = 1000001;
  for (int k = 3; k <= kMaxOrder; k += 2) {
    int m_lo = 1, m_hi = (k - 1) / 2;
    if (k >= 1024) {
      // sin(pi*m/k) rises on this m range, so only m/k near (1/6, asin(hi)/pi)
      // can land in the window; the slack absorbs the rounding.
      const double cap = hi >= 1.0 ? std::numbers::pi / 2 : std::asin(hi);
      m_lo = std::max(1, (int)(double(k) / 6.0) - 2);
      m_hi = std::min(m_hi, (int)std::ceil(double(k) * cap / std::numbers::pi) + 2);
    }
    for (int m = m_lo; m <= m_hi; ++m) {
      if (std::gcd(m, k) != 1) continue;
      const double s = std::sin(std::numbers::pi * double(m) / double(k));
      if (!admissible_sine(mode, eps, s)) continue;
      RotationSolution sol;
      sol.k = k;
      sol.m = m;
      sol.sin_value = s;
      sol.delta = mode == RotationMode::kSpokesInBand ? (2.0 + eps) * s - 1.0 : 1.0 / (2.0 * s);
      return sol;
    }
  }
  throw CapExceededError("solve_odd_rotation: no admissible rotation up to order 1000001");
}

WheelWitness build_wheel(RotationMode mode, double eps, const Point& centre, double base_angle) {
  const RotationSolution sol = solve_odd_rotation(mode, eps);
  const bool band = mode == RotationMode::kSpokesInBand;
  const double radius = band ? 1.0 + eps / 2.0 : sol.delta;
  const DistanceInterval rule = band ? DistanceInterval{1.0, 1.0 + eps} : DistanceInterval{1.0, 1.0};

  WheelWitness w{FiniteGeometricGraph{rule}, sol, 0, {}, 0.0, 0.0};
  w.spoke_length = radius;
  w.rim_chord = band ? 1.0 + sol.delta : 1.0;
  w.centre = w.graph.add_vertex(centre);
  const Point seed = centre + radius * Point(std::cos(base_angle), std::sin(base_angle));
  const RationalAngle angle = sol.angle();
  for (int j = 0; j < sol.k; ++j)
    w.rim.push_back(w.graph.add_vertex(rotate_about(centre, angle, j, seed)));
  for (int j = 0; j < sol.k; ++j) {
    if (band) w.graph.add_edge(w.centre, w.rim[j]);
    w.graph.add_edge(w.rim[j], w.rim[(j + 1) % sol.k]);
  }
  return w;
}

BoundaryWitness build_boundary_witness(const BoundarySpec& spec) {
  if (spec.colour_a == spec.colour_b)
    throw PreconditionError("build_boundary_witness: side colours must differ");
  const RotationSolution sol = solve_odd_rotation(RotationMode::kUnitRim, spec.eps);
  const double perp = spec.line_angle + std::numbers::pi / 2.0;
  // The tiny tilt keeps every spoke direction off the perpendicular, so both
  // side points of every rim vertex leave the line strictly.
  const double base_angle =
      perp + std::numbers::pi * double(sol.m) / (double(sol.k) * 1000.0);
  const double delta = sol.delta;
  const double reach = std::sqrt(1.0 - delta * delta);
  if (!(reach < spec.eps / 2.0))
    throw Error("build_boundary_witness: side reach not under eps/2");

  BoundaryWitness bw{FiniteGeometricGraph{DistanceInterval{1.0, 1.0}}, sol, 0, {}, 0, 0, {}};
  bw.centre = bw.graph.add_vertex(spec.origin);
  const Point seed = spec.origin + delta * Point(std::cos(base_angle), std::sin(base_angle));
  const RationalAngle angle = sol.angle();
  for (int j = 0; j < sol.k; ++j)
    bw.rim.push_back(bw.graph.add_vertex(rotate_about(spec.origin, angle, j, seed)));
  for (int j = 0; j < sol.k; ++j) bw.graph.add_edge(bw.rim[j], bw.rim[(j + 1) % sol.k]);

  bw.vertex_a = bw.graph.add_abstract_vertex();
  bw.vertex_b = bw.graph.add_abstract_vertex();
  bw.graph.set_precolour(bw.vertex_a, spec.colour_a);
  bw.graph.set_precolour(bw.vertex_b, spec.colour_b);

  const Point dir(std::cos(spec.line_angle), std::sin(spec.line_angle));
  for (int j = 0; j < sol.k; ++j) {
    const Point apex = *bw.graph.pts[bw.rim[j]];
    const Point u = (apex - spec.origin).normalized();
    const Point across(-u.y(), u.x());
    Point lo = spec.origin + reach * across;
    Point hi = spec.origin - reach * across;
    const auto side = [&](const Point& x) {
      const Point r = x - spec.origin;
      return dir.x() * r.y() - dir.y() * r.x();
    };
    if (side(lo) > side(hi)) std::swap(lo, hi);
    if (!(side(lo) < 0.0 && side(hi) > 0.0))
      throw Error("build_boundary_witness: side points do not straddle the line");
    if (std::abs(distance(apex, lo) - 1.0) > bw.graph.tol.tau ||
        std::abs(distance(apex, hi) - 1.0) > bw.graph.tol.tau)
      throw Error("build_boundary_witness: side point not at unit distance");
    bw.side_points.emplace_back(lo, hi);
    bw.graph.add_edge(bw.rim[j], bw.vertex_a);
    bw.graph.add_edge(bw.rim[j], bw.vertex_b);
  }
  return bw;
}

}  // namespace planecol::witness
