/// Finite point configurations whose chromatic behaviour forces bounds on
/// plane colourings: the 7-vertex unit-distance spindle, odd wheels generated
/// by rational rotations, and the boundary wheel that pins two colours along a
/// line. Every located edge is validated against the graph's distance band at
/// construction time.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "planecol/chromatic.hpp"
#include "planecol/geometry.hpp"
#include "planecol/oracle.hpp"

namespace planecol::witness {

/// Vertices either carry a plane position or are abstract stand-ins (used for
/// pinned boundary colours whose witnessing points vary per edge). Edges
/// between located vertices must satisfy `edge_rule` within `tol`; edges with
/// an abstract endpoint are exempt.
struct FiniteGeometricGraph {
  DistanceInterval edge_rule;
  Tolerance tol;
  std::vector<std::optional<Point>> pts;
  std::vector<std::pair<int, int>> edges;
  std::map<int, ColourId> precolour;

  explicit FiniteGeometricGraph(DistanceInterval rule, Tolerance t = Tolerance{})
      : edge_rule(rule), tol(t) {}

  int add_vertex(const Point& p);
  int add_abstract_vertex();
  void add_edge(int a, int b);
  void set_precolour(int v, ColourId c);
  int vertex_count() const { return (int)pts.size(); }
  int edge_count() const { return (int)edges.size(); }
  bool has_edge(int a, int b) const;
  void check() const;  // revalidates the whole graph (for parsed input)
  chromatic::AbstractGraph abstract() const;
};

/// The 7-vertex, 11-edge unit-distance graph with chromatic number 4: two
/// unit rhombi sharing an apex, tips one unit apart.
FiniteGeometricGraph moser_spindle();

enum class RotationMode {
  /// Wheel whose spokes (1 + eps/2) and rim chords (1 + delta) all lie in
  /// [1, 1 + eps]; admissible when sin(pi*m/k) is in (1/2, (1+eps)/(2+eps)).
  kSpokesInBand,
  /// Wheel whose rim chords are exactly 1 and whose spoke radius
  /// delta = 1/(2 sin) is under 1; admissible when sin(pi*m/k) is in
  /// (1/2, 1/(2*sqrt(1 - eps^2/4))).
  kUnitRim,
};

/// Open admissibility window for sin(pi*m/k) in the given mode.
std::pair<double, double> sine_window(RotationMode mode, double eps);

bool admissible_sine(RotationMode mode, double eps, double s);

struct RotationSolution {
  int k = 0;  // odd rotation order
  int m = 0;  // turn numerator, coprime to k, 0 < m < k/2
  double sin_value = 0.0;
  double delta = 0.0;  // kSpokesInBand: rim chord excess; kUnitRim: spoke radius

  RationalAngle angle() const { return {m, k}; }
};

/// Smallest admissible (k, m) in lexicographic order, scanning odd k upward.
/// Throws CapExceededError past k = 10^6 + 1 and PreconditionError for eps
/// outside (0, inf) resp. (0, 2) for kUnitRim.
RotationSolution solve_odd_rotation(RotationMode mode, double eps);

struct WheelWitness {
  FiniteGeometricGraph graph;
  RotationSolution sol;
  int centre = 0;
  std::vector<int> rim;  // in rotation order; rim[j] = phi^j of the seed
  double spoke_length = 0.0;
  double rim_chord = 0.0;
};

/// Odd wheel for the given mode. kSpokesInBand graphs carry the band
/// [1, 1+eps] and include spokes and rim chords as edges; kUnitRim graphs are
/// unit-distance, the rim cycle is the whole edge set and the centre stays an
/// isolated located vertex (its spokes are shorter than 1).
WheelWitness build_wheel(RotationMode mode, double eps, const Point& centre = Point::Zero(),
                         double base_angle = 0.0);

struct BoundarySpec {
  double eps;
  Point origin = Point::Zero();     // a point on the boundary line
  double line_angle = 0.0;          // direction of the line
  ColourId colour_a{0};             // colour pinned on the negative side
  ColourId colour_b{1};             // colour pinned on the positive side

  explicit BoundarySpec(double e) : eps(e) {}
};

/// Unit-rim wheel centred on the line plus two abstract vertices A and B
/// precoloured with the side colours; every rim vertex is joined to both.
/// Geometric justification stored per rim vertex: a pair of points at unit
/// distance from that vertex, within eps/2 of the centre, strictly on the
/// negative resp. positive side of the line.
struct BoundaryWitness {
  FiniteGeometricGraph graph;  // unit-distance rule
  RotationSolution sol;
  int centre = 0;
  std::vector<int> rim;
  int vertex_a = 0;
  int vertex_b = 0;
  std::vector<std::pair<Point, Point>> side_points;  // (negative, positive) per rim vertex
};

BoundaryWitness build_boundary_witness(const BoundarySpec& spec);

}  // namespace planecol::witness
