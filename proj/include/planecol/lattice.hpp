/// Triangular lattice scaled by gamma: combinatorics (components, simple
/// cycles, interiors) plus the separating-cycle minimization that drives the
/// trichromatic-ball search. Interior tests run on integer coordinates in the
/// lattice basis scaled by 2, so edge midpoints are exactly representable and
/// every incidence decision is exact.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "planecol/geometry.hpp"
#include "planecol/oracle.hpp"

namespace planecol::lattice {

struct Coord {
  int i = 0;
  int j = 0;

  friend bool operator==(const Coord&, const Coord&) = default;
  friend auto operator<=>(const Coord&, const Coord&) = default;
  Coord operator+(const Coord& o) const { return {i + o.i, j + o.j}; }
  Coord operator-(const Coord& o) const { return {i - o.i, j - o.j}; }
};

struct CoordHash {
  std::size_t operator()(const Coord& c) const noexcept {
    return std::hash<std::uint64_t>{}(((std::uint64_t)(std::uint32_t)c.i << 32) |
                                      (std::uint64_t)(std::uint32_t)c.j);
  }
};

using VertexSet = std::unordered_set<Coord, CoordHash>;

struct Spec {
  double gamma;

  explicit Spec(double g) : gamma(g) {
    if (!(g > 0.0)) throw std::invalid_argument("lattice::Spec: gamma must be positive");
  }
};

/// Basis gamma*(1, 0) and gamma*(1/2, sqrt(3)/2).
Point embed(const Spec& spec, const Coord& c);

/// The six unit-step offsets; (1,1) is deliberately absent (it embeds at
/// distance gamma*sqrt(3)). Counter-clockwise from (1,0).
const std::array<Coord, 6>& neighbour_offsets();

std::array<Coord, 6> neighbours(const Coord& c);

bool adjacent(const Coord& a, const Coord& b);

/// The two lattice points adjacent to both endpoints of a lattice edge.
std::array<Coord, 2> common_neighbours(const Coord& a, const Coord& b);

/// Hex distance in this basis: (|di| + |dj| + |di+dj|) / 2.
int hex_distance(const Coord& a, const Coord& b);

/// Simple lattice cycle: consecutive entries adjacent (cyclically), all
/// entries distinct, length >= 3. Unit lattice edges cannot cross except at
/// shared endpoints, so distinctness already implies an embedded simple
/// polygon.
struct Cycle {
  std::vector<Coord> v;

  void check() const;  // throws PreconditionError if not a simple cycle
  int size() const { return (int)v.size(); }
};

/// Exact point-in-polygon on doubled integer coordinates. `u2`/`v2` are the
/// query point's lattice coordinates times 2 (edge midpoints are odd pairs).
/// Points on the boundary are not interior.
bool point_in_cycle_doubled(std::int64_t u2, std::int64_t v2, const Cycle& cycle);

bool in_interior(const Coord& c, const Cycle& cycle);

/// All lattice points strictly inside, sorted lexicographically.
std::vector<Coord> cycle_interior(const Cycle& cycle);

bool is_separating_cycle(const Cycle& cycle, const VertexSet& m);

/// Maximal connected set of lattice vertices sharing the start's oracle
/// colour. Throws CapExceededError when the component exceeds `cap`.
VertexSet monochromatic_component(const ColouringOracle& oracle, const Spec& spec,
                                  const Coord& start, std::int64_t cap = 1000000);

/// Per-step instrumentation for minimize_separating_cycle.
struct MinimizeStep {
  int rule = 0;                // 1 or 2
  Cycle before;
  Cycle after;
  Coord edge_v, edge_w;        // the cycle edge that triggered the rule
};
using MinimizeObserver = std::function<void(const MinimizeStep&)>;

/// Shrinks an enclosing hexagon to the minimal separating cycle of m
/// (lexicographic in (interior size, vertex count)). Scans cycle edges in
/// order; an edge whose endpoints have no common neighbour in m triggers
/// rule 1 (route through an interior common neighbour, interior shrinks by
/// one) or rule 2 (split along an interior chord, keep the separating piece);
/// after each application the scan restarts. Terminates when every adjacent
/// cycle pair has a common neighbour in m.
Cycle minimize_separating_cycle(const VertexSet& m,
                                const MinimizeObserver& observer = nullptr);

struct LatticeBox {
  int i_lo = 0, j_lo = 0, i_hi = 0, j_hi = 0;  // inclusive
};

struct BruteForceResult {
  Cycle cycle;
  int interior_size = 0;
  bool unique = false;       // exactly one minimizer in the enumeration
  std::int64_t enumerated = 0;
};

/// Independent oracle: enumerates canonically rooted simple cycles inside the
/// window by ascending length and returns the lexicographic (interior size,
/// length) minimizer among the separating ones, asserting its uniqueness.
/// Exact when the minimizer's interior is exactly m (interior size |m| is
/// unbeatable); otherwise optimal among cycles up to six steps longer than
/// the best one found. Guards: the window must contain m with margin >= 2,
/// hold at most 130 cells, and the enumeration aborts past a hard path
/// budget.
BruteForceResult brute_force_minimal_cycle(const VertexSet& m, const LatticeBox& window);

/// Rotation/reflection/start-point independent normal form for equality tests.
std::vector<Coord> canonical_cycle(const Cycle& cycle);

// Text round-trip: one "i j" pair per line, '#' comments ignored on read.
void write_coords(std::ostream& out, const std::vector<Coord>& coords);
std::vector<Coord> read_coords(std::istream& in);

}  // namespace planecol::lattice
