#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "planecol/chromatic.hpp"
#include "planecol/errors.hpp"
#include "planecol/witness.hpp"

using namespace planecol;
using witness::RotationMode;

TEST_CASE("geometric graph guards") {
  witness::FiniteGeometricGraph g{DistanceInterval{1.0, 1.0}};
  int a = g.add_vertex(Point{0, 0});
  int b = g.add_vertex(Point{1, 0});
  int c = g.add_vertex(Point{0.5, 0});
  int x = g.add_abstract_vertex();
  CHECK_THROWS_AS(g.add_edge(a, a), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(a, 99), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(a, c), PreconditionError);  // length 0.5 off band
  g.add_edge(a, b);
  CHECK_THROWS_AS(g.add_edge(b, a), PreconditionError);  // duplicate
  g.add_edge(c, x);  // abstract endpoint, no band check
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(g.set_precolour(99, ColourId{0}), PreconditionError);
  CHECK_THROWS_AS(g.set_precolour(a, ColourId{-1}), PreconditionError);
  CHECK_NOTHROW(g.check());
  g.edges.emplace_back(a, c);  // smuggle a bad edge past add_edge
  CHECK_THROWS_AS(g.check(), PreconditionError);
}

TEST_CASE("spindle: seven vertices, eleven unit edges, four colours") {
  auto g = witness::moser_spindle();
  CHECK(g.vertex_count() == 7);
  CHECK(g.edge_count() == 11);
  for (auto& [a, b] : g.edges) {
    REQUIRE(g.pts[(std::size_t)a].has_value());
    REQUIRE(g.pts[(std::size_t)b].has_value());
    CHECK(distance(*g.pts[(std::size_t)a], *g.pts[(std::size_t)b]) ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
  for (int v = 0; v < 7; ++v)
    for (int w = v + 1; w < 7; ++w)
      CHECK(distance(*g.pts[(std::size_t)v], *g.pts[(std::size_t)w]) > 1e-6);
  CHECK_NOTHROW(g.check());
  auto r = chromatic::chromatic_number(g.abstract());
  CHECK(r.chi == 4);
  CHECK_FALSE(chromatic::is_k_colourable(g.abstract(), 3).colouring.has_value());
}

TEST_CASE("sine windows are open at both ends") {
  SUBCASE("spokes in band") {
    auto [lo, hi] = witness::sine_window(RotationMode::kSpokesInBand, 0.05);
    CHECK(lo == 0.5);
    CHECK(hi == doctest::Approx(1.05 / 2.05).epsilon(1e-15));
    CHECK_FALSE(witness::admissible_sine(RotationMode::kSpokesInBand, 0.05, 0.5));
    CHECK_FALSE(witness::admissible_sine(RotationMode::kSpokesInBand, 0.05, hi));
    CHECK(witness::admissible_sine(RotationMode::kSpokesInBand, 0.05, 0.5 * (lo + hi)));
  }
  SUBCASE("unit rim") {
    double eps = 0.5;
    auto [lo, hi] = witness::sine_window(RotationMode::kUnitRim, eps);
    CHECK(lo == 0.5);
    CHECK(hi == doctest::Approx(1.0 / (2.0 * std::sqrt(1.0 - eps * eps / 4.0))).epsilon(1e-15));
    CHECK_FALSE(witness::admissible_sine(RotationMode::kUnitRim, eps, 0.5));
    CHECK_FALSE(witness::admissible_sine(RotationMode::kUnitRim, eps, hi));
    CHECK(witness::admissible_sine(RotationMode::kUnitRim, eps, 0.5 * (lo + hi)));
  }
}

TEST_CASE("rotation solver eps guards") {
  CHECK_THROWS_AS(witness::solve_odd_rotation(RotationMode::kSpokesInBand, 0.0),
                  PreconditionError);
  CHECK_THROWS_AS(witness::solve_odd_rotation(RotationMode::kSpokesInBand, -0.1),
                  PreconditionError);
  CHECK_THROWS_AS(witness::solve_odd_rotation(RotationMode::kUnitRim, 2.0),
                  PreconditionError);
  CHECK_THROWS_AS(witness::solve_odd_rotation(RotationMode::kUnitRim,
                                              std::numeric_limits<double>::quiet_NaN()),
                  PreconditionError);
}

namespace {

struct FrozenCase {
  RotationMode mode;
  double eps;
  int k;
  int m;
  double delta;
};

// Computed independently before the solver was written and pinned here.
const FrozenCase kFrozen[] = {
    {RotationMode::kSpokesInBand, 0.01, 185, 31, 0.00992263944920646},
    {RotationMode::kSpokesInBand, 0.05, 41, 7, 0.047588292866576065},
    {RotationMode::kSpokesInBand, 0.2, 11, 2, 0.18940979840231464},
    {RotationMode::kUnitRim, 0.3, 83, 14, 0.9892111373593773},
    {RotationMode::kUnitRim, 0.5, 29, 5, 0.96983078109009058},
    {RotationMode::kUnitRim, 0.9, 11, 2, 0.9248284329569042},
};

}  // namespace

TEST_CASE("rotation solver reproduces the pinned solutions") {
  for (auto& fc : kFrozen) {
    CAPTURE(fc.eps);
    auto sol = witness::solve_odd_rotation(fc.mode, fc.eps);
    CHECK(sol.k == fc.k);
    CHECK(sol.m == fc.m);
    CHECK(std::gcd(sol.m, sol.k) == 1);
    CHECK(sol.k % 2 == 1);
    CHECK(2 * sol.m < sol.k);
    CHECK(sol.sin_value ==
          doctest::Approx(std::sin(std::numbers::pi * fc.m / fc.k)).epsilon(1e-15));
    CHECK(sol.delta == doctest::Approx(fc.delta).epsilon(1e-12));
    if (fc.mode == RotationMode::kSpokesInBand) {
      CHECK(sol.delta == doctest::Approx((2.0 + fc.eps) * sol.sin_value - 1.0).epsilon(1e-12));
      CHECK(sol.delta > 0.0);
      CHECK(sol.delta < fc.eps);
    } else {
      CHECK(sol.delta == doctest::Approx(1.0 / (2.0 * sol.sin_value)).epsilon(1e-12));
      CHECK(sol.delta < 1.0);
      CHECK(sol.delta > std::sqrt(1.0 - fc.eps * fc.eps / 4.0));
    }
    CHECK(witness::admissible_sine(fc.mode, fc.eps, sol.sin_value));
  }
}

TEST_CASE("pinned solutions are lexicographically least") {
  // Re-derive minimality from the admissibility predicate alone.
  for (auto& fc : kFrozen) {
    CAPTURE(fc.eps);
    for (int k = 3; k <= fc.k; k += 2) {
      const int m_hi = (k == fc.k) ? fc.m - 1 : (k - 1) / 2;
      for (int m = 1; m <= m_hi; ++m) {
        if (std::gcd(m, k) != 1) continue;
        CHECK_FALSE(witness::admissible_sine(fc.mode, fc.eps,
                                             std::sin(std::numbers::pi * m / k)));
      }
    }
  }
}

TEST_CASE("band wheel structure") {
  const double eps = 0.2;
  auto w = witness::build_wheel(RotationMode::kSpokesInBand, eps);
  REQUIRE(w.sol.k == 11);
  CHECK(w.graph.vertex_count() == 12);
  CHECK(w.graph.edge_count() == 22);
  CHECK(w.spoke_length == doctest::Approx(1.0 + eps / 2.0).epsilon(1e-15));
  CHECK(w.rim_chord == doctest::Approx(1.0 + w.sol.delta).epsilon(1e-12));
  const Point centre = *w.graph.pts[(std::size_t)w.centre];
  CHECK(centre.x() == 0.0);
  CHECK(centre.y() == 0.0);
  for (int j = 0; j < w.sol.k; ++j) {
    const Point rj = *w.graph.pts[(std::size_t)w.rim[(std::size_t)j]];
    const Point rn = *w.graph.pts[(std::size_t)w.rim[(std::size_t)((j + 1) % w.sol.k)]];
    CHECK(distance(centre, rj) == doctest::Approx(w.spoke_length).epsilon(1e-12));
    CHECK(distance(rj, rn) == doctest::Approx(w.rim_chord).epsilon(1e-12));
    CHECK(w.graph.has_edge(w.centre, w.rim[(std::size_t)j]));
    CHECK(w.graph.has_edge(w.rim[(std::size_t)j], w.rim[(std::size_t)((j + 1) % w.sol.k)]));
  }
  CHECK(w.graph.edge_rule.lo == 1.0);
  CHECK(w.graph.edge_rule.hi == 1.0 + eps);
  CHECK_NOTHROW(w.graph.check());

  // The rim alone is an odd cycle; the spokes push it to four colours.
  auto full = chromatic::chromatic_number(w.graph.abstract());
  CHECK(full.chi == 4);
  auto rim_only = chromatic::AbstractGraph::with_vertices(w.sol.k);
  for (int j = 0; j < w.sol.k; ++j) rim_only.add_edge(j, (j + 1) % w.sol.k);
  CHECK(chromatic::chromatic_number(rim_only).chi == 3);
}

TEST_CASE("band wheel respects centre and base angle") {
  const Point centre{3.0, -2.0};
  auto w = witness::build_wheel(RotationMode::kSpokesInBand, 0.2, centre, 0.7);
  const Point c = *w.graph.pts[(std::size_t)w.centre];
  CHECK(c.x() == centre.x());
  CHECK(c.y() == centre.y());
  const Point seed = *w.graph.pts[(std::size_t)w.rim[0]];
  CHECK(std::atan2(seed.y() - c.y(), seed.x() - c.x()) == doctest::Approx(0.7).epsilon(1e-12));
  for (int v : w.rim)
    CHECK(distance(c, *w.graph.pts[(std::size_t)v]) ==
          doctest::Approx(w.spoke_length).epsilon(1e-12));
}

TEST_CASE("unit-rim wheel structure") {
  const double eps = 0.5;
  auto w = witness::build_wheel(RotationMode::kUnitRim, eps);
  REQUIRE(w.sol.k == 29);
  CHECK(w.graph.vertex_count() == 30);
  CHECK(w.graph.edge_count() == 29);  // rim cycle only, centre isolated
  CHECK(w.rim_chord == 1.0);
  CHECK(w.spoke_length == doctest::Approx(w.sol.delta).epsilon(1e-15));
  CHECK(w.spoke_length < 1.0);
  const Point centre = *w.graph.pts[(std::size_t)w.centre];
  for (int j = 0; j < w.sol.k; ++j) {
    const Point rj = *w.graph.pts[(std::size_t)w.rim[(std::size_t)j]];
    const Point rn = *w.graph.pts[(std::size_t)w.rim[(std::size_t)((j + 1) % w.sol.k)]];
    CHECK(distance(centre, rj) == doctest::Approx(w.sol.delta).epsilon(1e-12));
    CHECK(distance(rj, rn) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(w.graph.has_edge(w.centre, w.rim[(std::size_t)j]));
  }
  CHECK(w.graph.edge_rule.lo == 1.0);
  CHECK(w.graph.edge_rule.hi == 1.0);
  CHECK_NOTHROW(w.graph.check());
  CHECK(chromatic::chromatic_number(w.graph.abstract()).chi == 3);  // odd cycle
}

TEST_CASE("boundary witness pins five colours against a line") {
  witness::BoundarySpec spec(0.5);
  auto bw = witness::build_boundary_witness(spec);
  REQUIRE(bw.sol.k == 29);
  CHECK(bw.graph.vertex_count() == 32);  // centre + rim + two abstract
  CHECK(bw.graph.edge_count() == 29 + 2 * 29);
  CHECK(bw.graph.precolour.at(bw.vertex_a) == spec.colour_a);
  CHECK(bw.graph.precolour.at(bw.vertex_b) == spec.colour_b);
  REQUIRE((int)bw.side_points.size() == bw.sol.k);
  const Point dir{std::cos(spec.line_angle), std::sin(spec.line_angle)};
  auto side = [&](const Point& p) {
    const Point d = p - spec.origin;
    return dir.x() * d.y() - dir.y() * d.x();
  };
  for (int j = 0; j < bw.sol.k; ++j) {
    const Point apex = *bw.graph.pts[(std::size_t)bw.rim[(std::size_t)j]];
    auto& [neg, pos] = bw.side_points[(std::size_t)j];
    CHECK(distance(apex, neg) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(distance(apex, pos) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(distance(spec.origin, neg) < spec.eps / 2.0);
    CHECK(distance(spec.origin, pos) < spec.eps / 2.0);
    CHECK(side(neg) < 0.0);
    CHECK(side(pos) > 0.0);
    CHECK(bw.graph.has_edge(bw.rim[(std::size_t)j], bw.vertex_a));
    CHECK(bw.graph.has_edge(bw.rim[(std::size_t)j], bw.vertex_b));
  }
  CHECK(chromatic::chromatic_number(bw.graph.abstract()).chi == 5);
}

TEST_CASE("boundary witness on a translated rotated line") {
  witness::BoundarySpec spec(0.9);
  spec.origin = Point{2.0, 3.0};
  spec.line_angle = 0.7;
  auto bw = witness::build_boundary_witness(spec);
  REQUIRE(bw.sol.k == 11);
  const Point dir{std::cos(spec.line_angle), std::sin(spec.line_angle)};
  auto side = [&](const Point& p) {
    const Point d = p - spec.origin;
    return dir.x() * d.y() - dir.y() * d.x();
  };
  for (auto& [neg, pos] : bw.side_points) {
    CHECK(side(neg) < 0.0);
    CHECK(side(pos) > 0.0);
    CHECK(distance(spec.origin, neg) < spec.eps / 2.0);
    CHECK(distance(spec.origin, pos) < spec.eps / 2.0);
  }
  CHECK(chromatic::chromatic_number(bw.graph.abstract()).chi == 5);
}

TEST_CASE("boundary witness rejects equal side colours") {
  witness::BoundarySpec spec(0.5);
  spec.colour_b = spec.colour_a;
  CHECK_THROWS_AS(witness::build_boundary_witness(spec), PreconditionError);
}
