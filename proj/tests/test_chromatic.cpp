#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <bit>
#include <vector>

#include "planecol/chromatic.hpp"
#include "planecol/errors.hpp"
#include "planecol/random.hpp"

using namespace planecol;
using chromatic::AbstractGraph;

namespace {

/// Independent reference: minimum number of independent sets covering all
/// vertices, by dynamic programming over vertex subsets. Shares no code with
/// the backtracking solver.
int chi_by_subset_dp(const AbstractGraph& g) {
  const int n = g.n;
  const int full = (1 << n) - 1;
  std::vector<char> independent((std::size_t)full + 1, 0);
  independent[0] = 1;
  for (int mask = 1; mask <= full; ++mask) {
    const int v = std::countr_zero((unsigned)mask);
    const int rest = mask & (mask - 1);
    independent[(std::size_t)mask] =
        independent[(std::size_t)rest] && (g.adj[(std::size_t)v] & (std::uint64_t)rest) == 0;
  }
  std::vector<int> dp((std::size_t)full + 1, n + 1);
  dp[0] = 0;
  for (int mask = 1; mask <= full; ++mask) {
    const int v = std::countr_zero((unsigned)mask);
    // v's colour class is some independent submask containing v.
    for (int sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub >> v & 1) || !independent[(std::size_t)sub]) continue;
      dp[(std::size_t)mask] = std::min(dp[(std::size_t)mask], 1 + dp[(std::size_t)(mask ^ sub)]);
    }
  }
  return dp[(std::size_t)full];
}

void check_proper(const AbstractGraph& g, const std::vector<ColourId>& col, int k) {
  REQUIRE((int)col.size() == g.n);
  for (int v = 0; v < g.n; ++v) {
    CHECK(col[(std::size_t)v].v >= 0);
    CHECK(col[(std::size_t)v].v < k);
    for (int w = v + 1; w < g.n; ++w)
      if (g.has_edge(v, w)) CHECK(col[(std::size_t)v] != col[(std::size_t)w]);
  }
  for (auto& [v, c] : g.precolour) CHECK(col[(std::size_t)v] == c);
}

AbstractGraph random_graph(SplitMix64& rng, int n, double p) {
  auto g = AbstractGraph::with_vertices(n);
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (rng.uniform() < p) g.add_edge(v, w);
  return g;
}

}  // namespace

TEST_CASE("graph construction guards") {
  CHECK_THROWS_AS(AbstractGraph::with_vertices(-1), PreconditionError);
  CHECK_THROWS_AS(AbstractGraph::with_vertices(65), PreconditionError);
  auto g = AbstractGraph::with_vertices(3);
  CHECK_THROWS_AS(g.add_edge(0, 0), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(0, 3), PreconditionError);
  g.add_edge(0, 1);
  g.add_edge(1, 0);  // bitmask adjacency, duplicates collapse
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK_THROWS_AS(g.set_precolour(3, ColourId{0}), PreconditionError);
  CHECK_THROWS_AS(g.set_precolour(0, ColourId{-1}), PreconditionError);
  CHECK_THROWS_AS(chromatic::chromatic_number(AbstractGraph::with_vertices(0)),
                  PreconditionError);
}

TEST_CASE("known small graphs") {
  auto k4 = AbstractGraph::with_vertices(4);
  for (int v = 0; v < 4; ++v)
    for (int w = v + 1; w < 4; ++w) k4.add_edge(v, w);
  auto rk4 = chromatic::chromatic_number(k4);
  CHECK(rk4.chi == 4);
  CHECK(rk4.clique_lower == 4);
  check_proper(k4, rk4.colouring, 4);
  CHECK_FALSE(chromatic::is_k_colourable(k4, 3).colouring.has_value());

  auto c5 = AbstractGraph::with_vertices(5);
  for (int v = 0; v < 5; ++v) c5.add_edge(v, (v + 1) % 5);
  auto rc5 = chromatic::chromatic_number(c5);
  CHECK(rc5.chi == 3);
  check_proper(c5, rc5.colouring, 3);

  auto empty_edges = AbstractGraph::with_vertices(6);
  CHECK(chromatic::chromatic_number(empty_edges).chi == 1);
}

TEST_CASE("solver agrees with subset DP on random graphs") {
  SplitMix64 rng(4242);
  const double probs[] = {0.2, 0.5, 0.8};
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + (int)rng.below(8);
    auto g = random_graph(rng, n, probs[t % 3]);
    auto r = chromatic::chromatic_number(g);
    CAPTURE(t);
    CAPTURE(n);
    CHECK(r.chi == chi_by_subset_dp(g));
    check_proper(g, r.colouring, r.chi);
    CHECK(r.clique_lower <= r.chi);
    CHECK(r.chi <= r.greedy_upper);
    if (r.chi > 1)
      CHECK_FALSE(chromatic::is_k_colourable(g, r.chi - 1).colouring.has_value());
  }
}

TEST_CASE("solver is deterministic") {
  SplitMix64 rng(7);
  auto g = random_graph(rng, 8, 0.5);
  auto a = chromatic::chromatic_number(g);
  auto b = chromatic::chromatic_number(g);
  CHECK(a.chi == b.chi);
  CHECK(a.colouring == b.colouring);
}

TEST_CASE("precoloured vertices constrain the solution") {
  // Path a-b-c with both ends pinned to the same colour still needs two.
  auto path = AbstractGraph::with_vertices(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.set_precolour(0, ColourId{0});
  path.set_precolour(2, ColourId{0});
  auto r = chromatic::chromatic_number(path);
  CHECK(r.chi == 2);
  check_proper(path, r.colouring, 2);

  // A pinned high colour index forces the palette up to include it.
  auto lone = AbstractGraph::with_vertices(1);
  lone.set_precolour(0, ColourId{5});
  CHECK(chromatic::chromatic_number(lone).chi == 6);

  // Asking for fewer colours than a pin uses is a precolouring conflict.
  auto conflict = chromatic::is_k_colourable(lone, 3);
  CHECK(conflict.precolour_conflict);
  CHECK_FALSE(conflict.colouring.has_value());

  // Adjacent vertices pinned to one colour are infeasible outright.
  auto bad = AbstractGraph::with_vertices(2);
  bad.add_edge(0, 1);
  bad.set_precolour(0, ColourId{2});
  bad.set_precolour(1, ColourId{2});
  auto rb = chromatic::is_k_colourable(bad, 4);
  CHECK(rb.precolour_conflict);
  CHECK_THROWS_AS(chromatic::chromatic_number(bad), PreconditionError);
}

TEST_CASE("precoloured random graphs still match the DP on total colours") {
  // Pinning vertex 0 to colour 0 never changes chi: colour classes can be
  // renumbered so that vertex 0's class is first.
  SplitMix64 rng(555);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + (int)rng.below(7);
    auto g = random_graph(rng, n, 0.5);
    const int plain = chi_by_subset_dp(g);
    g.set_precolour(0, ColourId{0});
    auto r = chromatic::chromatic_number(g);
    CHECK(r.chi == plain);
    check_proper(g, r.colouring, r.chi);
  }
}
