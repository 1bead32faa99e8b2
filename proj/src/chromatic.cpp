#include "planecol/chromatic.hpp"

#include <algorithm>
#include <bit>

#include "planecol/errors.hpp"

namespace planecol::chromatic {

AbstractGraph AbstractGraph::with_vertices(int n) {
  if (n < 0 || n > kVertexCap)
    throw PreconditionError("AbstractGraph: vertex count outside [0, 64]");
  AbstractGraph g;
  g.n = n;
  g.adj.assign((std::size_t)n, 0);
  return g;
}

void AbstractGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= n || b >= n)
    throw PreconditionError("AbstractGraph: edge endpoint out of range");
  if (a == b) throw PreconditionError("AbstractGraph: self-loop");
  adj[(std::size_t)a] |= 1ULL << b;
  adj[(std::size_t)b] |= 1ULL << a;
}

bool AbstractGraph::has_edge(int a, int b) const {
  return a >= 0 && a < n && b >= 0 && b < n && (adj[(std::size_t)a] >> b & 1);
}

int AbstractGraph::edge_count() const {
  int twice = 0;
  for (auto m : adj) twice += std::popcount(m);
  return twice / 2;
}

void AbstractGraph::set_precolour(int v, ColourId c) {
  if (v < 0 || v >= n) throw PreconditionError("AbstractGraph: precolour vertex out of range");
  if (c.v < 0) throw PreconditionError("AbstractGraph: negative precolour");
  precolour[v] = c;
}

void AbstractGraph::check() const {
  if ((int)adj.size() != n) throw PreconditionError("AbstractGraph: adjacency size mismatch");
  for (int v = 0; v < n; ++v) {
    if (n < 64 && (adj[(std::size_t)v] >> n) != 0)
      throw PreconditionError("AbstractGraph: adjacency bit beyond n");
    if (adj[(std::size_t)v] >> v & 1) throw PreconditionError("AbstractGraph: self-loop");
  }
  for (auto& [v, c] : precolour)
    if (v < 0 || v >= n || c.v < 0) throw PreconditionError("AbstractGraph: bad precolour entry");
}

namespace {

struct Searcher {
  const AbstractGraph& g;
  int k;
  std::vector<int> colour;          // -1 = unassigned
  std::vector<std::uint64_t> used;  // used[v] bit c set iff a neighbour of v has colour c
  int max_used = -1;                // highest colour index assigned anywhere

  explicit Searcher(const AbstractGraph& gr, int kk)
      : g(gr), k(kk), colour((std::size_t)gr.n, -1), used((std::size_t)gr.n, 0) {}

  void assign(int v, int c) {
    colour[(std::size_t)v] = c;
    for (std::uint64_t m = g.adj[(std::size_t)v]; m; m &= m - 1)
      used[(std::size_t)std::countr_zero(m)] |= 1ULL << c;
  }

  void unassign(int v, int c) {
    colour[(std::size_t)v] = -1;
    for (std::uint64_t m = g.adj[(std::size_t)v]; m; m &= m - 1) {
      const int w = std::countr_zero(m);
      std::uint64_t bit = 0;
      for (std::uint64_t nm = g.adj[(std::size_t)w]; nm; nm &= nm - 1) {
        const int u = std::countr_zero(nm);
        if (colour[(std::size_t)u] == c) { bit = 1ULL << c; break; }
      }
      if (!bit) used[(std::size_t)w] &= ~(1ULL << c);
    }
  }

  /// Uncoloured vertex with maximum saturation, ties by degree then index.
  int pick() const {
    int best = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g.n; ++v) {
      if (colour[(std::size_t)v] >= 0) continue;
      const int sat = std::popcount(used[(std::size_t)v]);
      const int deg = std::popcount(g.adj[(std::size_t)v]);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v; best_sat = sat; best_deg = deg;
      }
    }
    return best;
  }

  bool solve(int remaining) {
    if (remaining == 0) return true;
    const int v = pick();
    // Fresh colours are interchangeable: allow at most one colour index above
    // everything assigned so far.
    const int limit = std::min(k - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
      if (used[(std::size_t)v] >> c & 1) continue;
      const int prev_max = max_used;
      max_used = std::max(max_used, c);
      assign(v, c);
      if (solve(remaining - 1)) return true;
      unassign(v, c);
      max_used = prev_max;
    }
    return false;
  }
};

}  // namespace

ColouringResult is_k_colourable(const AbstractGraph& g, int k) {
  g.check();
  if (k < 1) throw PreconditionError("is_k_colourable: need k >= 1");
  for (auto& [v, c] : g.precolour) {
    if (c.v >= k) return {std::nullopt, true};
    for (auto& [w, cw] : g.precolour)
      if (w > v && cw == c && g.has_edge(v, w)) return {std::nullopt, true};
  }

  Searcher s(g, k);
  for (auto& [v, c] : g.precolour) {
    s.assign(v, c.v);
    s.max_used = std::max(s.max_used, c.v);
  }
  if (!s.solve(g.n - (int)g.precolour.size())) return {std::nullopt, false};

  std::vector<ColourId> out((std::size_t)g.n);
  for (int v = 0; v < g.n; ++v) out[(std::size_t)v] = ColourId{s.colour[(std::size_t)v]};
  for (int v = 0; v < g.n; ++v)
    for (std::uint64_t m = g.adj[(std::size_t)v]; m; m &= m - 1)
      if (out[(std::size_t)v] == out[(std::size_t)std::countr_zero(m)])
        throw Error("is_k_colourable: produced an improper colouring");
  return {std::move(out), false};
}

namespace {

/// Greedy DSATUR colouring; its colour count is an upper bound for chi.
int greedy_upper(const AbstractGraph& g) {
  Searcher s(g, kVertexCap);
  for (auto& [v, c] : g.precolour) {
    s.assign(v, c.v);
    s.max_used = std::max(s.max_used, c.v);
  }
  for (int done = (int)g.precolour.size(); done < g.n; ++done) {
    const int v = s.pick();
    int c = 0;
    while (s.used[(std::size_t)v] >> c & 1) ++c;
    s.assign(v, c);
    s.max_used = std::max(s.max_used, c);
  }
  return s.max_used + 1;
}

struct CliqueFinder {
  const std::vector<std::uint64_t>& adj;
  int best = 0;
  long long nodes = 0;
  static constexpr long long kNodeCap = 200000;

  // Bron-Kerbosch with greedy pivoting, capped; `best` is still a valid clique
  // size (and so a valid lower bound) when the cap trips.
  void run(std::uint64_t r_size, std::uint64_t p, std::uint64_t x) {
    if (++nodes > kNodeCap) return;
    if (p == 0 && x == 0) {
      best = std::max(best, (int)r_size);
      return;
    }
    int pivot = -1, pivot_deg = -1;
    for (std::uint64_t m = p | x; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      const int d = std::popcount(adj[(std::size_t)u] & p);
      if (d > pivot_deg) { pivot = u; pivot_deg = d; }
    }
    std::uint64_t cand = p & ~adj[(std::size_t)pivot];
    for (std::uint64_t m = cand; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const std::uint64_t bit = 1ULL << v;
      run(r_size + 1, p & adj[(std::size_t)v], x & adj[(std::size_t)v]);
      p &= ~bit;
      x |= bit;
    }
  }
};

int clique_lower(const AbstractGraph& g) {
  if (g.n == 0) return 0;
  CliqueFinder f{g.adj};
  const std::uint64_t all = (g.n == 64) ? ~0ULL : ((1ULL << g.n) - 1);
  f.run(0, all, 0);
  return std::max(f.best, 1);
}

}  // namespace

ChromaticResult chromatic_number(const AbstractGraph& g) {
  g.check();
  if (g.n < 1) throw PreconditionError("chromatic_number: empty graph");

  int lower = clique_lower(g);
  for (auto& [v, c] : g.precolour) lower = std::max(lower, c.v + 1);
  const int upper = std::max(greedy_upper(g), lower);

  for (int k = lower; k <= upper; ++k) {
    auto r = is_k_colourable(g, k);
    if (r.precolour_conflict)
      throw PreconditionError("chromatic_number: precolouring is infeasible");
    if (r.colouring)
      return ChromaticResult{k, std::move(*r.colouring), lower, upper};
  }
  throw Error("chromatic_number: greedy upper bound was not feasible");
}

}  // namespace planecol::chromatic
