/// Exact chromatic numbers for small abstract graphs. Backtracking with
/// saturation-degree vertex selection, first-fresh-colour symmetry breaking,
/// a clique lower bound and a greedy upper bound. Supports precoloured
/// vertices; adjacency is stored as 64-bit masks, which is where the vertex
/// cap comes from.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "planecol/oracle.hpp"

namespace planecol::chromatic {

inline constexpr int kVertexCap = 64;

struct AbstractGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;       // adj[v] bit w set iff edge vw
  std::map<int, ColourId> precolour;    // fixed colours, zero-based

  static AbstractGraph with_vertices(int n);
  void add_edge(int a, int b);
  bool has_edge(int a, int b) const;
  int edge_count() const;
  void set_precolour(int v, ColourId c);
  void check() const;  // throws PreconditionError on malformed input
};

struct ColouringResult {
  std::optional<std::vector<ColourId>> colouring;
  bool precolour_conflict = false;  // infeasible before any search ran
};

/// Proper colouring with at most k colours extending the precolouring, or
/// nullopt. Deterministic: identical inputs yield identical colourings.
ColouringResult is_k_colourable(const AbstractGraph& g, int k);

struct ChromaticResult {
  int chi = 0;
  std::vector<ColourId> colouring;
  int clique_lower = 0;   // lower bound that seeded the search
  int greedy_upper = 0;   // upper bound that seeded the search
};

/// Least k for which is_k_colourable succeeds. Throws PreconditionError on an
/// empty graph, a graph over the cap, or an infeasible precolouring.
ChromaticResult chromatic_number(const AbstractGraph& g);

}  // namespace planecol::chromatic
