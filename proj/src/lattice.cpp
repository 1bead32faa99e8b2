#include "planecol/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "planecol/errors.hpp"

namespace planecol::lattice {

Point embed(const Spec& spec, const Coord& c) {
  return Point(spec.gamma * (c.i + 0.5 * c.j), spec.gamma * (std::sqrt(3.0) / 2.0) * c.j);
}

const std::array<Coord, 6>& neighbour_offsets() {
  static const std::array<Coord, 6> k = {
      Coord{1, 0}, Coord{0, 1}, Coord{-1, 1}, Coord{-1, 0}, Coord{0, -1}, Coord{1, -1}};
  return k;
}

std::array<Coord, 6> neighbours(const Coord& c) {
  std::array<Coord, 6> out;
  const auto& off = neighbour_offsets();
  for (int t = 0; t < 6; ++t) out[t] = c + off[t];
  return out;
}

int hex_distance(const Coord& a, const Coord& b) {
  const int di = a.i - b.i, dj = a.j - b.j;
  return (std::abs(di) + std::abs(dj) + std::abs(di + dj)) / 2;
}

bool adjacent(const Coord& a, const Coord& b) { return hex_distance(a, b) == 1; }

std::array<Coord, 2> common_neighbours(const Coord& a, const Coord& b) {
  if (!adjacent(a, b)) throw PreconditionError("common_neighbours: endpoints are not a lattice edge");
  const Coord d = b - a;
  return {a + Coord{-d.j, d.i + d.j}, a + Coord{d.i + d.j, -d.i}};
}

void Cycle::check() const {
  const int n = size();
  if (n < 3) throw PreconditionError("Cycle: fewer than 3 vertices");
  VertexSet seen;
  for (const auto& c : v)
    if (!seen.insert(c).second) throw PreconditionError("Cycle: repeated vertex");
  for (int t = 0; t < n; ++t)
    if (!adjacent(v[t], v[(t + 1) % n]))
      throw PreconditionError("Cycle: consecutive vertices not lattice-adjacent");
}

namespace {

bool on_segment_doubled(std::int64_t qx, std::int64_t qy, std::int64_t ax, std::int64_t ay,
                        std::int64_t bx, std::int64_t by) {
  const std::int64_t cross = (bx - ax) * (qy - ay) - (by - ay) * (qx - ax);
  if (cross != 0) return false;
  const std::int64_t dot = (qx - ax) * (bx - ax) + (qy - ay) * (by - ay);
  if (dot < 0) return false;
  const std::int64_t len2 = (bx - ax) * (bx - ax) + (by - ay) * (by - ay);
  return dot <= len2;
}

}  // namespace

bool point_in_cycle_doubled(std::int64_t u2, std::int64_t v2, const Cycle& cycle) {
  const int n = cycle.size();
  for (int t = 0; t < n; ++t) {
    const Coord& a = cycle.v[t];
    const Coord& b = cycle.v[(t + 1) % n];
    if (on_segment_doubled(u2, v2, 2 * a.i, 2 * a.j, 2 * b.i, 2 * b.j)) return false;
  }
  int crossings = 0;
  for (int t = 0; t < n; ++t) {
    const std::int64_t ax = 2 * cycle.v[t].i, ay = 2 * cycle.v[t].j;
    const std::int64_t bx = 2 * cycle.v[(t + 1) % n].i, by = 2 * cycle.v[(t + 1) % n].j;
    if ((ay > v2) == (by > v2)) continue;
    // Sign of (x_intersection - u2), scaled by (by - ay).
    const std::int64_t dy = by - ay;
    const std::int64_t s = (ax - u2) * dy + (v2 - ay) * (bx - ax);
    if (dy > 0 ? s > 0 : s < 0) ++crossings;
  }
  return (crossings & 1) != 0;
}

bool in_interior(const Coord& c, const Cycle& cycle) {
  return point_in_cycle_doubled(2 * (std::int64_t)c.i, 2 * (std::int64_t)c.j, cycle);
}

std::vector<Coord> cycle_interior(const Cycle& cycle) {
  int ilo = std::numeric_limits<int>::max(), ihi = std::numeric_limits<int>::min();
  int jlo = ilo, jhi = ihi;
  for (const auto& c : cycle.v) {
    ilo = std::min(ilo, c.i), ihi = std::max(ihi, c.i);
    jlo = std::min(jlo, c.j), jhi = std::max(jhi, c.j);
  }
  std::vector<Coord> out;
  for (int i = ilo; i <= ihi; ++i)
    for (int j = jlo; j <= jhi; ++j)
      if (in_interior({i, j}, cycle)) out.push_back({i, j});
  return out;
}

bool is_separating_cycle(const Cycle& cycle, const VertexSet& m) {
  if (m.empty()) return false;
  for (const auto& c : m)
    if (!in_interior(c, cycle)) return false;
  return true;
}

VertexSet monochromatic_component(const ColouringOracle& oracle, const Spec& spec,
                                  const Coord& start, std::int64_t cap) {
  const ColourId c0 = oracle.colour(embed(spec, start));
  VertexSet comp{start};
  std::deque<Coord> frontier{start};
  while (!frontier.empty()) {
    const Coord cur = frontier.front();
    frontier.pop_front();
    for (const Coord& nb : neighbours(cur)) {
      if (comp.count(nb)) continue;
      if (oracle.colour(embed(spec, nb)) != c0) continue;
      comp.insert(nb);
      frontier.push_back(nb);
      if ((std::int64_t)comp.size() > cap)
        throw CapExceededError("monochromatic_component: component exceeds vertex cap");
    }
  }
  return comp;
}

namespace {

Cycle hexagon_cycle(const Coord& centre, int radius) {
  const auto& off = neighbour_offsets();
  Cycle c;
  c.v.reserve(6 * radius);
  for (int t = 0; t < 6; ++t) {
    const Coord corner{centre.i + radius * off[t].i, centre.j + radius * off[t].j};
    const Coord step = off[(t + 2) % 6];
    for (int s = 0; s < radius; ++s)
      c.v.push_back({corner.i + s * step.i, corner.j + s * step.j});
  }
  return c;
}

Cycle split_piece(const Cycle& c, int from, int to) {
  const int n = c.size();
  Cycle out;
  for (int t = from;; t = (t + 1) % n) {
    out.v.push_back(c.v[t]);
    if (t == to) break;
  }
  return out;
}

}  // namespace

Cycle minimize_separating_cycle(const VertexSet& m, const MinimizeObserver& observer) {
  if (m.empty()) throw PreconditionError("minimize_separating_cycle: empty vertex set");

  std::int64_t si = 0, sj = 0;
  for (const auto& c : m) si += c.i, sj += c.j;
  const Coord centre{(int)std::llround((double)si / (double)m.size()),
                     (int)std::llround((double)sj / (double)m.size())};
  int radius = 0;
  for (const auto& c : m) radius = std::max(radius, hex_distance(centre, c));
  radius += 2;

  Cycle cyc = hexagon_cycle(centre, radius);
  constexpr int kRoundCap = 1000000;
  for (int round = 0; round < kRoundCap; ++round) {
    const int n = cyc.size();
    std::unordered_map<Coord, int, CoordHash> pos;
    for (int t = 0; t < n; ++t) pos.emplace(cyc.v[t], t);

    bool applied = false;
    for (int e = 0; e < n && !applied; ++e) {
      const Coord v = cyc.v[e], w = cyc.v[(e + 1) % n];
      const auto cn = common_neighbours(v, w);
      if (m.count(cn[0]) || m.count(cn[1])) continue;

      for (const Coord& x : cn) {
        if (pos.count(x) || !in_interior(x, cyc)) continue;
        Cycle next = cyc;
        next.v.insert(next.v.begin() + e + 1, x);
        if (observer) observer({1, cyc, next, v, w});
        cyc = std::move(next);
        applied = true;
        break;
      }
      if (applied) break;

      for (const Coord p : {v, w}) {
        for (const Coord& x : cn) {
          const auto it = pos.find(x);
          if (it == pos.end()) continue;
          const int pi = pos.at(p), xi = it->second;
          const int gap = (xi - pi + n) % n;
          if (gap == 1 || gap == n - 1) continue;  // chord already a cycle edge
          if (!point_in_cycle_doubled(p.i + (std::int64_t)x.i, p.j + (std::int64_t)x.j, cyc))
            continue;
          Cycle a = split_piece(cyc, pi, xi);
          Cycle b = split_piece(cyc, xi, pi);
          Cycle* keep = is_separating_cycle(a, m) ? &a : is_separating_cycle(b, m) ? &b : nullptr;
          if (!keep) continue;
          if (observer) observer({2, cyc, *keep, v, w});
          cyc = std::move(*keep);
          applied = true;
          break;
        }
        if (applied) break;
      }
    }
    if (applied) continue;

    for (int e = 0; e < n; ++e) {
      const auto cn = common_neighbours(cyc.v[e], cyc.v[(e + 1) % n]);
      if (!m.count(cn[0]) && !m.count(cn[1]))
        throw Error("minimize_separating_cycle: no rule applies to an unsupported edge");
    }
    if (!is_separating_cycle(cyc, m))
      throw Error("minimize_separating_cycle: separation invariant lost");
    return cyc;
  }
  throw CapExceededError("minimize_separating_cycle: round cap exceeded");
}

namespace {

struct Enumerator {
  std::vector<Coord> verts;
  std::unordered_map<Coord, int, CoordHash> index;
  std::vector<std::array<int, 6>> adj;  // -1 entries where the neighbour leaves the window
  const VertexSet& m;
  int mi_lo, mi_hi, mj_lo, mj_hi, mk_lo, mk_hi;  // bounding lines of m on the three axes
  std::int64_t budget;
  std::int64_t visits = 0;

  struct Best {
    Cycle cycle;
    int interior = 0;
    int length = 0;
    int ties = 0;
    bool found = false;
  } best;

  std::vector<int> path;
  std::vector<char> on_path;

  Enumerator(const VertexSet& mm, const LatticeBox& w, std::int64_t b) : m(mm), budget(b) {
    for (int i = w.i_lo; i <= w.i_hi; ++i)
      for (int j = w.j_lo; j <= w.j_hi; ++j) {
        index.emplace(Coord{i, j}, (int)verts.size());
        verts.push_back({i, j});
      }
    adj.resize(verts.size());
    for (std::size_t t = 0; t < verts.size(); ++t)
      for (int d = 0; d < 6; ++d) {
        const auto it = index.find(verts[t] + neighbour_offsets()[d]);
        adj[t][d] = it == index.end() ? -1 : it->second;
      }
    mi_lo = mj_lo = mk_lo = std::numeric_limits<int>::max();
    mi_hi = mj_hi = mk_hi = std::numeric_limits<int>::min();
    for (const auto& c : m) {
      mi_lo = std::min(mi_lo, c.i), mi_hi = std::max(mi_hi, c.i);
      mj_lo = std::min(mj_lo, c.j), mj_hi = std::max(mj_hi, c.j);
      mk_lo = std::min(mk_lo, c.i + c.j), mk_hi = std::max(mk_hi, c.i + c.j);
    }
  }

  // A cycle strictly enclosing m must touch each of the six half-planes just
  // beyond m's bounding lines. Returns a lower bound on the steps still
  // needed to visit every unmet line and return to the root.
  int detour_floor(const Coord& cur, const Coord& root, unsigned met) const {
    int need = hex_distance(cur, root);
    const int axes[6] = {mi_hi + 1 - cur.i,      cur.i - (mi_lo - 1),
                         mj_hi + 1 - cur.j,      cur.j - (mj_lo - 1),
                         mk_hi + 1 - cur.i - cur.j, cur.i + cur.j - (mk_lo - 1)};
    const int axes_root[6] = {mi_hi + 1 - root.i,      root.i - (mi_lo - 1),
                              mj_hi + 1 - root.j,      root.j - (mj_lo - 1),
                              mk_hi + 1 - root.i - root.j, root.i + root.j - (mk_lo - 1)};
    for (int t = 0; t < 6; ++t) {
      if (met & (1u << t)) continue;
      const int out = std::max(axes[t], 0) + std::max(axes_root[t], 0);
      need = std::max(need, out);
    }
    return need;
  }

  static unsigned lines_met(const Coord& c, unsigned met, int mi_hi, int mi_lo, int mj_hi,
                            int mj_lo, int mk_hi, int mk_lo) {
    if (c.i >= mi_hi + 1) met |= 1u;
    if (c.i <= mi_lo - 1) met |= 2u;
    if (c.j >= mj_hi + 1) met |= 4u;
    if (c.j <= mj_lo - 1) met |= 8u;
    if (c.i + c.j >= mk_hi + 1) met |= 16u;
    if (c.i + c.j <= mk_lo - 1) met |= 32u;
    return met;
  }

  void record(int length) {
    Cycle cand;
    cand.v.reserve(length);
    for (int t : path) cand.v.push_back(verts[t]);
    if (!is_separating_cycle(cand, m)) return;
    const int interior = (int)cycle_interior(cand).size();
    if (!best.found || interior < best.interior ||
        (interior == best.interior && length < best.length)) {
      best = {std::move(cand), interior, length, 1, true};
    } else if (interior == best.interior && length == best.length) {
      ++best.ties;
    }
  }

  void dfs(int root, int cur, int depth, int target, unsigned met) {
    if (++visits > budget)
      throw CapExceededError("brute_force_minimal_cycle: enumeration budget exceeded");
    if (depth == target) {
      bool root_adjacent = false;
      for (int d = 0; d < 6; ++d) root_adjacent |= adj[cur][d] == root;
      if (root_adjacent && path[1] < path[depth - 1]) record(target);
      return;
    }
    for (int d = 0; d < 6; ++d) {
      const int nxt = adj[cur][d];
      if (nxt < 0 || nxt <= root || on_path[nxt]) continue;
      const Coord& nc = verts[nxt];
      const unsigned met2 = lines_met(nc, met, mi_hi, mi_lo, mj_hi, mj_lo, mk_hi, mk_lo);
      if (depth + 1 + detour_floor(nc, verts[root], met2) > target + 1) continue;
      on_path[nxt] = 1;
      path.push_back(nxt);
      dfs(root, nxt, depth + 1, target, met2);
      path.pop_back();
      on_path[nxt] = 0;
    }
  }

  void run() {
    on_path.assign(verts.size(), 0);
    const int len_max = (int)verts.size();
    for (int target = 3; target <= len_max; ++target) {
      // A separating cycle keeps all of m strictly inside, so interior size
      // |m| is unbeatable and longer cycles lose the lexicographic tie.
      if (best.found && best.interior == (int)m.size()) break;
      if (best.found && target > best.length + 6) break;
      for (int root = 0; root < (int)verts.size(); ++root) {
        const unsigned met0 =
            lines_met(verts[root], 0, mi_hi, mi_lo, mj_hi, mj_lo, mk_hi, mk_lo);
        if (detour_floor(verts[root], verts[root], met0) > target) continue;
        path.assign(1, root);
        on_path[root] = 1;
        dfs(root, root, 1, target, met0);
        on_path[root] = 0;
      }
    }
    if (!best.found) throw Error("brute_force_minimal_cycle: no separating cycle in window");
  }
};

}  // namespace

BruteForceResult brute_force_minimal_cycle(const VertexSet& m, const LatticeBox& window) {
  if (m.empty()) throw PreconditionError("brute_force_minimal_cycle: empty vertex set");
  if (window.i_hi < window.i_lo || window.j_hi < window.j_lo)
    throw PreconditionError("brute_force_minimal_cycle: empty window");
  for (const auto& c : m)
    if (c.i - window.i_lo < 2 || window.i_hi - c.i < 2 || c.j - window.j_lo < 2 ||
        window.j_hi - c.j < 2)
      throw PreconditionError("brute_force_minimal_cycle: window margin under 2 around the set");
  const std::int64_t cells = (std::int64_t)(window.i_hi - window.i_lo + 1) *
                             (std::int64_t)(window.j_hi - window.j_lo + 1);
  if (cells > 130) throw PreconditionError("brute_force_minimal_cycle: window too large");

  Enumerator en(m, window, 40000000);
  en.run();
  return {en.best.cycle, en.best.interior, en.best.ties == 1, en.visits};
}

std::vector<Coord> canonical_cycle(const Cycle& cycle) {
  const int n = cycle.size();
  std::vector<Coord> best;
  for (int dir = 0; dir < 2; ++dir) {
    for (int s = 0; s < n; ++s) {
      std::vector<Coord> cand;
      cand.reserve(n);
      for (int t = 0; t < n; ++t) {
        const int idx = dir == 0 ? (s + t) % n : (s - t + n) % n;
        cand.push_back(cycle.v[idx]);
      }
      if (best.empty() || cand < best) best = std::move(cand);
    }
  }
  return best;
}

void write_coords(std::ostream& out, const std::vector<Coord>& coords) {
  for (const auto& c : coords) out << c.i << ' ' << c.j << '\n';
}

std::vector<Coord> read_coords(std::istream& in) {
  std::vector<Coord> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    Coord c;
    if (ls >> c.i >> c.j) {
      std::string tail;
      if (ls >> tail) throw Error("read_coords: trailing content: " + line);
      out.push_back(c);
    } else {
      std::istringstream blank(line);
      std::string tok;
      if (blank >> tok) throw Error("read_coords: malformed line: " + line);
    }
  }
  return out;
}

}  // namespace planecol::lattice
