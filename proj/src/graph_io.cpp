#include "planecol/graph_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "planecol/errors.hpp"

namespace planecol::io {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

[[noreturn]] void bad_line(const std::string& line) {
  throw Error("graph file: malformed line: " + line);
}

}  // namespace

void write_graph(std::ostream& out, const witness::FiniteGeometricGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "v " << v;
    if (g.pts[v]) out << ' ' << num(g.pts[v]->x()) << ' ' << num(g.pts[v]->y()) << '\n';
    else out << " - -\n";
  }
  for (const auto& [v, c] : g.precolour) out << "p " << v << ' ' << c.v << '\n';
  for (const auto& [a, b] : g.edges) out << "e " << a << ' ' << b << '\n';
}

witness::FiniteGeometricGraph read_graph(std::istream& in, DistanceInterval rule,
                                         Tolerance tol) {
  witness::FiniteGeometricGraph g{rule, tol};
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;

    if (kind == "v") {
      int id;
      std::string xs, ys;
      if (!(ls >> id >> xs >> ys)) bad_line(line);
      if (id != g.vertex_count())
        throw Error("graph file: vertex ids must be dense and ascending, got " +
                    std::to_string(id));
      if (xs == "-" && ys == "-") {
        g.add_abstract_vertex();
      } else {
        double x, y;
        std::istringstream xv(xs), yv(ys);
        if (!(xv >> x) || !(yv >> y)) bad_line(line);
        g.add_vertex(Point(x, y));
      }
    } else if (kind == "e") {
      int a, b;
      if (!(ls >> a >> b)) bad_line(line);
      g.add_edge(a, b);
    } else if (kind == "p") {
      int v, c;
      if (!(ls >> v >> c)) bad_line(line);
      g.set_precolour(v, ColourId{c});
    } else {
      bad_line(line);
    }
    std::string tail;
    if (ls >> tail) bad_line(line);
  }
  return g;
}

}  // namespace planecol::io
