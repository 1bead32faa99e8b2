#include "planecol/explorer.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <string>

#include "planecol/errors.hpp"

namespace planecol::explorer {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string pt(const Point& p) { return "(" + num(p.x()) + ", " + num(p.y()) + ")"; }

void require_band(double d, const DistanceInterval& band, const Tolerance& tol,
                  const char* what) {
  if (!(d >= band.lo - tol.tau && d <= band.hi + tol.tau))
    throw Error(std::string(what) + " left the distance band");
}

}  // namespace

TriBallCertificate find_trichromatic_ball(const ColouringOracle& oracle, double eps,
                                          const lattice::Coord& start,
                                          const ExplorerCaps& caps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw PreconditionError("find_trichromatic_ball: eps must be positive and finite");
  const lattice::Spec lat{eps / 3.0};

  lattice::VertexSet comp =
      lattice::monochromatic_component(oracle, lat, start, caps.component_cap);
  for (int round = 0; round < caps.round_cap; ++round) {
    const lattice::Cycle cyc = lattice::minimize_separating_cycle(comp);
    const int n = cyc.size();
    std::vector<ColourId> col(n);
    for (int t = 0; t < n; ++t) col[t] = oracle.colour(embed(lat, cyc.v[t]));
    int split = -1;
    for (int t = 0; t < n; ++t)
      if (col[t] != col[(t + 1) % n]) {
        split = t;
        break;
      }
    if (split < 0) {
      comp = lattice::monochromatic_component(oracle, lat, cyc.v[0], caps.component_cap);
      continue;
    }

    const lattice::Coord x = cyc.v[split], y = cyc.v[(split + 1) % n];
    const auto cn = lattice::common_neighbours(x, y);
    const lattice::Coord z = comp.count(cn[0]) ? cn[0] : cn[1];
    if (!comp.count(z))
      throw Error("find_trichromatic_ball: minimal cycle edge lacks support in the component");

    TriBallCertificate cert;
    cert.centre = embed(lat, x);
    cert.radius = lat.gamma;
    cert.coords = {x, y, z};
    cert.rounds = round;
    for (int t = 0; t < 3; ++t) {
      cert.points[t] = embed(lat, cert.coords[t]);
      cert.colours[t] = oracle.colour(cert.points[t]);
    }
    if (cert.colours[0] == cert.colours[1] || cert.colours[0] == cert.colours[2] ||
        cert.colours[1] == cert.colours[2])
      throw Error("find_trichromatic_ball: witness colours not pairwise distinct");
    return cert;
  }
  throw CapExceededError("find_trichromatic_ball: round cap exceeded");
}

void validate_trichromatic_ball(const ColouringOracle& oracle, double eps,
                                const TriBallCertificate& cert) {
  const Tolerance tol{};
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw PreconditionError("validate_trichromatic_ball: eps must be positive and finite");
  if (!(cert.radius > 0.0) || cert.radius > eps / 3.0 + tol.tau)
    throw Error("validate_trichromatic_ball: radius exceeds eps/3");
  for (int t = 0; t < 3; ++t) {
    if (distance(cert.centre, cert.points[t]) > cert.radius + tol.tau)
      throw Error("validate_trichromatic_ball: witness point outside the ball");
    if (oracle.colour(cert.points[t]) != cert.colours[t])
      throw Error("validate_trichromatic_ball: stored colour disagrees with the oracle");
  }
  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 3; ++t) {
      if (cert.colours[s] == cert.colours[t])
        throw Error("validate_trichromatic_ball: witness colours collide");
      if (distance(cert.points[s], cert.points[t]) > cert.radius + tol.tau)
        throw Error("validate_trichromatic_ball: witness points spread past the radius");
    }
}

SixColourOutcome six_colour_certificate(const ColouringOracle& oracle, double eps,
                                        const lattice::Coord& start,
                                        const ExplorerCaps& caps) {
  SixColourOutcome out;
  out.ball = find_trichromatic_ball(oracle, eps, start, caps);
  validate_trichromatic_ball(oracle, eps, out.ball);

  const auto w =
      witness::build_wheel(witness::RotationMode::kSpokesInBand, eps, out.ball.centre, 0.0);
  out.sol = w.sol;
  out.spoke_length = w.spoke_length;
  out.rim_chord = w.rim_chord;
  for (int v : w.rim) out.rim_points.push_back(*w.graph.pts[v]);

  const DistanceInterval band{1.0, 1.0 + eps};
  const Tolerance tol{};
  const int k = (int)out.rim_points.size();
  std::vector<ColourId> rim_col(k);
  for (int j = 0; j < k; ++j) rim_col[j] = oracle.colour(out.rim_points[j]);

  for (int j = 0; j < k; ++j) {
    const Point& p = out.rim_points[j];
    const Point& q = out.rim_points[(j + 1) % k];
    const double d = distance(p, q);
    require_band(d, band, tol, "six_colour_certificate: rim chord");
    if (rim_col[j] == rim_col[(j + 1) % k]) {
      out.kind = SixColourKind::kViolationFound;
      out.violation = tiling::ViolatingPair{p, q, rim_col[j], d};
      return out;
    }
  }
  for (int j = 0; j < k; ++j)
    for (int t = 0; t < 3; ++t) {
      const double d = distance(out.rim_points[j], out.ball.points[t]);
      require_band(d, band, tol, "six_colour_certificate: rim-to-witness distance");
      if (rim_col[j] == out.ball.colours[t]) {
        out.kind = SixColourKind::kViolationFound;
        out.violation =
            tiling::ViolatingPair{out.rim_points[j], out.ball.points[t], rim_col[j], d};
        return out;
      }
    }

  std::set<std::int32_t> rim_set, all_set;
  for (const ColourId& c : rim_col) rim_set.insert(c.v), all_set.insert(c.v);
  for (const ColourId& c : out.ball.colours) all_set.insert(c.v);
  out.rim_colours = (int)rim_set.size();
  out.total_colours = (int)all_set.size();
  if (out.rim_colours < 3)
    throw Error("six_colour_certificate: proper odd rim shows under three colours");
  if (out.total_colours < 6)
    throw Error("six_colour_certificate: certified outcome shows under six colours");
  out.kind = SixColourKind::kCertified;
  return out;
}

FiveColourCertificate five_colour_certificate(const witness::BoundarySpec& spec) {
  const bool default_sides = (spec.colour_a.v == 0 && spec.colour_b.v == 1) ||
                             (spec.colour_a.v == 1 && spec.colour_b.v == 0);
  if (!default_sides)
    throw PreconditionError("five_colour_certificate: side colours must be 0 and 1");
  FiveColourCertificate out{witness::build_boundary_witness(spec), {}};
  out.wit.graph.check();
  out.chroma = chromatic::chromatic_number(out.wit.graph.abstract());
  if (out.chroma.chi != 5)
    throw Error("five_colour_certificate: witness chromatic number is not 5");
  return out;
}

void write_report(std::ostream& out, const TriBallCertificate& cert, ReportStyle style) {
  if (style == ReportStyle::kKeyValue) {
    out << "centre.x " << num(cert.centre.x()) << "\ncentre.y " << num(cert.centre.y())
        << "\nradius " << num(cert.radius) << "\nrounds " << cert.rounds << '\n';
    for (int t = 0; t < 3; ++t)
      out << "point." << t << ".x " << num(cert.points[t].x()) << "\npoint." << t << ".y "
          << num(cert.points[t].y()) << "\npoint." << t << ".colour " << cert.colours[t].v
          << "\npoint." << t << ".coord " << cert.coords[t].i << ' ' << cert.coords[t].j
          << '\n';
    return;
  }
  out << "trichromatic ball: centre " << pt(cert.centre) << ", radius " << num(cert.radius)
      << ", found after " << cert.rounds << " growth steps\n";
  for (int t = 0; t < 3; ++t)
    out << "  witness " << t << ": " << pt(cert.points[t]) << " lattice (" << cert.coords[t].i
        << ", " << cert.coords[t].j << ") colour " << cert.colours[t].v << '\n';
}

void write_report(std::ostream& out, const SixColourOutcome& outcome, ReportStyle style) {
  const bool ok = outcome.kind == SixColourKind::kCertified;
  if (style == ReportStyle::kKeyValue) {
    out << "outcome " << (ok ? "certified" : "violation") << "\nwheel.k " << outcome.sol.k
        << "\nwheel.m " << outcome.sol.m << "\nwheel.delta " << num(outcome.sol.delta)
        << "\nwheel.spoke " << num(outcome.spoke_length) << "\nwheel.chord "
        << num(outcome.rim_chord) << '\n';
    write_report(out, outcome.ball, style);
    if (ok) {
      out << "rim.colours " << outcome.rim_colours << "\ntotal.colours "
          << outcome.total_colours << '\n';
    } else {
      const auto& v = *outcome.violation;
      out << "violation.p " << num(v.p.x()) << ' ' << num(v.p.y()) << "\nviolation.q "
          << num(v.q.x()) << ' ' << num(v.q.y()) << "\nviolation.colour " << v.colour.v
          << "\nviolation.distance " << num(v.dist) << '\n';
    }
    return;
  }
  write_report(out, outcome.ball, style);
  out << "wheel: order " << outcome.sol.k << ", turn " << outcome.sol.m << "/" << outcome.sol.k
      << ", spoke " << num(outcome.spoke_length) << ", rim chord " << num(outcome.rim_chord)
      << '\n';
  if (ok) {
    out << "certified: " << outcome.rim_colours << " rim colours disjoint from the ball's 3, "
        << outcome.total_colours << " colours total at band distances\n";
  } else {
    const auto& v = *outcome.violation;
    out << "violation: colour " << v.colour.v << " repeats at distance " << num(v.dist)
        << " between " << pt(v.p) << " and " << pt(v.q) << '\n';
  }
}

void write_report(std::ostream& out, const FiveColourCertificate& cert, ReportStyle style) {
  const auto& g = cert.wit.graph;
  if (style == ReportStyle::kKeyValue) {
    out << "wheel.k " << cert.wit.sol.k << "\nwheel.m " << cert.wit.sol.m << "\nwheel.delta "
        << num(cert.wit.sol.delta) << "\nvertices " << g.vertex_count() << "\nedges "
        << g.edge_count() << "\nchi " << cert.chroma.chi << '\n';
    return;
  }
  out << "boundary witness: rim order " << cert.wit.sol.k << ", spoke radius "
      << num(cert.wit.sol.delta) << ", " << g.vertex_count() << " vertices, " << g.edge_count()
      << " edges\nchromatic number " << cert.chroma.chi
      << " with the two side colours pinned\n";
}

}  // namespace planecol::explorer
