#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "planecol/chromatic.hpp"
#include "planecol/errors.hpp"
#include "planecol/explorer.hpp"
#include "planecol/graph_io.hpp"
#include "planecol/process_oracle.hpp"
#include "planecol/svg.hpp"
#include "planecol/tiling.hpp"
#include "planecol/witness.hpp"

namespace {

using namespace planecol;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

struct SpecOpts {
  double side = 0.0;  // 0 means canonical
  double row_shift = 0.0;
  int colours = 7;
  int sign = -1;

  tiling::SquareTilingSpec build() const {
    const auto canon = tiling::canonical_spec();
    return {side > 0.0 ? side : canon.side, row_shift > 0.0 ? row_shift : canon.row_shift,
            colours, sign};
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--side", side, "tile side (default sqrt(2)/2)");
    cmd->add_option("--row-shift", row_shift, "per-row offset (default 3*sqrt(2)/4)");
    cmd->add_option("--colours", colours, "palette size")->capture_default_str();
    cmd->add_option("--sign", sign, "row shift direction, -1 or 1")->capture_default_str();
  }
};

struct OracleOpts {
  std::string command;  // whitespace-split argv; empty means the built-in tiling
  int palette = 7;
  double timeout_s = 5.0;
  SpecOpts spec;

  void attach(CLI::App* cmd) {
    cmd->add_option("--oracle", command,
                    "external oracle command (line protocol), default: built-in tiling");
    cmd->add_option("--palette", palette, "declared palette of the external oracle")->capture_default_str();
    cmd->add_option("--timeout", timeout_s, "external oracle reply timeout, seconds")->capture_default_str();
    spec.attach(cmd);
  }

  std::unique_ptr<ColouringOracle> build() const {
    if (command.empty())
      return std::make_unique<tiling::TilingOracle>(spec.build());
    std::vector<std::string> argv;
    std::istringstream ss(command);
    for (std::string tok; ss >> tok;) argv.push_back(tok);
    return std::make_unique<ProcessOracle>(
        argv, palette,
        std::chrono::milliseconds((long long)(timeout_s * 1000.0)));
  }
};

void print_colouring(const std::vector<ColourId>& colouring) {
  std::cout << "colouring:";
  for (std::size_t v = 0; v < colouring.size(); ++v)
    std::cout << ' ' << v << ':' << colouring[v].v;
  std::cout << '\n';
}

int run(int argc, char** argv) {
  CLI::App app{"plane colouring toolkit: tilings, finite witnesses, certificates"};
  app.require_subcommand(1);

  // tiling
  auto* tiling_cmd = app.add_subcommand("tiling", "square tiling oracle");
  tiling_cmd->require_subcommand(1);

  auto* tv = tiling_cmd->add_subcommand(
      "verify", "search for same-colour pairs at distances in [1, 1+eps]");
  struct {
    double eps = 0.05;
    std::int64_t samples = 200000;
    std::uint64_t seed = 42;
    double extent = 20.0;
    OracleOpts oracle;
  } tvo;
  tv->add_option("--epsilon", tvo.eps, "band width above 1")->capture_default_str();
  tv->add_option("--samples", tvo.samples, "random probe count")->capture_default_str();
  tv->add_option("--seed", tvo.seed, "probe seed")->capture_default_str();
  tv->add_option("--extent", tvo.extent, "probe square [-extent, extent]^2")->capture_default_str();
  tvo.oracle.attach(tv);
  tv->callback([&tvo] {
    if (tvo.oracle.command.empty()) {
      const auto spec = tvo.oracle.spec.build();
      std::cout << "minimum same-colour separation " << num(tiling::min_same_colour_separation(spec))
                << '\n';
    }
    const auto oracle = tvo.oracle.build();
    const auto hit = tiling::violation_search(
        *oracle, DistanceInterval{1.0, 1.0 + tvo.eps},
        Box(Point(-tvo.extent, -tvo.extent), Point(tvo.extent, tvo.extent)), tvo.samples,
        tvo.seed);
    if (hit) {
      std::cout << "violation: colour " << hit->colour.v << " at distance " << num(hit->dist)
                << " between (" << num(hit->p.x()) << ", " << num(hit->p.y()) << ") and ("
                << num(hit->q.x()) << ", " << num(hit->q.y()) << ")\n";
      throw Error("same-colour pair found inside the distance band");
    }
    std::cout << "no violation in " << tvo.samples << " samples\n";
  });

  auto* ts = tiling_cmd->add_subcommand("svg", "render the tiling to an SVG file");
  struct {
    std::string out;
    double x0 = 0.0, y0 = 0.0, x1 = 5.0, y1 = 3.5;
    double scale = 120.0;
    SpecOpts spec;
  } tso;
  ts->add_option("--out", tso.out, "output file")->required();
  ts->add_option("--x0", tso.x0, "region min x")->capture_default_str();
  ts->add_option("--y0", tso.y0, "region min y")->capture_default_str();
  ts->add_option("--x1", tso.x1, "region max x")->capture_default_str();
  ts->add_option("--y1", tso.y1, "region max y")->capture_default_str();
  ts->add_option("--scale", tso.scale, "pixels per unit")->capture_default_str();
  tso.spec.attach(ts);
  ts->callback([&tso] {
    write_file(tso.out, svg::render_tiling(tso.spec.build(),
                                           Box(Point(tso.x0, tso.y0), Point(tso.x1, tso.y1)),
                                           tso.scale));
    std::cout << "wrote " << tso.out << '\n';
  });

  // witness
  auto* wit_cmd = app.add_subcommand("witness", "finite witness constructions");
  wit_cmd->require_subcommand(1);

  auto* ws = wit_cmd->add_subcommand("spindle", "7-vertex unit-distance graph needing 4 colours");
  struct {
    std::string out, svg_out;
  } wso;
  ws->add_option("--out", wso.out, "write the graph file here");
  ws->add_option("--svg", wso.svg_out, "write an SVG diagram here");
  ws->callback([&wso] {
    const auto g = witness::moser_spindle();
    const auto res = chromatic::chromatic_number(g.abstract());
    std::cout << g.vertex_count() << " vertices, " << g.edge_count()
              << " unit edges, chromatic number " << res.chi << '\n';
    print_colouring(res.colouring);
    if (!wso.out.empty()) {
      std::ostringstream os;
      io::write_graph(os, g);
      write_file(wso.out, os.str());
    }
    if (!wso.svg_out.empty()) write_file(wso.svg_out, svg::render_graph(g, &res.colouring));
  });

  auto* ww = wit_cmd->add_subcommand("wheel", "odd wheel from the smallest rational rotation");
  struct {
    double eps = 0.05;
    std::string mode = "band";
    double cx = 0.0, cy = 0.0, base_angle = 0.0;
    std::string out, svg_out;
    bool chi = false;
  } wwo;
  ww->add_option("--epsilon", wwo.eps, "band width above 1")->capture_default_str();
  ww->add_option("--mode", wwo.mode,
                 "band: spokes and chords in [1,1+eps]; unit: chords exactly 1")
      ->capture_default_str()
      ->check(CLI::IsMember({"band", "unit"}));
  ww->add_option("--cx", wwo.cx, "centre x")->capture_default_str();
  ww->add_option("--cy", wwo.cy, "centre y")->capture_default_str();
  ww->add_option("--base-angle", wwo.base_angle, "first spoke direction, radians")->capture_default_str();
  ww->add_option("--out", wwo.out, "write the graph file here");
  ww->add_option("--svg", wwo.svg_out, "write an SVG diagram here");
  ww->add_flag("--chi", wwo.chi, "also compute the chromatic number (needs at most 64 vertices)");
  ww->callback([&wwo] {
    const auto mode = wwo.mode == "band" ? witness::RotationMode::kSpokesInBand
                                         : witness::RotationMode::kUnitRim;
    const auto w = witness::build_wheel(mode, wwo.eps, Point(wwo.cx, wwo.cy), wwo.base_angle);
    std::cout << "rotation order " << w.sol.k << ", turn " << w.sol.m << '/' << w.sol.k
              << ", sin " << num(w.sol.sin_value) << ", delta " << num(w.sol.delta) << '\n'
              << "spoke " << num(w.spoke_length) << ", rim chord " << num(w.rim_chord) << ", "
              << w.graph.vertex_count() << " vertices, " << w.graph.edge_count() << " edges\n";
    if (wwo.chi) {
      const auto res = chromatic::chromatic_number(w.graph.abstract());
      std::cout << "chromatic number " << res.chi << '\n';
    }
    if (!wwo.out.empty()) {
      std::ostringstream os;
      io::write_graph(os, w.graph);
      write_file(wwo.out, os.str());
    }
    if (!wwo.svg_out.empty()) write_file(wwo.svg_out, svg::render_graph(w.graph));
  });

  auto* wb = wit_cmd->add_subcommand("boundary",
                                     "unit-rim wheel pinning two colours along a line");
  struct {
    double eps = 0.5;
    double line_angle = 0.0;
    double ox = 0.0, oy = 0.0;
    std::string out, svg_out;
  } wbo;
  wb->add_option("--epsilon", wbo.eps, "half-plane reach parameter, in (0, 2)")->capture_default_str();
  wb->add_option("--line-angle", wbo.line_angle, "boundary line direction, radians")->capture_default_str();
  wb->add_option("--ox", wbo.ox, "a point on the line, x")->capture_default_str();
  wb->add_option("--oy", wbo.oy, "a point on the line, y")->capture_default_str();
  wb->add_option("--out", wbo.out, "write the graph file here");
  wb->add_option("--svg", wbo.svg_out, "write an SVG diagram here");
  wb->callback([&wbo] {
    witness::BoundarySpec spec{wbo.eps};
    spec.line_angle = wbo.line_angle;
    spec.origin = Point(wbo.ox, wbo.oy);
    const auto bw = witness::build_boundary_witness(spec);
    std::cout << "rim order " << bw.sol.k << ", spoke radius " << num(bw.sol.delta) << ", "
              << bw.graph.vertex_count() << " vertices ("
              << "2 abstract side vertices), " << bw.graph.edge_count() << " edges\n";
    if (!wbo.out.empty()) {
      std::ostringstream os;
      io::write_graph(os, bw.graph);
      write_file(wbo.out, os.str());
    }
    if (!wbo.svg_out.empty()) write_file(wbo.svg_out, svg::render_graph(bw.graph));
  });

  // chi
  auto* chi_cmd = app.add_subcommand("chi", "exact chromatic number of a graph file");
  struct {
    std::string file;
    double lo = 1e-9, hi = 1e9;
  } co;
  chi_cmd->add_option("file", co.file, "graph file")->required();
  chi_cmd->add_option("--lo", co.lo, "distance band lower edge for validation")->capture_default_str();
  chi_cmd->add_option("--hi", co.hi, "distance band upper edge for validation")->capture_default_str();
  chi_cmd->callback([&co] {
    std::ifstream in(co.file);
    if (!in) throw Error("cannot open: " + co.file);
    const auto g = io::read_graph(in, DistanceInterval{co.lo, co.hi});
    const auto res = chromatic::chromatic_number(g.abstract());
    std::cout << "chromatic number " << res.chi << " (clique bound " << res.clique_lower
              << ", greedy bound " << res.greedy_upper << ")\n";
    print_colouring(res.colouring);
  });

  // ball
  auto* ball_cmd = app.add_subcommand("ball", "trichromatic ball search");
  ball_cmd->require_subcommand(1);
  auto* bf = ball_cmd->add_subcommand("find",
                                      "three colours within eps/3 of one point, per the oracle");
  struct {
    double eps = 0.05;
    int si = 0, sj = 0;
    bool machine = false;
    OracleOpts oracle;
  } bfo;
  bf->add_option("--epsilon", bfo.eps, "band width above 1")->capture_default_str();
  bf->add_option("--start-i", bfo.si, "lattice start, first coordinate")->capture_default_str();
  bf->add_option("--start-j", bfo.sj, "lattice start, second coordinate")->capture_default_str();
  bf->add_flag("--machine", bfo.machine, "key-value output");
  bfo.oracle.attach(bf);
  bf->callback([&bfo] {
    const auto oracle = bfo.oracle.build();
    const auto cert =
        explorer::find_trichromatic_ball(*oracle, bfo.eps, {bfo.si, bfo.sj});
    explorer::validate_trichromatic_ball(*oracle, bfo.eps, cert);
    explorer::write_report(std::cout, cert,
                           bfo.machine ? explorer::ReportStyle::kKeyValue
                                       : explorer::ReportStyle::kHuman);
  });

  // certify
  auto* cert_cmd = app.add_subcommand("certify", "lower-bound certificates");
  cert_cmd->require_subcommand(1);

  auto* c6 = cert_cmd->add_subcommand(
      "six", "six colours at band distances, or a genuine oracle violation");
  struct {
    double eps = 0.05;
    int si = 0, sj = 0;
    bool machine = false;
    OracleOpts oracle;
  } c6o;
  c6->add_option("--epsilon", c6o.eps, "band width above 1")->capture_default_str();
  c6->add_option("--start-i", c6o.si, "lattice start, first coordinate")->capture_default_str();
  c6->add_option("--start-j", c6o.sj, "lattice start, second coordinate")->capture_default_str();
  c6->add_flag("--machine", c6o.machine, "key-value output");
  c6o.oracle.attach(c6);
  c6->callback([&c6o] {
    const auto oracle = c6o.oracle.build();
    const auto outcome =
        explorer::six_colour_certificate(*oracle, c6o.eps, {c6o.si, c6o.sj});
    explorer::write_report(std::cout, outcome,
                           c6o.machine ? explorer::ReportStyle::kKeyValue
                                       : explorer::ReportStyle::kHuman);
    if (outcome.kind == explorer::SixColourKind::kViolationFound)
      throw Error("oracle repeats a colour at a distance inside the band");
  });

  auto* c5 = cert_cmd->add_subcommand(
      "five", "five colours forced when two colours meet along a line");
  struct {
    double eps = 0.5;
    double line_angle = 0.0;
    bool machine = false;
  } c5o;
  c5->add_option("--epsilon", c5o.eps, "half-plane reach parameter, in (0, 2)")->capture_default_str();
  c5->add_option("--line-angle", c5o.line_angle, "boundary line direction, radians")->capture_default_str();
  c5->add_flag("--machine", c5o.machine, "key-value output");
  c5->callback([&c5o] {
    witness::BoundarySpec spec{c5o.eps};
    spec.line_angle = c5o.line_angle;
    const auto cert = explorer::five_colour_certificate(spec);
    explorer::write_report(std::cout, cert,
                           c5o.machine ? explorer::ReportStyle::kKeyValue
                                       : explorer::ReportStyle::kHuman);
  });

  // oracle serve
  auto* oracle_cmd = app.add_subcommand("oracle", "oracle process endpoints");
  oracle_cmd->require_subcommand(1);
  auto* serve = oracle_cmd->add_subcommand(
      "serve", "answer \"X Y\" colour queries on stdin with the built-in tiling");
  struct {
    SpecOpts spec;
    int delay_ms = 0;
  } svo;
  svo.spec.attach(serve);
  serve->add_option("--delay-ms", svo.delay_ms, "sleep before each reply (timeout testing)")
      ->capture_default_str();
  serve->callback([&svo] {
    const auto spec = svo.spec.build();
    std::string line;
    while (std::getline(std::cin, line)) {
      std::istringstream ls(line);
      double x, y;
      if (!(ls >> x >> y)) throw Error("oracle serve: malformed query: " + line);
      if (svo.delay_ms > 0)
        std::this_thread::sleep_for(std::chrono::milliseconds(svo.delay_ms));
      std::cout << tiling::colour_at(spec, Point(x, y)).v << std::endl;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const planecol::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
