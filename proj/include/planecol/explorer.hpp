/// Drives a colouring oracle to a lower-bound certificate. The ball search
/// walks monochromatic lattice components outward until a minimal separating
/// cycle picks up two colours, which pins three pairwise-distinct colours
/// inside a ball of radius eps/3. The six-colour pass mounts an in-band wheel
/// on that ball; the five-colour pass is the oracle-free boundary argument.
#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "planecol/chromatic.hpp"
#include "planecol/geometry.hpp"
#include "planecol/lattice.hpp"
#include "planecol/oracle.hpp"
#include "planecol/tiling.hpp"
#include "planecol/witness.hpp"

namespace planecol::explorer {

struct TriBallCertificate {
  Point centre = Point::Zero();
  double radius = 0.0;  // lattice pitch, eps/3
  std::array<Point, 3> points;
  std::array<ColourId, 3> colours;  // pairwise distinct
  std::array<lattice::Coord, 3> coords;
  int rounds = 0;  // component-growth steps before the cycle went bichromatic
};

struct ExplorerCaps {
  std::int64_t component_cap = 1000000;
  int round_cap = 10000;
};

TriBallCertificate find_trichromatic_ball(const ColouringOracle& oracle, double eps,
                                          const lattice::Coord& start = {0, 0},
                                          const ExplorerCaps& caps = {});

/// Independent re-check of a certificate: re-queries the oracle at the stored
/// points and re-measures every distance. Throws Error on any failure.
void validate_trichromatic_ball(const ColouringOracle& oracle, double eps,
                                const TriBallCertificate& cert);

enum class SixColourKind {
  kCertified,       // oracle shows >= 6 colours within the band graph
  kViolationFound,  // oracle repeats a colour at a distance inside the band
};

struct SixColourOutcome {
  SixColourKind kind = SixColourKind::kCertified;
  TriBallCertificate ball;
  witness::RotationSolution sol;
  std::vector<Point> rim_points;
  double spoke_length = 0.0;
  double rim_chord = 0.0;
  std::optional<tiling::ViolatingPair> violation;
  int rim_colours = 0;    // distinct rim colours when certified, >= 3
  int total_colours = 0;  // ball plus rim, >= 6 when certified
};

/// Every distance this function compares colours across is verified to lie in
/// [1 - tau, 1 + eps + tau] first, so a reported violation is genuine and a
/// certified outcome really exhibits six colours at band distances.
SixColourOutcome six_colour_certificate(const ColouringOracle& oracle, double eps,
                                        const lattice::Coord& start = {0, 0},
                                        const ExplorerCaps& caps = {});

struct FiveColourCertificate {
  witness::BoundaryWitness wit;
  chromatic::ChromaticResult chroma;  // chi == 5, asserted
};

/// Requires side colours 0 and 1 so the chromatic count is meaningful.
FiveColourCertificate five_colour_certificate(const witness::BoundarySpec& spec);

enum class ReportStyle { kHuman, kKeyValue };

void write_report(std::ostream& out, const TriBallCertificate& cert, ReportStyle style);
void write_report(std::ostream& out, const SixColourOutcome& outcome, ReportStyle style);
void write_report(std::ostream& out, const FiveColourCertificate& cert, ReportStyle style);

}  // namespace planecol::explorer
