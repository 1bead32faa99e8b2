/// Row-shifted square tilings of the plane with a cyclic colour palette, plus
/// the two instruments used to judge them: the closed-form minimum same-colour
/// tile separation and a randomized search for same-colour pairs at distances
/// inside a given band.
#pragma once

#include <cstdint>
#include <optional>

#include "planecol/geometry.hpp"
#include "planecol/oracle.hpp"

namespace planecol::tiling {

/// Half-open square tiles (left/bottom edge in, right/top edge out), rows of
/// height `side`, row r's colour pattern offset by shift_sign*r*row_shift.
struct SquareTilingSpec {
  double side;
  double row_shift;
  int colours;
  int shift_sign;  // -1 shifts rows left going up, +1 right; mirror images

  SquareTilingSpec(double side_, double row_shift_, int colours_, int shift_sign_);
};

/// side sqrt(2)/2 (tile diagonal 1), shift 3*sqrt(2)/4, 7 colours, sign -1.
SquareTilingSpec canonical_spec();

ColourId colour_at(const SquareTilingSpec& spec, const Point& p);

/// Infimum distance between distinct same-colour tiles, scanned over every
/// tile pair within 3 rows vertically and colours+2 tiles horizontally of a
/// reference tile; periodicity makes that window exhaustive. The value equals
/// the closed-box distance: half-open edges move attainment, not the infimum.
double min_same_colour_separation(const SquareTilingSpec& spec);

struct ViolatingPair {
  Point p;
  Point q;
  ColourId colour;
  double dist;
};

/// Seeded random probes (point, direction, radius in [iv.lo, iv.hi]) with the
/// point drawn from `region`; returns the first same-colour pair found.
std::optional<ViolatingPair> violation_search(const ColouringOracle& oracle,
                                              const DistanceInterval& iv,
                                              const Box& region,
                                              std::int64_t samples,
                                              std::uint64_t seed);

class TilingOracle final : public ColouringOracle {
 public:
  explicit TilingOracle(const SquareTilingSpec& spec) : spec_(spec) {}

  ColourId colour(const Point& p) const override { return colour_at(spec_, p); }
  int palette_size() const override { return spec_.colours; }
  const SquareTilingSpec& spec() const { return spec_; }

 private:
  SquareTilingSpec spec_;
};

}  // namespace planecol::tiling
