#include "planecol/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "planecol/errors.hpp"
#include "planecol/random.hpp"

namespace planecol::tiling {

SquareTilingSpec::SquareTilingSpec(double side_, double row_shift_, int colours_,
                                   int shift_sign_)
    : side(side_), row_shift(row_shift_), colours(colours_), shift_sign(shift_sign_) {
  if (!(side > 0.0) || !std::isfinite(side) || !std::isfinite(row_shift))
    throw PreconditionError("SquareTilingSpec: side must be positive and finite");
  if (colours < 1) throw PreconditionError("SquareTilingSpec: need at least one colour");
  if (shift_sign != 1 && shift_sign != -1)
    throw PreconditionError("SquareTilingSpec: shift_sign must be +1 or -1");
  if (side * std::numbers::sqrt2 > 1.0 + kDefaultTau)
    throw PreconditionError("SquareTilingSpec: tile diagonal exceeds 1");
}

SquareTilingSpec canonical_spec() {
  const double s = std::sqrt(2.0) / 2.0;
  return SquareTilingSpec(s, 3.0 * std::sqrt(2.0) / 4.0, 7, -1);
}

ColourId colour_at(const SquareTilingSpec& spec, const Point& p) {
  const double row = std::floor(p.y() / spec.side);
  const double shifted = p.x() + spec.shift_sign * row * spec.row_shift;
  const long long n = (long long)std::floor(shifted / spec.side);
  const long long c = ((n % spec.colours) + spec.colours) % spec.colours;
  return ColourId{(std::int32_t)c};
}

namespace {

double axis_gap(double a_lo, double a_hi, double b_lo, double b_hi) {
  return std::max({0.0, b_lo - a_hi, a_lo - b_hi});
}

}  // namespace

double min_same_colour_separation(const SquareTilingSpec& spec) {
  // Reference tile: row 0, raw column index 0, i.e. [0, side) x [0, side).
  // A tile (dr, n) has the same colour iff n is a multiple of spec.colours.
  double best = std::numeric_limits<double>::infinity();
  for (int dr = -3; dr <= 3; ++dr) {
    for (int t = -(spec.colours + 2); t <= spec.colours + 2; ++t) {
      const long long n = (long long)spec.colours * t;
      if (dr == 0 && n == 0) continue;
      const double bx = double(n) * spec.side - spec.shift_sign * double(dr) * spec.row_shift;
      const double by = double(dr) * spec.side;
      const double gx = axis_gap(0.0, spec.side, bx, bx + spec.side);
      const double gy = axis_gap(0.0, spec.side, by, by + spec.side);
      best = std::min(best, std::hypot(gx, gy));
    }
  }
  return best;
}

std::optional<ViolatingPair> violation_search(const ColouringOracle& oracle,
                                              const DistanceInterval& iv,
                                              const Box& region,
                                              std::int64_t samples,
                                              std::uint64_t seed) {
  if (samples < 1) throw PreconditionError("violation_search: need samples >= 1");
  if (region.isEmpty()) throw PreconditionError("violation_search: empty region");
  SplitMix64 rng(seed);
  for (std::int64_t i = 0; i < samples; ++i) {
    const Point p(rng.uniform(region.min().x(), region.max().x()),
                  rng.uniform(region.min().y(), region.max().y()));
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double r = rng.uniform(iv.lo, iv.hi);
    const Point q = p + r * Point(std::cos(angle), std::sin(angle));
    const ColourId cp = oracle.colour(p);
    if (cp == oracle.colour(q)) return ViolatingPair{p, q, cp, distance(p, q)};
  }
  return std::nullopt;
}

}  // namespace planecol::tiling
