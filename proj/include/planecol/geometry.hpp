/// Planar primitives shared by every module: points are Eigen column vectors,
/// distances are Euclidean, and rotations about a centre are rational multiples
/// of a full turn so that finite odd orders are exactly representable.
#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace planecol {

using Point = Eigen::Vector2d;
using Box = Eigen::AlignedBox2d;

inline constexpr double kDefaultTau = 1e-9;

/// Comparison slack for measured distances. Kept small enough that no two
/// distinct constructed distances in this codebase ever fall within one tau.
struct Tolerance {
  double tau = kDefaultTau;

  explicit Tolerance(double t = kDefaultTau) : tau(t) {
    if (!(t > 0.0) || t > 1e-6)
      throw std::invalid_argument("Tolerance: tau must lie in (0, 1e-6]");
  }
};

/// Closed distance band [lo, hi]; the unit-distance graph uses [1, 1] and the
/// interval graph uses [1, 1+eps].
struct DistanceInterval {
  double lo = 1.0;
  double hi = 1.0;

  DistanceInterval() = default;
  DistanceInterval(double l, double h) : lo(l), hi(h) {
    if (!(l > 0.0) || !(l <= h) || !std::isfinite(h))
      throw std::invalid_argument("DistanceInterval: need 0 < lo <= hi < inf");
  }
};

/// Angle 2*pi*m/k in lowest terms. Rotating k times is the identity exactly.
struct RationalAngle {
  long long m = 1;
  long long k = 3;

  RationalAngle(long long m_, long long k_) : m(m_), k(k_) {
    if (m <= 0 || m >= k)
      throw std::invalid_argument("RationalAngle: need 0 < m < k");
    if (std::gcd(m, k) != 1)
      throw std::invalid_argument("RationalAngle: m/k not in lowest terms");
  }

  double radians() const { return 2.0 * std::numbers::pi * double(m) / double(k); }
};

inline double distance(const Point& p, const Point& q) { return (p - q).norm(); }

inline bool in_interval(const Point& p, const Point& q, const DistanceInterval& iv,
                        const Tolerance& tol = Tolerance{}) {
  const double d = distance(p, q);
  return d >= iv.lo - tol.tau && d <= iv.hi + tol.tau;
}

/// Rotate p about centre by power*angle. The power is reduced mod k first, so
/// the angle fed to the trigonometry is a single reduced rational turn; in
/// particular power == k gives back p bit-for-bit.
inline Point rotate_about(const Point& centre, const RationalAngle& angle,
                          long long power, const Point& p) {
  const long long e = (((power % angle.k) + angle.k) % angle.k * (angle.m % angle.k)) % angle.k;
  if (e == 0) return p;
  const double theta = 2.0 * std::numbers::pi * double(e) / double(angle.k);
  return centre + Eigen::Rotation2Dd(theta) * (p - centre);
}

}  // namespace planecol
