#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "planecol/geometry.hpp"

namespace planecol {

/// Small non-negative colour index. Zero-based everywhere in the library;
/// user-facing tiling output prints 1-based labels.
struct ColourId {
  std::int32_t v = 0;

  auto operator<=>(const ColourId&) const = default;
};

/// Total deterministic colouring of the plane. Implementations must be safe to
/// query concurrently or serialize internally.
class ColouringOracle {
 public:
  virtual ~ColouringOracle() = default;

  virtual ColourId colour(const Point& p) const = 0;

  /// Declared palette size; 0 when the oracle does not declare one.
  virtual int palette_size() const = 0;
};

/// Adapter for ad-hoc colourings (tests, experiments).
class FunctionOracle final : public ColouringOracle {
 public:
  FunctionOracle(std::function<ColourId(const Point&)> fn, int palette)
      : fn_(std::move(fn)), palette_(palette) {
    if (!fn_) throw std::invalid_argument("FunctionOracle: empty function");
  }

  ColourId colour(const Point& p) const override { return fn_(p); }
  int palette_size() const override { return palette_; }

 private:
  std::function<ColourId(const Point&)> fn_;
  int palette_;
};

}  // namespace planecol

template <>
struct std::hash<planecol::ColourId> {
  std::size_t operator()(const planecol::ColourId& c) const noexcept {
    return std::hash<std::int32_t>{}(c.v);
  }
};
