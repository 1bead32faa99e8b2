/// Deterministic SVG snapshots: tile mosaics for plane colourings and vertex
/// diagrams for finite witnesses. Same input, same bytes.
#pragma once

#include <string>
#include <vector>

#include "planecol/geometry.hpp"
#include "planecol/oracle.hpp"
#include "planecol/tiling.hpp"
#include "planecol/witness.hpp"

namespace planecol::svg {

/// Seven fixed fills, then evenly spread hues for larger palettes.
std::string palette_colour(int id);

std::string render_tiling(const tiling::SquareTilingSpec& spec, const Box& region,
                          double px_per_unit = 120.0);

/// Located vertices and the edges between them; abstract vertices are
/// omitted. `colouring`, when given, must cover every vertex.
std::string render_graph(const witness::FiniteGeometricGraph& g,
                         const std::vector<ColourId>* colouring = nullptr,
                         double px_per_unit = 240.0);

}  // namespace planecol::svg
