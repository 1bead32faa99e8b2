/// Plain-text graph files. One record per line:
///   v ID X Y     located vertex (17 significant digits on write)
///   v ID - -     abstract vertex
///   e A B        edge
///   p ID C       precoloured vertex
/// IDs are the dense 0-based vertex indices; '#' starts a comment. Vertices
/// must appear before edges or precolours that mention them.
#pragma once

#include <iosfwd>

#include "planecol/geometry.hpp"
#include "planecol/witness.hpp"

namespace planecol::io {

void write_graph(std::ostream& out, const witness::FiniteGeometricGraph& g);

/// Parses and validates against `rule`: every located edge must fit the band.
/// Throws Error on malformed input, PreconditionError on a band violation.
witness::FiniteGeometricGraph read_graph(std::istream& in, DistanceInterval rule,
                                         Tolerance tol = Tolerance{});

}  // namespace planecol::io
