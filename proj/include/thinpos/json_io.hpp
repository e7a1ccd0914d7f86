// JSON document formats: complexes (simplicial or generic), orderings,
// surfaces and vertex maps. Parsing is strict about types (floats are
// rejected everywhere) and serialization is canonical, so parse/serialize
// round-trips are byte-stable.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "thinpos/complex.hpp"
#include "thinpos/ordering.hpp"
#include "thinpos/surface.hpp"

namespace thinpos {

// Accepts {"format": "brickcplx-v1", "dimension": n, "kind": ...} with
// either "simplices" (vertex tuples, optional "weights" table keyed by
// sorted tuple strings) or explicit "bricks"/"facets" arrays. Unknown keys
// are ignored so documents may carry annotations.
BrickComplex parse_complex(const std::string& text);
std::string serialize_complex(const BrickComplex& m);

// {"ordering": [brick ids ...]}
Ordering parse_ordering(const BrickComplex& m, const std::string& text);
std::string serialize_ordering(const BrickComplex& m, const Ordering& o);

// {"facets": [facet ids ...]}
Surface parse_surface(const BrickComplex& m, const std::string& text);
std::string serialize_surface(const BrickComplex& m, const Surface& s);

// {"map": {"v": "w", ...}} with integer vertex labels on both sides.
std::map<long long, long long> parse_vertex_map(const std::string& text);

// Graphviz view of the dual graph. Bricks are nodes (labelled with heights
// when an ordering is given), interior facets are edges, and edges crossing
// the given surface are highlighted.
std::string export_dot(const BrickComplex& m, const Surface* s = nullptr,
                       const Ordering* o = nullptr);

}  // namespace thinpos
