// Weighted brick complexes: data model, construction from simplex lists,
// validation, dual graph, connected sum, stabilization and the fixture
// catalog used throughout the tests and the command line tool.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thinpos/rational.hpp"

namespace thinpos {

// A brick complex proper keeps every facet on at most two bricks. The
// non-pure kind lifts that restriction so facets may carry any incidence;
// only the generalized profile machinery accepts it.
enum class Kind { BrickComplex, NonPure };

std::string kind_name(Kind kind);
Kind kind_from_name(const std::string& name);

// Flags reported by validate(). Validation never rejects; it describes.
struct PseudomanifoldReport {
  bool pure = false;                // every facet lies on exactly two bricks
  bool strongly_connected = false;  // bricks connected through shared facets
  bool closed = false;              // no facet lies on a single brick
  bool dimension_even = false;
};

// One vertex per brick, one edge per interior facet. Parallel edges are
// kept: two bricks sharing k facets contribute k edges.
struct DualGraph {
  int brick_count = 0;
  struct Edge {
    int u = 0;
    int v = 0;
    int facet = 0;
  };
  std::vector<Edge> edges;
};

// Bricks, facets and ridges are stored as dense indices with stable string
// ids. When the complex comes from a simplex list the ids are the sorted
// vertex tuples ("0,1,3") and the vertex tuples are retained so that
// vertex-level operations (stabilization, simplicial connected sum) apply.
struct BrickComplex {
  int dimension = 0;
  Kind kind = Kind::BrickComplex;

  std::vector<std::string> brick_ids;
  std::vector<std::vector<int>> brick_facets;  // sorted facet indices

  std::vector<std::string> facet_ids;
  std::vector<std::vector<int>> facet_bricks;  // sorted incident brick indices
  std::vector<std::vector<int>> facet_ridges;  // sorted ridge indices
  std::vector<Weight> facet_weights;

  std::vector<std::string> ridge_ids;

  bool simplicial = false;
  std::vector<std::vector<long long>> brick_vertices;  // sorted tuples
  std::vector<std::vector<long long>> facet_vertices;
  std::vector<std::vector<long long>> ridge_vertices;

  int brick_count() const { return static_cast<int>(brick_ids.size()); }
  int facet_count() const { return static_cast<int>(facet_ids.size()); }
  int ridge_count() const { return static_cast<int>(ridge_ids.size()); }

  bool interior_facet(int facet) const { return facet_bricks[facet].size() == 2; }
  bool boundary_facet(int facet) const { return facet_bricks[facet].size() == 1; }

  // The brick opposite `brick` across an interior facet, -1 for boundary
  // facets (and for non-pure incidences other than two).
  int other_side(int facet, int brick) const;

  // Index lookup by id; throws Error when the id is unknown.
  int brick_index(const std::string& id) const;
  int facet_index(const std::string& id) const;
};

// Builds a complex from a list of simplices given as vertex tuples. Every
// simplex must have the same arity (dimension + 1) and appear once. Facets
// are the codimension-1 faces, ridges the codimension-2 faces. Weights
// default to 1; the table may override any facet by its sorted tuple.
// With kind BrickComplex a face shared by more than two simplices is an
// error; with kind NonPure it is kept as-is.
BrickComplex from_simplices(const std::vector<std::vector<long long>>& simplices,
                            const std::map<std::vector<long long>, Weight>& weights = {},
                            Kind kind = Kind::BrickComplex);

PseudomanifoldReport validate(const BrickComplex& m);

// Throws Error for non-pure complexes.
DualGraph dual_graph(const BrickComplex& m);

struct SumResult {
  BrickComplex complex;
  std::vector<int> seam;  // facets along which the two summands were glued
  // Brick ids of each summand mapped to the ids they carry in the sum; the
  // removed bricks are absent.
  std::map<std::string, std::string> brick_map_1;
  std::map<std::string, std::string> brick_map_2;
};

// Connected sum of two closed pseudomanifolds of equal dimension: remove
// brick c1 from m1 and c2 from m2, then glue the boundary spheres by the
// given facet bijection (keys are facets of c1, values facets of c2). The
// bijection must identify ridges consistently. The result has
// |m1| + |m2| - 2 bricks and the glued facets keep their common weight,
// which must agree across the map.
SumResult connected_sum(const BrickComplex& m1, const BrickComplex& m2,
                        const std::string& c1, const std::string& c2,
                        const std::map<std::string, std::string>& facet_map);

// Simplicial convenience: the facet bijection induced by a vertex bijection
// from the vertices of c1 onto the vertices of c2.
SumResult connected_sum_simplicial(const BrickComplex& m1, const BrickComplex& m2,
                                   const std::string& c1, const std::string& c2,
                                   const std::map<long long, long long>& vertex_map);

struct StabilizeResult {
  BrickComplex complex;
  std::vector<int> new_bricks;
};

// Replaces brick `a` by the cone from a fresh vertex over its boundary,
// i.e. one new brick per facet of `a`. Facets of the old brick survive with
// their weights; the new interior facets get weight 1. Requires simplicial
// provenance.
StabilizeResult stabilize(const BrickComplex& m, const std::string& a);

// "0,1,3"-style canonical ids of simplicial pieces.
std::string vertex_tuple_id(const std::vector<long long>& tuple);
std::vector<long long> parse_vertex_tuple(const std::string& id);

// Named fixtures: "tetrahedron", "boundary-simplex(n)" for n >= 1,
// "torus18" (the 18-triangle flat torus; brick order matches the printed
// 1..18 labels), and "figure4" (a small disc with a length-4 arc whose two
// flanking triangles both shorten it).
BrickComplex catalog(const std::string& name);

}  // namespace thinpos
