// Proper surfaces inside a weighted brick complex: weights, strengths,
// variations, shortening moves, stability, instability certificates and the
// two-sided classification helpers (embeddedness, separation, index).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thinpos/complex.hpp"
#include "thinpos/rational.hpp"

namespace thinpos {

// A surface is a set of interior facets, kept sorted and duplicate-free.
struct Surface {
  std::vector<int> facets;

  bool contains(int facet) const;
  bool empty() const { return facets.empty(); }
};

Surface make_surface(std::vector<int> facets);
Surface surface_from_ids(const BrickComplex& m, const std::vector<std::string>& ids);

Weight surface_weight(const BrickComplex& m, const Surface& s);

// True iff every member facet is interior and every ridge that lies only on
// interior facets meets an even number of members. Ridges that touch the
// boundary of the complex are exempt. Throws Error on non-pure complexes.
bool is_proper(const BrickComplex& m, const Surface& s);

// Weight of the interior facets of `a` off s minus the weight of those on s.
// Boundary facets of the complex never count. `s` must be proper.
Rational strength(const BrickComplex& m, int a, const Surface& s);

// Replaces the facets of `a` on s by the interior facets of `a` off s.
// Preserves properness and changes the weight by exactly strength(a; s).
Surface vary(const BrickComplex& m, const Surface& s, int a);

struct ShorteningMove {
  int brick = 0;
  Rational sigma;
  bool strict = false;  // sigma < 0
};

// All bricks that touch s and do not increase its weight when varied, in
// brick index order.
std::vector<ShorteningMove> shortening_moves(const BrickComplex& m, const Surface& s);

// Non-empty and no brick strictly shortens it.
bool is_stable_minimal(const BrickComplex& m, const Surface& s);

// A two-sided split of the bricks; both sides are non-empty.
struct Partition {
  std::vector<int> side;  // side[brick] is 0 or 1

  std::vector<int> side_bricks(int which) const;
};

struct UnstableCheck {
  bool ok = false;
  int failed_condition = 0;  // 1..4 when !ok
  std::string witness;       // names the bricks/facets that break the condition
};

// Checks whether the partition certifies s as an unstable minimal surface:
// (1) facets shared across the partition lie on s, (2) both sides shorten s
// and at least one side strictly, (3) every strict move on one side has a
// shortening partner on the other side sharing enough s-weight, and (4) the
// same bound holds for every strict/strict pair across the partition.
UnstableCheck check_unstable(const BrickComplex& m, const Surface& s, const Partition& p);

struct UnstableSearch {
  enum class Status { Found, None, Undetermined };
  Status status = Status::None;
  std::optional<Partition> partition;
};

// Searches for a certifying partition. Condition (1) forces the components
// of the dual graph cut along s to stay on one side, so only bipartitions
// of those components are enumerated. Beyond `component_cap` components the
// search reports Undetermined instead of guessing. The witness returned is
// the lexicographically least certifying bipartition (by the side vector,
// with side[first brick] = 0).
UnstableSearch find_unstable_partition(const BrickComplex& m, const Surface& s,
                                       int component_cap = 20);

// Every ridge on member facets meets exactly zero or two of them.
bool is_embedded(const BrickComplex& m, const Surface& s);

// Cutting the dual graph along s disconnects it.
bool is_separating(const BrickComplex& m, const Surface& s);

// Conflict graph on the shortening moves of s: two moves span an edge iff
// their bricks share no facet lying on s.
struct ShorteningComplex {
  std::vector<int> bricks;                  // vertices, in brick index order
  std::vector<std::pair<int, int>> edges;   // indices into `bricks`
};

ShorteningComplex shortening_complex(const BrickComplex& m, const Surface& s);

enum class TopologicalIndex { Index0, Index1, AtLeast2 };

std::string index_name(TopologicalIndex index);

// Index 0 iff no shortening move exists; index 1 iff the conflict graph is
// disconnected; otherwise at least 2.
TopologicalIndex topological_index01(const BrickComplex& m, const Surface& s);

}  // namespace thinpos
