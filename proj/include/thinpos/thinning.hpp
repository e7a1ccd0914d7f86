// Width non-increasing moves on orderings (swap, delay, advance), the
// local-thinness search and certifier, and extraction of the minimal
// surfaces read off a locally thin ordering.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinpos/complex.hpp"
#include "thinpos/ordering.hpp"
#include "thinpos/rational.hpp"
#include "thinpos/surface.hpp"

namespace thinpos {

struct SwapCondition {
  // lhs = sigma(A; S_i) + sigma(B; S_i) + 2 w(shared facets of A and B)
  // where A and B sit at heights i and i + 1. The profile of the swapped
  // ordering differs only at index i, by exactly lhs.
  Rational lhs;
  bool legal = false;   // lhs <= 0: the swap cannot raise the width
  bool strict = false;  // lhs < 0
};

// Valid for 1 <= i <= N - 1.
SwapCondition swap_condition(const BrickComplex& m, const Ordering& o, int i);

// Exchanges the bricks at heights i and i + 1. Unconditional; callers that
// need the width guarantee consult swap_condition or the width directly.
Ordering apply_swap(const Ordering& o, int i);

// Moves the brick at height i up to height j (i < j), sliding the bricks in
// between one step down. Requires the facets of that brick on the level
// surface at j to outweigh its remaining interior facets; under that test
// the width does not increase. Throws Error otherwise.
Ordering delay(const BrickComplex& m, const Ordering& o, int i, int j);

// Mirror image: moves the brick at height i down to height j + 1
// (j + 1 < i), sliding the bricks in between one step up, under the same
// weight test against the level surface at j.
Ordering advance(const BrickComplex& m, const Ordering& o, int j, int i);

// True iff the weight test above holds for the brick at height i against
// the level surface at j.
bool displacement_condition(const BrickComplex& m, const Ordering& o, int i, int j);

struct MoveRecord {
  enum class Kind { Swap, Delay, Advance };
  Kind kind = Kind::Swap;
  int i = 0;
  int j = 0;  // unused for swaps
  Width width_before;
  Width width_after;
};

std::string move_kind_name(MoveRecord::Kind kind);

struct ThinResult {
  Ordering ordering;
  Width width;
  std::vector<MoveRecord> moves;
  std::uint64_t explored = 0;
};

// Greedy width descent: apply strictly width-decreasing swaps (smallest
// resulting width first, then smallest index), fall back to the delay and
// advance moves suggested by strict shortening moves at maxima, and when
// stuck explore the equal-width plateau of legal swaps for an exit. The
// budget caps the number of orderings examined; the seed only shuffles the
// plateau exploration order, so results are reproducible per seed.
ThinResult thin_search(const BrickComplex& m, const Ordering& o,
                       std::uint64_t budget = 1000000, std::uint64_t seed = 0);

// Search variant that never moves the bricks at the last `frozen_tail`
// heights, for endpoint-constrained searches such as the connected-sum
// construction.
ThinResult thin_search_frozen(const BrickComplex& m, const Ordering& o, int frozen_tail,
                              std::uint64_t budget = 1000000, std::uint64_t seed = 0);

struct ThinCertificate {
  enum class Status { LocallyThin, NotLocallyThin, Unknown };
  Status status = Status::Unknown;
  // For NotLocallyThin: swap heights leading to a strictly thinner ordering,
  // the lexicographically least among the shortest such sequences.
  std::vector<int> witness;
  std::uint64_t explored = 0;
  std::uint64_t budget = 0;
};

std::string certificate_status_name(ThinCertificate::Status status);

// Breadth-first search over the orderings reachable through swaps that do
// not increase the width. LocallyThin means the entire plateau was explored
// and no strictly thinner ordering borders it; Unknown means the budget ran
// out first.
ThinCertificate certify_locally_thin(const BrickComplex& m, const Ordering& o,
                                     std::uint64_t budget = 1000000);

enum class SurfaceClass { Stable, Unstable, Unclassified };

std::string surface_class_name(SurfaceClass c);

struct ExtractedSurface {
  Extremum extremum;
  Surface surface;
  SurfaceClass classification = SurfaceClass::Unclassified;
  std::optional<Partition> partition;  // certificate for Unstable
  bool conforms = false;  // minima stable; maxima stable or unstable,
                          // extremal maxima unstable
};

// Reads the level surface at each plateau extremum representative and
// classifies it. Maxima are tried first against the below/above split of
// the ordering, then by the general partition search. When `certified` is
// set, a non-conforming surface is an internal error and throws.
std::vector<ExtractedSurface> extract_minimal_surfaces(const BrickComplex& m,
                                                       const Ordering& o,
                                                       bool certified = false,
                                                       int component_cap = 20);

}  // namespace thinpos
