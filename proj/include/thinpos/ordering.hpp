// Brick orderings and their weight profiles: level sets, the profile
// Lambda, plateau extrema, width, trunk and the width order.

#pragma once

#include <string>
#include <vector>

#include "thinpos/complex.hpp"
#include "thinpos/rational.hpp"
#include "thinpos/surface.hpp"

namespace thinpos {

// A total order on the bricks. bricks[k] is the brick at height k + 1; all
// public indices below speak in heights 1..N and prefix sizes 0..N.
struct Ordering {
  std::vector<int> bricks;

  int size() const { return static_cast<int>(bricks.size()); }
};

Ordering ordering_from_ids(const BrickComplex& m, const std::vector<std::string>& ids);
std::vector<std::string> ordering_ids(const BrickComplex& m, const Ordering& o);

// Must name every brick exactly once.
void check_ordering(const BrickComplex& m, const Ordering& o);

// The level surface after the first j bricks: interior facets with exactly
// one side among them. j ranges over 0..N.
Surface level_set(const BrickComplex& m, const Ordering& o, int j);

// values[j] is the weight of level_set(m, o, j); values[0] = values[N] = 0.
struct LambdaProfile {
  std::vector<Rational> values;
};

// Computed incrementally through strengths and cross-checked against the
// level-set weights; any disagreement is an internal error.
LambdaProfile lambda_profile(const BrickComplex& m, const Ordering& o);

struct Extremum {
  enum class Kind { Maximum, Minimum };
  Kind kind = Kind::Maximum;
  int t = 0;        // representative index, the first index of the plateau
  int plateau_lo = 0;
  int plateau_hi = 0;
  bool extremal = false;  // t is the first or last index of its plateau
  Rational value;
};

// Plateau extrema of the profile, in index order. A plateau is extremal
// territory only when the profile strictly rises into it and strictly falls
// off it (maximum) or the reverse (minimum); the end indices 0 and N never
// qualify.
std::vector<Extremum> extrema(const LambdaProfile& profile);

// Weights of the maxima, sorted non-increasingly.
struct Width {
  std::vector<Rational> terms;
};

Width width_of(const BrickComplex& m, const Ordering& o);
Width width_from_profile(const LambdaProfile& profile);

// The largest profile value; equals the first width term when a maximum
// exists and 0 otherwise.
Rational trunk_of(const BrickComplex& m, const Ordering& o);

// Lexicographic with the shorter sequence first on ties: -1, 0, +1.
int compare_widths(const Width& a, const Width& b);

Ordering reverse(const Ordering& o);

// Multiset union of the terms, sorted non-increasingly.
Width width_union(const Width& a, const Width& b);

std::string width_to_string(const Width& w);

}  // namespace thinpos
