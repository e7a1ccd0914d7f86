// Independent brute-force oracles: exact minimum trunk over all orderings
// (subset dynamic program), exact or branch-and-bound minimum width, the
// connected-sum bound verifier and the degree-based generalized profile.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thinpos/complex.hpp"
#include "thinpos/ordering.hpp"
#include "thinpos/rational.hpp"

namespace thinpos {

// Weight of the interface between a brick subset and its complement, i.e.
// Lambda of any ordering whose prefix is exactly that subset.
Rational lambda_of_set(const BrickComplex& m, const std::vector<int>& bricks);

struct TrunkResult {
  Rational trunk;
  Ordering witness;  // attains the minimax
};

// Minimax interface weight over all orderings, by dynamic programming over
// the 2^N brick subsets. Capped at `cap` bricks (memory bound).
TrunkResult min_trunk(const BrickComplex& m, int cap = 22);

struct WidthResult {
  Width width;
  Ordering witness;
  bool optimal = false;       // proven minimal
  std::uint64_t explored = 0;
};

// Exhaustive search over all N! orderings; capped at `cap` bricks.
WidthResult min_width_exhaustive(const BrickComplex& m, int cap = 9);

// Branch and bound over ordering prefixes. Prunes on the already forced
// maxima of the prefix profile plus a minimax completion bound. `optimal`
// is set only when the search closed within the node budget. An initial
// incumbent ordering (e.g. from thin_search) tightens the bound.
WidthResult min_width_bnb(const BrickComplex& m,
                          std::uint64_t node_budget = 20000000,
                          const std::optional<Ordering>& incumbent = std::nullopt);

enum class CheckStatus { Verified, Violated, SkippedInfeasible };

std::string check_status_name(CheckStatus status);

struct SumReport {
  CheckStatus width_lower_ok = CheckStatus::SkippedInfeasible;
  CheckStatus width_upper_ok = CheckStatus::SkippedInfeasible;
  CheckStatus trunk_equal_ok = CheckStatus::SkippedInfeasible;

  Width w1, w2;             // best factor widths found
  bool w1_optimal = false;  // proven minimal
  bool w2_optimal = false;
  std::optional<Width> sum_width;  // minimum width of the sum when computed
  bool sum_width_optimal = false;

  Width constructed_width;  // width of the glued ordering (factor 1 first)
  Width union_width;        // multiset union of the factor ordering widths

  Rational tr1, tr2, tr_sum;
  bool trunks_exact = false;

  std::optional<Ordering> violation_witness;  // ordering breaking a bound
  std::string notes;
};

// Forms the connected sum along the vertex bijection and checks, to the
// extent exactly decidable at the given sizes, that the sum is at least as
// wide as each factor, that gluing a factor-1 ordering ending at c1 to a
// factor-2 ordering starting at c2 yields width at most the union of the
// factor widths, and that the minimax trunks agree with the larger factor.
// Checks whose exact computation is out of reach are SkippedInfeasible,
// never guessed. Both factors must be closed, of equal even dimension, and
// unit-weighted.
SumReport verify_sum_bounds(const BrickComplex& m1, const BrickComplex& m2,
                            const std::string& c1, const std::string& c2,
                            const std::map<long long, long long>& vertex_map,
                            std::uint64_t budget = 20000000);

// Degree form of the profile: each facet contributes its weight times the
// product of its brick counts on the two sides of the prefix. Defined for
// every kind; on a brick complex it coincides with the standard profile.
LambdaProfile generalized_profile(const BrickComplex& m, const Ordering& o);

// Facets with a non-zero contribution at prefix size j.
Surface generalized_level_set(const BrickComplex& m, const Ordering& o, int j);

}  // namespace thinpos
