#include "thinpos/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>

#include "thinpos/thinning.hpp"

namespace thinpos {

Rational lambda_of_set(const BrickComplex& m, const std::vector<int>& bricks) {
  if (m.kind != Kind::BrickComplex) {
    throw Error("interface weights are defined on brick complexes only");
  }
  std::vector<char> inside(m.brick_count(), 0);
  for (int b : bricks) {
    if (b < 0 || b >= m.brick_count()) throw Error("brick index out of range");
    inside[b] = 1;
  }
  Rational total(0);
  for (int f = 0; f < m.facet_count(); ++f) {
    if (!m.interior_facet(f)) continue;
    if (inside[m.facet_bricks[f][0]] != inside[m.facet_bricks[f][1]]) {
      total += m.facet_weights[f];
    }
  }
  return total;
}

namespace {

// Integer mirror of the facet weights over a common denominator, so the
// subset oracles can run in 64-bit arithmetic. Everything is exact; inputs
// that would overflow are rejected rather than rounded.
struct IntWeights {
  BigInt denom;
  std::vector<long long> facet;                          // scaled weights
  std::vector<std::vector<std::pair<int, long long>>> adj;  // brick -> (other, w)
};

IntWeights scale_weights(const BrickComplex& m) {
  IntWeights iw;
  iw.denom = 1;
  const BigInt lcm_cap = BigInt(1) << 32;
  for (const auto& w : m.facet_weights) {
    iw.denom = boost::multiprecision::lcm(iw.denom, BigInt(denominator(w)));
    if (iw.denom > lcm_cap) {
      throw Error("facet weight denominators too large for the integer oracle");
    }
  }
  const BigInt value_cap = BigInt(1) << 55;
  BigInt total(0);
  for (const auto& w : m.facet_weights) {
    const BigInt scaled = BigInt(numerator(w)) * (iw.denom / BigInt(denominator(w)));
    total += scaled;
    if (total > value_cap) {
      throw Error("total facet weight too large for the integer oracle");
    }
    iw.facet.push_back(scaled.convert_to<long long>());
  }
  iw.adj.resize(m.brick_count());
  for (int f = 0; f < m.facet_count(); ++f) {
    if (!m.interior_facet(f)) continue;
    const int u = m.facet_bricks[f][0];
    const int v = m.facet_bricks[f][1];
    iw.adj[u].emplace_back(v, iw.facet[f]);
    iw.adj[v].emplace_back(u, iw.facet[f]);
  }
  return iw;
}

Rational unscale(long long value, const BigInt& denom) {
  return Rational(BigInt(value), denom);
}

// Interface weight of every brick subset, by adding one brick at a time.
std::vector<long long> subset_lambdas(const BrickComplex& m, const IntWeights& iw) {
  const int n = m.brick_count();
  std::vector<long long> lam(std::size_t(1) << n, 0);
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
    const int b = std::countr_zero(mask);
    const std::uint32_t prev = mask & (mask - 1);
    long long delta = 0;
    for (const auto& [other, w] : iw.adj[b]) {
      delta += ((prev >> other) & 1u) ? -w : w;
    }
    lam[mask] = lam[prev] + delta;
  }
  return lam;
}

// Maxima of an integer profile prefix values[0..upto], resolved plateaus
// only, sorted non-increasingly.
std::vector<long long> resolved_maxima(const std::vector<long long>& values, int upto) {
  std::vector<long long> out;
  int lo = 0;
  while (lo <= upto) {
    int hi = lo;
    while (hi + 1 <= upto && values[hi + 1] == values[lo]) ++hi;
    if (lo >= 1 && hi + 1 <= upto && values[lo - 1] < values[lo] &&
        values[hi + 1] < values[lo]) {
      out.push_back(values[lo]);
    }
    lo = hi + 1;
  }
  std::sort(out.begin(), out.end(), std::greater<long long>());
  return out;
}

// Lexicographic with prefix-is-smaller, on non-increasing term lists.
int compare_terms(const std::vector<long long>& a, const std::vector<long long>& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < common; ++k) {
    if (a[k] < b[k]) return -1;
    if (a[k] > b[k]) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

Width terms_to_width(const std::vector<long long>& terms, const BigInt& denom) {
  Width w;
  for (long long t : terms) w.terms.push_back(unscale(t, denom));
  return w;
}

}  // namespace

TrunkResult min_trunk(const BrickComplex& m, int cap) {
  if (m.kind != Kind::BrickComplex) {
    throw Error("trunk is defined on brick complexes only");
  }
  const int n = m.brick_count();
  if (n > cap) {
    throw Error("brick count " + std::to_string(n) + " exceeds the subset oracle cap " +
                std::to_string(cap));
  }
  const IntWeights iw = scale_weights(m);
  const auto lam = subset_lambdas(m, iw);
  const std::uint32_t size = std::uint32_t(1) << n;

  std::vector<long long> dist(size, 0);
  std::vector<std::uint8_t> pred(size, 0);
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    long long best = LLONG_MAX;
    std::uint8_t arg = 0;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const int b = std::countr_zero(rest);
      const long long d = dist[mask ^ (std::uint32_t(1) << b)];
      if (d < best) {
        best = d;
        arg = static_cast<std::uint8_t>(b);
      }
    }
    dist[mask] = std::max(lam[mask], best);
    pred[mask] = arg;
  }

  TrunkResult result;
  result.trunk = unscale(dist[size - 1], iw.denom);
  result.witness.bricks.assign(n, 0);
  std::uint32_t mask = size - 1;
  for (int k = n - 1; k >= 0; --k) {
    const int b = pred[mask];
    result.witness.bricks[k] = b;
    mask ^= std::uint32_t(1) << b;
  }
  return result;
}

namespace {

struct WidthSearch {
  const BrickComplex& m;
  const IntWeights& iw;
  int n;
  std::vector<int> order;
  std::vector<long long> lam;
  std::vector<long long> best_terms;
  std::vector<int> best_order;
  bool have_best = false;
  bool improved = false;
  std::uint64_t explored = 0;
  std::uint64_t budget = 0;
  bool aborted = false;
  const std::vector<long long>* set_lam = nullptr;  // subset interface weights
  const std::vector<long long>* completion = nullptr;  // minimax completion bound

  void consider_leaf() {
    auto terms = resolved_maxima(lam, n);
    if (!have_best || compare_terms(terms, best_terms) < 0) {
      best_terms = std::move(terms);
      best_order = order;
      have_best = true;
      improved = true;
    }
  }

  void recurse(std::uint32_t mask, int depth) {
    if (aborted) return;
    if (++explored > budget && budget > 0) {
      aborted = true;
      return;
    }
    if (depth == n) {
      consider_leaf();
      return;
    }
    if (have_best && set_lam) {
      // Every completion contains the resolved maxima of the prefix, and
      // its trunk is at least the prefix maximum and at least the best
      // possible maximum over the remaining additions. Prune when even
      // that bound cannot beat the incumbent.
      auto bound = resolved_maxima(lam, depth);
      long long first = (*completion)[mask];
      for (int j = 0; j <= depth; ++j) first = std::max(first, lam[j]);
      if (first > 0 && (bound.empty() || first > bound.front())) {
        bound.insert(std::upper_bound(bound.begin(), bound.end(), first,
                                      std::greater<long long>()),
                     first);
      }
      if (compare_terms(bound, best_terms) >= 0) return;
    }
    // Children in order of the resulting interface weight, then index.
    std::vector<std::pair<long long, int>> children;
    for (int b = 0; b < n; ++b) {
      if ((mask >> b) & 1u) continue;
      long long delta = 0;
      for (const auto& [other, w] : iw.adj[b]) {
        delta += ((mask >> other) & 1u) ? -w : w;
      }
      children.emplace_back(lam[depth] + delta, b);
    }
    std::sort(children.begin(), children.end());
    for (const auto& [value, b] : children) {
      order[depth] = b;
      lam[depth + 1] = value;
      recurse(mask | (std::uint32_t(1) << b), depth + 1);
      if (aborted) return;
    }
  }
};

WidthResult run_width_search(const BrickComplex& m, std::uint64_t budget,
                             const std::optional<Ordering>& incumbent,
                             bool with_bounds) {
  if (m.kind != Kind::BrickComplex) {
    throw Error("width oracles are defined on brick complexes only");
  }
  const int n = m.brick_count();
  const IntWeights iw = scale_weights(m);

  WidthSearch search{m, iw, n, {}, {}, {}, {}};
  search.order.assign(n, 0);
  search.lam.assign(n + 1, 0);
  search.budget = budget;

  std::vector<long long> set_lam;
  std::vector<long long> completion;
  if (with_bounds) {
    set_lam = subset_lambdas(m, iw);
    const std::uint32_t size = std::uint32_t(1) << n;
    completion.assign(size, LLONG_MIN);
    for (std::uint32_t mask = size - 2; mask + 1 != 0; --mask) {
      long long best = LLONG_MAX;
      for (int b = 0; b < n; ++b) {
        if ((mask >> b) & 1u) continue;
        const std::uint32_t next = mask | (std::uint32_t(1) << b);
        best = std::min(best, std::max(set_lam[next], completion[next]));
      }
      completion[mask] = best;
      if (mask == 0) break;
    }
    search.set_lam = &set_lam;
    search.completion = &completion;
  }

  if (incumbent) {
    check_ordering(m, *incumbent);
    std::vector<long long> lam(n + 1, 0);
    std::uint32_t mask = 0;
    for (int k = 0; k < n; ++k) {
      const int b = incumbent->bricks[k];
      long long delta = 0;
      for (const auto& [other, w] : iw.adj[b]) {
        delta += ((mask >> other) & 1u) ? -w : w;
      }
      lam[k + 1] = lam[k] + delta;
      mask |= std::uint32_t(1) << b;
    }
    search.best_terms = resolved_maxima(lam, n);
    search.best_order = incumbent->bricks;
    search.have_best = true;
  }

  search.recurse(0, 0);

  WidthResult result;
  result.width = terms_to_width(search.best_terms, iw.denom);
  result.witness = Ordering{search.best_order};
  result.optimal = !search.aborted;
  result.explored = search.explored;
  return result;
}

}  // namespace

WidthResult min_width_exhaustive(const BrickComplex& m, int cap) {
  if (m.brick_count() > cap) {
    throw Error("brick count " + std::to_string(m.brick_count()) +
                " exceeds the exhaustive cap " + std::to_string(cap) +
                "; use the branch-and-bound mode");
  }
  // No pruning: every ordering is enumerated, so the result is exact by
  // construction.
  return run_width_search(m, 0, std::nullopt, false);
}

WidthResult min_width_bnb(const BrickComplex& m, std::uint64_t node_budget,
                          const std::optional<Ordering>& incumbent) {
  if (m.brick_count() > 22) {
    throw Error("brick count " + std::to_string(m.brick_count()) +
                " exceeds the branch-and-bound cap 22");
  }
  return run_width_search(m, node_budget, incumbent, true);
}

std::string check_status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Verified: return "verified";
    case CheckStatus::Violated: return "violated";
    default: return "skipped-infeasible";
  }
}

namespace {

void require_sum_hypotheses(const BrickComplex& m, const std::string& which) {
  const auto report = validate(m);
  if (m.kind != Kind::BrickComplex || !report.pure || !report.strongly_connected) {
    throw Error(which + " must be a strongly connected brick complex");
  }
  if (!report.closed) {
    throw Error(which + " must be closed");
  }
  if (!report.dimension_even) {
    throw Error(which + " must have even dimension");
  }
  for (const auto& w : m.facet_weights) {
    if (w != 1) throw Error(which + " must have unit weights");
  }
}

// Best ordering found with `pinned` at the last height: exhaustive over the
// remaining bricks at small sizes, otherwise a frozen-tail descent.
Ordering best_ordering_pinned_last(const BrickComplex& m, int pinned,
                                   std::uint64_t budget) {
  const int n = m.brick_count();
  std::vector<int> start;
  for (int b = 0; b < n; ++b) {
    if (b != pinned) start.push_back(b);
  }
  start.push_back(pinned);
  if (n <= 9) {
    // Exhaustive over the free prefix.
    Ordering best{start};
    Width best_width = width_of(m, best);
    std::vector<int> prefix(start.begin(), start.end() - 1);
    std::sort(prefix.begin(), prefix.end());
    do {
      std::vector<int> order = prefix;
      order.push_back(pinned);
      const Ordering candidate{order};
      const Width w = width_of(m, candidate);
      if (compare_widths(w, best_width) < 0) {
        best = candidate;
        best_width = w;
      }
    } while (std::next_permutation(prefix.begin(), prefix.end()));
    return best;
  }
  return thin_search_frozen(m, Ordering{start}, 1, budget, 0).ordering;
}

}  // namespace

SumReport verify_sum_bounds(const BrickComplex& m1, const BrickComplex& m2,
                            const std::string& c1, const std::string& c2,
                            const std::map<long long, long long>& vertex_map,
                            std::uint64_t budget) {
  require_sum_hypotheses(m1, "first summand");
  require_sum_hypotheses(m2, "second summand");

  const SumResult sum = connected_sum_simplicial(m1, m2, c1, c2, vertex_map);
  const BrickComplex& ms = sum.complex;

  SumReport report;

  // Factor orderings shaped like the constructive proof: the removed brick
  // last in the first factor and first in the second.
  const Ordering o1 = best_ordering_pinned_last(m1, m1.brick_index(c1), budget);
  const Ordering o2r = best_ordering_pinned_last(m2, m2.brick_index(c2), budget);
  const Ordering o2 = reverse(o2r);  // width is reversal-invariant
  report.w1 = width_of(m1, o1);
  report.w2 = width_of(m2, o2);
  report.union_width = width_union(report.w1, report.w2);

  // The glued ordering: factor 1 without its last brick, then factor 2
  // without its first, both renamed into the sum.
  std::vector<int> glued;
  for (int k = 0; k + 1 < o1.size(); ++k) {
    glued.push_back(ms.brick_index(sum.brick_map_1.at(m1.brick_ids[o1.bricks[k]])));
  }
  for (int k = 1; k < o2.size(); ++k) {
    glued.push_back(ms.brick_index(sum.brick_map_2.at(m2.brick_ids[o2.bricks[k]])));
  }
  const Ordering glued_ordering{glued};
  report.constructed_width = width_of(ms, glued_ordering);

  // Exact factor widths where feasible.
  std::optional<Width> exact1, exact2;
  if (m1.brick_count() <= 9) {
    exact1 = min_width_exhaustive(m1).width;
  } else {
    const auto bnb = min_width_bnb(m1, budget, o1);
    if (bnb.optimal) exact1 = bnb.width;
  }
  if (m2.brick_count() <= 9) {
    exact2 = min_width_exhaustive(m2).width;
  } else {
    const auto bnb = min_width_bnb(m2, budget, o2r);
    if (bnb.optimal) exact2 = bnb.width;
  }
  report.w1_optimal = exact1 && compare_widths(report.w1, *exact1) == 0;
  report.w2_optimal = exact2 && compare_widths(report.w2, *exact2) == 0;

  // Exact sum width where feasible, seeded with the construction.
  WidthResult sum_width;
  if (ms.brick_count() <= 9) {
    sum_width = min_width_exhaustive(ms);
  } else {
    sum_width = min_width_bnb(ms, budget, glued_ordering);
  }
  if (sum_width.optimal) {
    report.sum_width = sum_width.width;
    report.sum_width_optimal = true;
  }

  // Trunks by subset DP.
  if (m1.brick_count() <= 22 && m2.brick_count() <= 22 && ms.brick_count() <= 22) {
    const auto t1 = min_trunk(m1);
    const auto t2 = min_trunk(m2);
    const auto ts = min_trunk(ms);
    report.tr1 = t1.trunk;
    report.tr2 = t2.trunk;
    report.tr_sum = ts.trunk;
    report.trunks_exact = true;
    if (ts.trunk == std::max(t1.trunk, t2.trunk)) {
      report.trunk_equal_ok = CheckStatus::Verified;
    } else {
      report.trunk_equal_ok = CheckStatus::Violated;
      report.violation_witness = ts.witness;
      report.notes += "sum trunk " + format_rational(ts.trunk) +
                      " differs from the larger factor trunk; ";
    }
  } else {
    report.notes += "trunk DP infeasible at this size; ";
  }

  // Upper bound: the construction must not exceed the union of the factor
  // ordering widths; with exact factor widths this is the full claim.
  if (compare_widths(report.constructed_width, report.union_width) <= 0) {
    report.width_upper_ok = CheckStatus::Verified;
  } else {
    report.width_upper_ok = CheckStatus::Violated;
    report.violation_witness = glued_ordering;
    report.notes += "glued ordering is wider than the factor width union; ";
  }
  if (report.sum_width && exact1 && exact2) {
    if (compare_widths(*report.sum_width, width_union(*exact1, *exact2)) > 0) {
      report.width_upper_ok = CheckStatus::Violated;
      report.violation_witness = sum_width.witness;
      report.notes += "minimal sum width exceeds the union of minimal factor widths; ";
    }
  }

  // Lower bound: the sum is at least as wide as each factor.
  if (report.sum_width && exact1 && exact2) {
    const Width& larger =
        compare_widths(*exact1, *exact2) >= 0 ? *exact1 : *exact2;
    if (compare_widths(larger, *report.sum_width) <= 0) {
      report.width_lower_ok = CheckStatus::Verified;
    } else {
      report.width_lower_ok = CheckStatus::Violated;
      report.violation_witness = sum_width.witness;
      report.notes += "sum width is smaller than a factor width; ";
    }
  } else if (exact1 && exact2 && report.trunks_exact) {
    // Without an exact sum width, compare through the trunk: every ordering
    // of the sum has first width term at least the sum's minimax trunk.
    const Width& larger =
        compare_widths(*exact1, *exact2) >= 0 ? *exact1 : *exact2;
    if (!larger.terms.empty() && report.tr_sum > larger.terms.front()) {
      report.width_lower_ok = CheckStatus::Verified;
    } else if (!larger.terms.empty() && report.tr_sum < larger.terms.front()) {
      report.width_lower_ok = CheckStatus::Violated;
      report.notes += "sum trunk is below the larger factor's first width term; ";
    } else {
      report.notes += "width lower bound undecided without an exact sum width; ";
    }
  } else {
    report.notes += "width lower bound needs exact factor widths; ";
  }

  return report;
}

LambdaProfile generalized_profile(const BrickComplex& m, const Ordering& o) {
  check_ordering(m, o);
  const int n = o.size();
  std::vector<int> inside(m.facet_count(), 0);
  LambdaProfile profile;
  profile.values.assign(n + 1, Rational(0));
  for (int j = 1; j <= n; ++j) {
    for (int f : m.brick_facets[o.bricks[j - 1]]) inside[f]++;
    Rational total(0);
    for (int f = 0; f < m.facet_count(); ++f) {
      const int degree = static_cast<int>(m.facet_bricks[f].size());
      const int in = inside[f];
      if (in > 0 && in < degree) {
        total += Rational(in * (degree - in)) * m.facet_weights[f];
      }
    }
    profile.values[j] = total;
  }
  return profile;
}

Surface generalized_level_set(const BrickComplex& m, const Ordering& o, int j) {
  check_ordering(m, o);
  if (j < 0 || j > o.size()) throw Error("level index out of range");
  std::vector<int> inside(m.facet_count(), 0);
  for (int k = 0; k < j; ++k) {
    for (int f : m.brick_facets[o.bricks[k]]) inside[f]++;
  }
  std::vector<int> facets;
  for (int f = 0; f < m.facet_count(); ++f) {
    const int degree = static_cast<int>(m.facet_bricks[f].size());
    if (inside[f] > 0 && inside[f] < degree) facets.push_back(f);
  }
  return Surface{std::move(facets)};
}

}  // namespace thinpos
