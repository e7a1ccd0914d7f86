#include "thinpos/thinning.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace thinpos {

namespace {

// Search state: the order vector, its inverse, and the profile, kept in
// sync. Positions are 0-based internally; public indices are heights.
struct State {
  std::vector<int> order;
  std::vector<int> pos;
  std::vector<Rational> lambda;
};

State make_state(const BrickComplex& m, const std::vector<int>& order) {
  State st;
  st.order = order;
  st.pos.assign(m.brick_count(), 0);
  const int n = static_cast<int>(order.size());
  for (int k = 0; k < n; ++k) st.pos[order[k]] = k;
  st.lambda.assign(n + 1, Rational(0));
  for (int j = 1; j <= n; ++j) {
    const int brick = order[j - 1];
    Rational sigma(0);
    for (int f : m.brick_facets[brick]) {
      if (!m.interior_facet(f)) continue;
      if (st.pos[m.other_side(f, brick)] < j - 1) {
        sigma -= m.facet_weights[f];
      } else {
        sigma += m.facet_weights[f];
      }
    }
    st.lambda[j] = st.lambda[j - 1] + sigma;
  }
  return st;
}

// Profile change of the swap at 0-based position k: the profile index k + 1
// moves by sigma(A; S) + sigma(B; S) + 2 w(shared facets of A and B), where
// S is the level surface between the swapped bricks.
Rational swap_lhs(const BrickComplex& m, const State& st, int k) {
  const int a = st.order[k];
  const int b = st.order[k + 1];
  Rational lhs(0);
  for (int f : m.brick_facets[a]) {
    if (!m.interior_facet(f)) continue;
    const int other = m.other_side(f, a);
    if (other == b) lhs += 2 * m.facet_weights[f];
    if (st.pos[other] > k) {
      lhs -= m.facet_weights[f];
    } else {
      lhs += m.facet_weights[f];
    }
  }
  for (int f : m.brick_facets[b]) {
    if (!m.interior_facet(f)) continue;
    if (st.pos[m.other_side(f, b)] <= k) {
      lhs -= m.facet_weights[f];
    } else {
      lhs += m.facet_weights[f];
    }
  }
  return lhs;
}

// Maxima of the profile with values[index] virtually replaced by `patched`,
// sorted non-increasingly. index < 0 disables the patch.
Width width_with_patch(const std::vector<Rational>& values, int index,
                       const Rational& patched) {
  auto at = [&](int j) -> const Rational& {
    return j == index ? patched : values[j];
  };
  const int n = static_cast<int>(values.size()) - 1;
  Width w;
  int lo = 0;
  while (lo <= n) {
    int hi = lo;
    while (hi + 1 <= n && at(hi + 1) == at(lo)) ++hi;
    if (lo >= 1 && hi <= n - 1 && at(lo - 1) < at(lo) && at(hi + 1) < at(lo)) {
      w.terms.push_back(at(lo));
    }
    lo = hi + 1;
  }
  std::sort(w.terms.begin(), w.terms.end(), std::greater<Rational>());
  return w;
}

Width width_of_state(const State& st) {
  return width_with_patch(st.lambda, -1, Rational(0));
}

void commit_swap(State& st, int k, const Rational& lhs) {
  std::swap(st.order[k], st.order[k + 1]);
  st.pos[st.order[k]] = k;
  st.pos[st.order[k + 1]] = k + 1;
  st.lambda[k + 1] += lhs;
}

struct OrderHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using OrderSet = std::unordered_set<std::vector<int>, OrderHash>;

bool displacement_holds(const BrickComplex& m, const State& st, int position, int j) {
  const int brick = st.order[position];
  const bool below = position < j;
  Rational on(0), off(0);
  for (int f : m.brick_facets[brick]) {
    if (!m.interior_facet(f)) continue;
    if ((st.pos[m.other_side(f, brick)] < j) != below) {
      on += m.facet_weights[f];
    } else {
      off += m.facet_weights[f];
    }
  }
  return on > off;
}

std::vector<int> displaced_order(const std::vector<int>& order, int from, int to) {
  std::vector<int> next = order;
  const int brick = next[from];
  next.erase(next.begin() + from);
  next.insert(next.begin() + to, brick);
  return next;
}

struct PlateauExit {
  bool found = false;
  std::vector<int> heights;  // swap heights from the start ordering
};

// Breadth-first search over the equal-width plateau around `start`, looking
// for a swap to a strictly thinner ordering. Edges are swaps whose exact
// resulting width does not exceed the plateau width; only the first
// `free_n` heights may move. Newly visited orderings are charged against
// `explored` up to `budget`. With rng null neighbors are scanned in
// ascending height order, which makes the first exit the lexicographically
// least among the shortest ones.
PlateauExit plateau_bfs(const BrickComplex& m, const State& start, const Width& w0,
                        int free_n, std::uint64_t budget, std::uint64_t& explored,
                        bool& truncated, std::mt19937_64* rng) {
  struct Node {
    std::vector<int> order;
    int parent = -1;
    int height = 0;  // swap height leading here from parent
  };
  std::vector<Node> nodes;
  nodes.push_back({start.order, -1, 0});
  OrderSet seen;
  seen.insert(start.order);

  PlateauExit exit;
  std::vector<int> scan;
  for (int k = 0; k + 1 < free_n; ++k) scan.push_back(k);

  for (std::size_t head = 0; head < nodes.size(); ++head) {
    const State st = make_state(m, nodes[head].order);
    if (rng) std::shuffle(scan.begin(), scan.end(), *rng);
    for (int k : scan) {
      const Rational lhs = swap_lhs(m, st, k);
      int cmp = 0;
      if (lhs != 0) {
        cmp = compare_widths(width_with_patch(st.lambda, k + 1, st.lambda[k + 1] + lhs),
                             w0);
      }
      if (cmp > 0) continue;
      if (cmp < 0) {
        exit.found = true;
        for (int at = static_cast<int>(head); at > 0; at = nodes[at].parent) {
          exit.heights.push_back(nodes[at].height);
        }
        std::reverse(exit.heights.begin(), exit.heights.end());
        exit.heights.push_back(k + 1);
        return exit;
      }
      std::vector<int> next = nodes[head].order;
      std::swap(next[k], next[k + 1]);
      if (seen.count(next)) continue;
      if (explored >= budget) {
        truncated = true;
        return exit;
      }
      seen.insert(next);
      ++explored;
      nodes.push_back({std::move(next), static_cast<int>(head), k + 1});
    }
  }
  return exit;
}

}  // namespace

SwapCondition swap_condition(const BrickComplex& m, const Ordering& o, int i) {
  check_ordering(m, o);
  if (i < 1 || i > o.size() - 1) {
    throw Error("swap index " + std::to_string(i) + " out of range 1.." +
                std::to_string(o.size() - 1));
  }
  const State st = make_state(m, o.bricks);
  SwapCondition cond;
  cond.lhs = swap_lhs(m, st, i - 1);
  cond.legal = cond.lhs <= 0;
  cond.strict = cond.lhs < 0;
  return cond;
}

Ordering apply_swap(const Ordering& o, int i) {
  if (i < 1 || i > o.size() - 1) {
    throw Error("swap index " + std::to_string(i) + " out of range 1.." +
                std::to_string(o.size() - 1));
  }
  Ordering next = o;
  std::swap(next.bricks[i - 1], next.bricks[i]);
  return next;
}

bool displacement_condition(const BrickComplex& m, const Ordering& o, int i, int j) {
  check_ordering(m, o);
  if (i < 1 || i > o.size() || j < 0 || j > o.size()) {
    throw Error("displacement indices out of range");
  }
  const State st = make_state(m, o.bricks);
  return displacement_holds(m, st, i - 1, j);
}

Ordering delay(const BrickComplex& m, const Ordering& o, int i, int j) {
  check_ordering(m, o);
  if (!(1 <= i && i < j && j <= o.size())) {
    throw Error("delay needs 1 <= i < j <= N");
  }
  if (!displacement_condition(m, o, i, j)) {
    throw Error("displacement condition fails: the facets of the height-" +
                std::to_string(i) + " brick on the level surface at " +
                std::to_string(j) + " do not outweigh the rest");
  }
  return Ordering{displaced_order(o.bricks, i - 1, j - 1)};
}

Ordering advance(const BrickComplex& m, const Ordering& o, int j, int i) {
  check_ordering(m, o);
  if (!(0 <= j && j + 1 < i && i <= o.size())) {
    throw Error("advance needs 0 <= j and j + 1 < i <= N");
  }
  if (!displacement_condition(m, o, i, j)) {
    throw Error("displacement condition fails: the facets of the height-" +
                std::to_string(i) + " brick on the level surface at " +
                std::to_string(j) + " do not outweigh the rest");
  }
  return Ordering{displaced_order(o.bricks, i - 1, j)};
}

std::string move_kind_name(MoveRecord::Kind kind) {
  switch (kind) {
    case MoveRecord::Kind::Swap: return "swap";
    case MoveRecord::Kind::Delay: return "delay";
    default: return "advance";
  }
}

ThinResult thin_search(const BrickComplex& m, const Ordering& o, std::uint64_t budget,
                       std::uint64_t seed) {
  return thin_search_frozen(m, o, 0, budget, seed);
}

ThinResult thin_search_frozen(const BrickComplex& m, const Ordering& o, int frozen_tail,
                              std::uint64_t budget, std::uint64_t seed) {
  if (m.kind != Kind::BrickComplex) {
    throw Error("thinning is defined on brick complexes only");
  }
  check_ordering(m, o);
  if (frozen_tail < 0 || frozen_tail > o.size()) {
    throw Error("frozen tail out of range");
  }

  ThinResult result;
  State st = make_state(m, o.bricks);
  Width cur = width_of_state(st);
  const int n = static_cast<int>(st.order.size());
  const int free_n = n - frozen_tail;
  std::mt19937_64 rng(seed);
  std::uint64_t explored = 1;
  bool truncated = false;

  // Orderings already occupied at the current width level, to keep the
  // displacement macros from cycling.
  OrderSet level_seen;
  level_seen.insert(st.order);

  while (free_n >= 2 && !truncated) {
    // Strictly width-decreasing swaps first: smallest resulting width,
    // then smallest height.
    int best_k = -1;
    Rational best_lhs;
    Width best_width;
    for (int k = 0; k + 1 < free_n; ++k) {
      const Rational lhs = swap_lhs(m, st, k);
      if (lhs == 0) continue;
      Width w = width_with_patch(st.lambda, k + 1, st.lambda[k + 1] + lhs);
      if (compare_widths(w, cur) >= 0) continue;
      if (best_k == -1 || compare_widths(w, best_width) < 0) {
        best_k = k;
        best_lhs = lhs;
        best_width = w;
      }
    }
    if (best_k != -1) {
      MoveRecord record{MoveRecord::Kind::Swap, best_k + 1, 0, cur, best_width};
      commit_swap(st, best_k, best_lhs);
      cur = std::move(best_width);
      result.moves.push_back(std::move(record));
      level_seen.clear();
      level_seen.insert(st.order);
      ++explored;
      continue;
    }

    // Displacement macros: move a strict shortening move of a maximum level
    // surface next to that maximum. Guaranteed width non-increasing, and
    // they often enable the swap that cuts the maximum.
    bool macro_applied = false;
    std::vector<std::pair<int, int>> plateaus;  // maxima [lo, hi]
    {
      int lo = 0;
      while (lo <= n) {
        int hi = lo;
        while (hi + 1 <= n && st.lambda[hi + 1] == st.lambda[lo]) ++hi;
        if (lo >= 1 && hi <= n - 1 && st.lambda[lo - 1] < st.lambda[lo] &&
            st.lambda[hi + 1] < st.lambda[lo]) {
          plateaus.emplace_back(lo, hi);
        }
        lo = hi + 1;
      }
    }
    for (const auto& [lo, hi] : plateaus) {
      if (macro_applied || truncated) break;
      for (int t = lo; t <= std::min(hi, free_n) && !macro_applied && !truncated; ++t) {
        for (int h = 1; h <= free_n && !macro_applied && !truncated; ++h) {
          if (h == t || h == t + 1) continue;  // adjacent cases belong to swaps
          // Strict shortening move of the level surface at t?
          const int brick = st.order[h - 1];
          const bool below = h - 1 < t;
          Rational on(0), off(0);
          for (int f : m.brick_facets[brick]) {
            if (!m.interior_facet(f)) continue;
            if ((st.pos[m.other_side(f, brick)] < t) != below) {
              on += m.facet_weights[f];
            } else {
              off += m.facet_weights[f];
            }
          }
          if (!(on > off)) continue;  // not strict (or not touching)
          std::vector<int> next = h < t ? displaced_order(st.order, h - 1, t - 1)
                                        : displaced_order(st.order, h - 1, t);
          if (level_seen.count(next)) continue;
          State cand = make_state(m, next);
          Width w = width_of_state(cand);
          const int cmp = compare_widths(w, cur);
          if (cmp > 0) {
            throw Error("internal error: displacement move increased width");
          }
          if (explored >= budget) {
            truncated = true;
            break;
          }
          result.moves.push_back({h < t ? MoveRecord::Kind::Delay : MoveRecord::Kind::Advance,
                                  h, t, cur, w});
          st = std::move(cand);
          if (cmp < 0) {
            cur = std::move(w);
            level_seen.clear();
          }
          level_seen.insert(st.order);
          ++explored;
          macro_applied = true;
        }
      }
    }
    if (macro_applied) continue;
    if (truncated) break;

    // Stuck: explore the equal-width plateau for an exit.
    PlateauExit exit = plateau_bfs(m, st, cur, free_n, budget, explored, truncated, &rng);
    if (!exit.found) break;
    for (int height : exit.heights) {
      const int k = height - 1;
      const Rational lhs = swap_lhs(m, st, k);
      MoveRecord record{MoveRecord::Kind::Swap, height, 0, cur, Width{}};
      commit_swap(st, k, lhs);
      cur = width_of_state(st);
      record.width_after = cur;
      result.moves.push_back(std::move(record));
    }
    level_seen.clear();
    level_seen.insert(st.order);
  }

  result.ordering = Ordering{st.order};
  result.width = std::move(cur);
  result.explored = explored;
  return result;
}

std::string certificate_status_name(ThinCertificate::Status status) {
  switch (status) {
    case ThinCertificate::Status::LocallyThin: return "locally-thin";
    case ThinCertificate::Status::NotLocallyThin: return "not-locally-thin";
    default: return "unknown";
  }
}

ThinCertificate certify_locally_thin(const BrickComplex& m, const Ordering& o,
                                     std::uint64_t budget) {
  if (m.kind != Kind::BrickComplex) {
    throw Error("thinning is defined on brick complexes only");
  }
  check_ordering(m, o);

  ThinCertificate cert;
  cert.budget = budget;
  if (o.size() < 2) {
    cert.status = ThinCertificate::Status::LocallyThin;
    cert.explored = 1;
    return cert;
  }
  const State start = make_state(m, o.bricks);
  const Width w0 = width_of_state(start);
  std::uint64_t explored = 1;
  bool truncated = false;
  if (budget == 0) {
    cert.status = ThinCertificate::Status::Unknown;
    return cert;
  }
  PlateauExit exit =
      plateau_bfs(m, start, w0, o.size(), budget, explored, truncated, nullptr);
  cert.explored = explored;
  if (exit.found) {
    cert.status = ThinCertificate::Status::NotLocallyThin;
    cert.witness = std::move(exit.heights);
  } else if (truncated) {
    cert.status = ThinCertificate::Status::Unknown;
  } else {
    cert.status = ThinCertificate::Status::LocallyThin;
  }
  return cert;
}

std::string surface_class_name(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::Stable: return "stable";
    case SurfaceClass::Unstable: return "unstable";
    default: return "unclassified";
  }
}

std::vector<ExtractedSurface> extract_minimal_surfaces(const BrickComplex& m,
                                                       const Ordering& o,
                                                       bool certified,
                                                       int component_cap) {
  const auto profile = lambda_profile(m, o);
  std::vector<int> pos(m.brick_count(), 0);
  for (int k = 0; k < o.size(); ++k) pos[o.bricks[k]] = k;

  std::vector<ExtractedSurface> out;
  for (const auto& e : extrema(profile)) {
    ExtractedSurface x;
    x.extremum = e;
    x.surface = level_set(m, o, e.t);
    if (e.kind == Extremum::Kind::Minimum) {
      if (is_stable_minimal(m, x.surface)) {
        x.classification = SurfaceClass::Stable;
        x.conforms = true;
      }
    } else {
      if (is_stable_minimal(m, x.surface)) {
        // A maximum representative always has a strict shortening move, so
        // this branch marks non-conformance rather than success.
        x.classification = SurfaceClass::Stable;
      } else {
        // The ordering's own below/above split is the natural candidate.
        Partition split;
        split.side.resize(m.brick_count());
        for (int b = 0; b < m.brick_count(); ++b) split.side[b] = pos[b] < e.t ? 0 : 1;
        if (check_unstable(m, x.surface, split).ok) {
          x.classification = SurfaceClass::Unstable;
          x.partition = std::move(split);
        } else {
          auto search = find_unstable_partition(m, x.surface, component_cap);
          if (search.status == UnstableSearch::Status::Found) {
            x.classification = SurfaceClass::Unstable;
            x.partition = std::move(search.partition);
          }
        }
      }
      x.conforms = x.classification == SurfaceClass::Unstable;
    }
    if (certified && !x.conforms) {
      throw Error("internal error: level surface at height " + std::to_string(e.t) +
                  " of a certified locally thin ordering classifies as " +
                  surface_class_name(x.classification));
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace thinpos
