#include "thinpos/surface.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace thinpos {

bool Surface::contains(int facet) const {
  return std::binary_search(facets.begin(), facets.end(), facet);
}

Surface make_surface(std::vector<int> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  return Surface{std::move(facets)};
}

Surface surface_from_ids(const BrickComplex& m, const std::vector<std::string>& ids) {
  std::vector<int> facets;
  facets.reserve(ids.size());
  for (const auto& id : ids) facets.push_back(m.facet_index(id));
  return make_surface(std::move(facets));
}

Weight surface_weight(const BrickComplex& m, const Surface& s) {
  Weight total(0);
  for (int f : s.facets) {
    if (f < 0 || f >= m.facet_count()) throw Error("facet index out of range");
    total += m.facet_weights[f];
  }
  return total;
}

bool is_proper(const BrickComplex& m, const Surface& s) {
  if (m.kind != Kind::BrickComplex) {
    throw Error("properness is defined on brick complexes only");
  }
  for (int f : s.facets) {
    if (!m.interior_facet(f)) return false;
  }
  // Ridge degrees within s, and which ridges touch the complex boundary.
  std::map<int, int> degree;
  for (int f : s.facets) {
    for (int r : m.facet_ridges[f]) degree[r]++;
  }
  if (degree.empty()) return true;
  std::set<int> on_boundary;
  for (int f = 0; f < m.facet_count(); ++f) {
    if (!m.boundary_facet(f)) continue;
    for (int r : m.facet_ridges[f]) on_boundary.insert(r);
  }
  for (const auto& [r, deg] : degree) {
    if (on_boundary.count(r)) continue;
    if (deg % 2 != 0) return false;
  }
  return true;
}

Rational strength(const BrickComplex& m, int a, const Surface& s) {
  if (a < 0 || a >= m.brick_count()) throw Error("brick index out of range");
  Rational sigma(0);
  for (int f : m.brick_facets[a]) {
    if (!m.interior_facet(f)) continue;
    if (s.contains(f)) {
      sigma -= m.facet_weights[f];
    } else {
      sigma += m.facet_weights[f];
    }
  }
  return sigma;
}

Surface vary(const BrickComplex& m, const Surface& s, int a) {
  if (a < 0 || a >= m.brick_count()) throw Error("brick index out of range");
  // The facets of `a` on s leave, its other interior facets enter: a
  // symmetric difference with the interior boundary of `a`.
  std::set<int> members(s.facets.begin(), s.facets.end());
  for (int f : m.brick_facets[a]) {
    if (!m.interior_facet(f)) continue;
    if (auto it = members.find(f); it != members.end()) {
      members.erase(it);
    } else {
      members.insert(f);
    }
  }
  return Surface{std::vector<int>(members.begin(), members.end())};
}

std::vector<ShorteningMove> shortening_moves(const BrickComplex& m, const Surface& s) {
  std::vector<ShorteningMove> moves;
  for (int a = 0; a < m.brick_count(); ++a) {
    bool touches = false;
    Rational sigma(0);
    for (int f : m.brick_facets[a]) {
      if (!m.interior_facet(f)) continue;
      if (s.contains(f)) {
        touches = true;
        sigma -= m.facet_weights[f];
      } else {
        sigma += m.facet_weights[f];
      }
    }
    if (touches && sigma <= 0) {
      moves.push_back({a, sigma, sigma < 0});
    }
  }
  return moves;
}

bool is_stable_minimal(const BrickComplex& m, const Surface& s) {
  if (s.empty()) return false;
  for (const auto& move : shortening_moves(m, s)) {
    if (move.strict) return false;
  }
  return true;
}

std::vector<int> Partition::side_bricks(int which) const {
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(side.size()); ++b) {
    if (side[b] == which) out.push_back(b);
  }
  return out;
}

namespace {

// Weight of the facets shared by two bricks that lie on s.
Weight shared_surface_weight(const BrickComplex& m, int a, int b, const Surface& s) {
  Weight total(0);
  for (int f : m.brick_facets[a]) {
    if (m.other_side(f, a) == b && s.contains(f)) total += m.facet_weights[f];
  }
  return total;
}

UnstableCheck check_unstable_with_moves(const BrickComplex& m, const Surface& s,
                                        const Partition& p,
                                        const std::vector<ShorteningMove>& moves) {
  UnstableCheck result;

  // (1) Facets shared across the partition must lie on s.
  for (int f = 0; f < m.facet_count(); ++f) {
    if (!m.interior_facet(f)) continue;
    const int u = m.facet_bricks[f][0];
    const int v = m.facet_bricks[f][1];
    if (p.side[u] != p.side[v] && !s.contains(f)) {
      result.failed_condition = 1;
      result.witness = "bricks " + m.brick_ids[u] + " and " + m.brick_ids[v] +
                       " lie on opposite sides but share facet " + m.facet_ids[f] +
                       " off the surface";
      return result;
    }
  }

  // (2) Both sides shorten, at least one strictly.
  std::vector<const ShorteningMove*> side_moves[2];
  bool any_strict = false;
  for (const auto& move : moves) {
    side_moves[p.side[move.brick]].push_back(&move);
    any_strict = any_strict || move.strict;
  }
  for (int which = 0; which < 2; ++which) {
    if (side_moves[which].empty()) {
      result.failed_condition = 2;
      result.witness = std::string("side ") + (which == 0 ? "A" : "B") +
                       " contains no shortening move";
      return result;
    }
  }
  if (!any_strict) {
    result.failed_condition = 2;
    result.witness = "no strict shortening move on either side";
    return result;
  }

  // (3) Every strict move is matched across the partition.
  for (int which = 0; which < 2; ++which) {
    for (const auto* a : side_moves[which]) {
      if (!a->strict) continue;
      bool matched = false;
      for (const auto* b : side_moves[1 - which]) {
        if (2 * shared_surface_weight(m, a->brick, b->brick, s) >=
            -(a->sigma) - (b->sigma)) {
          matched = true;
          break;
        }
      }
      if (!matched) {
        result.failed_condition = 3;
        result.witness = "strict move " + m.brick_ids[a->brick] +
                         " has no partner across the partition";
        return result;
      }
    }
  }

  // (4) Every strict/strict cross pair satisfies the weight bound.
  for (const auto* a : side_moves[0]) {
    if (!a->strict) continue;
    for (const auto* b : side_moves[1]) {
      if (!b->strict) continue;
      if (2 * shared_surface_weight(m, a->brick, b->brick, s) <
          -(a->sigma) - (b->sigma)) {
        result.failed_condition = 4;
        result.witness = "strict moves " + m.brick_ids[a->brick] + " and " +
                         m.brick_ids[b->brick] + " share too little surface weight";
        return result;
      }
    }
  }

  result.ok = true;
  return result;
}

}  // namespace

UnstableCheck check_unstable(const BrickComplex& m, const Surface& s, const Partition& p) {
  if (static_cast<int>(p.side.size()) != m.brick_count()) {
    throw Error("partition must assign a side to every brick");
  }
  int counts[2] = {0, 0};
  for (int b = 0; b < m.brick_count(); ++b) {
    if (p.side[b] != 0 && p.side[b] != 1) throw Error("partition sides must be 0 or 1");
    counts[p.side[b]]++;
  }
  if (counts[0] == 0 || counts[1] == 0) {
    throw Error("both sides of the partition must be non-empty");
  }
  return check_unstable_with_moves(m, s, p, shortening_moves(m, s));
}

UnstableSearch find_unstable_partition(const BrickComplex& m, const Surface& s,
                                       int component_cap) {
  UnstableSearch search;

  // Condition (1) forces the components of the dual graph cut along s to be
  // monochromatic, so only their bipartitions can certify.
  std::vector<int> parent(m.brick_count());
  for (int b = 0; b < m.brick_count(); ++b) parent[b] = b;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f = 0; f < m.facet_count(); ++f) {
    if (!m.interior_facet(f) || s.contains(f)) continue;
    parent[find(m.facet_bricks[f][0])] = find(m.facet_bricks[f][1]);
  }
  std::vector<int> component(m.brick_count(), -1);
  int components = 0;
  for (int b = 0; b < m.brick_count(); ++b) {
    const int root = find(b);
    if (component[root] == -1) component[root] = components++;
    component[b] = component[root];
  }
  if (components < 2) return search;  // None
  if (components > component_cap) {
    search.status = UnstableSearch::Status::Undetermined;
    return search;
  }

  const auto moves = shortening_moves(m, s);
  const std::uint32_t total = 1u << components;
  std::optional<std::vector<int>> best;
  for (std::uint32_t mask = 1; mask + 1 < total; ++mask) {
    // Fix the first brick's side to 0; the complement certifies iff the
    // mask does, so this halves the work and yields the least witness.
    if ((mask >> component[0]) & 1u) continue;
    Partition p;
    p.side.resize(m.brick_count());
    for (int b = 0; b < m.brick_count(); ++b) {
      p.side[b] = static_cast<int>((mask >> component[b]) & 1u);
    }
    if (check_unstable_with_moves(m, s, p, moves).ok) {
      if (!best || p.side < *best) best = p.side;
    }
  }
  if (best) {
    search.status = UnstableSearch::Status::Found;
    search.partition = Partition{*best};
  }
  return search;
}

bool is_embedded(const BrickComplex& m, const Surface& s) {
  std::map<int, int> degree;
  for (int f : s.facets) {
    for (int r : m.facet_ridges[f]) degree[r]++;
  }
  for (const auto& [r, deg] : degree) {
    if (deg != 2) return false;
  }
  return true;
}

bool is_separating(const BrickComplex& m, const Surface& s) {
  if (m.brick_count() < 2) return false;
  std::vector<int> parent(m.brick_count());
  for (int b = 0; b < m.brick_count(); ++b) parent[b] = b;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f = 0; f < m.facet_count(); ++f) {
    if (!m.interior_facet(f) || s.contains(f)) continue;
    parent[find(m.facet_bricks[f][0])] = find(m.facet_bricks[f][1]);
  }
  for (int b = 1; b < m.brick_count(); ++b) {
    if (find(b) != find(0)) return true;
  }
  return false;
}

ShorteningComplex shortening_complex(const BrickComplex& m, const Surface& s) {
  ShorteningComplex d;
  const auto moves = shortening_moves(m, s);
  for (const auto& move : moves) d.bricks.push_back(move.brick);
  for (std::size_t a = 0; a < d.bricks.size(); ++a) {
    for (std::size_t b = a + 1; b < d.bricks.size(); ++b) {
      bool share_on_s = false;
      for (int f : m.brick_facets[d.bricks[a]]) {
        if (m.other_side(f, d.bricks[a]) == d.bricks[b] && s.contains(f)) {
          share_on_s = true;
          break;
        }
      }
      if (!share_on_s) d.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return d;
}

std::string index_name(TopologicalIndex index) {
  switch (index) {
    case TopologicalIndex::Index0: return "index0";
    case TopologicalIndex::Index1: return "index1";
    default: return "at-least-2";
  }
}

TopologicalIndex topological_index01(const BrickComplex& m, const Surface& s) {
  const auto d = shortening_complex(m, s);
  if (d.bricks.empty()) return TopologicalIndex::Index0;
  std::vector<int> parent(d.bricks.size());
  for (std::size_t v = 0; v < d.bricks.size(); ++v) parent[v] = static_cast<int>(v);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : d.edges) parent[find(a)] = find(b);
  for (std::size_t v = 1; v < d.bricks.size(); ++v) {
    if (find(static_cast<int>(v)) != find(0)) return TopologicalIndex::Index1;
  }
  return TopologicalIndex::AtLeast2;
}

}  // namespace thinpos
