#include "thinpos/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace thinpos {

std::string kind_name(Kind kind) {
  return kind == Kind::BrickComplex ? "brick-complex" : "non-pure";
}

Kind kind_from_name(const std::string& name) {
  if (name == "brick-complex") return Kind::BrickComplex;
  if (name == "non-pure") return Kind::NonPure;
  throw Error("unknown kind \"" + name + "\" (expected brick-complex or non-pure)");
}

std::string vertex_tuple_id(const std::vector<long long>& tuple) {
  std::string out;
  for (std::size_t k = 0; k < tuple.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(tuple[k]);
  }
  return out;
}

std::vector<long long> parse_vertex_tuple(const std::string& id) {
  std::vector<long long> out;
  std::stringstream stream(id);
  std::string piece;
  while (std::getline(stream, piece, ',')) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(piece, &used);
    } catch (const std::exception&) {
      throw Error("not a vertex tuple: \"" + id + "\"");
    }
    if (used != piece.size()) throw Error("not a vertex tuple: \"" + id + "\"");
    out.push_back(value);
  }
  if (out.empty()) throw Error("not a vertex tuple: \"" + id + "\"");
  return out;
}

int BrickComplex::other_side(int facet, int brick) const {
  const auto& sides = facet_bricks[facet];
  if (sides.size() != 2) return -1;
  if (sides[0] == brick) return sides[1];
  if (sides[1] == brick) return sides[0];
  return -1;
}

int BrickComplex::brick_index(const std::string& id) const {
  for (int b = 0; b < brick_count(); ++b) {
    if (brick_ids[b] == id) return b;
  }
  throw Error("unknown brick \"" + id + "\"");
}

int BrickComplex::facet_index(const std::string& id) const {
  for (int f = 0; f < facet_count(); ++f) {
    if (facet_ids[f] == id) return f;
  }
  throw Error("unknown facet \"" + id + "\"");
}

BrickComplex from_simplices(const std::vector<std::vector<long long>>& simplices,
                            const std::map<std::vector<long long>, Weight>& weights,
                            Kind kind) {
  if (simplices.empty()) throw Error("empty simplex list");
  const std::size_t arity = simplices.front().size();
  if (arity < 2) throw Error("simplices need at least two vertices");

  BrickComplex m;
  m.dimension = static_cast<int>(arity) - 1;
  m.kind = kind;
  m.simplicial = true;

  std::set<std::vector<long long>> seen;
  for (auto tuple : simplices) {
    if (tuple.size() != arity) throw Error("simplices of mixed dimension");
    std::sort(tuple.begin(), tuple.end());
    if (std::adjacent_find(tuple.begin(), tuple.end()) != tuple.end()) {
      throw Error("repeated vertex in simplex " + vertex_tuple_id(tuple));
    }
    if (!seen.insert(tuple).second) {
      throw Error("duplicate simplex " + vertex_tuple_id(tuple));
    }
    m.brick_vertices.push_back(tuple);
    m.brick_ids.push_back(vertex_tuple_id(tuple));
  }

  std::map<std::vector<long long>, int> facet_of_tuple;
  m.brick_facets.resize(m.brick_count());
  for (int b = 0; b < m.brick_count(); ++b) {
    const auto& tuple = m.brick_vertices[b];
    for (std::size_t drop = 0; drop < tuple.size(); ++drop) {
      std::vector<long long> face;
      face.reserve(tuple.size() - 1);
      for (std::size_t k = 0; k < tuple.size(); ++k) {
        if (k != drop) face.push_back(tuple[k]);
      }
      auto [it, inserted] = facet_of_tuple.try_emplace(face, m.facet_count());
      if (inserted) {
        m.facet_vertices.push_back(face);
        m.facet_ids.push_back(vertex_tuple_id(face));
        m.facet_bricks.emplace_back();
      }
      m.brick_facets[b].push_back(it->second);
      m.facet_bricks[it->second].push_back(b);
    }
    std::sort(m.brick_facets[b].begin(), m.brick_facets[b].end());
  }

  if (kind == Kind::BrickComplex) {
    for (int f = 0; f < m.facet_count(); ++f) {
      if (m.facet_bricks[f].size() > 2) {
        throw Error("facet " + m.facet_ids[f] + " lies on " +
                    std::to_string(m.facet_bricks[f].size()) +
                    " bricks; a brick complex allows at most two");
      }
    }
  }

  m.facet_ridges.resize(m.facet_count());
  if (m.dimension >= 2) {
    std::map<std::vector<long long>, int> ridge_of_tuple;
    for (int f = 0; f < m.facet_count(); ++f) {
      const auto& tuple = m.facet_vertices[f];
      for (std::size_t drop = 0; drop < tuple.size(); ++drop) {
        std::vector<long long> face;
        face.reserve(tuple.size() - 1);
        for (std::size_t k = 0; k < tuple.size(); ++k) {
          if (k != drop) face.push_back(tuple[k]);
        }
        auto [it, inserted] = ridge_of_tuple.try_emplace(face, m.ridge_count());
        if (inserted) {
          m.ridge_vertices.push_back(face);
          m.ridge_ids.push_back(vertex_tuple_id(face));
        }
        m.facet_ridges[f].push_back(it->second);
      }
      std::sort(m.facet_ridges[f].begin(), m.facet_ridges[f].end());
    }
  }

  m.facet_weights.assign(m.facet_count(), Weight(1));
  for (const auto& [tuple, weight] : weights) {
    auto sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    auto it = facet_of_tuple.find(sorted);
    if (it == facet_of_tuple.end()) {
      throw Error("weight given for unknown facet " + vertex_tuple_id(sorted));
    }
    if (weight < 0) {
      throw Error("negative weight for facet " + vertex_tuple_id(sorted));
    }
    m.facet_weights[it->second] = weight;
  }
  return m;
}

PseudomanifoldReport validate(const BrickComplex& m) {
  PseudomanifoldReport report;
  report.pure = true;
  report.closed = true;
  for (int f = 0; f < m.facet_count(); ++f) {
    const auto incidence = m.facet_bricks[f].size();
    if (incidence > 2) report.pure = false;
    if (incidence < 2) report.closed = false;
  }
  report.dimension_even = m.dimension % 2 == 0;

  std::vector<int> parent(m.brick_count());
  for (int b = 0; b < m.brick_count(); ++b) parent[b] = b;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int f = 0; f < m.facet_count(); ++f) {
    const auto& sides = m.facet_bricks[f];
    for (std::size_t k = 1; k < sides.size(); ++k) {
      parent[find(sides[k])] = find(sides[0]);
    }
  }
  report.strongly_connected = m.brick_count() >= 1;
  for (int b = 1; b < m.brick_count(); ++b) {
    if (find(b) != find(0)) report.strongly_connected = false;
  }
  return report;
}

DualGraph dual_graph(const BrickComplex& m) {
  if (m.kind != Kind::BrickComplex) {
    throw Error("dual graph requires a brick complex; this complex is non-pure");
  }
  DualGraph g;
  g.brick_count = m.brick_count();
  for (int f = 0; f < m.facet_count(); ++f) {
    if (!m.interior_facet(f)) continue;
    g.edges.push_back({m.facet_bricks[f][0], m.facet_bricks[f][1], f});
  }
  return g;
}

namespace {

void require_closed_summand(const BrickComplex& m, const std::string& which) {
  if (m.kind != Kind::BrickComplex) {
    throw Error(which + " must be a brick complex");
  }
  const auto report = validate(m);
  if (!report.pure || !report.closed || !report.strongly_connected) {
    throw Error(which + " must be closed, pure and strongly connected");
  }
}

}  // namespace

SumResult connected_sum(const BrickComplex& m1, const BrickComplex& m2,
                        const std::string& c1, const std::string& c2,
                        const std::map<std::string, std::string>& facet_map) {
  require_closed_summand(m1, "first summand");
  require_closed_summand(m2, "second summand");
  if (m1.dimension != m2.dimension) {
    throw Error("dimension mismatch: " + std::to_string(m1.dimension) + " vs " +
                std::to_string(m2.dimension));
  }
  const int b1 = m1.brick_index(c1);
  const int b2 = m2.brick_index(c2);
  const auto& boundary1 = m1.brick_facets[b1];
  const auto& boundary2 = m2.brick_facets[b2];
  if (boundary1.size() != boundary2.size()) {
    throw Error("removed bricks have different facet counts");
  }
  if (facet_map.size() != boundary1.size()) {
    throw Error("facet map must cover every facet of brick " + c1);
  }

  std::map<int, int> fmap;  // m1 facet -> m2 facet
  std::set<int> image;
  for (const auto& [from, to] : facet_map) {
    const int fi = m1.facet_index(from);
    if (!std::binary_search(boundary1.begin(), boundary1.end(), fi)) {
      throw Error("facet " + from + " is not on brick " + c1);
    }
    const int gi = m2.facet_index(to);
    if (!std::binary_search(boundary2.begin(), boundary2.end(), gi)) {
      throw Error("facet " + to + " is not on brick " + c2);
    }
    if (!image.insert(gi).second) {
      throw Error("facet map is not injective at " + to);
    }
    if (m1.facet_weights[fi] != m2.facet_weights[gi]) {
      throw Error("weights disagree across the glued facets " + from + " and " + to);
    }
    fmap[fi] = gi;
  }

  // Ridge identification induced by the facet map: a ridge of the removed
  // brick's boundary is matched with the unique common ridge of the image
  // facets.
  std::map<int, std::vector<int>> ridge_facets1;
  for (int fi : boundary1) {
    for (int r : m1.facet_ridges[fi]) ridge_facets1[r].push_back(fi);
  }
  std::map<int, int> rmap;  // m1 ridge -> m2 ridge
  std::set<int> ridge_image;
  for (const auto& [r, facets] : ridge_facets1) {
    if (facets.size() < 2) {
      throw Error("boundary of brick " + c1 + " is not ridge-closed at ridge " +
                  m1.ridge_ids[r]);
    }
    std::map<int, std::size_t> counts;
    for (int fi : facets) {
      for (int rr : m2.facet_ridges[fmap[fi]]) counts[rr]++;
    }
    int candidate = -1;
    for (const auto& [rr, count] : counts) {
      if (count == facets.size()) {
        if (candidate != -1) {
          throw Error("facet map identifies ridge " + m1.ridge_ids[r] + " ambiguously");
        }
        candidate = rr;
      }
    }
    if (candidate == -1) {
      throw Error("facet map does not identify ridge " + m1.ridge_ids[r] +
                  " with any ridge of brick " + c2);
    }
    if (!ridge_image.insert(candidate).second) {
      throw Error("facet map folds two ridges of brick " + c1 + " together");
    }
    rmap[r] = candidate;
  }

  // Assemble: every piece of m1 survives; m2 pieces outside the glued
  // boundary are appended under a "2:" prefix.
  SumResult result;
  BrickComplex& sum = result.complex;
  sum.dimension = m1.dimension;
  sum.kind = Kind::BrickComplex;
  sum.simplicial = false;

  std::vector<int> brick_new1(m1.brick_count(), -1);
  for (int b = 0; b < m1.brick_count(); ++b) {
    if (b == b1) continue;
    brick_new1[b] = sum.brick_count();
    sum.brick_ids.push_back(m1.brick_ids[b]);
    result.brick_map_1[m1.brick_ids[b]] = m1.brick_ids[b];
  }
  std::vector<int> brick_new2(m2.brick_count(), -1);
  for (int b = 0; b < m2.brick_count(); ++b) {
    if (b == b2) continue;
    brick_new2[b] = sum.brick_count();
    sum.brick_ids.push_back("2:" + m2.brick_ids[b]);
    result.brick_map_2[m2.brick_ids[b]] = "2:" + m2.brick_ids[b];
  }

  std::vector<int> ridge_new1(m1.ridge_count(), -1);
  for (int r = 0; r < m1.ridge_count(); ++r) {
    ridge_new1[r] = sum.ridge_count();
    sum.ridge_ids.push_back(m1.ridge_ids[r]);
  }
  std::vector<int> ridge_new2(m2.ridge_count(), -1);
  for (const auto& [r, rr] : rmap) ridge_new2[rr] = ridge_new1[r];
  for (int r = 0; r < m2.ridge_count(); ++r) {
    if (ridge_new2[r] != -1) continue;
    ridge_new2[r] = sum.ridge_count();
    sum.ridge_ids.push_back("2:" + m2.ridge_ids[r]);
  }

  std::vector<int> facet_new1(m1.facet_count(), -1);
  for (int f = 0; f < m1.facet_count(); ++f) {
    facet_new1[f] = sum.facet_count();
    sum.facet_ids.push_back(m1.facet_ids[f]);
    sum.facet_weights.push_back(m1.facet_weights[f]);
    std::vector<int> ridges;
    for (int r : m1.facet_ridges[f]) ridges.push_back(ridge_new1[r]);
    std::sort(ridges.begin(), ridges.end());
    sum.facet_ridges.push_back(ridges);
  }
  std::vector<int> facet_new2(m2.facet_count(), -1);
  for (const auto& [f, g] : fmap) facet_new2[g] = facet_new1[f];
  for (int f = 0; f < m2.facet_count(); ++f) {
    if (facet_new2[f] != -1) continue;
    facet_new2[f] = sum.facet_count();
    sum.facet_ids.push_back("2:" + m2.facet_ids[f]);
    sum.facet_weights.push_back(m2.facet_weights[f]);
    std::vector<int> ridges;
    for (int r : m2.facet_ridges[f]) ridges.push_back(ridge_new2[r]);
    std::sort(ridges.begin(), ridges.end());
    sum.facet_ridges.push_back(ridges);
  }

  sum.brick_facets.resize(sum.brick_count());
  for (int b = 0; b < m1.brick_count(); ++b) {
    if (b == b1) continue;
    for (int f : m1.brick_facets[b]) sum.brick_facets[brick_new1[b]].push_back(facet_new1[f]);
  }
  for (int b = 0; b < m2.brick_count(); ++b) {
    if (b == b2) continue;
    for (int f : m2.brick_facets[b]) sum.brick_facets[brick_new2[b]].push_back(facet_new2[f]);
  }
  sum.facet_bricks.resize(sum.facet_count());
  for (int b = 0; b < sum.brick_count(); ++b) {
    std::sort(sum.brick_facets[b].begin(), sum.brick_facets[b].end());
    for (int f : sum.brick_facets[b]) sum.facet_bricks[f].push_back(b);
  }
  for (auto& sides : sum.facet_bricks) std::sort(sides.begin(), sides.end());

  for (int f : boundary1) result.seam.push_back(facet_new1[f]);
  std::sort(result.seam.begin(), result.seam.end());
  return result;
}

SumResult connected_sum_simplicial(const BrickComplex& m1, const BrickComplex& m2,
                                   const std::string& c1, const std::string& c2,
                                   const std::map<long long, long long>& vertex_map) {
  if (!m1.simplicial || !m2.simplicial) {
    throw Error("simplicial connected sum requires simplex provenance on both sides");
  }
  require_closed_summand(m1, "first summand");
  require_closed_summand(m2, "second summand");
  if (m1.dimension != m2.dimension) {
    throw Error("dimension mismatch: " + std::to_string(m1.dimension) + " vs " +
                std::to_string(m2.dimension));
  }
  const int b1 = m1.brick_index(c1);
  const int b2 = m2.brick_index(c2);
  const auto& verts1 = m1.brick_vertices[b1];
  const auto& verts2 = m2.brick_vertices[b2];

  std::set<long long> domain(verts1.begin(), verts1.end());
  std::set<long long> codomain(verts2.begin(), verts2.end());
  std::set<long long> keys, values;
  for (const auto& [v, w] : vertex_map) {
    keys.insert(v);
    values.insert(w);
  }
  if (keys != domain || values != codomain || vertex_map.size() != verts1.size()) {
    throw Error("vertex map must be a bijection from the vertices of " + c1 +
                " onto the vertices of " + c2);
  }

  std::map<long long, long long> inverse;
  for (const auto& [v, w] : vertex_map) inverse[w] = v;

  long long fresh = 0;
  for (const auto& tuple : m1.brick_vertices) {
    for (long long v : tuple) fresh = std::max(fresh, v + 1);
  }
  std::map<long long, long long> relabel = inverse;
  std::set<long long> rest;
  for (const auto& tuple : m2.brick_vertices) {
    for (long long v : tuple) {
      if (!codomain.count(v)) rest.insert(v);
    }
  }
  for (long long v : rest) relabel[v] = fresh++;

  auto relabel_tuple = [&](std::vector<long long> tuple) {
    for (auto& v : tuple) v = relabel.at(v);
    std::sort(tuple.begin(), tuple.end());
    return tuple;
  };

  SumResult result;
  std::vector<std::vector<long long>> simplices;
  for (int b = 0; b < m1.brick_count(); ++b) {
    if (b == b1) continue;
    simplices.push_back(m1.brick_vertices[b]);
    result.brick_map_1[m1.brick_ids[b]] = m1.brick_ids[b];
  }
  for (int b = 0; b < m2.brick_count(); ++b) {
    if (b == b2) continue;
    auto tuple = relabel_tuple(m2.brick_vertices[b]);
    simplices.push_back(tuple);
    result.brick_map_2[m2.brick_ids[b]] = vertex_tuple_id(tuple);
  }

  std::map<std::vector<long long>, Weight> weights;
  for (int f = 0; f < m1.facet_count(); ++f) {
    weights[m1.facet_vertices[f]] = m1.facet_weights[f];
  }
  const auto& seam_facets2 = m2.brick_facets[b2];
  for (int f = 0; f < m2.facet_count(); ++f) {
    auto tuple = relabel_tuple(m2.facet_vertices[f]);
    if (std::binary_search(seam_facets2.begin(), seam_facets2.end(), f)) {
      auto it = weights.find(tuple);
      if (it == weights.end() || it->second != m2.facet_weights[f]) {
        throw Error("weights disagree across the glued facet " + vertex_tuple_id(tuple));
      }
      continue;
    }
    weights[tuple] = m2.facet_weights[f];
  }

  result.complex = from_simplices(simplices, weights, Kind::BrickComplex);
  for (int f : m1.brick_facets[b1]) {
    result.seam.push_back(result.complex.facet_index(m1.facet_ids[f]));
  }
  std::sort(result.seam.begin(), result.seam.end());
  return result;
}

StabilizeResult stabilize(const BrickComplex& m, const std::string& a) {
  if (!m.simplicial) {
    throw Error("stabilization requires simplex provenance");
  }
  const int b = m.brick_index(a);

  long long fresh = 0;
  for (const auto& tuple : m.brick_vertices) {
    for (long long v : tuple) fresh = std::max(fresh, v + 1);
  }

  std::vector<std::vector<long long>> simplices;
  for (int k = 0; k < m.brick_count(); ++k) {
    if (k != b) simplices.push_back(m.brick_vertices[k]);
  }
  std::vector<std::vector<long long>> added;
  const auto& tuple = m.brick_vertices[b];
  for (std::size_t drop = 0; drop < tuple.size(); ++drop) {
    std::vector<long long> cone;
    for (std::size_t k = 0; k < tuple.size(); ++k) {
      if (k != drop) cone.push_back(tuple[k]);
    }
    cone.push_back(fresh);
    std::sort(cone.begin(), cone.end());
    added.push_back(cone);
  }
  std::sort(added.begin(), added.end());
  for (const auto& cone : added) simplices.push_back(cone);

  std::map<std::vector<long long>, Weight> weights;
  for (int f = 0; f < m.facet_count(); ++f) {
    weights[m.facet_vertices[f]] = m.facet_weights[f];
  }

  StabilizeResult result;
  result.complex = from_simplices(simplices, weights, m.kind);
  for (const auto& cone : added) {
    result.new_bricks.push_back(result.complex.brick_index(vertex_tuple_id(cone)));
  }
  return result;
}

namespace {

BrickComplex boundary_simplex(int n) {
  if (n < 1) throw Error("boundary-simplex(n) needs n >= 1");
  // All (n+1)-subsets of {0..n+1}, in lexicographic order.
  std::vector<std::vector<long long>> simplices;
  for (long long drop = static_cast<long long>(n) + 1; drop >= 0; --drop) {
    std::vector<long long> tuple;
    for (long long v = 0; v <= static_cast<long long>(n) + 1; ++v) {
      if (v != drop) tuple.push_back(v);
    }
    simplices.push_back(tuple);
  }
  std::sort(simplices.begin(), simplices.end());
  return from_simplices(simplices);
}

BrickComplex torus18() {
  // Flat 3x3 torus on vertices (i, j), encoded 3 * j + i, each unit square
  // split along its up-right diagonal. Brick order follows the printed
  // labels 1..18.
  const std::vector<std::vector<long long>> simplices = {
      {0, 1, 3},  // 1
      {0, 1, 7},  // 2
      {0, 6, 7},  // 3
      {0, 2, 6},  // 4
      {0, 3, 5},  // 5
      {0, 2, 5},  // 6
      {4, 5, 7},  // 7
      {4, 6, 7},  // 8
      {2, 4, 5},  // 9
      {1, 3, 4},  // 10
      {3, 4, 6},  // 11
      {1, 2, 4},  // 12
      {5, 7, 8},  // 13
      {1, 7, 8},  // 14
      {1, 2, 8},  // 15
      {2, 6, 8},  // 16
      {3, 5, 8},  // 17
      {3, 6, 8},  // 18
  };
  return from_simplices(simplices);
}

BrickComplex figure4_disc() {
  // A triangulated disc carrying the length-4 interior arc 1-2-3-4-5; the
  // two triangles flanking the arc's middle edge both shorten the arc, and
  // their variations overlap along that edge.
  const std::vector<std::vector<long long>> simplices = {
      {2, 3, 4}, {3, 4, 5}, {1, 2, 3}, {1, 3, 6},
      {3, 5, 6}, {0, 2, 4}, {0, 4, 5}, {0, 1, 2},
  };
  return from_simplices(simplices);
}

}  // namespace

BrickComplex catalog(const std::string& name) {
  if (name == "tetrahedron") return boundary_simplex(2);
  if (name == "torus18") return torus18();
  if (name == "figure4") return figure4_disc();
  const std::string prefix = "boundary-simplex(";
  if (name.rfind(prefix, 0) == 0 && name.back() == ')') {
    const std::string body = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(body, &used);
    } catch (const std::exception&) {
      throw Error("bad catalog name \"" + name + "\"");
    }
    if (used != body.size()) throw Error("bad catalog name \"" + name + "\"");
    return boundary_simplex(n);
  }
  throw Error("unknown catalog entry \"" + name +
              "\" (try tetrahedron, boundary-simplex(n), torus18, figure4)");
}

}  // namespace thinpos
