#include <algorithm>
#include <doctest.h>
#include <set>

#include "thinpos/complex.hpp"

using thinpos::BrickComplex;
using thinpos::Kind;

namespace {

std::map<long long, long long> identity_map(const std::vector<long long>& vertices) {
  std::map<long long, long long> out;
  for (long long v : vertices) out[v] = v;
  return out;
}

}  // namespace

TEST_CASE("tetrahedron catalog fixture") {
  const BrickComplex m = thinpos::catalog("tetrahedron");
  CHECK(m.dimension == 2);
  CHECK(m.brick_count() == 4);
  CHECK(m.facet_count() == 6);
  CHECK(m.ridge_count() == 4);
  CHECK(m.simplicial);
  const auto report = thinpos::validate(m);
  CHECK(report.pure);
  CHECK(report.strongly_connected);
  CHECK(report.closed);
  CHECK(report.dimension_even);
  for (int f = 0; f < m.facet_count(); ++f) {
    CHECK(m.interior_facet(f));
    CHECK(m.facet_weights[f] == 1);
  }
  // boundary-simplex(2) is the same complex.
  const BrickComplex same = thinpos::catalog("boundary-simplex(2)");
  CHECK(same.brick_ids == m.brick_ids);
  CHECK(same.facet_ids == m.facet_ids);
}

TEST_CASE("torus18 catalog fixture") {
  const BrickComplex m = thinpos::catalog("torus18");
  CHECK(m.dimension == 2);
  CHECK(m.brick_count() == 18);
  CHECK(m.facet_count() == 27);
  CHECK(m.ridge_count() == 9);
  const auto report = thinpos::validate(m);
  CHECK(report.pure);
  CHECK(report.strongly_connected);
  CHECK(report.closed);
  CHECK(report.dimension_even);
  // Flat torus: every vertex lies on six triangles.
  std::map<long long, int> stars;
  for (const auto& tri : m.brick_vertices) {
    for (long long v : tri) stars[v]++;
  }
  CHECK(stars.size() == 9);
  for (const auto& [v, count] : stars) {
    CHECK(count == 6);
  }
}

TEST_CASE("figure4 catalog fixture") {
  const BrickComplex m = thinpos::catalog("figure4");
  CHECK(m.dimension == 2);
  CHECK(m.brick_count() == 8);
  int boundary = 0;
  for (int f = 0; f < m.facet_count(); ++f) {
    if (m.boundary_facet(f)) ++boundary;
  }
  CHECK(boundary == 4);
  CHECK(m.facet_count() == 14);
  const auto report = thinpos::validate(m);
  CHECK(report.pure);
  CHECK(report.strongly_connected);
  CHECK_FALSE(report.closed);
}

TEST_CASE("boundary-simplex of odd dimension") {
  const BrickComplex m = thinpos::catalog("boundary-simplex(3)");
  CHECK(m.dimension == 3);
  CHECK(m.brick_count() == 5);
  CHECK(m.facet_count() == 10);
  const auto report = thinpos::validate(m);
  CHECK(report.closed);
  CHECK_FALSE(report.dimension_even);
}

TEST_CASE("catalog rejects unknown names") {
  CHECK_THROWS_AS(thinpos::catalog("nonesuch"), thinpos::Error);
  CHECK_THROWS_AS(thinpos::catalog("boundary-simplex(0)"), thinpos::Error);
}

TEST_CASE("from_simplices input validation") {
  using T = std::vector<std::vector<long long>>;
  CHECK_THROWS_AS(thinpos::from_simplices(T{{0, 1, 2}, {0, 1}}), thinpos::Error);
  CHECK_THROWS_AS(thinpos::from_simplices(T{{0, 1, 2}, {2, 1, 0}}), thinpos::Error);
  CHECK_THROWS_AS(thinpos::from_simplices(T{{0, 1, 1}}), thinpos::Error);
  CHECK_THROWS_AS(thinpos::from_simplices(T{}), thinpos::Error);
  // Three triangles on one edge: rejected as a brick complex, accepted
  // as non-pure.
  const T book = {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}};
  CHECK_THROWS_AS(thinpos::from_simplices(book), thinpos::Error);
  const BrickComplex np = thinpos::from_simplices(book, {}, Kind::NonPure);
  CHECK(np.kind == Kind::NonPure);
  CHECK_FALSE(thinpos::validate(np).pure);
  CHECK_THROWS_AS(thinpos::dual_graph(np), thinpos::Error);
}

TEST_CASE("facet weights from the table") {
  using T = std::vector<std::vector<long long>>;
  const T tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::map<std::vector<long long>, thinpos::Weight> weights;
  weights[{0, 1}] = thinpos::Weight(1) / 2;
  weights[{2, 3}] = 5;
  const BrickComplex m = thinpos::from_simplices(tris, weights);
  CHECK(m.facet_weights[m.facet_index("0,1")] == thinpos::Weight(1) / 2);
  CHECK(m.facet_weights[m.facet_index("2,3")] == 5);
  CHECK(m.facet_weights[m.facet_index("0,2")] == 1);

  std::map<std::vector<long long>, thinpos::Weight> unknown;
  unknown[{4, 5}] = 1;
  CHECK_THROWS_AS(thinpos::from_simplices(tris, unknown), thinpos::Error);
  std::map<std::vector<long long>, thinpos::Weight> negative;
  negative[{0, 1}] = -1;
  CHECK_THROWS_AS(thinpos::from_simplices(tris, negative), thinpos::Error);
}

TEST_CASE("index lookups and other_side") {
  const BrickComplex m = thinpos::catalog("tetrahedron");
  const int b = m.brick_index("0,1,2");
  CHECK(m.brick_ids[b] == "0,1,2");
  CHECK_THROWS_AS(m.brick_index("9,9,9"), thinpos::Error);
  CHECK_THROWS_AS(m.facet_index("9,9"), thinpos::Error);
  const int f = m.facet_index("0,1");
  const int other = m.other_side(f, b);
  CHECK(other != b);
  CHECK(m.brick_ids[other] == "0,1,3");
}

TEST_CASE("dual graph of the tetrahedron") {
  const BrickComplex m = thinpos::catalog("tetrahedron");
  const auto g = thinpos::dual_graph(m);
  CHECK(g.brick_count == 4);
  CHECK(g.edges.size() == 6);
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : g.edges) pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  CHECK(pairs.size() == 6);  // every pair of bricks shares exactly one facet
}

TEST_CASE("simplicial connected sum of two tetrahedra") {
  const BrickComplex t = thinpos::catalog("tetrahedron");
  const auto sum = thinpos::connected_sum_simplicial(t, t, "0,1,2", "0,1,2",
                                                     identity_map({0, 1, 2}));
  CHECK(sum.complex.brick_count() == 6);
  CHECK(sum.complex.facet_count() == 9);
  CHECK(sum.seam.size() == 3);
  const auto report = thinpos::validate(sum.complex);
  CHECK(report.pure);
  CHECK(report.closed);
  CHECK(report.strongly_connected);
  CHECK(sum.brick_map_1.size() == 3);
  CHECK(sum.brick_map_2.size() == 3);
  CHECK(sum.brick_map_1.count("0,1,2") == 0);  // the removed brick is absent
  for (const auto& [from, to] : sum.brick_map_1) {
    CHECK_NOTHROW(sum.complex.brick_index(to));
  }
  // Seam facets carry the weight shared by both summands.
  for (int f : sum.seam) {
    CHECK(sum.complex.facet_weights[f] == 1);
  }
}

TEST_CASE("connected sum rejects mismatched weights on the seam") {
  using T = std::vector<std::vector<long long>>;
  const T tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::map<std::vector<long long>, thinpos::Weight> weights;
  weights[{0, 1}] = 3;
  const BrickComplex heavy = thinpos::from_simplices(tris, weights);
  const BrickComplex plain = thinpos::catalog("tetrahedron");
  // Facet {0,1} of the removed brick must glue to a facet of equal weight.
  CHECK_THROWS_AS(thinpos::connected_sum_simplicial(heavy, plain, "0,1,2", "0,1,2",
                                                    identity_map({0, 1, 2})),
                  thinpos::Error);
}

TEST_CASE("connected sum input validation") {
  const BrickComplex t = thinpos::catalog("tetrahedron");
  const BrickComplex disc = thinpos::catalog("figure4");
  CHECK_THROWS_AS(thinpos::connected_sum_simplicial(t, disc, "0,1,2", "2,3,4",
                                                    identity_map({0, 1, 2})),
                  thinpos::Error);
  // Vertex map must be a bijection onto the vertices of the removed brick.
  std::map<long long, long long> bad;
  bad[0] = 0;
  bad[1] = 1;
  CHECK_THROWS_AS(thinpos::connected_sum_simplicial(t, t, "0,1,2", "0,1,2", bad),
                  thinpos::Error);
  bad[2] = 1;
  CHECK_THROWS_AS(thinpos::connected_sum_simplicial(t, t, "0,1,2", "0,1,2", bad),
                  thinpos::Error);
}

TEST_CASE("stabilize replaces a brick by a cone") {
  const BrickComplex t = thinpos::catalog("tetrahedron");
  const auto st = thinpos::stabilize(t, "0,1,2");
  CHECK(st.complex.brick_count() == 6);
  CHECK(st.new_bricks.size() == 3);
  const auto report = thinpos::validate(st.complex);
  CHECK(report.pure);
  CHECK(report.closed);
  CHECK(report.strongly_connected);
  // The fresh vertex is 4, so the new bricks are cones to it.
  for (int b : st.new_bricks) {
    CHECK(st.complex.brick_vertices[b].back() == 4);
  }
  // Surviving facets keep their weights, the new ones default to 1.
  for (int f = 0; f < st.complex.facet_count(); ++f) {
    CHECK(st.complex.facet_weights[f] == 1);
  }
  CHECK_THROWS_AS(thinpos::stabilize(t, "7,8,9"), thinpos::Error);
}

TEST_CASE("vertex tuple ids") {
  CHECK(thinpos::vertex_tuple_id({0, 1, 3}) == "0,1,3");
  CHECK(thinpos::parse_vertex_tuple("0,1,3") == std::vector<long long>{0, 1, 3});
  CHECK_THROWS_AS(thinpos::parse_vertex_tuple("0,,1"), thinpos::Error);
  CHECK_THROWS_AS(thinpos::parse_vertex_tuple(""), thinpos::Error);
}
