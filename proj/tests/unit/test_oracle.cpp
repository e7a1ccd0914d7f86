#include <algorithm>
#include <doctest.h>
#include <map>
#include <vector>

#include "support/random_complex.hpp"
#include "thinpos/oracle.hpp"
#include "thinpos/thinning.hpp"

using thinpos::BrickComplex;
using thinpos::Ordering;
using thinpos::Rational;

namespace {

Ordering identity_ordering(const BrickComplex& m) {
  std::vector<int> bricks(m.brick_count());
  for (int k = 0; k < m.brick_count(); ++k) bricks[k] = k;
  return Ordering{bricks};
}

std::map<long long, long long> self_map(const BrickComplex& m, const std::string& brick) {
  std::map<long long, long long> vm;
  for (long long v : m.brick_vertices[m.brick_index(brick)]) vm[v] = v;
  return vm;
}

}  // namespace

TEST_CASE("lambda_of_set matches the profile prefixes") {
  testsupport::Rng rng(4242);
  for (int round = 0; round < 8; ++round) {
    BrickComplex m = testsupport::random_closed_surface(rng, 9);
    if (round % 2 == 1) m = testsupport::randomize_weights(rng, m);
    const Ordering o = testsupport::random_ordering(rng, m);
    const auto profile = thinpos::lambda_profile(m, o).values;
    for (int j = 0; j <= o.size(); ++j) {
      const std::vector<int> prefix(o.bricks.begin(), o.bricks.begin() + j);
      CHECK(thinpos::lambda_of_set(m, prefix) == profile[j]);
    }
  }
  const BrickComplex tetra = thinpos::catalog("tetrahedron");
  CHECK_THROWS_AS(thinpos::lambda_of_set(tetra, {0, 9}), thinpos::Error);
}

TEST_CASE("minimum trunk of the tetrahedron") {
  const BrickComplex m = thinpos::catalog("tetrahedron");
  const auto result = thinpos::min_trunk(m);
  CHECK(result.trunk == 4);
  CHECK(thinpos::trunk_of(m, result.witness) == result.trunk);
}

TEST_CASE("trunk dynamic program agrees with direct enumeration") {
  testsupport::Rng rng(7117);
  for (int round = 0; round < 9; ++round) {
    BrickComplex m = (round % 3 == 2)
                         ? testsupport::random_surface_with_boundary(rng, 7, 2)
                         : testsupport::random_closed_surface(rng, 7);
    if (round % 2 == 1) m = testsupport::randomize_weights(rng, m);
    const auto dp = thinpos::min_trunk(m);
    // The smallest trunk over all N! orderings, the hard way.
    std::vector<int> perm(m.brick_count());
    for (int b = 0; b < m.brick_count(); ++b) perm[b] = b;
    Rational best = thinpos::trunk_of(m, Ordering{perm});
    while (std::next_permutation(perm.begin(), perm.end())) {
      const Rational t = thinpos::trunk_of(m, Ordering{perm});
      if (t < best) best = t;
    }
    CHECK(dp.trunk == best);
    CHECK(thinpos::trunk_of(m, dp.witness) == best);
  }
}

TEST_CASE("exhaustive width search on the tetrahedron") {
  const BrickComplex m = thinpos::catalog("tetrahedron");
  const auto result = thinpos::min_width_exhaustive(m);
  REQUIRE(result.width.terms.size() == 1);
  CHECK(result.width.terms[0] == 4);
  CHECK(result.optimal);
  CHECK(thinpos::compare_widths(thinpos::width_of(m, result.witness), result.width) == 0);
}

TEST_CASE("branch and bound width agrees with the exhaustive search") {
  testsupport::Rng rng(90125);
  for (int round = 0; round < 10; ++round) {
    BrickComplex m = (round % 3 == 2)
                         ? testsupport::random_surface_with_boundary(rng, 8, 2)
                         : testsupport::random_closed_surface(rng, 8);
    if (round % 2 == 1) m = testsupport::randomize_weights(rng, m);
    const auto full = thinpos::min_width_exhaustive(m);
    const auto pruned = thinpos::min_width_bnb(m);
    REQUIRE(full.optimal);
    REQUIRE(pruned.optimal);
    CHECK(thinpos::compare_widths(full.width, pruned.width) == 0);
    CHECK(thinpos::compare_widths(thinpos::width_of(m, pruned.witness), pruned.width) == 0);
    // Pruning only ever skips subtrees of the shared search tree.
    CHECK(pruned.explored <= full.explored);
  }
}

TEST_CASE("branch and bound keeps its incumbent when the budget runs out") {
  const BrickComplex m = thinpos::catalog("torus18");
  const Ordering start = identity_ordering(m);
  const auto result = thinpos::min_width_bnb(m, 50, start);
  CHECK_FALSE(result.optimal);
  CHECK(thinpos::compare_widths(result.width, thinpos::width_of(m, start)) <= 0);
  CHECK(thinpos::compare_widths(thinpos::width_of(m, result.witness), result.width) == 0);
}

TEST_CASE("minimum trunk never exceeds the top width term") {
  testsupport::Rng rng(31415);
  for (int round = 0; round < 6; ++round) {
    BrickComplex m = testsupport::random_closed_surface(rng, 8);
    if (round % 2 == 1) m = testsupport::randomize_weights(rng, m);
    const auto w = thinpos::min_width_exhaustive(m);
    const auto t = thinpos::min_trunk(m);
    REQUIRE_FALSE(w.width.terms.empty());
    CHECK(t.trunk <= w.width.terms[0]);
  }
}

TEST_CASE("connected sum bounds verify on two tetrahedra") {
  const BrickComplex a = thinpos::catalog("tetrahedron");
  const auto report =
      thinpos::verify_sum_bounds(a, a, "0,1,2", "0,1,2", self_map(a, "0,1,2"));
  CHECK(report.width_lower_ok == thinpos::CheckStatus::Verified);
  CHECK(report.width_upper_ok == thinpos::CheckStatus::Verified);
  CHECK(report.trunk_equal_ok == thinpos::CheckStatus::Verified);
  CHECK(report.w1_optimal);
  CHECK(report.w2_optimal);
  CHECK(thinpos::width_to_string(report.w1) == "(4)");
  REQUIRE(report.sum_width.has_value());
  CHECK(report.sum_width_optimal);
  CHECK(thinpos::width_to_string(*report.sum_width) == "(4, 4)");
  CHECK(report.trunks_exact);
  CHECK(report.tr_sum == 4);
  CHECK(thinpos::compare_widths(report.constructed_width, report.union_width) <= 0);
}

TEST_CASE("connected sum verification demands closed unit even summands") {
  const BrickComplex tetra = thinpos::catalog("tetrahedron");
  const BrickComplex disc = thinpos::catalog("figure4");
  CHECK_THROWS_AS(thinpos::verify_sum_bounds(tetra, disc, "0,1,2", disc.brick_ids[0],
                                             self_map(disc, disc.brick_ids[0])),
                  thinpos::Error);

  using T = std::vector<std::vector<long long>>;
  const T tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::map<std::vector<long long>, thinpos::Weight> heavy;
  heavy[{0, 1}] = 2;
  const BrickComplex weighted = thinpos::from_simplices(tris, heavy);
  CHECK_THROWS_AS(thinpos::verify_sum_bounds(weighted, tetra, "0,1,2", "0,1,2",
                                             self_map(tetra, "0,1,2")),
                  thinpos::Error);

  const BrickComplex odd = thinpos::catalog("boundary-simplex(3)");
  CHECK_THROWS_AS(thinpos::verify_sum_bounds(odd, odd, odd.brick_ids[0], odd.brick_ids[0],
                                             self_map(odd, odd.brick_ids[0])),
                  thinpos::Error);
}

TEST_CASE("generalized profile coincides with the standard one on brick complexes") {
  testsupport::Rng rng(8086);
  for (int round = 0; round < 8; ++round) {
    BrickComplex m = (round % 3 == 2)
                         ? testsupport::random_surface_with_boundary(rng, 9, 2)
                         : testsupport::random_closed_surface(rng, 9);
    if (round % 2 == 0) m = testsupport::randomize_weights(rng, m);
    const Ordering o = testsupport::random_ordering(rng, m);
    CHECK(thinpos::generalized_profile(m, o).values == thinpos::lambda_profile(m, o).values);
  }
}

TEST_CASE("generalized profile handles branching complexes") {
  using T = std::vector<std::vector<long long>>;
  const T book = {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}};
  const BrickComplex m = thinpos::from_simplices(book, {}, thinpos::Kind::NonPure);
  const Ordering o{{0, 1, 2}};
  CHECK_THROWS_AS(thinpos::lambda_profile(m, o), thinpos::Error);

  // The spine edge sits under all three pages; its contribution at prefix
  // size j is j * (3 - j). Page edges never split their single brick.
  const auto profile = thinpos::generalized_profile(m, o).values;
  const std::vector<Rational> expect = {0, 2, 2, 0};
  CHECK(profile == expect);

  const auto level = thinpos::generalized_level_set(m, o, 1);
  REQUIRE(level.facets.size() == 1);
  CHECK(m.facet_ids[level.facets[0]] == "0,1");
  CHECK(thinpos::generalized_level_set(m, o, 0).facets.empty());
  CHECK_THROWS_AS(thinpos::generalized_level_set(m, o, 4), thinpos::Error);

  auto reversed = thinpos::generalized_profile(m, thinpos::reverse(o)).values;
  std::reverse(reversed.begin(), reversed.end());
  CHECK(reversed == profile);
}

TEST_CASE("oracles refuse sizes and weights beyond their caps") {
  const BrickComplex torus = thinpos::catalog("torus18");
  CHECK_THROWS_AS(thinpos::min_width_exhaustive(torus), thinpos::Error);
  CHECK_THROWS_AS(thinpos::min_trunk(torus, 10), thinpos::Error);

  using T = std::vector<std::vector<long long>>;
  const T tris = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::map<std::vector<long long>, thinpos::Weight> fine;
  fine[{0, 1}] = thinpos::parse_rational("1/8589934592");  // denominator 2^33
  const BrickComplex m_fine = thinpos::from_simplices(tris, fine);
  CHECK_THROWS_AS(thinpos::min_trunk(m_fine), thinpos::Error);
  CHECK_THROWS_AS(thinpos::min_width_exhaustive(m_fine), thinpos::Error);

  std::map<std::vector<long long>, thinpos::Weight> huge;
  huge[{0, 1}] = thinpos::parse_rational("72057594037927936");  // 2^56
  const BrickComplex m_huge = thinpos::from_simplices(tris, huge);
  CHECK_THROWS_AS(thinpos::min_trunk(m_huge), thinpos::Error);
}

TEST_CASE("frozen torus regression values") {
  // Cross-checked against the enumeration tests above at small sizes before
  // freezing; the branch-and-bound run that produced them closed.
  const BrickComplex m = thinpos::catalog("torus18");
  const auto trunk = thinpos::min_trunk(m);
  CHECK(trunk.trunk == 8);
  CHECK(thinpos::trunk_of(m, trunk.witness) == 8);
}
