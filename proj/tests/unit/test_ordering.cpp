#include <algorithm>
#include <doctest.h>

#include "support/random_complex.hpp"
#include "thinpos/ordering.hpp"

using thinpos::BrickComplex;
using thinpos::LambdaProfile;
using thinpos::Ordering;
using thinpos::Rational;
using thinpos::Width;

namespace {

LambdaProfile profile_of(std::vector<int> values) {
  LambdaProfile p;
  for (int v : values) p.values.push_back(Rational(v));
  return p;
}

Width width_terms(std::vector<int> values) {
  Width w;
  for (int v : values) w.terms.push_back(Rational(v));
  return w;
}

}  // namespace

TEST_CASE("every tetrahedron ordering has the same profile") {
  const BrickComplex m = thinpos::catalog("tetrahedron");
  std::vector<int> bricks = {0, 1, 2, 3};
  int count = 0;
  do {
    const Ordering o{bricks};
    const auto p = thinpos::lambda_profile(m, o);
    CHECK(p.values == profile_of({0, 3, 4, 3, 0}).values);
    CHECK(thinpos::width_of(m, o).terms == width_terms({4}).terms);
    CHECK(thinpos::trunk_of(m, o) == 4);
    ++count;
  } while (std::next_permutation(bricks.begin(), bricks.end()));
  CHECK(count == 24);
}

TEST_CASE("level sets realize the profile") {
  const BrickComplex m = thinpos::catalog("tetrahedron");
  const Ordering o{{0, 1, 2, 3}};
  const auto p = thinpos::lambda_profile(m, o);
  for (int j = 0; j <= o.size(); ++j) {
    const auto s = thinpos::level_set(m, o, j);
    CHECK(thinpos::surface_weight(m, s) == p.values[j]);
  }
  CHECK(thinpos::level_set(m, o, 0).empty());
  CHECK(thinpos::level_set(m, o, 4).empty());
  CHECK(thinpos::level_set(m, o, 2).facets.size() == 4);
  CHECK_THROWS_AS(thinpos::level_set(m, o, 5), thinpos::Error);
}

TEST_CASE("check_ordering rejects malformed orderings") {
  const BrickComplex m = thinpos::catalog("tetrahedron");
  CHECK_THROWS_AS(thinpos::check_ordering(m, Ordering{{0, 1, 2}}), thinpos::Error);
  CHECK_THROWS_AS(thinpos::check_ordering(m, Ordering{{0, 1, 2, 2}}), thinpos::Error);
  CHECK_THROWS_AS(thinpos::check_ordering(m, Ordering{{0, 1, 2, 7}}), thinpos::Error);
  CHECK_THROWS_AS(thinpos::ordering_from_ids(m, {"0,1,2", "0,1,3", "0,2,3", "9,9,9"}),
                  thinpos::Error);
}

TEST_CASE("extrema on plateau profiles") {
  // Interior plateau whose exit keeps rising: only the later peak counts.
  auto ex = thinpos::extrema(profile_of({0, 1, 1, 2, 0}));
  REQUIRE(ex.size() == 1);
  CHECK(ex[0].kind == thinpos::Extremum::Kind::Maximum);
  CHECK(ex[0].t == 3);
  CHECK(ex[0].value == 2);

  // Two peaks around a valley.
  ex = thinpos::extrema(profile_of({0, 2, 1, 2, 0}));
  REQUIRE(ex.size() == 3);
  CHECK(ex[0].kind == thinpos::Extremum::Kind::Maximum);
  CHECK(ex[0].t == 1);
  CHECK(ex[1].kind == thinpos::Extremum::Kind::Minimum);
  CHECK(ex[1].t == 2);
  CHECK(ex[2].kind == thinpos::Extremum::Kind::Maximum);
  CHECK(ex[2].t == 3);

  // The endpoints never count, even inside a flat run touching them.
  ex = thinpos::extrema(profile_of({0, 0, 1, 0}));
  REQUIRE(ex.size() == 1);
  CHECK(ex[0].t == 2);

  // A plateau maximum is reported once, at its first index.
  ex = thinpos::extrema(profile_of({0, 3, 3, 1, 0}));
  REQUIRE(ex.size() == 1);
  CHECK(ex[0].t == 1);
  CHECK(ex[0].plateau_lo == 1);
  CHECK(ex[0].plateau_hi == 2);

  CHECK(thinpos::extrema(profile_of({0, 0})).empty());
}

TEST_CASE("width comparison is lexicographic with shorter prefixes first") {
  CHECK(thinpos::compare_widths(width_terms({4}), width_terms({4, 3})) < 0);
  CHECK(thinpos::compare_widths(width_terms({5}), width_terms({4, 4, 4})) > 0);
  CHECK(thinpos::compare_widths(width_terms({4, 3}), width_terms({4, 3})) == 0);
  CHECK(thinpos::compare_widths(width_terms({}), width_terms({1})) < 0);
  CHECK(thinpos::compare_widths(width_terms({2, 2}), width_terms({3})) < 0);
}

TEST_CASE("width_union merges multisets in sorted order") {
  const Width u = thinpos::width_union(width_terms({4}), width_terms({4, 3}));
  CHECK(u.terms == width_terms({4, 4, 3}).terms);
  const Width v = thinpos::width_union(width_terms({2, 2}), width_terms({3}));
  CHECK(v.terms == width_terms({3, 2, 2}).terms);
  CHECK(thinpos::width_union(width_terms({}), width_terms({})).terms.empty());
}

TEST_CASE("width_to_string") {
  CHECK(thinpos::width_to_string(width_terms({9, 8, 7, 7})) == "(9, 8, 7, 7)");
  CHECK(thinpos::width_to_string(width_terms({})) == "()");
}

TEST_CASE("torus identity ordering invariants") {
  const BrickComplex m = thinpos::catalog("torus18");
  std::vector<int> identity(m.brick_count());
  for (int k = 0; k < m.brick_count(); ++k) identity[k] = k;
  const Ordering o{identity};
  const auto p = thinpos::lambda_profile(m, o);
  CHECK(p.values ==
        profile_of({0, 3, 4, 5, 6, 7, 6, 9, 8, 7, 8, 7, 6, 7, 6, 5, 4, 3, 0}).values);
  CHECK(thinpos::width_of(m, o).terms == width_terms({9, 8, 7, 7}).terms);
  CHECK(thinpos::trunk_of(m, o) == 9);
}

TEST_CASE("reversal preserves the width") {
  testsupport::Rng rng(77001);
  for (int round = 0; round < 10; ++round) {
    BrickComplex m = testsupport::random_closed_surface(rng, 9);
    if (round % 2 == 1) m = testsupport::randomize_weights(rng, m);
    for (int trial = 0; trial < 6; ++trial) {
      const Ordering o = testsupport::random_ordering(rng, m);
      const Ordering r = thinpos::reverse(o);
      CHECK(thinpos::compare_widths(thinpos::width_of(m, o), thinpos::width_of(m, r)) == 0);
      // The profile itself reverses.
      const auto p = thinpos::lambda_profile(m, o).values;
      auto q = thinpos::lambda_profile(m, r).values;
      std::reverse(q.begin(), q.end());
      CHECK(p == q);
    }
  }
}

TEST_CASE("profile requires a brick complex") {
  const auto np = thinpos::from_simplices({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}, {},
                                          thinpos::Kind::NonPure);
  CHECK_THROWS_AS(thinpos::lambda_profile(np, Ordering{{0, 1, 2}}), thinpos::Error);
}
