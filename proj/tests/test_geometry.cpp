#include <doctest.h>

#include <random>

#include "planepaths/generators.hpp"
#include "support.hpp"

using namespace planepaths;
using namespace testing_support;

TEST_CASE("orient basic turns") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == Orientation::Counterclockwise);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == Orientation::Collinear);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == Orientation::Clockwise);
}

TEST_CASE("orient is exact at the coordinate limit") {
  const std::int64_t L = kCoordinateLimit;
  CHECK(orient({-L, -L}, {L, L}, {L - 1, L}) == Orientation::Counterclockwise);
  CHECK(orient({-L, -L}, {L, L}, {L, L - 1}) == Orientation::Clockwise);
  CHECK(orient({-L, -L}, {0, 0}, {L, L}) == Orientation::Collinear);
}

TEST_CASE("validate rejects degenerate input with indices") {
  CHECK_NOTHROW(PointSet::validate({{0, 0}, {1, 0}, {0, 1}}));
  try {
    PointSet::validate({{0, 0}, {1, 1}, {2, 2}});
    FAIL("expected CollinearTriple");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CollinearTriple);
    CHECK(e.indices() == std::vector<Index>{0, 1, 2});
  }
  try {
    PointSet::validate({{0, 0}, {0, 0}, {1, 1}});
    FAIL("expected DuplicatePoint");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DuplicatePoint);
    CHECK(e.indices() == std::vector<Index>{0, 1});
  }
  try {
    PointSet::validate({{0, 0}, {kCoordinateLimit + 1, 0}});
    FAIL("expected CoordinateOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CoordinateOutOfRange);
  }
}

TEST_CASE("segments_cross") {
  CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_cross({0, 0}, {1, 0}, {2, 0}, {3, 1}));
  CHECK_FALSE(segments_cross({0, 0}, {2, 0}, {2, 0}, {3, 1}));
}

TEST_CASE("segments_cross symmetry on random quadruples") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> c(-20, 20);
  for (int it = 0; it < 20000; ++it) {
    const Point a{c(rng), c(rng)}, b{c(rng), c(rng)}, p{c(rng), c(rng)}, q{c(rng), c(rng)};
    if (a == b || p == q) continue;
    const bool x = segments_cross(a, b, p, q);
    CHECK(x == segments_cross(p, q, a, b));
    CHECK(x == segments_cross(b, a, p, q));
    CHECK(x == segments_cross(a, b, q, p));
  }
}

TEST_CASE("convex hull small cases") {
  const auto S = PointSet::validate({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  CHECK(convex_hull(S) == std::vector<Index>{0, 1, 2});
  const auto T = PointSet::validate({{0, 0}, {1, 0}});
  CHECK(convex_hull(T) == std::vector<Index>{0, 1});
  const std::vector<Index> one{0};
  CHECK(convex_hull(T, one) == std::vector<Index>{0});
}

TEST_CASE("convex hull against the triangle oracle") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto S = random_points(4 + seed % 12, seed);
    const auto all = S.indices();
    auto hull = convex_hull(S);
    CHECK(is_ccw_hull_of(S, all, hull));
    std::sort(hull.begin(), hull.end());
    CHECK(hull == brute_extreme(S, all));
  }
}

TEST_CASE("hull neighbours") {
  const std::vector<Index> hull{3, 1, 4, 0};
  CHECK(ccw_neighbor(hull, 0) == 3);
  CHECK(cw_neighbor(hull, 3) == 0);
  CHECK(hull_position(hull, 4) == 2);
  CHECK(hull_position(hull, 9) == npos);
}

TEST_CASE("visible hull points of a square") {
  const auto S = PointSet::validate({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
  const auto all = S.indices();
  CHECK(visible_hull_points(S, {1, -10}, all) == std::vector<Index>{0, 1});
  CHECK(visible_hull_points(S, {-10, -9}, all) == std::vector<Index>{3, 0, 1});
  CHECK_THROWS_AS(visible_hull_points(S, {1, 1}, all), Error);
}

TEST_CASE("visible hull points against brute force") {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto S = random_points(9, seed);
    const auto all = S.indices();
    std::vector<Index> T(all.begin(), all.begin() + 8);
    const auto hull = convex_hull(S, T);
    const Point p = S[8];
    if (hull_position(convex_hull(S), 8) == npos) continue;  // p must be outside ch(T)
    auto got = visible_hull_points(S, p, T);
    CHECK(got.size() >= 2);
    // contiguous along the hull
    const std::size_t h = hull.size();
    const std::size_t first = hull_position(hull, got.front());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(hull[(first + i) % h] == got[i]);
    std::sort(got.begin(), got.end());
    CHECK(got == brute_visible(S, p, hull));
  }
}

TEST_CASE("sorted_around_extreme is ccw") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto S = random_points(10, seed);
    const Index u = convex_hull(S)[0];
    const auto y = sorted_around_extreme(S, u, S.indices());
    REQUIRE(y.size() == 9);
    for (std::size_t i = 0; i + 1 < y.size(); ++i) CHECK(orient_sign(S[u], S[y[i]], S[y[i + 1]]) > 0);
  }
}

TEST_CASE("line sides and direction") {
  const Line l = Line::through({0, 0}, {1, 0});
  CHECK(l.side({0, 1}) > 0);
  CHECK(l.side({0, -1}) < 0);
  CHECK(l.direction() == Point{1, 0});
  CHECK(l.flipped().side({0, 1}) < 0);
}

TEST_CASE("mirroring flips orientation and keeps indices") {
  const auto S = random_points(8, 3);
  const auto M = S.mirrored();
  for (Index i = 0; i < 8; ++i) CHECK(M[i].x == -S[i].x);
  CHECK(orient_sign(S[0], S[1], S[2]) == -orient_sign(M[0], M[1], M[2]));
}
