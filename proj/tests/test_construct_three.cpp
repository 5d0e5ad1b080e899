#include <doctest.h>

#include <map>

#include "planepaths/construct_three.hpp"
#include "planepaths/generators.hpp"
#include "support.hpp"

using namespace planepaths;
using namespace testing_support;

namespace {

std::size_t left_count(const PointSet& S, Index a, Index b) {
  std::size_t c = 0;
  for (Index w = 0; w < S.size(); ++w) {
    if (w != a && w != b && orient_sign(S[a], S[b], S[w]) > 0) ++c;
  }
  return c;
}

}  // namespace

TEST_CASE("is_wheel") {
  for (std::size_t n = 6; n <= 20; n += 2) {
    const auto W = wheel_points(n, n);
    CHECK(is_wheel(W) == std::optional<Index>{n - 1});
  }
  CHECK_FALSE(is_wheel(convex_points(8, 1)).has_value());
  // pull the center towards one rim vertex: some center line stops halving
  auto pts = pts_of(wheel_points(8, 1));
  pts[7] = {pts[0].x * 9 / 10, pts[0].y * 9 / 10 + 1};
  CHECK_FALSE(is_wheel(PointSet::validate(pts)).has_value());
}

TEST_CASE("wheel paths count and validity") {
  for (std::size_t n = 6; n <= 24; n += 2) {
    const auto W = wheel_points(n, 3 * n);
    const auto paths = wheel_paths(W, n - 1);
    CHECK(paths.size() == n / 2 - 1);
    const auto rep = verify_paths(W, paths);
    INFO(rep.summary());
    CHECK(rep.ok());
    std::size_t edges = 0;
    for (const auto& p : paths) edges += path_edges(p).size();
    CHECK(edges == (n / 2 - 1) * (n - 1));
  }
  CHECK_THROWS_AS(wheel_paths(random_points(8, 1), 7), Error);
}

TEST_CASE("halving partner") {
  int crossing = 0, shared = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 6 + 2 * (seed % 8);
    const auto S = random_points(n, seed);
    const Index u = convex_hull(S)[0];
    Index v = u;
    for (const Edge& e : halving_segments(S)) {
      if (e.touches(u)) v = e.a == u ? e.b : e.a;
    }
    REQUIRE(v != u);
    const auto [p, q] = claim_halving_partner(S, u, v);
    CHECK(p != q);
    CHECK(left_count(S, p, q) == (n - 2) / 2);
    const bool cr = segments_cross(S[u], S[v], S[p], S[q]);
    CHECK((p == v || cr));
    crossing += cr;
    shared += p == v;
  }
  CHECK(crossing > 0);
  CHECK(shared > 0);
}

TEST_CASE("structural search witnesses") {
  std::map<std::string, int> kinds;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 5 + seed % 36;
    const auto S = random_points(n, seed);
    const auto w = structural_search(S);
    CHECK(validate_witness(S, w));
    if (n % 2 == 1) CHECK(std::holds_alternative<CrossingPair>(w));
    if (std::holds_alternative<Wheel>(w)) CHECK(is_wheel(S).has_value());
    ++kinds[witness_kind(w)];
  }
  CHECK(kinds["crossing-pair"] > 0);
  CHECK(kinds["switchable-plus-bridged"] > 0);
  for (std::size_t n = 6; n <= 30; n += 2) {
    const auto W = wheel_points(n, n + 1);
    const auto w = structural_search(W);
    REQUIRE(std::holds_alternative<Wheel>(w));
    CHECK(std::get<Wheel>(w).center == n - 1);
    CHECK(std::get<Wheel>(w).rim.size() == n - 1);
  }
  CHECK_THROWS_AS(structural_search(random_points(4, 1)), Error);
}

TEST_CASE("assembly preconditions") {
  const auto S = random_points(12, 4);
  const auto w = structural_search(S);
  const auto& c = std::get<CrossingPair>(w);
  // an edge of the zig-zag path is not free
  const auto Z = zigzag_path(S, c.partition, 1);
  const Edge used = c.partition.side_of(Z[0]) == 1 ? Edge{Z[0], Z[1]} : Edge{Z[1], Z[0]};
  CHECK_THROWS_AS(three_from_two_free_edges(S, c.partition, Z, used, c.e1), Error);
  // edges that do not cross
  CHECK_THROWS_AS(three_from_crossing(S, c.partition, c.e1, c.e1), Error);
}

TEST_CASE("three paths on random sets") {
  std::map<std::string, int> routes;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto S = random_points(10 + seed % 31, seed + 7000);
    const auto r = three_paths(S);
    REQUIRE(r.paths.size() == 3);
    const auto rep = verify_paths(S, r.paths);
    INFO(rep.summary());
    CHECK(rep.ok());
    ++routes[r.route];
  }
  CHECK(routes.size() >= 2);
}

TEST_CASE("three paths small and wheel dispatch") {
  const auto W = wheel_points(12, 5);
  const auto r = three_paths(W);
  CHECK(r.route == "wheel");
  CHECK(r.paths.size() == 3);
  CHECK(verify_paths(W, r.paths).ok());
  const auto all = wheel_paths(W, 11);
  CHECK(all.size() == 5);
  CHECK(std::vector<PathSeq>(all.begin(), all.begin() + 3) == r.paths);

  const auto S8 = random_points(8, 1);
  const auto r8 = three_paths(S8);
  CHECK(r8.route == "oracle");
  CHECK(std::holds_alternative<OracleFallback>(r8.witness));
  CHECK(verify_paths(S8, r8.paths).ok());

  try {
    three_paths(random_points(6, 1));
    FAIL("expected TooFew");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooFew);
  }
}
