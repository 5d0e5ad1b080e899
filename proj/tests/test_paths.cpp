#include <doctest.h>

#include <random>

#include "planepaths/generators.hpp"
#include "support.hpp"

using namespace planepaths;
using namespace testing_support;

TEST_CASE("concat and reverse") {
  CHECK(concat({1, 2}, {3, 4}) == PathSeq{1, 2, 3, 4});
  CHECK(reverse({1, 2, 3}) == PathSeq{3, 2, 1});
  CHECK_THROWS_AS(concat({1, 2}, {2, 3}), Error);
  const PathSeq p{4, 0, 2, 1};
  CHECK(reverse(reverse(p)) == p);
  auto e1 = path_edges(p), e2 = path_edges(reverse(p));
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  CHECK(e1 == e2);
}

TEST_CASE("plane, spanning and disjoint predicates") {
  const auto S = PointSet::validate({{0, 0}, {4, 0}, {4, 4}, {0, 4}});
  CHECK(is_plane(S, {0, 1, 2}));
  CHECK(is_plane(S, {0, 1, 2, 3}));
  CHECK_FALSE(is_plane(S, {0, 2, 1, 3}));  // both diagonals
  CHECK(is_spanning(S, {0, 1, 2, 3}));
  CHECK_FALSE(is_spanning(S, {0, 1, 2}));
  CHECK_FALSE(is_spanning(S, {0, 1, 2, 3, 0}));
  const PathSeq p{0, 1, 2, 3};
  const std::vector<PathSeq> same{p, reverse(p)};
  CHECK_FALSE(pairwise_edge_disjoint(same));
  const std::vector<PathSeq> apart{{0, 1}, {2, 3}};
  CHECK(pairwise_edge_disjoint(apart));
}

TEST_CASE("verifier names every violation") {
  const auto S = PointSet::validate({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 9}});
  const std::vector<PathSeq> paths{{0, 2, 1, 3, 4}, {0, 1, 2}, {2, 3, 4, 2}};
  const auto r = verify_paths(S, paths);
  CHECK_FALSE(r.ok());
  REQUIRE(r.crossings.size() == 1);
  CHECK(r.crossings[0].path == 0);
  CHECK_FALSE(r.plane(0));
  CHECK(r.plane(1));
  CHECK_FALSE(r.spanning(1));
  CHECK_FALSE(r.spanning(2));
  CHECK_FALSE(r.edge_disjoint());
  const auto text = r.summary();
  CHECK(text.find("cross") != std::string::npos);
  CHECK(text.find("share") != std::string::npos);
  CHECK(text.find("missing") != std::string::npos);
  CHECK(text.find("repeat") != std::string::npos);
}

TEST_CASE("zig-zag on one point per side is the bridge") {
  const auto S = PointSet::validate({{0, 0}, {5, 3}});
  const auto P = Partition::from_classes(S, {0}, {1});
  CHECK(zigzag_path(S, P, 1) == PathSeq{0, 1});
  CHECK(zigzag_path(S, P, 2) == PathSeq{1, 0});
}

TEST_CASE("zig-zag on two rows") {
  const auto S = PointSet::validate({{0, 0}, {3, 1}, {6, 0}, {0, 10}, {3, 11}, {6, 10}});
  const auto P = Partition::from_classes(S, {0, 1, 2}, {3, 4, 5});
  for (int side : {1, 2}) {
    const auto Z = zigzag_path(S, P, side);
    CHECK(zigzag_ok(S, P, Z));
    CHECK(P.side_of(Z.front()) == side);
  }
}

TEST_CASE("zig-zag start side must be the larger class") {
  const auto S = random_points(5, 3);
  std::mt19937_64 rng(1);
  const auto P = random_partition(S, rng);
  const int small = P.s1().size() < P.s2().size() ? 1 : 2;
  CHECK_THROWS_AS(zigzag_path(S, P, small), Error);
  CHECK_NOTHROW(zigzag_path(S, P, 3 - small));
}

TEST_CASE("zig-zag invariants on random partitions") {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto S = random_points(2 + seed % 30, seed);
    const auto P = random_partition(S, rng);
    const std::size_t n1 = P.s1().size(), n2 = P.s2().size();
    for (int side : {1, 2}) {
      if (P.cls(side).size() < P.cls(3 - side).size()) continue;
      const auto Z = zigzag_path(S, P, side);
      CHECK(zigzag_ok(S, P, Z));
      if (n1 == n2) CHECK(Z.size() - 1 == 2 * n1 - 1);
    }
    for (const Edge& b : P.bridges()) {
      for (Index u : {b.a, b.b}) {
        if (P.cls(P.side_of(u)).size() < P.cls(3 - P.side_of(u)).size()) continue;
        const auto Z = zigzag_from(S, P, u);
        CHECK(Z.front() == u);
        CHECK(zigzag_ok(S, P, Z));
      }
    }
  }
}
