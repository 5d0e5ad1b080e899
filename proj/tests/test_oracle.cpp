#include <doctest.h>

#include <random>

#include "planepaths/construct_three.hpp"
#include "planepaths/generators.hpp"
#include "planepaths/oracle.hpp"
#include "support.hpp"

using namespace planepaths;
using namespace testing_support;

namespace {

SearchResult search(const PointSet& S, std::size_t k, bool symmetry = true, bool pruning = true,
                    std::uint64_t budget = 200'000'000) {
  SearchConfig cfg;
  cfg.k = k;
  cfg.max_nodes = budget;
  cfg.symmetry_reduction = symmetry;
  cfg.pruning = pruning;
  return find_k_disjoint_paths(S, cfg);
}

}  // namespace

TEST_CASE("six-wheel holds two paths but not three") {
  const auto W = wheel_points(6, 1);
  const auto two = search(W, 2);
  CHECK(two.status == SearchStatus::Found);
  CHECK(verify_paths(W, two.paths).ok());
  CHECK(search(W, 3).status == SearchStatus::Absent);
  const auto m = max_disjoint_paths(W, 100'000'000);
  CHECK(m.k == 2);
  CHECK(m.definitive);
}

TEST_CASE("eight-wheel maximum") {
  const auto m = max_disjoint_paths(wheel_points(8, 2), 200'000'000);
  CHECK(m.k == 3);
  CHECK(m.definitive);
}

TEST_CASE("convex position maxima") {
  CHECK(max_disjoint_paths(convex_points(5, 1), 10'000'000).k == 2);
  CHECK(max_disjoint_paths(convex_points(6, 1), 10'000'000).k == 3);
}

TEST_CASE("three paths on eight-point samples") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto S = random_points(8, seed);
    const auto r = search(S, 3);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.paths.size() == 3);
    CHECK(verify_paths(S, r.paths).ok());
  }
}

TEST_CASE("pruning and symmetry reduction do not change answers") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto S = seed % 3 == 0 ? wheel_points(6, seed) : random_points(5 + seed % 3, seed);
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto base = search(S, k, true, true).status;
      CHECK(search(S, k, false, true).status == base);
      CHECK(search(S, k, true, false).status == base);
      CHECK(search(S, k, false, false).status == base);
    }
  }
}

TEST_CASE("answers do not depend on the vertex order") {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto S = seed % 2 ? wheel_points(6, seed) : random_points(6, seed);
    auto pts = pts_of(S);
    std::shuffle(pts.begin(), pts.end(), rng);
    const auto T = PointSet::validate(pts);
    for (std::size_t k = 2; k <= 3; ++k) CHECK(search(S, k).status == search(T, k).status);
  }
}

TEST_CASE("budget and size guards") {
  const auto S = random_points(9, 1);
  const auto r = search(S, 3, true, true, 5);
  CHECK(r.status == SearchStatus::BudgetExceeded);
  CHECK(r.paths.empty());
  SearchConfig cfg;
  CHECK_THROWS_AS(find_k_disjoint_paths(random_points(13, 1), cfg), Error);
  cfg.k = 0;
  CHECK_THROWS_AS(find_k_disjoint_paths(random_points(5, 1), cfg), Error);
}

TEST_CASE("prescribed starts and forbidden edges") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto S = random_points(7, seed);
    const auto all = S.indices();
    const Index starts[] = {seed % 7, (seed + 3) % 7};
    const Edge forbid[] = {{starts[0], starts[1]}};
    const auto r = find_paths_with_starts(S, all, starts, 10'000'000, forbid);
    REQUIRE(r.status == SearchStatus::Found);
    CHECK(r.paths[0].front() == starts[0]);
    CHECK(r.paths[1].front() == starts[1]);
    CHECK(verify_paths(S, r.paths).ok());
    for (const auto& p : r.paths) {
      for (const Edge& e : path_edges(p)) CHECK_FALSE(e == forbid[0].canonical());
    }
  }
}
