#pragma once

// Brute-force reference implementations and instance helpers shared by the
// unit tests and the acceptance suite. Nothing here calls the library's
// constructions; only the exact predicates.

#include <algorithm>
#include <random>
#include <vector>

#include "planepaths/geometry.hpp"
#include "planepaths/partition.hpp"
#include "planepaths/paths.hpp"

namespace testing_support {

using namespace planepaths;

inline std::vector<Point> pts_of(const PointSet& S) { return {S.points().begin(), S.points().end()}; }

// Extreme points of subset: those not strictly inside any triangle of others.
inline std::vector<Index> brute_extreme(const PointSet& S, const std::vector<Index>& T) {
  std::vector<Index> out;
  for (Index p : T) {
    bool inside = false;
    for (std::size_t i = 0; i < T.size() && !inside; ++i) {
      for (std::size_t j = i + 1; j < T.size() && !inside; ++j) {
        for (std::size_t k = j + 1; k < T.size() && !inside; ++k) {
          if (T[i] == p || T[j] == p || T[k] == p) continue;
          inside = strictly_inside_triangle(S[p], S[T[i]], S[T[j]], S[T[k]]);
        }
      }
    }
    if (!inside) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Hull as a ccw cycle: for every edge every other point of T is strictly left.
inline bool is_ccw_hull_of(const PointSet& S, const std::vector<Index>& T,
                           const std::vector<Index>& hull) {
  if (hull.size() < 3) return true;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Index a = hull[i], b = hull[(i + 1) % hull.size()];
    for (Index r : T) {
      if (r != a && r != b && orient_sign(S[a], S[b], S[r]) <= 0) return false;
    }
  }
  return true;
}

// q on the hull of T is visible from p iff pq crosses no hull edge and p is
// outside the interior angle of the hull at q.
inline std::vector<Index> brute_visible(const PointSet& S, Point p, const std::vector<Index>& hull) {
  std::vector<Index> out;
  const std::size_t h = hull.size();
  for (std::size_t i = 0; i < h; ++i) {
    const Index q = hull[i];
    bool ok = true;
    if (h >= 3) {
      const Index next = hull[(i + 1) % h], prev = hull[(i + h - 1) % h];
      if (orient_sign(S[q], S[next], p) > 0 && orient_sign(S[prev], S[q], p) > 0) ok = false;
    }
    for (std::size_t j = 0; j < h && ok; ++j) {
      const Index a = hull[j], b = hull[(j + 1) % h];
      if (a == q || b == q) continue;
      if (segments_cross(p, S[q], S[a], S[b])) ok = false;
    }
    if (ok) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Definition-level visibility graph of a partition.
inline std::vector<Edge> brute_visibility(const PointSet& S, const Partition& P) {
  const auto h1 = convex_hull(S, P.s1());
  const auto h2 = convex_hull(S, P.s2());
  std::vector<Edge> out;
  for (Index a : h1) {
    const auto va = brute_visible(S, S[a], h2);
    for (Index b : va) {
      const auto vb = brute_visible(S, S[b], h1);
      if (std::binary_search(vb.begin(), vb.end(), a)) out.push_back({a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Balanced split of all points by a random direction; retries until no two
// projections tie.
template <class Rng>
Partition random_partition(const PointSet& S, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> c(-1000, 1000);
  for (;;) {
    const Point d{c(rng), c(rng)};
    if (d == Point{0, 0}) continue;
    auto idx = S.indices();
    std::sort(idx.begin(), idx.end(), [&](Index a, Index b) { return cross(d, S[a]) < cross(d, S[b]); });
    bool ties = false;
    for (std::size_t i = 0; i + 1 < idx.size(); ++i) {
      if (cross(d, S[idx[i]]) == cross(d, S[idx[i + 1]])) ties = true;
    }
    if (ties) continue;
    const std::size_t half = (idx.size() + 1) / 2;
    std::vector<Index> s1(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<Index> s2(idx.begin() + static_cast<std::ptrdiff_t>(half), idx.end());
    return Partition::from_classes(S, s1, s2);
  }
}

// Side alternation, plane, spanning, bridged start and monotone crossings.
inline bool zigzag_ok(const PointSet& S, const Partition& P, const PathSeq& Z) {
  if (Z.size() != P.s1().size() + P.s2().size()) return false;
  if (!is_plane(S, Z)) return false;
  const auto members = P.members();
  if (!is_spanning(S, members, Z)) return false;
  for (std::size_t i = 0; i + 1 < Z.size(); ++i) {
    if (P.side_of(Z[i]) == P.side_of(Z[i + 1])) return false;
  }
  if (!P.is_bridged(Z.front())) return false;
  const Point dir = P.line().direction();
  int sgn = 0;
  for (std::size_t i = 0; i + 2 < Z.size(); ++i) {
    const int c = compare_along(S, dir, {Z[i], Z[i + 1]}, {Z[i + 1], Z[i + 2]});
    if (c == 0) return false;
    if (sgn == 0) sgn = c;
    if (c != sgn) return false;
  }
  return true;
}

}  // namespace testing_support
