#include "planepaths/partition.hpp"

#include <algorithm>
#include <string>

namespace planepaths {
namespace {

bool all_strictly(const PointSet& S, std::span<const Index> pts, Index skip, Point p, Point q,
                  int want) {
  for (Index v : pts) {
    if (v != skip && orient_sign(p, q, S[v]) != want) return false;
  }
  return true;
}

// Inner common tangent (p in h1, q in h2) with h1 \ {p} on side `side1` of
// p->q and h2 \ {q} on the opposite side.
std::optional<Edge> tangent_of_hulls(const PointSet& S, std::span<const Index> h1,
                                  std::span<const Index> h2, int side1) {
  for (Index p : h1) {
    for (Index q : h2) {
      if (all_strictly(S, h1, p, S[p], S[q], side1) && all_strictly(S, h2, q, S[p], S[q], -side1)) {
        return Edge{p, q};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<Index> Partition::members() const {
  std::vector<Index> out = s1_;
  out.insert(out.end(), s2_.begin(), s2_.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Partition::is_bridged(Index v) const {
  return bridges_[0].touches(v) || bridges_[1].touches(v);
}

Partition Partition::swapped() const {
  Partition p = *this;
  std::swap(p.s1_, p.s2_);
  p.line_ = line_.flipped();
  for (auto& e : p.bridges_) e = Edge{e.b, e.a};
  for (auto& s : p.side_) s = s == 0 ? 0 : static_cast<std::uint8_t>(3 - s);
  return p;
}

void Partition::finish(const PointSet& S) {
  std::sort(s1_.begin(), s1_.end());
  std::sort(s2_.begin(), s2_.end());
  Index top = 0;
  for (Index v : s1_) top = std::max(top, v);
  for (Index v : s2_) top = std::max(top, v);
  side_.assign(top + 1, 0);
  for (Index v : s1_) side_[v] = 1;
  for (Index v : s2_) side_[v] = 2;

  const auto all = members();
  const auto hull = convex_hull(S, all);
  std::size_t found = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Index u = hull[i];
    const Index w = hull[(i + 1) % hull.size()];
    if (side_of(u) != side_of(w)) {
      if (found == 2) internal_failure("partition hull has more than two bridges");
      bridges_[found++] = side_of(u) == 1 ? Edge{u, w} : Edge{w, u};
    }
  }
  if (found != 2) internal_failure("partition hull does not have two bridges");
}

Partition Partition::from_classes(const PointSet& S, std::vector<Index> s1, std::vector<Index> s2) {
  const auto n1 = s1.size();
  const auto n2 = s2.size();
  if (n1 == 0 || n2 == 0 || (n1 > n2 ? n1 - n2 : n2 - n1) > 1) {
    fail(Errc::Unbalanced, std::to_string(n1) + " " + std::to_string(n2));
  }
  const auto h1 = convex_hull(S, s1);
  const auto h2 = convex_hull(S, s2);
  const auto t1 = tangent_of_hulls(S, h1, h2, +1);
  const auto t2 = tangent_of_hulls(S, h1, h2, -1);
  if (!t1 || !t2) fail(Errc::NotSeparated, "class hulls intersect");

  // The two inner tangents cross between the hulls; the sum of the first
  // tangent's direction and the reversed second one points into the empty
  // double wedge there, so projecting onto its normal separates the classes.
  Point d = (S[t1->b] - S[t1->a]) - (S[t2->b] - S[t2->a]);
  if (d == Point{0, 0}) {
    const Point v = S[t1->b] - S[t1->a];
    d = Point{-v.y, v.x};
  }
  auto proj = [&](Index v) { return cross(d, S[v]); };
  Int128 min1 = proj(s1[0]), max1 = min1, min2 = proj(s2[0]), max2 = min2;
  for (Index v : s1) min1 = std::min(min1, proj(v)), max1 = std::max(max1, proj(v));
  for (Index v : s2) min2 = std::min(min2, proj(v)), max2 = std::max(max2, proj(v));

  Partition P;
  // 2 * cross(d, r) = a*x + b*y with a = -2 d.y, b = 2 d.x.
  if (min1 > max2) {
    P.line_ = Line{-2 * static_cast<Int128>(d.y), 2 * static_cast<Int128>(d.x), -(min1 + max2)};
  } else if (max1 < min2) {
    P.line_ = Line{2 * static_cast<Int128>(d.y), -2 * static_cast<Int128>(d.x), max1 + min2};
  } else {
    fail(Errc::NotSeparated, "no separating direction");
  }
  P.s1_ = std::move(s1);
  P.s2_ = std::move(s2);
  for (Index v : P.s1_) {
    if (P.line_.side(S[v]) <= 0) internal_failure("separating line misclassifies class 1");
  }
  for (Index v : P.s2_) {
    if (P.line_.side(S[v]) >= 0) internal_failure("separating line misclassifies class 2");
  }
  P.finish(S);
  return P;
}

Edge inner_tangent(const PointSet& S, std::span<const Index> X, std::span<const Index> Y) {
  const auto hx = convex_hull(S, X);
  const auto hy = convex_hull(S, Y);
  const auto t = tangent_of_hulls(S, hx, hy, +1);
  if (!t) fail(Errc::NotSeparated, "sets are not separated");
  return *t;
}

Partition Partition::by_line(const PointSet& S, std::span<const Index> subset, const Line& line) {
  Partition P;
  P.line_ = line;
  for (Index v : subset) {
    const int s = line.side(S[v]);
    if (s == 0) fail(Errc::PointOnLine, std::to_string(v), {v});
    (s > 0 ? P.s1_ : P.s2_).push_back(v);
  }
  const auto n1 = P.s1_.size();
  const auto n2 = P.s2_.size();
  if (n1 == 0 || n2 == 0 || (n1 > n2 ? n1 - n2 : n2 - n1) > 1) {
    fail(Errc::Unbalanced, std::to_string(n1) + " " + std::to_string(n2));
  }
  P.finish(S);
  return P;
}

Partition partition_by_line(const PointSet& S, std::span<const Index> subset, Point la, Point lb) {
  return Partition::by_line(S, subset, Line::through(la, lb));
}

std::vector<Edge> halving_segments(const PointSet& S, std::span<const Index> subset) {
  const std::size_t n = subset.size();
  if (n % 2 != 0) fail(Errc::OddCardinality, std::to_string(n));
  std::vector<Edge> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t left = 0;
      for (Index w : subset) {
        if (w != subset[i] && w != subset[j] && orient_sign(S[subset[i]], S[subset[j]], S[w]) > 0) {
          ++left;
        }
      }
      if (2 * left == n - 2) out.push_back(Edge{subset[i], subset[j]}.canonical());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> halving_segments(const PointSet& S) {
  const auto all = S.indices();
  return halving_segments(S, all);
}

namespace {

void require_extreme(const PointSet& S, std::span<const Index> subset, Index u) {
  const auto hull = convex_hull(S, subset);
  if (hull_position(hull, u) == npos) {
    fail(Errc::PreconditionViolated, "point " + std::to_string(u) + " is not extreme", {u});
  }
}

}  // namespace

std::pair<Index, Index> almost_balancing_lines_through(const PointSet& S,
                                                        std::span<const Index> subset, Index u) {
  const std::size_t n = subset.size();
  if (n % 2 == 0 || n < 3) fail(Errc::PreconditionViolated, "subset size must be odd and >= 3");
  require_extreme(S, subset, u);
  const auto y = sorted_around_extreme(S, u, subset);
  return {y[(n - 1) / 2], y[(n - 3) / 2]};
}

Partition balancing_line_through_extreme(const PointSet& S, std::span<const Index> subset, Index s,
                                         std::optional<Index> small_side) {
  if (subset.size() < 3) fail(Errc::PreconditionViolated, "need at least 3 points");
  require_extreme(S, subset, s);
  const auto y = sorted_around_extreme(S, s, subset);
  const std::size_t m = y.size();
  std::size_t k = (m + 1) / 2;  // size of the clockwise group
  if (small_side) {
    const auto it = std::find(y.begin(), y.end(), *small_side);
    if (it == y.end()) fail(Errc::PreconditionViolated, "preferred point not in subset");
    const auto j = static_cast<std::size_t>(it - y.begin());
    if (m % 2 == 1) {
      if (j < (m - 1) / 2) {
        k = (m - 1) / 2;
      } else if (j > (m - 1) / 2) {
        k = (m + 1) / 2;
      } else {
        fail(Errc::NoValidChoice, "line through " + std::to_string(s) + " and " +
                                      std::to_string(*small_side) + " is halving");
      }
    }
  }
  const Point dir = (S[y[k - 1]] - S[s]) + (S[y[k]] - S[s]);
  Partition P = Partition::by_line(S, y, Line::through_with_direction(S[s], dir));
  const bool want_swap =
      P.s1().size() < P.s2().size() ||
      (P.s1().size() == P.s2().size() && small_side && P.side_of(*small_side) == 1);
  return want_swap ? P.swapped() : P;
}

VisibilityGraph::VisibilityGraph(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

bool VisibilityGraph::contains(Index a, Index b) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b}) ||
         std::binary_search(edges_.begin(), edges_.end(), Edge{b, a});
}

std::vector<Index> VisibilityGraph::neighbors(Index v) const {
  std::vector<Index> out;
  for (const Edge& e : edges_) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VisibilityGraph visibility_graph(const PointSet& S, const Partition& P) {
  const auto h1 = convex_hull(S, P.s1());
  const auto h2 = convex_hull(S, P.s2());
  std::vector<std::vector<Index>> seen_from2(h2.size());  // points of h1 seen from h2[j]
  for (std::size_t j = 0; j < h2.size(); ++j) {
    seen_from2[j] = visible_from_hull(S, S[h2[j]], h1);
    std::sort(seen_from2[j].begin(), seen_from2[j].end());
  }
  std::vector<Edge> edges;
  for (Index a : h1) {
    auto seen = visible_from_hull(S, S[a], h2);
    std::sort(seen.begin(), seen.end());
    for (std::size_t j = 0; j < h2.size(); ++j) {
      const Index b = h2[j];
      if (std::binary_search(seen.begin(), seen.end(), b) &&
          std::binary_search(seen_from2[j].begin(), seen_from2[j].end(), a)) {
        edges.push_back({a, b});
      }
    }
  }
  return VisibilityGraph(std::move(edges));
}

std::optional<std::pair<Edge, Edge>> find_crossing_pair(const PointSet& S,
                                                        const VisibilityGraph& V) {
  const auto& e = V.edges();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (segments_cross(S[e[i].a], S[e[i].b], S[e[j].a], S[e[j].b])) return std::pair{e[i], e[j]};
    }
  }
  return std::nullopt;
}

bool is_switchable(const PointSet& S, const Partition& P, const VisibilityGraph& V,
                   const SwitchablePath& path) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (P.side_of(path[i]) == 0) return false;
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (path[i] == path[j]) return false;
    }
  }
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    if (P.side_of(path[i]) == P.side_of(path[i + 1])) return false;
    if (!V.contains(path[i], path[i + 1])) return false;
  }
  if (segments_cross(S[path[0]], S[path[1]], S[path[2]], S[path[3]])) return false;
  const Point dir = P.line().direction();
  const Edge e1{path[0], path[1]}, e2{path[1], path[2]}, e3{path[2], path[3]};
  const int c1 = compare_along(S, dir, e1, e2);
  const int c2 = compare_along(S, dir, e2, e3);
  if (c1 == 0 || c1 != c2) return false;
  for (Index w : P.members()) {
    if (strictly_inside_triangle(S[w], S[path[0]], S[path[1]], S[path[2]]) ||
        strictly_inside_triangle(S[w], S[path[1]], S[path[2]], S[path[3]])) {
      return false;
    }
  }
  return true;
}

std::optional<SwitchablePath> find_switchable_path3(const PointSet& S, const Partition& P,
                                                    const VisibilityGraph& V) {
  for (Index v1 : P.members()) {
    for (Index v2 : V.neighbors(v1)) {
      for (Index v3 : V.neighbors(v2)) {
        if (v3 == v1) continue;
        for (Index v4 : V.neighbors(v3)) {
          if (v4 == v2) continue;
          const SwitchablePath path{v1, v2, v3, v4};
          if (is_switchable(S, P, V, path)) return path;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace planepaths
