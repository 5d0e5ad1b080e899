#include "planepaths/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace planepaths {

bool segments_cross(Point a, Point b, Point c, Point d) {
  const int o1 = orient_sign(a, b, c);
  const int o2 = orient_sign(a, b, d);
  const int o3 = orient_sign(c, d, a);
  const int o4 = orient_sign(c, d, b);
  if (o1 == 0 && o2 == 0) {
    // Collinear: the open segments overlap iff their open projections do.
    const bool use_x = a.x != b.x || c.x != d.x;
    auto lo_hi = [use_x](Point p, Point q) {
      const auto u = use_x ? p.x : p.y;
      const auto v = use_x ? q.x : q.y;
      return std::pair{std::min(u, v), std::max(u, v)};
    };
    const auto [l1, h1] = lo_hi(a, b);
    const auto [l2, h2] = lo_hi(c, d);
    return std::max(l1, l2) < std::min(h1, h2);
  }
  // A touching configuration (one orientation zero) meets only at a point
  // that is an endpoint of one of the segments.
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool strictly_inside_triangle(Point p, Point a, Point b, Point c) {
  const int o = orient_sign(a, b, c);
  if (o == 0) return false;
  return orient_sign(a, b, p) == o && orient_sign(b, c, p) == o && orient_sign(c, a, p) == o;
}

PointSet PointSet::validate(std::vector<Point> points) {
  const std::size_t n = points.size();
  for (Index i = 0; i < n; ++i) {
    const Point& p = points[i];
    if (p.x > kCoordinateLimit || p.x < -kCoordinateLimit || p.y > kCoordinateLimit ||
        p.y < -kCoordinateLimit) {
      fail(Errc::CoordinateOutOfRange,
           "point " + std::to_string(i) + " exceeds |coordinate| <= 2^30", {i});
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) {
        fail(Errc::DuplicatePoint, std::to_string(i) + " " + std::to_string(j), {i, j});
      }
    }
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        if (orient_sign(points[i], points[j], points[k]) == 0) {
          fail(Errc::CollinearTriple,
               std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(k), {i, j, k});
        }
      }
    }
  }
  return PointSet(std::move(points));
}

std::vector<Index> PointSet::indices() const {
  std::vector<Index> out(points_.size());
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

PointSet PointSet::mirrored() const {
  std::vector<Point> pts = points_;
  for (auto& p : pts) p.x = -p.x;
  return PointSet(std::move(pts));
}

PointSet validate_general_position(std::vector<Point> points) {
  return PointSet::validate(std::move(points));
}

std::vector<Index> convex_hull(const PointSet& S, std::span<const Index> subset) {
  std::vector<Index> idx(subset.begin(), subset.end());
  std::sort(idx.begin(), idx.end(), [&](Index i, Index j) { return S[i] < S[j]; });
  if (idx.size() <= 2) return idx;
  // Andrew's monotone chain; strict turns only, so collinear points drop out.
  std::vector<Index> hull(2 * idx.size());
  std::size_t k = 0;
  for (Index i : idx) {
    while (k >= 2 && orient_sign(S[hull[k - 2]], S[hull[k - 1]], S[i]) <= 0) --k;
    hull[k++] = i;
  }
  for (std::size_t t = idx.size() - 1, lower = k + 1; t-- > 0;) {
    const Index i = idx[t];
    while (k >= lower && orient_sign(S[hull[k - 2]], S[hull[k - 1]], S[i]) <= 0) --k;
    hull[k++] = i;
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Index> convex_hull(const PointSet& S) {
  const auto all = S.indices();
  return convex_hull(S, all);
}

std::size_t hull_position(std::span<const Index> hull, Index v) {
  const auto it = std::find(hull.begin(), hull.end(), v);
  return it == hull.end() ? npos : static_cast<std::size_t>(it - hull.begin());
}

Index ccw_neighbor(std::span<const Index> hull, Index v) {
  const std::size_t pos = hull_position(hull, v);
  if (pos == npos) internal_failure("ccw_neighbor: vertex not on hull");
  return hull[(pos + 1) % hull.size()];
}

Index cw_neighbor(std::span<const Index> hull, Index v) {
  const std::size_t pos = hull_position(hull, v);
  if (pos == npos) internal_failure("cw_neighbor: vertex not on hull");
  return hull[(pos + hull.size() - 1) % hull.size()];
}

std::vector<Index> visible_from_hull(const PointSet& S, Point p, std::span<const Index> hull) {
  const std::size_t h = hull.size();
  if (h == 0) fail(Errc::PreconditionViolated, "visibility against an empty set");
  if (h == 1) {
    if (S[hull[0]] == p) fail(Errc::PointNotOutsideHull, "query point coincides with the set");
    return {hull[0]};
  }
  if (h == 2) {
    const Point a = S[hull[0]];
    const Point b = S[hull[1]];
    if (orient_sign(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
        std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y)) {
      fail(Errc::PointNotOutsideHull, "query point lies on the segment");
    }
    return {hull[0], hull[1]};
  }
  // The hull edges facing p (p strictly to their right) form one contiguous
  // run; the visible vertices are exactly the endpoints of those edges.
  std::vector<char> facing(h);
  std::size_t run = 0;
  for (std::size_t i = 0; i < h; ++i) {
    facing[i] = orient_sign(S[hull[i]], S[hull[(i + 1) % h]], p) < 0;
    run += facing[i] ? 1 : 0;
  }
  if (run == 0) fail(Errc::PointNotOutsideHull, "query point is inside the hull");
  std::size_t start = 0;
  while (!(facing[start] && !facing[(start + h - 1) % h])) ++start;
  std::vector<Index> arc;
  arc.reserve(run + 1);
  for (std::size_t i = 0; i <= run; ++i) arc.push_back(hull[(start + i) % h]);
  return arc;
}

std::vector<Index> visible_hull_points(const PointSet& S, Point p, std::span<const Index> subset) {
  const auto hull = convex_hull(S, subset);
  return visible_from_hull(S, p, hull);
}

std::vector<Index> sorted_around_extreme(const PointSet& S, Index center,
                                         std::span<const Index> subset) {
  std::vector<Index> out;
  out.reserve(subset.size());
  for (Index i : subset) {
    if (i != center) out.push_back(i);
  }
  const Point c = S[center];
  std::sort(out.begin(), out.end(),
            [&](Index i, Index j) { return orient_sign(c, S[i], S[j]) > 0; });
  return out;
}

Line Line::through(Point p, Point q) { return through_with_direction(p, q - p); }

Line Line::through_with_direction(Point p, Point dir) {
  Line l;
  l.a = -static_cast<Int128>(dir.y);
  l.b = dir.x;
  l.c = -(l.a * p.x + l.b * p.y);
  return l;
}

int compare_along(const PointSet& S, Point dir, Edge seg1, Edge seg2) {
  if (seg1.same_as(seg2)) return 0;
  // >0: `other` meets the line after `base` along dir; 0: undecided because
  // other's endpoints straddle base's supporting line.
  auto relative = [&](Edge base, Edge other) {
    const Point p = S[base.a];
    const Point q = S[base.b];
    auto side = [&](Index v) { return base.touches(v) ? 0 : orient_sign(p, q, S[v]); };
    const int o1 = side(other.a);
    const int o2 = side(other.b);
    if (o1 * o2 < 0) return 0;
    const int s = o1 != 0 ? o1 : o2;
    return s * sign(cross(q - p, dir));
  };
  if (const int r = relative(seg1, seg2); r != 0) return -r;
  if (const int r = relative(seg2, seg1); r != 0) return r;
  internal_failure("compare_along: segments cross each other");
}

}  // namespace planepaths
