#pragma once

// Exact planar predicates on integer points.
//
// Every branch decision in the library goes through the sign of an integer
// determinant evaluated with 128-bit intermediates. Input coordinates are
// bounded by kCoordinateLimit so that differences fit in 32 bits and the
// 3-point determinant fits comfortably in 64; derived direction vectors
// (sums and differences of a few point differences) stay far below the
// 128-bit range.

#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "planepaths/errors.hpp"

namespace planepaths {

using Int128 = __int128;

inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 30;

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

constexpr Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
constexpr Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
constexpr Point operator-(Point a) { return {-a.x, -a.y}; }

constexpr Int128 cross(Point u, Point v) {
  return static_cast<Int128>(u.x) * v.y - static_cast<Int128>(u.y) * v.x;
}
constexpr Int128 dot(Point u, Point v) {
  return static_cast<Int128>(u.x) * v.x + static_cast<Int128>(u.y) * v.y;
}

template <class T>
constexpr int sign(T v) {
  return (v > 0) - (v < 0);
}

enum class Orientation : int { Clockwise = -1, Collinear = 0, Counterclockwise = 1 };

// Sign of (b - a) x (c - a). Counterclockwise means c is left of a->b.
inline int orient_sign(Point a, Point b, Point c) { return sign(cross(b - a, c - a)); }
inline Orientation orient(Point a, Point b, Point c) {
  return static_cast<Orientation>(orient_sign(a, b, c));
}

// True iff the open segments ab and cd share a point. Touching at an
// endpoint is not a crossing.
bool segments_cross(Point a, Point b, Point c, Point d);

// Strictly inside the triangle abc (either orientation).
bool strictly_inside_triangle(Point p, Point a, Point b, Point c);

// An unordered pair of point indices. Construction code keeps the endpoint
// order meaningful (e.g. side-1 endpoint first); use canonical() for set
// membership.
struct Edge {
  Index a = 0;
  Index b = 0;

  constexpr Edge canonical() const { return a < b ? Edge{a, b} : Edge{b, a}; }
  constexpr bool touches(Index v) const { return a == v || b == v; }
  constexpr bool same_as(const Edge& o) const { return canonical() == o.canonical(); }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Validated point collection: pairwise distinct, no three collinear,
// coordinates within kCoordinateLimit.
class PointSet {
 public:
  PointSet() = default;

  // Throws Error{DuplicatePoint | CollinearTriple | CoordinateOutOfRange}
  // naming the offending indices.
  static PointSet validate(std::vector<Point> points);

  std::size_t size() const noexcept { return points_.size(); }
  const Point& operator[](Index i) const { return points_[i]; }
  std::span<const Point> points() const noexcept { return points_; }
  std::vector<Index> indices() const;

  // Reflection x -> -x. Indices are preserved; orientations flip.
  PointSet mirrored() const;

 private:
  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {}
  std::vector<Point> points_;
};

PointSet validate_general_position(std::vector<Point> points);

// Extreme points of the subset in counterclockwise order, starting at the
// lexicographically smallest one. A 2-point subset yields both points.
std::vector<Index> convex_hull(const PointSet& S, std::span<const Index> subset);
std::vector<Index> convex_hull(const PointSet& S);

// Position of v in a ccw hull, or npos.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
std::size_t hull_position(std::span<const Index> hull, Index v);
Index ccw_neighbor(std::span<const Index> hull, Index v);  // successor in ccw order
Index cw_neighbor(std::span<const Index> hull, Index v);   // predecessor in ccw order

// Points of hull(T) seen from p (segment pq meets ch(T) only in q), as a
// contiguous ccw arc. Throws PointNotOutsideHull when p is in ch(T).
std::vector<Index> visible_hull_points(const PointSet& S, Point p, std::span<const Index> subset);
std::vector<Index> visible_from_hull(const PointSet& S, Point p, std::span<const Index> hull);

// subset sorted counterclockwise around `center`, which must be extreme in
// subset (all other points within an open half-plane through it). The
// center itself is not part of the output.
std::vector<Index> sorted_around_extreme(const PointSet& S, Index center,
                                         std::span<const Index> subset);

// Oriented line a*x + b*y + c = 0 with integer coefficients. The positive
// side is to the left of direction() = (b, -a).
struct Line {
  Int128 a = 0;
  Int128 b = 0;
  Int128 c = 0;

  static Line through(Point p, Point q);
  static Line through_with_direction(Point p, Point dir);

  int side(Point r) const { return sign(a * r.x + b * r.y + c); }
  Point direction() const { return {static_cast<std::int64_t>(b), static_cast<std::int64_t>(-a)}; }
  Line flipped() const { return {-a, -b, -c}; }
};

// Orders two segments by where they meet a line with direction `dir`. Both
// segments must have their endpoints on opposite sides of the line and must
// not cross each other (a shared endpoint is fine). Returns <0 if seg1 meets
// the line first along dir, >0 if later, 0 for the same segment.
int compare_along(const PointSet& S, Point dir, Edge seg1, Edge seg2);

}  // namespace planepaths
