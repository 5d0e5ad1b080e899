#pragma once

// Balanced separated partitions and the bipartite visibility graph between
// the two hulls.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "planepaths/geometry.hpp"

namespace planepaths {

// (s1, s2) with | |s1| - |s2| | <= 1, both nonempty, and a line that has s1
// strictly on its positive side and s2 strictly on its negative side. The
// bridges are the two edges of ch(s1 u s2) with one endpoint in each class,
// stored as (s1 endpoint, s2 endpoint); they coincide when both classes are
// singletons.
class Partition {
 public:
  const std::vector<Index>& s1() const noexcept { return s1_; }
  const std::vector<Index>& s2() const noexcept { return s2_; }
  const std::vector<Index>& cls(int side) const { return side == 1 ? s1_ : s2_; }
  std::vector<Index> members() const;
  const Line& line() const noexcept { return line_; }
  const std::array<Edge, 2>& bridges() const noexcept { return bridges_; }

  // 1 or 2 for members, 0 otherwise.
  int side_of(Index v) const { return v < side_.size() ? side_[v] : 0; }
  bool is_bridged(Index v) const;

  // Same partition with the class labels exchanged (and the line flipped).
  Partition swapped() const;

  // Builds a partition from two index classes, computing a strictly
  // separating line. Throws Unbalanced or NotSeparated.
  static Partition from_classes(const PointSet& S, std::vector<Index> s1, std::vector<Index> s2);
  // s1 = positive side of `line`, s2 = negative side. Throws PointOnLine or
  // Unbalanced.
  static Partition by_line(const PointSet& S, std::span<const Index> subset, const Line& line);

 private:
  Partition() = default;
  void finish(const PointSet& S);

  std::vector<Index> s1_;
  std::vector<Index> s2_;
  Line line_;
  std::array<Edge, 2> bridges_{};
  std::vector<std::uint8_t> side_;
};

// Inner common tangent of two separated sets: x in X, y in Y with X \ {x}
// strictly left of x->y and Y \ {y} strictly right. Throws NotSeparated.
Edge inner_tangent(const PointSet& S, std::span<const Index> X, std::span<const Index> Y);

Partition partition_by_line(const PointSet& S, std::span<const Index> subset, Point la, Point lb);

// All index pairs (x < y) whose line leaves exactly (n-2)/2 points of the
// subset strictly on each side. Throws OddCardinality.
std::vector<Edge> halving_segments(const PointSet& S, std::span<const Index> subset);
std::vector<Edge> halving_segments(const PointSet& S);

// For odd |subset| and extreme u: the two points a, b such that ua and ub
// leave (n-1)/2 and (n-3)/2 points on their sides, with b right of u->a.
std::pair<Index, Index> almost_balancing_lines_through(const PointSet& S,
                                                        std::span<const Index> subset, Index u);

// A balanced separated partition of subset \ {s} by a line through the
// extreme point s and no other point. s1 is the larger class. When
// `small_side` is given it lands in s2 (the smaller class when the sizes
// differ); throws NoValidChoice when no such line exists, i.e. when the line
// through s and small_side is a halving line of an even-sized subset.
Partition balancing_line_through_extreme(const PointSet& S, std::span<const Index> subset, Index s,
                                         std::optional<Index> small_side = std::nullopt);

// Bipartite graph of pairs (a in s1, b in s2) whose segment meets
// ch(s1) u ch(s2) only at its endpoints. Edges are stored as (s1, s2) pairs
// in lexicographic order.
class VisibilityGraph {
 public:
  VisibilityGraph() = default;
  explicit VisibilityGraph(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool contains(Index a, Index b) const;
  bool contains(Edge e) const { return contains(e.a, e.b); }
  std::vector<Index> neighbors(Index v) const;
  std::size_t degree(Index v) const { return neighbors(v).size(); }

 private:
  std::vector<Edge> edges_;  // sorted, (s1 endpoint, s2 endpoint)
};

VisibilityGraph visibility_graph(const PointSet& S, const Partition& P);

// Two crossing edges of V, lexicographically smallest as a 4-tuple.
std::optional<std::pair<Edge, Edge>> find_crossing_pair(const PointSet& S,
                                                        const VisibilityGraph& V);

using SwitchablePath = std::array<Index, 4>;

// v1..v4 alternate classes, consecutive pairs are V-edges that meet the
// separating line in path order, the path does not self-cross, and the open
// triangles v1v2v3 and v2v3v4 contain no point of S.
bool is_switchable(const PointSet& S, const Partition& P, const VisibilityGraph& V,
                   const SwitchablePath& path);

// Lexicographically smallest switchable path of length 3, if any.
std::optional<SwitchablePath> find_switchable_path3(const PointSet& S, const Partition& P,
                                                    const VisibilityGraph& V);

}  // namespace planepaths
