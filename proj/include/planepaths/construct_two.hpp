#pragma once

// Plane s-t spanning paths and two edge-disjoint plane spanning paths with
// prescribed starting points on the hull.

#include <span>
#include <string_view>
#include <utility>

#include "planepaths/geometry.hpp"
#include "planepaths/paths.hpp"

namespace planepaths {

enum class TwoPathCase {
  OddNotHalving,
  EvenHalvingA,
  EvenHalvingB,
  EvenHalvingC,
  SEqualsT,
  N5Adhoc,
};
std::string_view case_name(TwoPathCase c) noexcept;

struct TwoPathResult {
  PathSeq p;  // starts at s
  PathSeq q;  // starts at t
  TwoPathCase case_tag = TwoPathCase::OddNotHalving;
};

// start followed by the rest of subset in angular order around it. start
// must be extreme in subset.
PathSeq fan_path(const PointSet& S, std::span<const Index> subset, Index start);

// Plane spanning path of subset from s to t.
PathSeq st_path(const PointSet& S, std::span<const Index> subset, Index s, Index t);

// For points p, q outside ch(T) with |T(p) u T(q)| >= 3 and c in T(q):
// a in T(p) and b in T(q) \ {c} such that segments ap and bq are disjoint.
std::pair<Index, Index> select_disjoint_visibility(const PointSet& S, std::span<const Index> T,
                                                   Point p, Point q, Index c);

// Two edge-disjoint plane spanning paths of subset starting at s and t (both
// on the hull of subset, possibly equal); for s != t neither uses edge st.
// Throws TooFew or NotOnHull.
TwoPathResult two_paths_prescribed(const PointSet& S, std::span<const Index> subset, Index s,
                                   Index t);
TwoPathResult two_paths_prescribed(const PointSet& S, Index s, Index t);

}  // namespace planepaths
