#pragma once

// Three edge-disjoint plane spanning paths: the structural search over
// halving lines, the assembly steps built on zig-zag paths, and the wheel.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "planepaths/geometry.hpp"
#include "planepaths/partition.hpp"
#include "planepaths/paths.hpp"

namespace planepaths {

struct CrossingPair {
  Partition partition;
  Edge e1, e2;  // (s1 endpoint, s2 endpoint)
};

struct SwitchablePlusBridged {
  Partition partition;
  SwitchablePath path;
  Index bridged;
};

struct Wheel {
  Index center;
  std::vector<Index> rim;  // ccw
};

using StructuralWitness = std::variant<CrossingPair, SwitchablePlusBridged, Wheel>;

std::string witness_kind(const StructuralWitness& w);
// Re-checks the variant's defining conditions with direct predicates.
bool validate_witness(const PointSet& S, const StructuralWitness& w);

// For a halving segment uv with u extreme: a halving segment pq with p == v
// or pq crossing uv, as in the halving-partner argument.
std::pair<Index, Index> claim_halving_partner(const PointSet& S, Index u, Index v);

// Throws TooFew for n < 5 and InternalError if the search ends without a
// witness on a set that is not a wheel.
StructuralWitness structural_search(const PointSet& S);

// Center of a wheel configuration, if S is one.
std::optional<Index> is_wheel(const PointSet& S);
// n/2 - 1 pairwise edge-disjoint plane spanning paths of a wheel.
std::vector<PathSeq> wheel_paths(const PointSet& S, Index center);

struct ThreePaths {
  std::vector<PathSeq> paths;
  std::string route;  // which assembly produced them
};

// Two free edges e1 = (a, b), e2 = (c, d) with a, c in s1 and b, d in s2.
ThreePaths three_from_two_free_edges(const PointSet& S, const Partition& P, const PathSeq& Z,
                                     Edge e1, Edge e2);
// Z contains the three edges of sp in order.
ThreePaths three_from_switchable(const PointSet& S, const Partition& P, const PathSeq& Z,
                                 const SwitchablePath& sp);
ThreePaths three_from_crossing(const PointSet& S, const Partition& P, Edge e1, Edge e2);
ThreePaths three_from_switchable_plus_bridge(const PointSet& S, const Partition& P,
                                             const SwitchablePath& sp, Index u);

struct OracleFallback {
  std::size_t n;
};

struct ThreePathResult {
  std::vector<PathSeq> paths;
  std::variant<OracleFallback, StructuralWitness> witness;
  std::string route;
};

// n >= 10 through the structural search; 7 <= n <= 9 through the oracle.
// Throws TooFew for n < 7.
ThreePathResult three_paths(const PointSet& S);

// The rerouted zig-zag path of the switchable-path assembly is not plane.
class PlanarityFailure : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace planepaths
