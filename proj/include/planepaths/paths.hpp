#pragma once

// Paths as vertex sequences, zig-zag paths of a separated partition, and the
// independent verifier.

#include <span>
#include <string>
#include <vector>

#include "planepaths/geometry.hpp"
#include "planepaths/partition.hpp"

namespace planepaths {

using PathSeq = std::vector<Index>;

PathSeq reverse(PathSeq p);
// p followed by q. Throws SharedVertex if they have a vertex in common.
PathSeq concat(const PathSeq& p, const PathSeq& q);
std::vector<Edge> path_edges(const PathSeq& p);  // canonical (min, max) pairs

bool is_plane(const PointSet& S, const PathSeq& p);
bool is_spanning(const PointSet& S, std::span<const Index> subset, const PathSeq& p);
bool is_spanning(const PointSet& S, const PathSeq& p);
bool pairwise_edge_disjoint(std::span<const PathSeq> paths);

// Zig-zag path starting at the `start_side` endpoint of the left bridge,
// where "left" is measured along the partition line's direction. Throws
// InvalidStartSide when start_side names the smaller class.
PathSeq zigzag_path(const PointSet& S, const Partition& P, int start_side);

// Zig-zag path starting at a bridged vertex u. If u is not on the left
// bridge the construction runs against the reversed line direction.
PathSeq zigzag_from(const PointSet& S, const Partition& P, Index u);

// Everything the verifier found wrong; empty lists mean the check passed.
struct VerifyReport {
  struct Crossing {
    std::size_t path;
    Edge e1, e2;
  };
  struct Shared {
    std::size_t path1, path2;
    Edge e;
  };
  struct Coverage {
    std::size_t path;
    std::vector<Index> missing;
    std::vector<Index> repeated;
    std::vector<Index> foreign;
  };
  std::vector<Crossing> crossings;
  std::vector<Shared> shared;
  std::vector<Coverage> coverage;

  bool plane(std::size_t path) const;
  bool spanning(std::size_t path) const;
  bool edge_disjoint() const { return shared.empty(); }
  bool ok() const { return crossings.empty() && shared.empty() && coverage.empty(); }
  std::string summary() const;
};

VerifyReport verify_paths(const PointSet& S, std::span<const PathSeq> paths);

}  // namespace planepaths
