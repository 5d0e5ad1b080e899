#pragma once

// Exhaustive search for k pairwise edge-disjoint plane spanning paths on
// small point sets.

#include <cstdint>
#include <span>
#include <vector>

#include "planepaths/geometry.hpp"
#include "planepaths/paths.hpp"

namespace planepaths {

inline constexpr std::size_t kOracleSoftLimit = 12;
inline constexpr std::size_t kOracleHardLimit = 16;  // edge ids must fit in 128 bits

struct SearchConfig {
  std::size_t k = 3;
  std::uint64_t max_nodes = 50'000'000;
  // Canonical form: every path runs from its smaller endpoint to its larger
  // one and the paths are ordered by (first, second) vertex.
  bool symmetry_reduction = true;
  // Vertex-degree infeasibility cuts. Off only to cross-check soundness.
  bool pruning = true;
  // Permit kOracleSoftLimit < n <= kOracleHardLimit.
  bool allow_large = false;
};

enum class SearchStatus { Found, Absent, BudgetExceeded };
const char* status_name(SearchStatus s) noexcept;

struct SearchResult {
  SearchStatus status = SearchStatus::Absent;
  std::vector<PathSeq> paths;
  std::uint64_t nodes = 0;
};

SearchResult find_k_disjoint_paths(const PointSet& S, const SearchConfig& cfg);

// One path per entry of `starts`, path i beginning at starts[i], all of them
// spanning `subset` and avoiding `forbidden`. Starts may repeat.
SearchResult find_paths_with_starts(const PointSet& S, std::span<const Index> subset,
                                    std::span<const Index> starts,
                                    std::uint64_t max_nodes = 10'000'000,
                                    std::span<const Edge> forbidden = {});

struct MaxPathsResult {
  std::size_t k = 0;
  // False when some search on the way hit the node budget; k is then only a
  // lower bound.
  bool definitive = true;
  std::uint64_t nodes = 0;
};

// Largest k with k disjoint plane spanning paths; `budget` applies to each
// individual search.
MaxPathsResult max_disjoint_paths(const PointSet& S, std::uint64_t budget);

}  // namespace planepaths
