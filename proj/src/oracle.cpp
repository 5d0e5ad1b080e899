#include "planepaths/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace planepaths {

const char* status_name(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "unknown";
}

namespace {

using Mask = unsigned __int128;

int popcount(Mask m) {
  return std::popcount(static_cast<std::uint64_t>(m)) +
         std::popcount(static_cast<std::uint64_t>(m >> 64));
}

struct BudgetHit {};

class Search {
 public:
  Search(const PointSet& S, std::span<const Index> subset, std::size_t k, std::uint64_t budget,
         bool canonical, bool pruning)
      : vid_(subset.begin(), subset.end()), m_(vid_.size()), k_(k), budget_(budget),
        canonical_(canonical), pruning_(pruning) {
    id_.assign(m_ * m_, 0);
    std::vector<std::pair<int, int>> ends;
    for (int i = 0; i < m_; ++i) {
      for (int j = i + 1; j < m_; ++j) {
        id_[i * m_ + j] = id_[j * m_ + i] = static_cast<int>(ends.size());
        ends.push_back({i, j});
      }
    }
    const auto E = ends.size();
    cross_.assign(E, 0);
    incident_.assign(m_, 0);
    for (std::size_t e = 0; e < E; ++e) {
      incident_[ends[e].first] |= Mask{1} << e;
      incident_[ends[e].second] |= Mask{1} << e;
      for (std::size_t f = e + 1; f < E; ++f) {
        const Point a = S[vid_[ends[e].first]], b = S[vid_[ends[e].second]];
        const Point c = S[vid_[ends[f].first]], d = S[vid_[ends[f].second]];
        if (segments_cross(a, b, c, d)) {
          cross_[e] |= Mask{1} << f;
          cross_[f] |= Mask{1} << e;
        }
      }
    }
  }

  // starts: empty for free search, else one (local) start per path.
  SearchResult run(std::vector<int> starts, std::span<const Edge> forbidden = {}) {
    starts_ = std::move(starts);
    Mask used = 0;
    for (const Edge& e : forbidden) {
      const int a = local(e.a), b = local(e.b);
      if (a >= 0 && b >= 0 && a != b) used |= Mask{1} << id_[a * m_ + b];
    }
    SearchResult r;
    paths_.assign(k_, {});
    try {
      r.status = m_ == 1 ? single() : (next_path(0, used) ? SearchStatus::Found : SearchStatus::Absent);
    } catch (const BudgetHit&) {
      r.status = SearchStatus::BudgetExceeded;
    }
    r.nodes = nodes_;
    if (r.status == SearchStatus::Found) {
      for (const auto& p : paths_) {
        PathSeq out;
        for (int v : p) out.push_back(vid_[v]);
        r.paths.push_back(std::move(out));
      }
    }
    return r;
  }

 private:
  SearchStatus single() {
    for (auto& p : paths_) p = {0};
    return SearchStatus::Found;
  }

  int local(Index v) const {
    const auto it = std::find(vid_.begin(), vid_.end(), v);
    return it == vid_.end() ? -1 : static_cast<int>(it - vid_.begin());
  }

  void tick() {
    if (++nodes_ > budget_) throw BudgetHit{};
  }

  bool degree_cut(std::size_t remaining, Mask used) const {
    const int F = static_cast<int>(remaining);
    int deficit = 0;
    for (int v = 0; v < m_; ++v) {
      const int avail = popcount(incident_[v] & ~used);
      if (avail < F) return true;
      if (avail < 2 * F) deficit += 2 * F - avail;
    }
    return deficit > 2 * F;
  }

  bool next_path(std::size_t pi, Mask used) {
    if (pi == k_) return true;
    if (pruning_ && degree_cut(k_ - pi, used)) return false;
    auto& path = paths_[pi];
    if (!starts_.empty()) {
      path = {starts_[pi]};
      return extend(pi, used, 0, 1u << starts_[pi]);
    }
    for (int s = 0; s < m_; ++s) {
      if (canonical_ && pi > 0 && s < paths_[pi - 1][0]) continue;
      path = {s};
      if (extend(pi, used, 0, 1u << s)) return true;
    }
    return false;
  }

  bool extend(std::size_t pi, Mask used, Mask crossed, unsigned visited) {
    auto& path = paths_[pi];
    const int v = path.back();
    if (static_cast<int>(path.size()) == m_) {
      if (canonical_ && starts_.empty() && path.front() > path.back()) return false;
      return next_path(pi + 1, used);
    }
    for (int w = 0; w < m_; ++w) {
      if (visited >> w & 1u) continue;
      const int e = id_[v * m_ + w];
      const Mask bit = Mask{1} << e;
      if ((used & bit) || (crossed & bit)) continue;
      if (canonical_ && starts_.empty() && pi > 0 && path.size() == 1) {
        const auto& prev = paths_[pi - 1];
        if (path[0] == prev[0] && w <= prev[1]) continue;
      }
      tick();
      path.push_back(w);
      if (extend(pi, used | bit, crossed | cross_[e], visited | 1u << w)) return true;
      path.pop_back();
    }
    return false;
  }

  std::vector<Index> vid_;
  int m_;
  std::size_t k_;
  std::uint64_t budget_;
  bool canonical_;
  bool pruning_;
  std::vector<int> id_;
  std::vector<Mask> cross_;
  std::vector<Mask> incident_;
  std::vector<int> starts_;
  std::vector<std::vector<int>> paths_;
  std::uint64_t nodes_ = 0;
};

void check_size(std::size_t n, bool allow_large) {
  if (n == 0) fail(Errc::TooFew, "empty point set");
  if (n > kOracleHardLimit || (n > kOracleSoftLimit && !allow_large)) {
    fail(Errc::PreconditionViolated,
         "oracle limited to " + std::to_string(allow_large ? kOracleHardLimit : kOracleSoftLimit) +
             " points, got " + std::to_string(n));
  }
}

}  // namespace

SearchResult find_k_disjoint_paths(const PointSet& S, const SearchConfig& cfg) {
  check_size(S.size(), cfg.allow_large);
  if (cfg.k == 0 || cfg.max_nodes == 0) fail(Errc::PreconditionViolated, "k and max_nodes must be positive");
  const auto all = S.indices();
  Search search(S, all, cfg.k, cfg.max_nodes, cfg.symmetry_reduction, cfg.pruning);
  return search.run({});
}

SearchResult find_paths_with_starts(const PointSet& S, std::span<const Index> subset,
                                    std::span<const Index> starts, std::uint64_t max_nodes,
                                    std::span<const Edge> forbidden) {
  check_size(subset.size(), true);
  std::vector<int> local;
  for (Index s : starts) {
    int pos = -1;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (subset[i] == s) pos = static_cast<int>(i);
    }
    if (pos < 0) fail(Errc::PreconditionViolated, "start not in subset", {s});
    local.push_back(pos);
  }
  if (local.empty()) fail(Errc::PreconditionViolated, "no starts given");
  Search search(S, subset, local.size(), max_nodes, false, true);
  return search.run(std::move(local), forbidden);
}

MaxPathsResult max_disjoint_paths(const PointSet& S, std::uint64_t budget) {
  MaxPathsResult out;
  const std::size_t n = S.size();
  // k paths need k(n-1) of the n(n-1)/2 edges.
  const std::size_t cap = n <= 1 ? 1 : n / 2;
  for (std::size_t k = 1; k <= cap; ++k) {
    SearchConfig cfg;
    cfg.k = k;
    cfg.max_nodes = budget;
    cfg.allow_large = true;
    const auto r = find_k_disjoint_paths(S, cfg);
    out.nodes += r.nodes;
    if (r.status == SearchStatus::Found) {
      out.k = k;
      continue;
    }
    out.definitive = r.status == SearchStatus::Absent;
    break;
  }
  return out;
}

}  // namespace planepaths
