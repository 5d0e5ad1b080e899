#include "planepaths/paths.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace planepaths {

PathSeq reverse(PathSeq p) {
  std::reverse(p.begin(), p.end());
  return p;
}

PathSeq concat(const PathSeq& p, const PathSeq& q) {
  std::vector<Index> a(p), b(q);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Index> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (!common.empty()) fail(Errc::SharedVertex, std::to_string(common.front()), common);
  PathSeq out = p;
  out.insert(out.end(), q.begin(), q.end());
  return out;
}

std::vector<Edge> path_edges(const PathSeq& p) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.push_back(Edge{p[i], p[i + 1]}.canonical());
  return out;
}

bool is_plane(const PointSet& S, const PathSeq& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    for (std::size_t j = i + 2; j + 1 < p.size(); ++j) {
      if (segments_cross(S[p[i]], S[p[i + 1]], S[p[j]], S[p[j + 1]])) return false;
    }
  }
  return true;
}

bool is_spanning(const PointSet& S, std::span<const Index> subset, const PathSeq& p) {
  std::vector<Index> a(p.begin(), p.end()), b(subset.begin(), subset.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  for (Index v : a) {
    if (v >= S.size()) return false;
  }
  return std::adjacent_find(a.begin(), a.end()) == a.end() && a == b;
}

bool is_spanning(const PointSet& S, const PathSeq& p) {
  const auto all = S.indices();
  return is_spanning(S, all, p);
}

bool pairwise_edge_disjoint(std::span<const PathSeq> paths) {
  std::vector<Edge> all;
  for (const auto& p : paths) {
    auto e = path_edges(p);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    all.insert(all.end(), e.begin(), e.end());
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

namespace {

// Bridge of `rest` that meets the line first along dir, as (s1, s2) pair.
// Returns false when `rest` holds points of one class only.
bool left_bridge(const PointSet& S, const Partition& P, std::span<const Index> rest, Point dir,
                 Edge& out) {
  const auto hull = convex_hull(S, rest);
  std::vector<Edge> found;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Index u = hull[i];
    const Index w = hull[(i + 1) % hull.size()];
    if (P.side_of(u) != P.side_of(w)) found.push_back(P.side_of(u) == 1 ? Edge{u, w} : Edge{w, u});
    if (hull.size() == 2) break;
  }
  if (found.empty()) return false;
  out = found[0];
  for (std::size_t i = 1; i < found.size(); ++i) {
    if (compare_along(S, dir, found[i], out) < 0) out = found[i];
  }
  return true;
}

PathSeq zigzag_run(const PointSet& S, const Partition& P, Point dir, Index start) {
  PathSeq path{start};
  std::vector<Index> rest = P.members();
  rest.erase(std::find(rest.begin(), rest.end(), start));
  while (!rest.empty()) {
    const int last_side = P.side_of(path.back());
    Edge bridge;
    Index next;
    if (left_bridge(S, P, rest, dir, bridge)) {
      next = last_side == 1 ? bridge.b : bridge.a;
    } else {
      if (rest.size() != 1 || P.side_of(rest[0]) == last_side) {
        internal_failure("zig-zag construction ran out of alternating points");
      }
      next = rest[0];
    }
    path.push_back(next);
    rest.erase(std::find(rest.begin(), rest.end(), next));
  }
  return path;
}

std::size_t class_size(const Partition& P, int side) { return P.cls(side).size(); }

}  // namespace

PathSeq zigzag_path(const PointSet& S, const Partition& P, int start_side) {
  if (start_side != 1 && start_side != 2) fail(Errc::InvalidStartSide, "side must be 1 or 2");
  if (class_size(P, start_side) < class_size(P, 3 - start_side)) {
    fail(Errc::InvalidStartSide, "a zig-zag path must start in the larger class");
  }
  const Point dir = P.line().direction();
  const auto& br = P.bridges();
  const Edge left = compare_along(S, dir, br[0], br[1]) <= 0 ? br[0] : br[1];
  return zigzag_run(S, P, dir, start_side == 1 ? left.a : left.b);
}

PathSeq zigzag_from(const PointSet& S, const Partition& P, Index u) {
  const int side = P.side_of(u);
  if (side == 0 || !P.is_bridged(u)) fail(Errc::PreconditionViolated, "start is not bridged", {u});
  if (class_size(P, side) < class_size(P, 3 - side)) {
    fail(Errc::InvalidStartSide, "a zig-zag path must start in the larger class", {u});
  }
  const Point dir = P.line().direction();
  const auto& br = P.bridges();
  const Edge left = compare_along(S, dir, br[0], br[1]) <= 0 ? br[0] : br[1];
  const PathSeq path = zigzag_run(S, P, left.touches(u) ? dir : -dir, u);
  return path;
}

bool VerifyReport::plane(std::size_t path) const {
  return std::none_of(crossings.begin(), crossings.end(),
                      [&](const Crossing& c) { return c.path == path; });
}

bool VerifyReport::spanning(std::size_t path) const {
  return std::none_of(coverage.begin(), coverage.end(),
                      [&](const Coverage& c) { return c.path == path; });
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  for (const auto& c : crossings) {
    os << "path " << c.path << ": edges " << c.e1.a << "-" << c.e1.b << " and " << c.e2.a << "-"
       << c.e2.b << " cross\n";
  }
  for (const auto& c : coverage) {
    auto list = [&](const char* what, const std::vector<Index>& v) {
      if (v.empty()) return;
      os << "path " << c.path << ": " << what;
      for (Index i : v) os << " " << i;
      os << "\n";
    };
    list("missing", c.missing);
    list("repeated", c.repeated);
    list("unknown index", c.foreign);
  }
  for (const auto& s : shared) {
    os << "paths " << s.path1 << " and " << s.path2 << " share edge " << s.e.a << "-" << s.e.b
       << "\n";
  }
  return os.str();
}

VerifyReport verify_paths(const PointSet& S, std::span<const PathSeq> paths) {
  VerifyReport r;
  const std::size_t n = S.size();
  std::map<Edge, std::size_t> owner;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const PathSeq& p = paths[k];
    VerifyReport::Coverage cov{k, {}, {}, {}};
    std::vector<int> seen(n, 0);
    for (Index v : p) {
      if (v >= n) {
        cov.foreign.push_back(v);
      } else if (seen[v]++ == 1) {
        cov.repeated.push_back(v);
      }
    }
    for (Index v = 0; v < n; ++v) {
      if (seen[v] == 0) cov.missing.push_back(v);
    }
    const bool foreign = !cov.foreign.empty();
    if (!cov.missing.empty() || !cov.repeated.empty() || foreign) r.coverage.push_back(cov);
    if (foreign) continue;

    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      for (std::size_t j = i + 2; j + 1 < p.size(); ++j) {
        if (segments_cross(S[p[i]], S[p[i + 1]], S[p[j]], S[p[j + 1]])) {
          r.crossings.push_back({k, Edge{p[i], p[i + 1]}, Edge{p[j], p[j + 1]}});
        }
      }
    }
    std::vector<Edge> own;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) own.push_back(Edge{p[i], p[i + 1]}.canonical());
    std::sort(own.begin(), own.end());
    own.erase(std::unique(own.begin(), own.end()), own.end());
    for (const Edge& e : own) {
      const auto [it, inserted] = owner.emplace(e, k);
      if (!inserted) r.shared.push_back({it->second, k, e});
    }
  }
  return r;
}

}  // namespace planepaths
